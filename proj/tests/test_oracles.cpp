#include <doctest.h>

#include <algorithm>

#include "golden_trees.hpp"
#include "pathideal/errors.hpp"
#include "pathideal/oracles.hpp"
#include "pathideal/simplicial_complex.hpp"

using namespace pathideal;

TEST_CASE("unmixed oracle") {
    OracleVerdict l5 = unmixed_oracle(RootedTree::line(5), 2);
    CHECK_FALSE(l5.verdict);
    REQUIRE(l5.witness_sets.size() == 2);
    // both witnesses are genuine minimal covers of different sizes
    SimplicialComplex delta = path_complex(RootedTree::line(5), 2);
    std::vector<VertexSet> covers = delta.minimal_vertex_covers();
    for (const VertexSet& w : l5.witness_sets)
        CHECK(std::find(covers.begin(), covers.end(), w) != covers.end());
    CHECK(l5.witness_sets[0].size() != l5.witness_sets[1].size());

    CHECK(unmixed_oracle(gamma3_tree(), 3).verdict);
    CHECK(unmixed_oracle(RootedTree::line(4), 2).verdict);
    CHECK_FALSE(unmixed_oracle(gamma2_tree(), 3).verdict);
}

TEST_CASE("Konig-type matching oracle") {
    OracleVerdict g3 = konig_unmixed_oracle(gamma3_tree(), 3);
    CHECK(g3.verdict);
    std::vector<VertexSet> expected{{1, 3, 6}, {2, 5, 8}, {4, 7, 9}};
    CHECK(g3.witness_sets == expected);

    CHECK_FALSE(konig_unmixed_oracle(gamma2_tree(), 3).verdict);
    CHECK_FALSE(konig_unmixed_oracle(RootedTree::line(5), 2).verdict);
    CHECK(konig_unmixed_oracle(RootedTree::line(5), 2).detail ==
          "no perfect matching of Konig type");
}

TEST_CASE("matroid oracle") {
    CHECK(matroid_oracle(path_ideal(RootedTree::line(3), 3)).verdict);

    OracleVerdict l4 = matroid_oracle(path_ideal(RootedTree::line(4), 2));
    CHECK_FALSE(l4.verdict);
    REQUIRE(l4.witness_sets.size() == 2);
    // re-verify the failed exchange pair
    SquarefreeMonomialIdeal ideal = path_ideal(RootedTree::line(4), 2);
    const VertexSet& f = l4.witness_sets[0];
    const VertexSet& g = l4.witness_sets[1];
    CHECK(ideal.is_stanley_reisner_face(f));
    CHECK(ideal.is_stanley_reisner_face(g));
    CHECK(f.size() > g.size());
    for (int x : (f - g).members()) {
        VertexSet extended = g;
        extended.add(x);
        CHECK_FALSE(ideal.is_stanley_reisner_face(extended));
    }

    CHECK(matroid_oracle(SquarefreeMonomialIdeal(5, {})).verdict);
    CHECK_THROWS_AS(matroid_oracle(SquarefreeMonomialIdeal(19, {{1, 2}})), GuardError);
}

TEST_CASE("Stanley Gorenstein oracle") {
    CHECK(stanley_gorenstein_oracle(path_ideal(RootedTree::line(3), 3), RootedTree::line(3), 3)
              .verdict);

    // L_4 at t=2 is Cohen-Macaulay but fails the link shape
    OracleVerdict l4 =
        stanley_gorenstein_oracle(path_ideal(RootedTree::line(4), 2), RootedTree::line(4), 2);
    CHECK_FALSE(l4.verdict);
    CHECK(l4.detail.find("link") != std::string::npos);

    OracleVerdict fig1 =
        stanley_gorenstein_oracle(path_ideal(figure1_tree(), 4), figure1_tree(), 4);
    CHECK_FALSE(fig1.verdict);
    CHECK(fig1.detail.find("not Cohen-Macaulay") != std::string::npos);

    // L_2 at t=2: two isolated vertices, the small Gorenstein case
    CHECK(stanley_gorenstein_oracle(path_ideal(RootedTree::line(2), 2), RootedTree::line(2), 2)
              .verdict);

    // zero ideal: the full simplex
    RootedTree star(1, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(stanley_gorenstein_oracle(path_ideal(star, 3), star, 3).verdict);
}

TEST_CASE("complete intersection oracle") {
    CHECK(ci_oracle(SquarefreeMonomialIdeal(3, {{1, 2, 3}})).verdict);
    CHECK(ci_oracle(SquarefreeMonomialIdeal(6, {{1, 2}, {3, 4}, {5, 6}})).verdict);

    OracleVerdict fig1 = ci_oracle(path_ideal(figure1_tree(), 4));
    CHECK_FALSE(fig1.verdict);
    REQUIRE(fig1.witness_sets.size() == 2);
    CHECK(fig1.witness_sets[0].intersects(fig1.witness_sets[1]));
    CHECK((fig1.witness_sets[0] & fig1.witness_sets[1]).contains(1));
}

TEST_CASE("validate_instance agrees on the worked examples") {
    CHECK(validate_instance(figure1_tree(), 4).agreed());
    CHECK(validate_instance(gamma2_tree(), 3).agreed());
    CHECK(validate_instance(gamma3_tree(), 3).agreed());
}

TEST_CASE("cross_validate over all lines up to n = 10") {
    std::vector<std::pair<RootedTree, int>> corpus;
    for (int n = 2; n <= 10; ++n)
        for (int t = 2; t <= n; ++t) corpus.emplace_back(RootedTree::line(n), t);
    CrossValidationSummary summary = cross_validate(corpus);
    CHECK(summary.total == static_cast<int>(corpus.size()));
    CHECK(summary.divergences == 0);
    CHECK(summary.guard_breaches == 0);
    CHECK(summary.all_agreed());
}

TEST_CASE("cross_validate over a small random corpus") {
    std::vector<std::pair<RootedTree, int>> corpus;
    for (const RootedTree& tree : seeded_corpus(9, 30, 59))
        for (int t = 2; t <= tree.vertex_count(); ++t) corpus.emplace_back(tree, t);
    CrossValidationSummary summary = cross_validate(corpus);
    CHECK(summary.divergences == 0);
    CHECK(summary.all_agreed());
}

TEST_CASE("oracle guard breaches are reported, not fatal") {
    RootedTree big = RootedTree::random(30, 3);
    std::vector<std::pair<RootedTree, int>> corpus{{big, 2}, {RootedTree::line(4), 2}};
    CrossValidationSummary summary = cross_validate(corpus);
    CHECK(summary.total == 2);
    CHECK(summary.guard_breaches > 0);
    CHECK(summary.divergences == 0);
}
