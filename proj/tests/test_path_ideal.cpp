#include <doctest.h>

#include <algorithm>

#include "golden_trees.hpp"
#include "pathideal/errors.hpp"
#include "pathideal/path_ideal.hpp"

using namespace pathideal;

TEST_CASE("path ideal generators") {
    SquarefreeMonomialIdeal i4 = path_ideal(figure1_tree(), 4);
    CHECK(i4.generators() ==
          std::vector<VertexSet>{{1, 2, 4, 8}, {1, 2, 4, 9}, {1, 3, 6, 10}, {1, 3, 7, 11}});

    CHECK(path_ideal(RootedTree::line(3), 3).generators() == std::vector<VertexSet>{{1, 2, 3}});

    RootedTree star(1, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(path_ideal(star, 3).is_zero());

    CHECK_THROWS_AS(path_ideal(RootedTree::line(3), 1), std::invalid_argument);
}

TEST_CASE("facet ideal round trip") {
    for (const RootedTree& tree : seeded_corpus(10, 30, 19)) {
        for (int t = 2; t <= tree.vertex_count(); ++t) {
            CHECK(path_ideal(tree, t).generators() == path_complex(tree, t).facets());
        }
    }
    CHECK(path_complex(RootedTree::line(5), 3).facets() ==
          std::vector<VertexSet>{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    CHECK(path_complex(RootedTree(1, {{1, 2}, {1, 3}}), 3).is_void());
}

TEST_CASE("Stanley-Reisner membership") {
    SquarefreeMonomialIdeal i4 = path_ideal(figure1_tree(), 4);
    CHECK(i4.is_stanley_reisner_face({1, 2, 4}));
    CHECK_FALSE(i4.is_stanley_reisner_face({1, 2, 4, 8}));
    CHECK_FALSE(i4.is_stanley_reisner_face({1, 2, 4, 8, 5}));

    SquarefreeMonomialIdeal zero(5, {});
    CHECK(zero.is_stanley_reisner_face(VertexSet::full(5)));
}

TEST_CASE("Stanley-Reisner complexes") {
    CHECK(path_ideal(RootedTree::line(3), 3).stanley_reisner_complex().facets() ==
          std::vector<VertexSet>{{1, 2}, {1, 3}, {2, 3}});

    CHECK(path_ideal(RootedTree::line(4), 2).stanley_reisner_complex().facets() ==
          std::vector<VertexSet>{{1, 3}, {1, 4}, {2, 4}});

    SquarefreeMonomialIdeal zero(3, {});
    CHECK(zero.stanley_reisner_complex().facets() == std::vector<VertexSet>{{1, 2, 3}});
}

TEST_CASE("Stanley-Reisner duality with cover complements") {
    for (const RootedTree& tree : seeded_corpus(12, 40, 29)) {
        int n = tree.vertex_count();
        for (int t = 2; t <= n; ++t) {
            SquarefreeMonomialIdeal ideal = path_ideal(tree, t);
            std::vector<VertexSet> facets = ideal.stanley_reisner_complex().facets();

            std::vector<VertexSet> complements;
            for (const VertexSet& cover : path_complex(tree, t).minimal_vertex_covers())
                complements.push_back(VertexSet::full(n) - cover);
            std::sort(complements.begin(), complements.end(), VertexSet::size_lex_less);

            CHECK(facets == complements);
        }
    }
}

TEST_CASE("height") {
    CHECK(path_ideal(figure1_tree(), 4).height() == 1);
    CHECK(path_ideal(RootedTree::line(4), 2).height() == 2);
    CHECK(SquarefreeMonomialIdeal(6, {}).height() == 0);
}

TEST_CASE("height complements Krull dimension") {
    for (const RootedTree& tree : seeded_corpus(10, 25, 37)) {
        int n = tree.vertex_count();
        for (int t = 2; t <= n; ++t) {
            SquarefreeMonomialIdeal ideal = path_ideal(tree, t);
            if (ideal.is_zero()) continue;
            CHECK(ideal.height() + ideal.stanley_reisner_complex().dimension() + 1 == n);
        }
    }
}

TEST_CASE("complete intersections") {
    CHECK(SquarefreeMonomialIdeal(3, {{1, 2, 3}}).is_complete_intersection());
    CHECK_FALSE(path_ideal(figure1_tree(), 4).is_complete_intersection());
    CHECK(SquarefreeMonomialIdeal(6, {{1, 2, 3}, {4, 5, 6}}).is_complete_intersection());
    CHECK(SquarefreeMonomialIdeal(4, {}).is_complete_intersection());

    for (const RootedTree& tree : seeded_corpus(10, 25, 41)) {
        for (int t = 2; t <= tree.vertex_count(); ++t) {
            SquarefreeMonomialIdeal ideal = path_ideal(tree, t);
            if (ideal.is_complete_intersection() && !ideal.is_zero())
                CHECK(ideal.facet_complex().is_unmixed_by_covers());
        }
    }
}

TEST_CASE("ideal validation") {
    CHECK_THROWS_AS(SquarefreeMonomialIdeal(3, {{1, 2}, {1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SquarefreeMonomialIdeal(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(SquarefreeMonomialIdeal(3, {VertexSet{}}), std::invalid_argument);
    CHECK_THROWS_AS(SquarefreeMonomialIdeal(30, {{1, 2}}).stanley_reisner_complex(), GuardError);
}

TEST_CASE("monomial strings") {
    CHECK(monomial_string({1, 2, 4, 8}) == "x1*x2*x4*x8");
    CHECK(monomial_string({3}) == "x3");
    CHECK(monomial_string({}) == "1");
}
