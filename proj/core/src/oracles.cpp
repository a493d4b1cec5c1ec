#include "pathideal/oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pathideal/errors.hpp"
#include "pathideal/simplicial_complex.hpp"

namespace pathideal {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw GuardError(what);
}

}  // namespace

OracleVerdict unmixed_oracle(const RootedTree& tree, int t) {
    OracleVerdict v;
    v.oracle = "unmixed";
    require(tree.vertex_count() <= SimplicialComplex::kMaxEnumerationVertices,
            "unmixed_oracle: tree exceeds " +
                std::to_string(SimplicialComplex::kMaxEnumerationVertices) + " vertices");
    SimplicialComplex delta = path_complex(tree, t);
    std::vector<VertexSet> covers = delta.minimal_vertex_covers();
    for (const VertexSet& c : covers) {
        if (c.size() != covers.front().size()) {
            v.verdict = false;
            v.detail = "minimal covers of sizes " + std::to_string(covers.front().size()) +
                       " and " + std::to_string(c.size());
            v.witness_sets = {covers.front(), c};
            return v;
        }
    }
    v.verdict = true;
    v.detail = std::to_string(covers.size()) + " minimal covers, all of size " +
               (covers.empty() ? std::string("0") : std::to_string(covers.front().size()));
    return v;
}

OracleVerdict konig_unmixed_oracle(const RootedTree& tree, int t) {
    OracleVerdict v;
    v.oracle = "konig_unmixed";
    SimplicialComplex delta = path_complex(tree, t);
    require(delta.facet_count() <= SimplicialComplex::kMaxSweepFacets,
            "konig_unmixed_oracle: facet count exceeds " +
                std::to_string(SimplicialComplex::kMaxSweepFacets));
    require(delta.vertex_count() <= SimplicialComplex::kMaxEnumerationVertices,
            "konig_unmixed_oracle: vertex count exceeds " +
                std::to_string(SimplicialComplex::kMaxEnumerationVertices));

    std::vector<std::vector<VertexSet>> matchings = delta.perfect_matchings_konig_type();
    if (matchings.empty()) {
        v.verdict = false;
        v.detail = "no perfect matching of Konig type";
        return v;
    }

    VertexSet free = delta.free_vertices();
    for (const std::vector<VertexSet>& matching : matchings) {
        bool good = true;
        std::string why;
        for (const VertexSet& ei : matching) {
            if (!ei.intersects(free)) {
                good = false;
                why = "matching edge " + ei.to_string() + " has no free vertex";
                break;
            }
        }
        if (good) {
            for (const VertexSet& ei : matching) {
                for (std::size_t a = 0; a < delta.facets().size() && good; ++a) {
                    for (std::size_t b = a + 1; b < delta.facets().size(); ++b) {
                        VertexSet ia = delta.facets()[a] & ei;
                        VertexSet ib = delta.facets()[b] & ei;
                        if (!ia.subset_of(ib) && !ib.subset_of(ia)) {
                            good = false;
                            why = "intersections with " + ei.to_string() + " not nested: " +
                                  ia.to_string() + " vs " + ib.to_string();
                            break;
                        }
                    }
                }
                if (!good) break;
            }
        }
        if (good) {
            v.verdict = true;
            v.detail = "matching of size " + std::to_string(matching.size()) + " qualifies";
            v.witness_sets = matching;
            return v;
        }
        if (v.detail.empty()) v.detail = "all matchings fail; first failure: " + why;
    }
    v.verdict = false;
    return v;
}

OracleVerdict matroid_oracle(const SquarefreeMonomialIdeal& ideal) {
    OracleVerdict v;
    v.oracle = "matroid";
    int n = ideal.variable_count();
    require(n <= 18, "matroid_oracle: " + std::to_string(n) + " variables exceed 18");

    if (ideal.is_zero()) {
        v.verdict = true;
        v.detail = "full simplex";
        return v;
    }

    // Face table and faces grouped by cardinality.
    std::size_t total = std::size_t{1} << n;
    std::vector<bool> face(total, false);
    std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(n + 1));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (ideal.is_stanley_reisner_face(VertexSet::from_raw(mask))) {
            face[mask] = true;
            by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
        }
    }

    for (int small = 0; small <= n; ++small) {
        for (int big = small + 1; big <= n; ++big) {
            for (std::uint64_t g : by_size[static_cast<std::size_t>(small)]) {
                for (std::uint64_t f : by_size[static_cast<std::size_t>(big)]) {
                    std::uint64_t extra = f & ~g;
                    bool exchanged = false;
                    while (extra) {
                        std::uint64_t bit = extra & (~extra + 1);
                        if (face[g | bit]) {
                            exchanged = true;
                            break;
                        }
                        extra &= extra - 1;
                    }
                    if (!exchanged) {
                        v.verdict = false;
                        v.detail = "exchange fails for F=" + VertexSet::from_raw(f).to_string() +
                                   ", G=" + VertexSet::from_raw(g).to_string();
                        v.witness_sets = {VertexSet::from_raw(f), VertexSet::from_raw(g)};
                        return v;
                    }
                }
            }
        }
    }
    v.verdict = true;
    v.detail = "exchange holds for every face pair";
    return v;
}

namespace {

// A link qualifies when it is a single edge, a path of two edges, or one
// cycle (pure 1-dimensional, connected, every vertex in exactly two edges,
// at least 3 vertices).
bool link_shape_ok(const SimplicialComplex& link, std::string& why) {
    if (link.is_void() || link.is_empty_face_complex()) {
        why = "link has no edges";
        return false;
    }
    for (const VertexSet& f : link.facets()) {
        if (f.size() != 2) {
            why = "link facet " + f.to_string() + " is not an edge";
            return false;
        }
    }
    int q = link.facet_count();
    if (q == 1) return true;  // o-o
    if (q == 2) {
        if ((link.facets()[0] & link.facets()[1]).size() == 1) return true;  // o-o-o
        why = "two disjoint link edges";
        return false;
    }
    if (!link.is_connected()) {
        why = "link is disconnected";
        return false;
    }
    for (int vert : link.vertices().members()) {
        int deg = 0;
        for (const VertexSet& f : link.facets())
            if (f.contains(vert)) ++deg;
        if (deg != 2) {
            why = "link vertex " + std::to_string(vert) + " has degree " + std::to_string(deg);
            return false;
        }
    }
    if (link.vertex_count() < 3) {
        why = "cycle needs at least 3 vertices";
        return false;
    }
    return true;
}

}  // namespace

OracleVerdict stanley_gorenstein_oracle(const SquarefreeMonomialIdeal& ideal,
                                        const RootedTree& tree, int t) {
    OracleVerdict v;
    v.oracle = "stanley_gorenstein";
    int n = ideal.variable_count();
    require(n <= 18, "stanley_gorenstein_oracle: " + std::to_string(n) + " variables exceed 18");

    SimplicialComplex delta = ideal.stanley_reisner_complex();

    // Small cases: {∅}, a single vertex, two isolated vertices.
    if (delta.is_empty_face_complex() ||
        (delta.dimension() == 0 && delta.facet_count() <= 2)) {
        v.verdict = true;
        v.detail = "small complex case";
        return v;
    }

    OracleVerdict cm = unmixed_oracle(tree, t);
    if (!cm.verdict) {
        v.verdict = false;
        v.detail = "not Cohen-Macaulay (not unmixed)";
        v.witness_sets = cm.witness_sets;
        return v;
    }
    if (delta.dimension() < 1) {
        v.verdict = false;
        v.detail = "dimension 0 with more than two vertices";
        return v;
    }

    SimplicialComplex core = delta.core();
    int core_dim = core.dimension();

    // Links of the (d-3)-faces of the core, d = dim(core) + 1.  For
    // d - 2 = 0 this is the empty face, whose link is the core itself.
    int face_size = core_dim - 1;
    if (face_size >= 0) {
        for (const VertexSet& face : core.faces()) {
            if (face.size() != face_size) continue;
            std::string why;
            if (!link_shape_ok(core.link(face), why)) {
                v.verdict = false;
                v.detail = "link of " + face.to_string() + " in the core: " + why;
                v.witness_sets = {face};
                return v;
            }
        }
    }

    long long chi = core.reduced_euler_characteristic();
    long long expected = (core_dim % 2 == 0) ? 1 : -1;  // (-1)^dim; dim -1 is odd
    if (chi != expected) {
        v.verdict = false;
        v.detail = "Euler characteristic of the core is " + std::to_string(chi) +
                   ", expected " + std::to_string(expected);
        return v;
    }
    v.verdict = true;
    v.detail = "Cohen-Macaulay with circle/edge/path links and matching Euler characteristic";
    return v;
}

OracleVerdict ci_oracle(const SquarefreeMonomialIdeal& ideal) {
    OracleVerdict v;
    v.oracle = "complete_intersection";
    const std::vector<VertexSet>& gens = ideal.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i].intersects(gens[j])) {
                v.verdict = false;
                v.detail = "generators " + gens[i].to_string() + " and " + gens[j].to_string() +
                           " share " + (gens[i] & gens[j]).to_string();
                v.witness_sets = {gens[i], gens[j]};
                return v;
            }
        }
    }
    v.verdict = true;
    v.detail = "generator supports are pairwise disjoint";
    return v;
}

InstanceValidation validate_instance(const RootedTree& tree, int t) {
    InstanceValidation out{tree, t, std::nullopt, {}, {}, {}};
    try {
        out.report = classify(tree, t);
    } catch (const GuardError& e) {
        out.guard_breaches.push_back(std::string("classify: ") + e.what());
        return out;
    }

    auto check = [&](const char* what, bool expected, auto&& run) {
        try {
            OracleVerdict verdict = run();
            if (verdict.verdict != expected) {
                out.disagreements.push_back(std::string(what) + ": classify says " +
                                            (expected ? "true" : "false") + ", oracle says " +
                                            (verdict.verdict ? "true" : "false") + " (" +
                                            verdict.detail + ")");
            }
            out.verdicts.push_back(std::move(verdict));
        } catch (const GuardError& e) {
            out.guard_breaches.push_back(std::string(what) + ": " + e.what());
        }
    };

    SquarefreeMonomialIdeal ideal = path_ideal(tree, t);
    check("unmixed", out.report->unmixed, [&] { return unmixed_oracle(tree, t); });
    check("konig_unmixed", out.report->unmixed, [&] { return konig_unmixed_oracle(tree, t); });
    check("matroid", out.report->matroid, [&] { return matroid_oracle(ideal); });
    check("stanley_gorenstein", out.report->gorenstein,
          [&] { return stanley_gorenstein_oracle(ideal, tree, t); });
    check("complete_intersection", out.report->complete_intersection,
          [&] { return ci_oracle(ideal); });
    return out;
}

CrossValidationSummary cross_validate(const std::vector<std::pair<RootedTree, int>>& corpus) {
    CrossValidationSummary summary;
    for (const auto& [tree, t] : corpus) {
        InstanceValidation inst = validate_instance(tree, t);
        ++summary.total;
        if (inst.agreed())
            ++summary.agreements;
        else
            ++summary.divergences;
        summary.guard_breaches += static_cast<int>(inst.guard_breaches.size());
        if (inst.report && inst.report->cohen_macaulay) ++summary.cm_count;
        if (inst.report && inst.report->gorenstein) ++summary.gorenstein_count;
        summary.instances.push_back(std::move(inst));
    }
    return summary;
}

}  // namespace pathideal
