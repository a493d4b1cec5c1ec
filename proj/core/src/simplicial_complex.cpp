#include "pathideal/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "pathideal/errors.hpp"

namespace pathideal {

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> candidates) {
    std::sort(candidates.begin(), candidates.end(), VertexSet::size_lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    SimplicialComplex complex;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (i != j && candidates[i].subset_of(candidates[j]) && candidates[i] != candidates[j]) {
                contained = true;
                break;
            }
        }
        if (!contained) complex.facets_.push_back(candidates[i]);
    }
    for (const VertexSet& f : complex.facets_) complex.vertices_ |= f;
    return complex;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const VertexSet& f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (const VertexSet& f : facets_)
        if (f.size() - 1 != dimension()) return false;
    return true;
}

bool SimplicialComplex::is_face(const VertexSet& f) const {
    for (const VertexSet& facet : facets_)
        if (f.subset_of(facet)) return true;
    return false;
}

void SimplicialComplex::require_face_enumeration(const char* op) const {
    if (vertex_count() > kMaxEnumerationVertices)
        throw GuardError(std::string(op) + ": " + std::to_string(vertex_count()) +
                         " vertices exceed the enumeration bound of " +
                         std::to_string(kMaxEnumerationVertices));
}

std::vector<VertexSet> SimplicialComplex::faces() const {
    require_face_enumeration("faces");
    std::vector<std::uint64_t> masks;
    for (const VertexSet& f : facets_) {
        // all submasks of f, the empty face included
        std::uint64_t m = f.raw();
        std::uint64_t sub = m;
        while (true) {
            masks.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) out.push_back(VertexSet::from_raw(m));
    return out;
}

FVector SimplicialComplex::f_vector() const {
    FVector counts(static_cast<std::size_t>(dimension() + 1), 0);
    for (const VertexSet& face : faces()) {
        if (face.empty()) continue;  // f_{-1} stays implicit
        ++counts[static_cast<std::size_t>(face.size() - 1)];
    }
    return counts;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
    long long chi = -1;
    long long sign = 1;
    for (long long fi : f_vector()) {
        chi += sign * fi;
        sign = -sign;
    }
    return chi;
}

SimplicialComplex SimplicialComplex::link(const VertexSet& g) const {
    if (!is_face(g)) throw std::invalid_argument("link of " + g.to_string() + ": not a face");
    std::vector<VertexSet> out;
    for (const VertexSet& f : facets_)
        if (g.subset_of(f)) out.push_back(f - g);
    return from_facets(std::move(out));
}

SimplicialComplex SimplicialComplex::star(const VertexSet& g) const {
    if (!is_face(g)) throw std::invalid_argument("star of " + g.to_string() + ": not a face");
    std::vector<VertexSet> out;
    for (const VertexSet& f : facets_)
        if (g.subset_of(f)) out.push_back(f);
    return from_facets(std::move(out));
}

SimplicialComplex SimplicialComplex::restriction(const VertexSet& w) const {
    std::vector<VertexSet> out;
    out.reserve(facets_.size());
    for (const VertexSet& f : facets_) out.push_back(f & w);
    return from_facets(std::move(out));
}

VertexSet SimplicialComplex::core_vertices() const {
    if (is_void()) return {};
    VertexSet apex = facets_.front();
    for (const VertexSet& f : facets_) apex &= f;
    return vertices_ - apex;
}

SimplicialComplex SimplicialComplex::core() const {
    return restriction(core_vertices());
}

VertexSet SimplicialComplex::free_vertices() const {
    VertexSet free;
    for (int v : vertices_.members()) {
        int count = 0;
        for (const VertexSet& f : facets_)
            if (f.contains(v)) ++count;
        if (count == 1) free.add(v);
    }
    return free;
}

bool SimplicialComplex::is_leaf_facet(const VertexSet& f) const {
    auto it = std::find(facets_.begin(), facets_.end(), f);
    if (it == facets_.end())
        throw std::invalid_argument("is_leaf_facet: " + f.to_string() + " is not a facet");
    if (facets_.size() == 1) return true;
    // F is a leaf iff some other facet G contains the union of all
    // intersections F ∩ F'; then every F ∩ F' ⊆ F ∩ G.
    VertexSet joint_union;
    for (const VertexSet& other : facets_)
        if (other != f) joint_union |= (f & other);
    for (const VertexSet& g : facets_)
        if (g != f && joint_union.subset_of(g)) return true;
    return false;
}

bool SimplicialComplex::is_simplicial_forest() const {
    int q = facet_count();
    if (q > kMaxSweepFacets)
        throw GuardError("is_simplicial_forest: " + std::to_string(q) +
                         " facets exceed the subcomplex sweep bound of " +
                         std::to_string(kMaxSweepFacets));
    if (q == 0) return true;  // the empty complex counts as a forest

    std::vector<std::vector<VertexSet>> inter(static_cast<std::size_t>(q),
                                              std::vector<VertexSet>(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            inter[i][j] = facets_[i] & facets_[j];

    for (std::uint32_t subset = 1; subset < (1u << q); ++subset) {
        bool has_leaf = false;
        for (int i = 0; i < q && !has_leaf; ++i) {
            if (!(subset & (1u << i))) continue;
            VertexSet joint_union;
            for (int j = 0; j < q; ++j)
                if (j != i && (subset & (1u << j))) joint_union |= inter[i][j];
            if (joint_union.empty()) {  // lone facet in this subcomplex, or disjoint from all
                has_leaf = true;
                break;
            }
            for (int g = 0; g < q; ++g) {
                if (g != i && (subset & (1u << g)) && joint_union.subset_of(facets_[g])) {
                    has_leaf = true;
                    break;
                }
            }
        }
        if (!has_leaf) return false;
    }
    return true;
}

namespace {

void enumerate_cover_candidates(const std::vector<VertexSet>& facets, VertexSet current,
                                std::size_t facet_idx, std::set<std::uint64_t>& out) {
    while (facet_idx < facets.size() && facets[facet_idx].intersects(current)) ++facet_idx;
    if (facet_idx == facets.size()) {
        out.insert(current.raw());
        return;
    }
    for (int v : facets[facet_idx].members()) {
        VertexSet next = current;
        next.add(v);
        enumerate_cover_candidates(facets, next, facet_idx + 1, out);
    }
}

}  // namespace

std::vector<VertexSet> SimplicialComplex::minimal_vertex_covers() const {
    require_face_enumeration("minimal_vertex_covers");
    if (is_void()) return {VertexSet()};
    for (const VertexSet& f : facets_)
        if (f.empty())
            throw std::invalid_argument("the empty facet admits no vertex cover");

    std::set<std::uint64_t> candidates;
    enumerate_cover_candidates(facets_, VertexSet(), 0, candidates);

    // Minimal iff every member has a private facet it alone covers.
    std::vector<VertexSet> covers;
    for (std::uint64_t raw : candidates) {
        VertexSet cover = VertexSet::from_raw(raw);
        bool minimal = true;
        for (int v : cover.members()) {
            bool has_private = false;
            for (const VertexSet& f : facets_) {
                if ((f & cover) == VertexSet::single(v)) {
                    has_private = true;
                    break;
                }
            }
            if (!has_private) {
                minimal = false;
                break;
            }
        }
        if (minimal) covers.push_back(cover);
    }
    std::sort(covers.begin(), covers.end(), VertexSet::size_lex_less);
    return covers;
}

int SimplicialComplex::covering_number() const {
    if (is_void()) return 0;
    std::vector<VertexSet> covers = minimal_vertex_covers();
    int best = vertices_.size();
    for (const VertexSet& c : covers) best = std::min(best, c.size());
    return best;
}

bool SimplicialComplex::is_unmixed_by_covers() const {
    std::vector<VertexSet> covers = minimal_vertex_covers();
    for (const VertexSet& c : covers)
        if (c.size() != covers.front().size()) return false;
    return true;
}

namespace {

void max_disjoint_rec(const std::vector<VertexSet>& facets, std::size_t idx, VertexSet used,
                      int count, int& best) {
    best = std::max(best, count);
    if (count + static_cast<int>(facets.size() - idx) <= best) return;
    for (std::size_t i = idx; i < facets.size(); ++i) {
        if (!facets[i].intersects(used))
            max_disjoint_rec(facets, i + 1, used | facets[i], count + 1, best);
    }
}

}  // namespace

int SimplicialComplex::max_disjoint_facets() const {
    if (facet_count() > kMaxSweepFacets)
        throw GuardError("max_disjoint_facets: " + std::to_string(facet_count()) +
                         " facets exceed the bound of " + std::to_string(kMaxSweepFacets));
    int best = 0;
    max_disjoint_rec(facets_, 0, VertexSet(), 0, best);
    return best;
}

bool SimplicialComplex::has_konig_property() const {
    return max_disjoint_facets() == covering_number();
}

namespace {

void konig_matchings_rec(const std::vector<VertexSet>& facets, const VertexSet& everything,
                         std::size_t idx, VertexSet used, std::vector<VertexSet>& chosen, int g,
                         std::vector<std::vector<VertexSet>>& out) {
    if (static_cast<int>(chosen.size()) == g) {
        if (used == everything) out.push_back(chosen);
        return;
    }
    for (std::size_t i = idx; i < facets.size(); ++i) {
        if (facets[i].intersects(used)) continue;
        chosen.push_back(facets[i]);
        konig_matchings_rec(facets, everything, i + 1, used | facets[i], chosen, g, out);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<std::vector<VertexSet>> SimplicialComplex::perfect_matchings_konig_type() const {
    int g = covering_number();
    if (facet_count() > kMaxSweepFacets)
        throw GuardError("perfect_matchings_konig_type: facet count exceeds " +
                         std::to_string(kMaxSweepFacets));
    std::vector<std::vector<VertexSet>> out;
    std::vector<VertexSet> chosen;
    konig_matchings_rec(facets_, vertices_, 0, VertexSet(), chosen, g, out);
    return out;
}

namespace {

struct CycleSearch {
    const std::vector<VertexSet>& facets;
    int r_max;
    int start_vertex = 0;
    VertexSet chosen_vertices;
    VertexSet covered;  // union of chosen facets
    std::vector<char> facet_used;
    int facet_count_chosen = 0;

    bool extend(int current) {
        for (std::size_t e = 0; e < facets.size(); ++e) {
            if (facet_used[e] || !facets[e].contains(current)) continue;
            VertexSet hit = facets[e] & chosen_vertices;
            // Closing facet: exactly the current vertex and the start.
            if (facet_count_chosen >= 2 && facets[e].contains(start_vertex)) {
                VertexSet ends;
                ends.add(start_vertex);
                ends.add(current);
                if (hit == ends && facet_count_chosen + 1 >= 3) return true;
            }
            // Extension facet: only the current vertex among chosen ones.
            if (hit != VertexSet::single(current)) continue;
            if (facet_count_chosen + 1 >= r_max) continue;  // no room to close afterwards
            facet_used[e] = 1;
            ++facet_count_chosen;
            VertexSet covered_before = covered;
            covered |= facets[e];
            for (int y : facets[e].members()) {
                if (y <= start_vertex || chosen_vertices.contains(y)) continue;
                if (covered_before.contains(y)) continue;  // y already met an earlier facet
                chosen_vertices.add(y);
                if (extend(y)) return true;
                chosen_vertices.remove(y);
            }
            covered = covered_before;
            --facet_count_chosen;
            facet_used[e] = 0;
        }
        return false;
    }
};

}  // namespace

bool SimplicialComplex::has_clutter_cycle(int r_max) const {
    if (vertex_count() > kMaxCycleVertices || facet_count() > kMaxCycleFacets)
        throw GuardError("has_clutter_cycle: incidence matrix larger than " +
                         std::to_string(kMaxCycleVertices) + "x" +
                         std::to_string(kMaxCycleFacets));
    int cap = std::min(vertex_count(), facet_count());
    if (r_max <= 0 || r_max > cap) r_max = cap;
    if (r_max < 3) return false;

    for (int x1 : vertices_.members()) {
        CycleSearch search{facets_, r_max};
        search.start_vertex = x1;
        search.chosen_vertices.add(x1);
        search.facet_used.assign(facets_.size(), 0);
        if (search.extend(x1)) return true;
    }
    return false;
}

bool SimplicialComplex::is_connected() const {
    if (facet_count() <= 1) return true;
    std::vector<char> seen(facets_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < facets_.size(); ++j) {
            if (!seen[j] && facets_[i].intersects(facets_[j])) {
                seen[j] = 1;
                stack.push_back(j);
            }
        }
    }
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

}  // namespace pathideal
