#ifndef PATHIDEAL_CLASSIFY_HPP
#define PATHIDEAL_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pathideal/path_ideal.hpp"
#include "pathideal/rooted_tree.hpp"
#include "pathideal/vertex_set.hpp"

namespace pathideal {

// A path with t+1 vertices meeting one partition facet F_i in exactly its own
// first vertex.  `initial` means that vertex is also the first vertex of F_i.
struct TBranch {
    DirectedPath path;
    int attach_facet = 0;   // index into TPartitionCertificate::facets
    int attach_vertex = 0;  // first vertex of the path
    bool initial = false;
    int branch_level = 0;  // level of attach_vertex

    VertexSet path_set() const {
        VertexSet s;
        for (int v : path) s.add(v);
        return s;
    }
};

// Witness that the clean tree is t-partitioned: the leaf-containing facets
// F_1..F_m are pairwise disjoint with union V(Δ_t(C(Γ))), plus the full
// branch inventory and per-facet degrees.
struct TPartitionCertificate {
    std::vector<DirectedPath> facets;  // F_1..F_m, each listed root-side first
    std::vector<TBranch> branches;
    std::vector<int> deg_per_facet;  // distinct attach vertices per facet
    int deg_gamma = 0;               // max of deg_per_facet

    int m() const { return static_cast<int>(facets.size()); }
    VertexSet facet_set(int i) const {
        VertexSet s;
        for (int v : facets[static_cast<std::size_t>(i)]) s.add(v);
        return s;
    }
};

struct FittingResult {
    bool fitting = false;
    std::optional<TPartitionCertificate> certificate;
    std::string witness;  // first violated clause, empty when fitting
};

// Full theorem-driven verdict for I_t(Γ).
struct ClassificationReport {
    int n = 0;
    int t = 0;
    bool zero_ideal = false;
    VertexSet clean_removed;
    bool partitioned = false;
    bool fitting = false;
    std::optional<TPartitionCertificate> certificate;
    std::optional<std::string> failure_witness;

    bool unmixed = false;
    bool cohen_macaulay = false;
    bool serre_sr = false;  // S_r for every r >= 2
    bool gorenstein = false;
    bool complete_intersection = false;
    bool matroid = false;
    bool all_powers_cm = false;

    int height = 0;
    int krull_dim = 0;
    std::optional<int> depth;     // present iff Cohen-Macaulay
    std::optional<int> proj_dim;  // present iff Cohen-Macaulay

    std::vector<VertexSet> generators;  // supports of I_t(Γ)
};

// Fixed point of deleting non-root leaves at level < t-1.  The root anchors
// the level function and is never deleted, even when it is a degree-1 leaf at
// level 0.  Deleted vertices lie on no path with t (or more) vertices, so the
// generators are untouched.
struct CleanResult {
    RootedTree tree;
    VertexSet removed;
};
CleanResult clean(const RootedTree& tree, int t);

// The facet lists eligible as F_1..F_m: for every non-root leaf the unique
// facet ending at it is mandatory; when the root is an uncovered leaf every
// facet starting at the root is tried in turn (at most one choice can yield a
// partition, since the mandatory part pins the complement).  Returns an empty
// list when some leaf lies in no facet.
std::vector<std::vector<DirectedPath>> leaf_facet_candidates(const RootedTree& clean_tree, int t);

// First candidate (in deterministic order) that partitions V(Δ_t(C(Γ))),
// with branches and degrees filled in; nullopt when none does or the ideal
// is zero.
std::optional<TPartitionCertificate> t_partition(const RootedTree& tree, int t);

// All t-branches relative to the given partition facets.
std::vector<TBranch> t_branches(const RootedTree& clean_tree, int t,
                                const std::vector<DirectedPath>& facets);

// Fitting test: partitioned, Deg(Γ) <= 1, and every non-initial branch at
// level <= t-1.  On failure names the first violated clause.
FittingResult is_fitting(const RootedTree& tree, int t);

// Single chain test (a line over any number of vertices; labels ignored).
bool is_line(const RootedTree& tree);

ClassificationReport classify(const RootedTree& tree, int t);

}  // namespace pathideal

#endif  // PATHIDEAL_CLASSIFY_HPP
