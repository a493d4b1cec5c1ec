#include "pathideal/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pathideal/simplicial_complex.hpp"

namespace pathideal {

namespace {

std::string path_string(const DirectedPath& path) {
    std::string s = "{";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) s += ",";
        s += "v" + std::to_string(path[i]);
    }
    return s + "}";
}

VertexSet path_set(const DirectedPath& path) {
    VertexSet s;
    for (int v : path) s.add(v);
    return s;
}

}  // namespace

CleanResult clean(const RootedTree& tree, int t) {
    if (t < 2 || t > tree.vertex_count())
        throw std::invalid_argument("clean: t out of range 2.." +
                                    std::to_string(tree.vertex_count()));
    VertexSet keep = tree.vertex_set();
    VertexSet removed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : keep.members()) {
            if (v == tree.root()) continue;
            bool childless = true;
            for (int c : tree.children(v)) {
                if (keep.contains(c)) {
                    childless = false;
                    break;
                }
            }
            if (childless && tree.level(v) < t - 1) {
                keep.remove(v);
                removed.add(v);
                changed = true;
            }
        }
    }
    return CleanResult{tree.induced(keep), removed};
}

std::vector<std::vector<DirectedPath>> leaf_facet_candidates(const RootedTree& clean_tree, int t) {
    std::vector<DirectedPath> facets = clean_tree.paths_with(t);
    std::vector<int> leaves = clean_tree.leaves();

    std::vector<DirectedPath> mandatory;
    VertexSet covered_leaves;
    bool root_is_uncovered_leaf = false;

    for (int leaf : leaves) {
        if (leaf == clean_tree.root()) continue;
        // A non-root leaf is childless, so the only facet containing it is
        // the unique path of t vertices ending at it.
        DirectedPath f = clean_tree.path_ending_at(leaf, t);
        if (f.empty()) return {};  // leaf lies in no facet
        mandatory.push_back(f);
        covered_leaves |= path_set(f);
    }
    std::sort(mandatory.begin(), mandatory.end());

    if (clean_tree.is_leaf(clean_tree.root()) && !covered_leaves.contains(clean_tree.root()))
        root_is_uncovered_leaf = true;

    if (!root_is_uncovered_leaf) return {mandatory};

    // Try each facet starting at the root as the extra member.
    std::vector<std::vector<DirectedPath>> candidates;
    for (const DirectedPath& f : facets) {
        if (f.front() != clean_tree.root()) continue;
        std::vector<DirectedPath> candidate = mandatory;
        candidate.push_back(f);
        std::sort(candidate.begin(), candidate.end());
        candidates.push_back(std::move(candidate));
    }
    return candidates;
}

std::vector<TBranch> t_branches(const RootedTree& clean_tree, int t,
                                const std::vector<DirectedPath>& facets) {
    std::vector<VertexSet> facet_sets;
    facet_sets.reserve(facets.size());
    for (const DirectedPath& f : facets) facet_sets.push_back(path_set(f));

    std::vector<TBranch> branches;
    if (t + 1 > clean_tree.vertex_count()) return branches;
    for (const DirectedPath& path : clean_tree.paths_with(t + 1)) {
        int x = path.front();
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (!facet_sets[i].contains(x)) continue;
            if ((path_set(path) & facet_sets[i]) == VertexSet::single(x)) {
                TBranch b;
                b.path = path;
                b.attach_facet = static_cast<int>(i);
                b.attach_vertex = x;
                b.initial = (facets[i].front() == x);
                b.branch_level = clean_tree.level(x);
                branches.push_back(std::move(b));
            }
            break;  // facets of a partition are disjoint: x is in at most one
        }
    }
    return branches;
}

std::optional<TPartitionCertificate> t_partition(const RootedTree& tree, int t) {
    CleanResult cleaned = clean(tree, t);
    const RootedTree& ct = cleaned.tree;
    if (ct.vertex_count() < t) return std::nullopt;  // zero ideal

    VertexSet complex_vertices;
    for (const DirectedPath& p : ct.paths_with(t)) complex_vertices |= path_set(p);
    if (complex_vertices.empty()) return std::nullopt;

    for (const std::vector<DirectedPath>& candidate : leaf_facet_candidates(ct, t)) {
        VertexSet seen;
        bool disjoint = true;
        for (const DirectedPath& f : candidate) {
            VertexSet fs = path_set(f);
            if (fs.intersects(seen)) {
                disjoint = false;
                break;
            }
            seen |= fs;
        }
        if (!disjoint || seen != complex_vertices) continue;

        TPartitionCertificate cert;
        cert.facets = candidate;
        cert.branches = t_branches(ct, t, candidate);
        cert.deg_per_facet.assign(candidate.size(), 0);
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            VertexSet attach_vertices;
            for (const TBranch& b : cert.branches)
                if (b.attach_facet == static_cast<int>(i)) attach_vertices.add(b.attach_vertex);
            cert.deg_per_facet[i] = attach_vertices.size();
            cert.deg_gamma = std::max(cert.deg_gamma, cert.deg_per_facet[i]);
        }
        return cert;
    }
    return std::nullopt;
}

FittingResult is_fitting(const RootedTree& tree, int t) {
    FittingResult result;
    result.certificate = t_partition(tree, t);
    if (!result.certificate) {
        result.witness = "not " + std::to_string(t) + "-partitioned";
        return result;
    }
    const TPartitionCertificate& cert = *result.certificate;
    for (std::size_t i = 0; i < cert.facets.size(); ++i) {
        if (cert.deg_per_facet[i] > 1) {
            result.witness = "Deg(F_" + std::to_string(i + 1) + ") = " +
                             std::to_string(cert.deg_per_facet[i]) + " > 1 at facet " +
                             path_string(cert.facets[i]);
            return result;
        }
    }
    for (const TBranch& b : cert.branches) {
        if (!b.initial && b.branch_level > t - 1) {
            result.witness = "non-initial branch " + path_string(b.path) + " at level " +
                             std::to_string(b.branch_level) + " > " + std::to_string(t - 1);
            return result;
        }
    }
    result.fitting = true;
    return result;
}

bool is_line(const RootedTree& tree) {
    for (int v : tree.vertices())
        if (tree.children(v).size() > 1) return false;
    return true;
}

ClassificationReport classify(const RootedTree& tree, int t) {
    if (t < 2 || t > tree.vertex_count())
        throw std::invalid_argument("classify: t out of range 2.." +
                                    std::to_string(tree.vertex_count()));

    ClassificationReport report;
    report.n = tree.vertex_count();
    report.t = t;

    CleanResult cleaned = clean(tree, t);
    report.clean_removed = cleaned.removed;

    SquarefreeMonomialIdeal ideal = path_ideal(tree, t);
    report.generators = ideal.generators();
    report.zero_ideal = ideal.is_zero();

    if (report.zero_ideal) {
        // R/(0) = R: everything holds trivially, nothing is partitioned.
        report.unmixed = report.cohen_macaulay = report.serre_sr = true;
        report.gorenstein = report.complete_intersection = true;
        report.matroid = report.all_powers_cm = true;
        report.height = 0;
        report.krull_dim = report.n;
        report.depth = report.n;
        report.proj_dim = 0;
        report.failure_witness = "zero ideal: no directed path with " + std::to_string(t) +
                                 " vertices";
        return report;
    }

    FittingResult fit = is_fitting(tree, t);
    report.partitioned = fit.certificate.has_value();
    report.fitting = fit.fitting;
    report.certificate = fit.certificate;
    if (!fit.fitting) report.failure_witness = fit.witness;

    report.unmixed = report.cohen_macaulay = report.serre_sr = fit.fitting;

    bool chain = is_line(cleaned.tree) && cleaned.tree.vertex_count() == t;
    report.gorenstein = report.complete_intersection = chain;
    report.matroid = report.all_powers_cm = chain;

    report.height = ideal.height();
    report.krull_dim = report.n - report.height;
    if (report.cohen_macaulay) {
        int m = report.certificate->m();
        report.proj_dim = m;
        report.depth = report.n - m;
    }
    return report;
}

}  // namespace pathideal
