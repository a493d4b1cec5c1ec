#ifndef PATHIDEAL_ROOTED_TREE_HPP
#define PATHIDEAL_ROOTED_TREE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pathideal/vertex_set.hpp"

namespace pathideal {

// A directed path, listed root-side first.  Throughout this project a "path
// with t vertices" has t-1 edges; levels strictly increase along it.
using DirectedPath = std::vector<int>;

// Directed rooted tree: every edge points away from the root.  Vertex ids are
// arbitrary labels in 1..64 (they stay stable under pruning, so a cleaned
// tree keeps the original names).  Immutable after construction.
class RootedTree {
  public:
    // Validates: ids in range, no duplicate edge, single parent per vertex,
    // no cycle, everything reachable from the root.
    RootedTree(int root, const std::vector<std::pair<int, int>>& edges);

    static RootedTree single(int root_id);
    static RootedTree line(int n);  // chain 1 -> 2 -> ... -> n

    // Random tree on vertices 1..n rooted at 1: each vertex i >= 2 picks a
    // uniform parent among 1..i-1.  Same (n, seed) always gives the same tree.
    static RootedTree random(int n, std::uint64_t seed);

    int root() const { return root_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }  // sorted
    VertexSet vertex_set() const;
    bool has_vertex(int v) const;

    int parent(int v) const;  // 0 for the root
    const std::vector<int>& children(int v) const;

    // Number of edges on the unique root-to-v path.
    int level(int v) const;
    int height() const;

    // Vertices of undirected degree 1.  The root qualifies when it has exactly
    // one child; a single-vertex tree reports its root as the sole leaf.
    std::vector<int> leaves() const;
    bool is_leaf(int v) const;

    // All directed paths with exactly t vertices, in lexicographic order.
    // t < 2 is rejected; t larger than any chain just yields no paths.
    std::vector<DirectedPath> paths_with(int t) const;

    // The unique path of t vertices ending at v (empty when level(v) < t-1).
    DirectedPath path_ending_at(int v, int t) const;

    std::vector<std::pair<int, int>> edges() const;  // (parent, child), sorted

    // Subtree induced by `keep`; keep must contain the root and be closed
    // under taking parents.
    RootedTree induced(const VertexSet& keep) const;

    bool operator==(const RootedTree& other) const;

  private:
    void check_vertex(int v) const;

    int root_ = 0;
    std::vector<int> vertices_;               // sorted ids
    std::vector<int> parent_;                 // by id; 0 = root or absent
    std::vector<std::vector<int>> children_;  // by id; each list sorted
    std::vector<int> level_;                  // by id
    std::vector<char> present_;               // by id
};

// Text format: a `root <id>` line, then one `<parent> <child>` line per edge;
// `#` starts a comment.  Errors name the offending line.
RootedTree parse_tree_text(const std::string& text);
std::string to_tree_text(const RootedTree& tree);

// Deterministic corpus for property tests and the batch command: `count`
// trees with sizes drawn uniformly from 2..n_max.
std::vector<RootedTree> seeded_corpus(int n_max, int count, std::uint64_t seed);

}  // namespace pathideal

#endif  // PATHIDEAL_ROOTED_TREE_HPP
