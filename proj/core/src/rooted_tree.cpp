#include "pathideal/rooted_tree.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pathideal/errors.hpp"

namespace pathideal {

RootedTree::RootedTree(int root, const std::vector<std::pair<int, int>>& edges) {
    auto check_id = [](int v) {
        if (v < 1 || v > VertexSet::kMaxVertexId)
            throw ParseError("vertex id " + std::to_string(v) + " outside supported range 1.." +
                             std::to_string(VertexSet::kMaxVertexId));
    };
    check_id(root);

    int max_id = root;
    for (const auto& [u, v] : edges) {
        check_id(u);
        check_id(v);
        max_id = std::max({max_id, u, v});
    }

    root_ = root;
    parent_.assign(max_id + 1, 0);
    children_.assign(max_id + 1, {});
    level_.assign(max_id + 1, -1);
    present_.assign(max_id + 1, 0);
    present_[root] = 1;

    for (const auto& [u, v] : edges) {
        if (std::find(children_[u].begin(), children_[u].end(), v) != children_[u].end())
            throw ParseError("duplicate edge " + std::to_string(u) + " -> " + std::to_string(v));
        if (parent_[v] != 0)
            throw ParseError("vertex " + std::to_string(v) + " has multiple parents (" +
                             std::to_string(parent_[v]) + " and " + std::to_string(u) + ")");
        if (v == root_) throw ParseError("edge into the root " + std::to_string(v));
        children_[u].push_back(v);
        parent_[v] = u;
        present_[u] = present_[v] = 1;
    }

    // Levels by walking down from the root; anything never reached is either
    // on a cycle or detached from the root.
    level_[root_] = 0;
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        std::sort(children_[u].begin(), children_[u].end());
        for (int v : children_[u]) {
            level_[v] = level_[u] + 1;
            stack.push_back(v);
        }
    }
    for (int v = 1; v <= max_id; ++v) {
        if (!present_[v]) continue;
        if (level_[v] >= 0) {
            vertices_.push_back(v);
            continue;
        }
        // Distinguish a parent cycle from a plain detached subtree: a cycle
        // keeps the upward walk going past max_id steps.
        int steps = 0;
        bool cyclic = false;
        for (int cur = v; cur != 0; cur = parent_[cur]) {
            if (++steps > max_id) {
                cyclic = true;
                break;
            }
        }
        if (cyclic)
            throw ParseError("cycle through vertex " + std::to_string(v));
        throw ParseError("vertex " + std::to_string(v) + " is disconnected from the root");
    }
}

RootedTree RootedTree::single(int root_id) { return RootedTree(root_id, {}); }

RootedTree RootedTree::line(int n) {
    if (n < 1) throw std::invalid_argument("line tree needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return RootedTree(1, edges);
}

RootedTree RootedTree::random(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random tree needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 2; i <= n; ++i) {
        // rng() % k instead of uniform_int_distribution: identical sequences
        // on every standard library.
        int parent = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(i - 1));
        edges.emplace_back(parent, i);
    }
    return RootedTree(1, edges);
}

VertexSet RootedTree::vertex_set() const {
    VertexSet s;
    for (int v : vertices_) s.add(v);
    return s;
}

bool RootedTree::has_vertex(int v) const {
    return v >= 1 && v < static_cast<int>(present_.size()) && present_[v];
}

void RootedTree::check_vertex(int v) const {
    if (!has_vertex(v))
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

int RootedTree::parent(int v) const {
    check_vertex(v);
    return parent_[v];
}

const std::vector<int>& RootedTree::children(int v) const {
    check_vertex(v);
    return children_[v];
}

int RootedTree::level(int v) const {
    check_vertex(v);
    return level_[v];
}

int RootedTree::height() const {
    int h = 0;
    for (int v : vertices_) h = std::max(h, level_[v]);
    return h;
}

bool RootedTree::is_leaf(int v) const {
    check_vertex(v);
    if (vertex_count() == 1) return true;  // lone root counts as a leaf
    int degree = static_cast<int>(children_[v].size()) + (v == root_ ? 0 : 1);
    return degree == 1;
}

std::vector<int> RootedTree::leaves() const {
    std::vector<int> out;
    for (int v : vertices_)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

DirectedPath RootedTree::path_ending_at(int v, int t) const {
    check_vertex(v);
    if (t < 1 || level_[v] < t - 1) return {};
    DirectedPath path(static_cast<std::size_t>(t));
    int cur = v;
    for (int i = t - 1; i >= 0; --i) {
        path[static_cast<std::size_t>(i)] = cur;
        cur = parent_[cur];
    }
    return path;
}

std::vector<DirectedPath> RootedTree::paths_with(int t) const {
    if (t < 2) throw std::invalid_argument("paths need t >= 2");
    std::vector<DirectedPath> paths;
    for (int v : vertices_) {
        if (level_[v] >= t - 1) paths.push_back(path_ending_at(v, t));
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

std::vector<std::pair<int, int>> RootedTree::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v : vertices_)
        if (v != root_) out.emplace_back(parent_[v], v);
    std::sort(out.begin(), out.end());
    return out;
}

RootedTree RootedTree::induced(const VertexSet& keep) const {
    if (!keep.contains(root_))
        throw std::invalid_argument("induced subtree must keep the root");
    std::vector<std::pair<int, int>> kept_edges;
    for (int v : keep.members()) {
        check_vertex(v);
        if (v == root_) continue;
        if (!keep.contains(parent_[v]))
            throw std::invalid_argument("induced vertex set not closed under parents at vertex " +
                                        std::to_string(v));
        kept_edges.emplace_back(parent_[v], v);
    }
    return RootedTree(root_, kept_edges);
}

bool RootedTree::operator==(const RootedTree& other) const {
    return root_ == other.root_ && vertices_ == other.vertices_ && edges() == other.edges();
}

RootedTree parse_tree_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int root = 0;
    bool saw_root = false;
    std::vector<std::pair<int, int>> edges;

    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment-only

        if (first == "root") {
            if (saw_root) fail("second root line");
            if (!(ls >> root)) fail("root line needs a vertex id");
            saw_root = true;
        } else {
            int u = 0, v = 0;
            try {
                u = std::stoi(first);
            } catch (const std::exception&) {
                fail("expected 'root <id>' or '<parent> <child>', got '" + first + "'");
            }
            if (!(ls >> v)) fail("edge line needs two vertex ids");
            edges.emplace_back(u, v);
        }
        std::string extra;
        if (ls >> extra) fail("trailing token '" + extra + "'");
    }
    if (!saw_root) throw ParseError("missing 'root <id>' line");
    return RootedTree(root, edges);
}

std::string to_tree_text(const RootedTree& tree) {
    std::ostringstream out;
    out << "root " << tree.root() << "\n";
    for (const auto& [u, v] : tree.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::vector<RootedTree> seeded_corpus(int n_max, int count, std::uint64_t seed) {
    if (n_max < 2) throw std::invalid_argument("corpus needs n_max >= 2");
    if (count < 0) throw std::invalid_argument("corpus needs count >= 0");
    std::mt19937_64 rng(seed);
    std::vector<RootedTree> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 1));
        out.push_back(RootedTree::random(n, rng()));
    }
    return out;
}

}  // namespace pathideal
