#ifndef TREETP_TREE_HPP
#define TREETP_TREE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treetp/index_list.hpp"

namespace treetp {

/// The unique path between two tree vertices, in traversal order
/// starting at the first endpoint. Always has >= 2 vertices.
using TreePath = OrderedIndexList;

/// The alternating +/-1 vertex labels: opposite signs across every edge,
/// normalized so sigma(1) = +1.
class VertexSigning {
  public:
    explicit VertexSigning(std::vector<int> signs) : s_(std::move(signs)) {}
    int size() const { return static_cast<int>(s_.size()); }
    int operator()(int vertex) const { return s_[static_cast<std::size_t>(vertex) - 1]; }
    const std::vector<int>& signs() const { return s_; }

  private:
    std::vector<int> s_;  // index v-1 holds sigma(v)
};

/// Labelled tree on vertices 1..n: connected, acyclic, n-1 edges.
class LabelledTree {
  public:
    /// Validates treeness; throws std::invalid_argument on duplicate
    /// edges, self-loops, cycles or disconnection.
    LabelledTree(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int vertex) const {
        return adj_[static_cast<std::size_t>(vertex) - 1];
    }
    int degree(int vertex) const { return static_cast<int>(neighbors(vertex).size()); }

    /// Degree-1 vertices, ascending. Requires n >= 2.
    std::vector<int> pendant_vertices() const;

    /// Unique path from u to v in traversal order. Requires u != v.
    TreePath path_between(int u, int v) const;

    /// One path per unordered vertex pair {u,v}, u < v, reported from the
    /// smaller endpoint; exactly n(n-1)/2 paths.
    std::vector<TreePath> enumerate_paths() const;

    VertexSigning signing() const;

    /// Tree on n-1 vertices after removing pendant vertex p; labels above
    /// p shift down by one, relative order preserved.
    LabelledTree remove_pendant(int p) const;

    /// Hop distance between two vertices.
    int distance(int u, int v) const;

    /// True when the edge set is exactly {i, i+1} for i = 1..n-1.
    bool is_natural_path() const;

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// One edge per line "u v"; blank lines and '#' comments ignored.
/// The vertex count is the largest label mentioned.
LabelledTree parse_tree(std::string_view text);

}  // namespace treetp

#endif
