#include "treetp/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace treetp {

LabelledTree::LabelledTree(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("tree: need at least one vertex");
    if (static_cast<int>(edges_.size()) != n_ - 1)
        throw std::invalid_argument("tree: " + std::to_string(n_) + " vertices need " +
                                    std::to_string(n_ - 1) + " edges, got " +
                                    std::to_string(edges_.size()));
    adj_.resize(static_cast<std::size_t>(n_));
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges_) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw std::invalid_argument("tree: vertex out of range in edge " +
                                        std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("tree: self-loop at " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("tree: duplicate edge " + std::to_string(key.first) +
                                        " " + std::to_string(key.second));
        adj_[static_cast<std::size_t>(u) - 1].push_back(v);
        adj_[static_cast<std::size_t>(v) - 1].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    // n-1 edges + connected <=> tree; a cycle would leave some vertex
    // unreachable.
    std::vector<bool> visited(static_cast<std::size_t>(n_), false);
    std::deque<int> queue{1};
    visited[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : neighbors(x))
            if (!visited[static_cast<std::size_t>(y) - 1]) {
                visited[static_cast<std::size_t>(y) - 1] = true;
                ++reached;
                queue.push_back(y);
            }
    }
    if (reached != n_)
        throw std::invalid_argument("tree: disconnected (cycle or missing vertex)");
}

std::vector<int> LabelledTree::pendant_vertices() const {
    if (n_ < 2) throw std::invalid_argument("pendant_vertices: need n >= 2");
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

TreePath LabelledTree::path_between(int u, int v) const {
    if (u == v) throw std::invalid_argument("path_between: endpoints must differ");
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw std::out_of_range("path_between: vertex out of range");
    std::vector<int> parent(static_cast<std::size_t>(n_), 0);
    std::deque<int> queue{u};
    parent[static_cast<std::size_t>(u) - 1] = u;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) break;
        for (int y : neighbors(x))
            if (parent[static_cast<std::size_t>(y) - 1] == 0) {
                parent[static_cast<std::size_t>(y) - 1] = x;
                queue.push_back(y);
            }
    }
    std::vector<int> path{v};
    while (path.back() != u) path.push_back(parent[static_cast<std::size_t>(path.back()) - 1]);
    std::reverse(path.begin(), path.end());
    return TreePath(std::move(path));
}

std::vector<TreePath> LabelledTree::enumerate_paths() const {
    if (n_ < 2) throw std::invalid_argument("enumerate_paths: need n >= 2");
    std::vector<TreePath> out;
    out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v) out.push_back(path_between(u, v));
    return out;
}

VertexSigning LabelledTree::signing() const {
    std::vector<int> s(static_cast<std::size_t>(n_), 0);
    s[0] = 1;
    std::deque<int> queue{1};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : neighbors(x))
            if (s[static_cast<std::size_t>(y) - 1] == 0) {
                s[static_cast<std::size_t>(y) - 1] = -s[static_cast<std::size_t>(x) - 1];
                queue.push_back(y);
            }
    }
    return VertexSigning(std::move(s));
}

LabelledTree LabelledTree::remove_pendant(int p) const {
    if (degree(p) != 1) throw std::invalid_argument("remove_pendant: vertex not pendant");
    auto relabel = [p](int v) { return v > p ? v - 1 : v; };
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : edges_)
        if (u != p && v != p) kept.emplace_back(relabel(u), relabel(v));
    return LabelledTree(n_ - 1, std::move(kept));
}

int LabelledTree::distance(int u, int v) const {
    if (u == v) return 0;
    return static_cast<int>(path_between(u, v).size()) - 1;
}

bool LabelledTree::is_natural_path() const {
    if (n_ == 1) return true;
    for (int v = 1; v < n_; ++v) {
        const auto& nb = neighbors(v);
        if (std::find(nb.begin(), nb.end(), v + 1) == nb.end()) return false;
    }
    return true;
}

LabelledTree parse_tree(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::pair<int, int>> edges;
    int max_label = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v))
            throw std::invalid_argument("tree: malformed edge on line " +
                                        std::to_string(lineno));
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("tree: trailing data on line " +
                                        std::to_string(lineno));
        if (u < 1 || v < 1)
            throw std::invalid_argument("tree: vertex labels must be >= 1 (line " +
                                        std::to_string(lineno) + ")");
        edges.emplace_back(u, v);
        max_label = std::max({max_label, u, v});
    }
    if (edges.empty()) throw std::invalid_argument("tree: no edges");
    return LabelledTree(max_label, std::move(edges));
}

}  // namespace treetp
