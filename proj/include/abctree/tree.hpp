// tree.hpp — simple graphs and labeled trees with 0-based dense vertex ids.
// Edges are stored normalized (smaller id first) and sorted, so two equal
// graphs have identical representations.
#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abctree {

using Edge = std::pair<int, int>;

// Undirected simple graph: ids in [0, n), no self-loops, no duplicate edges.
// Connectivity is not required here; LabeledTree adds the tree invariants.
class SimpleGraph {
public:
    SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 1)
            throw std::invalid_argument("graph order must be positive");
        edges_.reserve(edges.size());
        for (Edge e : edges) {
            if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (e.first == e.second)
                throw std::invalid_argument("self-loop");
            if (e.first > e.second)
                std::swap(e.first, e.second);
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("duplicate edge");
        adj_.assign(static_cast<std::size_t>(n), {});
        for (const Edge& e : edges_) {
            adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
            adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Open neighborhood N(v), sorted ascending.
    const std::vector<int>& neighbors(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex id out of range");
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool connected() const {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++visited;
                    stack.push_back(w);
                }
            }
        }
        return visited == n_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Connected acyclic graph on n labeled vertices. Immutable after construction;
// the constructor enforces edge count n-1 plus connectivity (hence acyclicity).
class LabeledTree : public SimpleGraph {
public:
    LabeledTree(int n, std::vector<Edge> edges)
        : SimpleGraph(n, std::move(edges)) {
        if (static_cast<int>(this->edges().size()) != n - 1)
            throw std::invalid_argument("a tree on " + std::to_string(n) +
                                        " vertices needs exactly " +
                                        std::to_string(n - 1) + " edges");
        if (!connected())
            throw std::invalid_argument("edge set is not connected");
    }
};

using DegreeSequence = std::vector<int>;

inline LabeledTree make_path(int n) {
    if (n < 1)
        throw std::invalid_argument("path order must be positive");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return LabeledTree(n, std::move(edges));
}

// Vertex 0 is the center, adjacent to 1..n-1.
inline LabeledTree make_star(int n) {
    if (n < 1)
        throw std::invalid_argument("star order must be positive");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i)
        edges.emplace_back(0, i);
    return LabeledTree(n, std::move(edges));
}

inline DegreeSequence degrees(const SimpleGraph& g) {
    DegreeSequence d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        d[static_cast<std::size_t>(v)] = g.degree(v);
    return d;
}

namespace detail {

// BFS distances and the farthest vertex from src.
inline std::pair<int, int> farthest_from(const SimpleGraph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    int far = src;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(far)])
            far = v;
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return {far, dist[static_cast<std::size_t>(far)]};
}

} // namespace detail

// Edge count of a longest path; 0 for the single vertex. Double BFS.
inline int diameter(const LabeledTree& t) {
    if (t.order() == 1)
        return 0;
    int end = detail::farthest_from(t, 0).first;
    return detail::farthest_from(t, end).second;
}

// True when every vertex degree is at most 2.
inline bool is_path_tree(const LabeledTree& t) {
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) > 2)
            return false;
    return true;
}

// True when some vertex is adjacent to all others (n <= 2 counts as a star).
inline bool is_star_tree(const LabeledTree& t) {
    if (t.order() <= 2)
        return true;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == t.order() - 1)
            return true;
    return false;
}

} // namespace abctree
