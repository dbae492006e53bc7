// canonical.hpp — isomorphism-invariant codes for trees.
//
// The code is the AHU parenthesis encoding rooted at the tree's center; for
// bicentral trees both rooted encodings are computed and the lexicographically
// smaller one is kept. Equal codes <=> isomorphic trees.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "abctree/tree.hpp"

namespace abctree {

using CanonicalCode = std::string;

// The one or two vertices that remain after repeatedly deleting all leaves.
inline std::vector<int> tree_centers(const LabeledTree& t) {
    const int n = t.order();
    if (n <= 2) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            all[static_cast<std::size_t>(v)] = v;
        return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1)
            layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            --remaining;
            deg[static_cast<std::size_t>(v)] = 0;
            for (int w : t.neighbors(v)) {
                if (--deg[static_cast<std::size_t>(w)] == 1)
                    next.push_back(w);
            }
        }
        layer.swap(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace detail {

// Rooted AHU string: code(v) = '(' + sorted child codes + ')'. Iterative over
// reverse BFS order so deep paths cannot overflow the call stack.
inline std::string ahu_encoding(const LabeledTree& t, int root) {
    const int n = t.order();
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(root);
    parent[static_cast<std::size_t>(root)] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int w : t.neighbors(order[i])) {
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = order[i];
                order.push_back(w);
            }
        }
    }
    std::vector<std::string> code(static_cast<std::size_t>(n));
    std::vector<std::string> kids;
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        kids.clear();
        for (int w : t.neighbors(v)) {
            if (w != v && parent[static_cast<std::size_t>(w)] == v && w != root)
                kids.push_back(std::move(code[static_cast<std::size_t>(w)]));
        }
        std::sort(kids.begin(), kids.end());
        std::string& out = code[static_cast<std::size_t>(v)];
        out.reserve(2 + kids.size() * 2);
        out.push_back('(');
        for (const std::string& k : kids)
            out += k;
        out.push_back(')');
    }
    return code[static_cast<std::size_t>(root)];
}

} // namespace detail

inline CanonicalCode canonical_code(const LabeledTree& t) {
    std::vector<int> centers = tree_centers(t);
    std::string best = detail::ahu_encoding(t, centers[0]);
    if (centers.size() == 2) {
        std::string other = detail::ahu_encoding(t, centers[1]);
        if (other < best)
            best = std::move(other);
    }
    return best;
}

} // namespace abctree
