// enumerate.hpp — stream of all non-isomorphic free trees of a given order.
//
// Successor generation over canonical level sequences: rooted-tree successors
// (Beyer-Hedetniemi) restricted to the centered/bicentered representatives of
// free trees (Wright-Richmond-Odlyzko-McKay). Each isomorphism class appears
// exactly once; emission order is the generator's decreasing lexicographic
// level-sequence order, which is deterministic and starts at the path and
// ends at the star.
#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abctree/tree.hpp"

namespace abctree {

inline constexpr int kDefaultEnumCap = 20;

// Hard cap on enumeration order; TREE_ENUM_CAP overrides the default of 20.
inline int tree_enum_cap() {
    if (const char* env = std::getenv("TREE_ENUM_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<int>(v);
    }
    return kDefaultEnumCap;
}

namespace detail {

// Index of the root's second level-1 child in a level sequence, or size()
// when the root has a single subtree. Splits the sequence into the first
// subtree ("left", levels shifted down by one) and the remainder ("rest").
inline std::size_t split_point(const std::vector<int>& layout) {
    bool one_seen = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (one_seen)
                return i;
            one_seen = true;
        }
    }
    return layout.size();
}

// Beyer-Hedetniemi successor of a canonical rooted level sequence, chopping
// at position p (default: last position with level > 1). False when the
// sequence was the star, i.e. the last one.
inline bool next_rooted(std::vector<int>& layout, std::size_t p = 0) {
    if (p == 0) {
        p = layout.size() - 1;
        while (layout[p] == 1)
            --p;
    }
    if (p == 0)
        return false;
    std::size_t q = p - 1;
    while (layout[q] != layout[p] - 1)
        --q;
    for (std::size_t i = p; i < layout.size(); ++i)
        layout[i] = layout[i - p + q];
    return true;
}

// Whether the canonical rooted sequence also represents its free tree: the
// root must be a center, and for bicentral trees the two halves must be in
// canonical (size, then lexicographic) order.
inline bool is_free_canonical(const std::vector<int>& layout) {
    const std::size_t m = split_point(layout);
    int left_height = 0;
    for (std::size_t i = 1; i < m; ++i)
        left_height = std::max(left_height, layout[i] - 1);
    int rest_height = 0;
    for (std::size_t i = m; i < layout.size(); ++i)
        rest_height = std::max(rest_height, layout[i]);
    if (rest_height < left_height)
        return false;
    if (rest_height > left_height)
        return true;
    const std::size_t left_len = m - 1;
    const std::size_t rest_len = layout.size() - m + 1;
    if (left_len > rest_len)
        return false;
    if (left_len < rest_len)
        return true;
    // Equal lengths: compare left (shifted) against rest element by element.
    auto left_at = [&](std::size_t j) { return layout[1 + j] - 1; };
    auto rest_at = [&](std::size_t j) { return j == 0 ? 0 : layout[m + j - 1]; };
    for (std::size_t j = 0; j < left_len; ++j) {
        if (left_at(j) != rest_at(j))
            return left_at(j) < rest_at(j);
    }
    return true;
}

// Jump past an invalid candidate: take the rooted successor at the end of
// the first subtree, then reset the tail to the deepest valid completion.
inline void jump_free(std::vector<int>& layout) {
    const std::size_t p = split_point(layout) - 1;
    const int chopped_level = layout[p];
    next_rooted(layout, p);
    if (chopped_level > 2) {
        const std::size_t m = split_point(layout);
        int left_height = 0;
        for (std::size_t i = 1; i < m; ++i)
            left_height = std::max(left_height, layout[i] - 1);
        const std::size_t suffix_len = static_cast<std::size_t>(left_height) + 1;
        for (std::size_t j = 0; j < suffix_len; ++j)
            layout[layout.size() - suffix_len + j] = static_cast<int>(j) + 1;
    }
}

inline std::vector<Edge> layout_to_edges(const std::vector<int>& layout) {
    std::vector<Edge> edges;
    edges.reserve(layout.size() - 1);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        while (!stack.empty() && layout[stack.back()] >= layout[i])
            stack.pop_back();
        if (!stack.empty())
            edges.emplace_back(static_cast<int>(stack.back()), static_cast<int>(i));
        stack.push_back(i);
    }
    return edges;
}

} // namespace detail

class TreeStream {
public:
    explicit TreeStream(int n) : n_(n) {
        if (n < 1)
            throw std::invalid_argument("tree order must be positive");
        if (n > tree_enum_cap())
            throw std::invalid_argument("tree order " + std::to_string(n) +
                                        " exceeds enumeration cap " +
                                        std::to_string(tree_enum_cap()));
    }

    int order() const { return n_; }

    // Advances to the next isomorphism class; false once exhausted.
    bool advance() {
        if (done_)
            return false;
        if (n_ == 1) {
            if (started_) {
                done_ = true;
                return false;
            }
            started_ = true;
            layout_ = {0};
            return true;
        }
        if (!started_) {
            started_ = true;
            layout_.clear();
            for (int i = 0; i <= n_ / 2; ++i)
                layout_.push_back(i);
            for (int i = 1; i < (n_ + 1) / 2; ++i)
                layout_.push_back(i);
        } else if (!detail::next_rooted(layout_)) {
            done_ = true;
            return false;
        }
        while (!detail::is_free_canonical(layout_))
            detail::jump_free(layout_);
        return true;
    }

    // Level sequence of the current class (valid after advance() succeeded).
    const std::vector<int>& level_sequence() const { return layout_; }

    LabeledTree current() const {
        return LabeledTree(n_, detail::layout_to_edges(layout_));
    }

    std::optional<LabeledTree> next() {
        if (!advance())
            return std::nullopt;
        return current();
    }

private:
    int n_;
    std::vector<int> layout_;
    bool started_ = false;
    bool done_ = false;
};

inline TreeStream enumerate_trees(int n) { return TreeStream(n); }

inline long count_trees(int n) {
    TreeStream s(n);
    long count = 0;
    while (s.advance())
        ++count;
    return count;
}

} // namespace abctree
