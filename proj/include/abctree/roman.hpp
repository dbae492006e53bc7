// roman.hpp — exact Roman domination numbers.
//
// A Roman dominating function labels vertices with {0,1,2} so that every
// 0-labeled vertex has a neighbor labeled 2; gamma_R is the minimum total
// weight. Two independent solvers: a 3^n brute force for any simple graph
// (guarded to n <= 14) and a linear dynamic program for trees.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "abctree/tree.hpp"

namespace abctree {

using RomanAssignment = std::vector<int>;

struct RomanResult {
    int gamma_r = 0;
    RomanAssignment witness;
};

inline constexpr int kRomanBruteforceMaxOrder = 14;

namespace detail {

inline void check_labels(const SimpleGraph& g, const RomanAssignment& labels) {
    if (static_cast<int>(labels.size()) != g.order())
        throw std::invalid_argument("assignment length does not match graph order");
    for (int x : labels)
        if (x < 0 || x > 2)
            throw std::invalid_argument("labels must be 0, 1 or 2");
}

} // namespace detail

// True iff every vertex labeled 0 has at least one neighbor labeled 2.
inline bool is_valid_rdf(const SimpleGraph& g, const RomanAssignment& labels) {
    detail::check_labels(g, labels);
    for (int v = 0; v < g.order(); ++v) {
        if (labels[static_cast<std::size_t>(v)] != 0)
            continue;
        bool guarded = false;
        for (int w : g.neighbors(v)) {
            if (labels[static_cast<std::size_t>(w)] == 2) {
                guarded = true;
                break;
            }
        }
        if (!guarded)
            return false;
    }
    return true;
}

inline int rdf_weight(const RomanAssignment& labels) {
    int sum = 0;
    for (int x : labels) {
        if (x < 0 || x > 2)
            throw std::invalid_argument("labels must be 0, 1 or 2");
        sum += x;
    }
    return sum;
}

// Global minimum over all 3^n assignments. The witness is the
// lexicographically least optimal assignment (vertex 0 most significant).
inline RomanResult roman_bruteforce(const SimpleGraph& g) {
    const int n = g.order();
    if (n > kRomanBruteforceMaxOrder)
        throw std::invalid_argument("brute force is guarded to n <= 14");
    RomanAssignment labels(static_cast<std::size_t>(n), 0);
    RomanResult best;
    best.gamma_r = 2 * n + 1;
    for (;;) {
        int weight = 0;
        bool valid = true;
        for (int v = 0; v < n && valid; ++v) {
            int lv = labels[static_cast<std::size_t>(v)];
            weight += lv;
            if (lv == 0) {
                bool guarded = false;
                for (int w : g.neighbors(v)) {
                    if (labels[static_cast<std::size_t>(w)] == 2) {
                        guarded = true;
                        break;
                    }
                }
                valid = guarded;
            }
        }
        if (valid && weight < best.gamma_r) {
            best.gamma_r = weight;
            best.witness = labels;
        }
        // Base-3 odometer, least significant digit last: lexicographic order.
        int i = n - 1;
        while (i >= 0 && labels[static_cast<std::size_t>(i)] == 2)
            labels[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++labels[static_cast<std::size_t>(i)];
    }
    return best;
}

// Tree DP, rooted at vertex 0. Four states per vertex:
//   A: labeled 2;  B: labeled 1;
//   C: labeled 0, dominated by a child labeled 2;
//   D: labeled 0, not dominated below (the parent must take label 2).
// Leaves: A=2, B=1, C=inf, D=0. Answer at the root: min(A, B, C).
inline RomanResult roman_tree_dp(const LabeledTree& t) {
    const int n = t.order();
    const int inf = 2 * n + 1; // exceeds any weight; kept out of arithmetic

    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(0);
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int w : t.neighbors(order[i]))
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = order[i];
                order.push_back(w);
            }
    }

    std::vector<int> A(static_cast<std::size_t>(n)), B(static_cast<std::size_t>(n)),
        C(static_cast<std::size_t>(n)), D(static_cast<std::size_t>(n));
    auto min3 = [&](int v) {
        std::size_t u = static_cast<std::size_t>(v);
        return std::min(A[u], std::min(B[u], C[u]));
    };
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        std::size_t u = static_cast<std::size_t>(v);
        int sum_all = 0;   // sum of min(A,B,C,D) over children
        int sum_abc = 0;   // sum of min(A,B,C) over children
        int best_swap = inf;
        bool has_child = false;
        for (int w : t.neighbors(v)) {
            if (w == v || parent[static_cast<std::size_t>(w)] != v || w == 0)
                continue;
            has_child = true;
            int m3 = min3(w);
            sum_all += std::min(m3, D[static_cast<std::size_t>(w)]);
            sum_abc += m3;
            best_swap = std::min(best_swap, A[static_cast<std::size_t>(w)] - m3);
        }
        if (!has_child) {
            A[u] = 2;
            B[u] = 1;
            C[u] = inf;
            D[u] = 0;
        } else {
            A[u] = 2 + sum_all;
            B[u] = 1 + sum_abc;
            D[u] = sum_abc;
            C[u] = sum_abc + best_swap;
        }
    }

    RomanResult result;
    result.gamma_r = std::min(A[0], std::min(B[0], C[0]));

    // Reconstruct one optimal witness top-down; first minimal state wins.
    enum State : std::uint8_t { SA, SB, SC, SD };
    std::vector<State> state(static_cast<std::size_t>(n), SA);
    auto pick_root = [&]() {
        if (A[0] <= B[0] && A[0] <= C[0]) return SA;
        if (B[0] <= C[0]) return SB;
        return SC;
    };
    state[0] = pick_root();
    result.witness.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        std::size_t u = static_cast<std::size_t>(v);
        State sv = state[u];
        result.witness[u] = sv == SA ? 2 : (sv == SB ? 1 : 0);
        int designated = -1;
        if (sv == SC) {
            int best = inf;
            for (int w : t.neighbors(v)) {
                if (parent[static_cast<std::size_t>(w)] != v || w == 0)
                    continue;
                int gain = A[static_cast<std::size_t>(w)] - min3(w);
                if (gain < best) {
                    best = gain;
                    designated = w;
                }
            }
        }
        for (int w : t.neighbors(v)) {
            if (parent[static_cast<std::size_t>(w)] != v || w == 0)
                continue;
            std::size_t x = static_cast<std::size_t>(w);
            if (w == designated) {
                state[x] = SA;
                continue;
            }
            int m3 = min3(w);
            if (sv == SA && D[x] < m3) {
                state[x] = SD;
            } else if (A[x] <= B[x] && A[x] <= C[x]) {
                state[x] = SA;
            } else if (B[x] <= C[x]) {
                state[x] = SB;
            } else {
                state[x] = SC;
            }
        }
    }
    return result;
}

// ceil(2n/3), the Roman domination number of the path P_n.
inline int roman_path_closed_form(int n) {
    if (n < 1)
        throw std::invalid_argument("path order must be positive");
    return (2 * n + 2) / 3;
}

} // namespace abctree
