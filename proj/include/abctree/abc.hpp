// abc.hpp — atom-bond connectivity index, exact edge-by-edge evaluation.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "abctree/tree.hpp"

namespace abctree {

// Per-edge term sqrt((du+dv-2)/(du*dv)); symmetric in its arguments.
inline double edge_contribution(int du, int dv) {
    if (du < 1 || dv < 1)
        throw std::invalid_argument("an endpoint of an edge has degree >= 1");
    return std::sqrt((static_cast<double>(du) + dv - 2.0) /
                     (static_cast<double>(du) * dv));
}

// Sum of edge_contribution over all edges; 0 for n <= 2 (empty sum or a
// single (1,1) edge). The contributions are sorted ascending before the
// left-to-right double-precision sum, so the result is bit-identical under
// any relabeling of the tree.
inline double abc_index(const LabeledTree& t) {
    DegreeSequence deg = degrees(t);
    std::vector<double> terms;
    terms.reserve(t.edges().size());
    for (const Edge& e : t.edges())
        terms.push_back(edge_contribution(deg[static_cast<std::size_t>(e.first)],
                                          deg[static_cast<std::size_t>(e.second)]));
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double x : terms)
        sum += x;
    return sum;
}

} // namespace abctree
