// bounds.hpp — closed-form extremal bounds for the ABC index of trees in
// terms of the order n and the Roman domination number, plus the scalar
// helper functions whose monotonicity/range properties the verifier sweeps.
#pragma once

#include <cmath>
#include <stdexcept>

#include "abctree/roman.hpp"

namespace abctree {

namespace detail {

inline void check_gamma_range(int n, int gamma_r) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (gamma_r < 1 || gamma_r > n)
        throw std::invalid_argument("gamma_r must lie in [1, n]");
}

} // namespace detail

// Lower bound: (n-1)/sqrt(2) + ceil(2n/3)*(3/4 - 1/sqrt(2)) + gamma_r*(1/sqrt(2) - 3/4).
// The ceiling term depends on n only. Equals (n-1)/sqrt(2) when
// gamma_r = ceil(2n/3), i.e. for paths.
inline double f_min(int n, int gamma_r) {
    detail::check_gamma_range(n, gamma_r);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double c = 0.75 - inv_sqrt2;
    return inv_sqrt2 * (n - 1) + roman_path_closed_form(n) * c - gamma_r * c;
}

// Upper bound: sqrt(n-gamma_r+1)*sqrt(n-gamma_r) - (gamma_r-2)*(1/2 - 3/sqrt(5)).
// Equals sqrt((n-1)(n-2)) when gamma_r = 2, i.e. for stars.
inline double f_max(int n, int gamma_r) {
    detail::check_gamma_range(n, gamma_r);
    const double s = static_cast<double>(n - gamma_r);
    return std::sqrt(s + 1.0) * std::sqrt(s) -
           (gamma_r - 2.0) * (0.5 - 3.0 / std::sqrt(5.0));
}

// ABC gain at the pendant edge when a leaf is attached to a vertex of
// degree a-1: (a-1)sqrt((a-1)/a) - (a-2)sqrt((a-2)/(a-1)). Increasing for
// a >= 3, tends to 1 from below.
inline double pendant_delta(double a) {
    if (a < 3.0)
        throw std::invalid_argument("pendant_delta requires a >= 3");
    return (a - 1.0) * std::sqrt((a - 1.0) / a) -
           (a - 2.0) * std::sqrt((a - 2.0) / (a - 1.0));
}

// Change of the edge term toward a degree-b neighbor when the shared vertex
// grows from degree a-1 to a: sqrt((a+b-2)/(ab)) - sqrt((a+b-3)/((a-1)b)).
// Non-positive, identically 0 at b = 2, decreasing in b with infimum
// 1/sqrt(a) - 1/sqrt(a-1) as b grows.
inline double neighbor_delta(double a, double b) {
    if (a < 3.0 || b < 2.0)
        throw std::invalid_argument("neighbor_delta requires a >= 3, b >= 2");
    return std::sqrt((a + b - 2.0) / (a * b)) -
           std::sqrt((a + b - 3.0) / ((a - 1.0) * b));
}

// Total ABC change from attaching a leaf: pendant_delta + neighbor_delta.
// Stays above sqrt(5)/(2 sqrt(2)) on its whole domain.
inline double attach_leaf_delta(double a, double b) {
    return pendant_delta(a) + neighbor_delta(a, b);
}

inline double xi_floor() { return std::sqrt(5.0) / (2.0 * std::sqrt(2.0)); }

// Backward difference of the radical product sqrt((t+1)t) appearing in f_max:
// sqrt(t(t-1)) - sqrt((t+1)t). Non-decreasing on t >= 1 with range
// [-sqrt(2), -1); the radicands are multiplied before the square root so the
// endpoint value -sqrt(2) is exact.
inline double radical_step(double t) {
    if (t < 1.0)
        throw std::invalid_argument("radical_step requires t >= 1");
    return std::sqrt(t * (t - 1.0)) - std::sqrt((t + 1.0) * t);
}

// Two-step variant: sqrt((t-1)(t-2)) - sqrt((t+1)t) on t >= 2, range
// [-sqrt(6), -2); the endpoint value -sqrt(6) is exact.
inline double radical_step2(double t) {
    if (t < 2.0)
        throw std::invalid_argument("radical_step2 requires t >= 2");
    return std::sqrt((t - 1.0) * (t - 2.0)) - std::sqrt((t + 1.0) * t);
}

} // namespace abctree
