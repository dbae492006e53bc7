// verify.hpp — exhaustive desk-scale verification of the ABC/Roman bound
// inequalities over all non-isomorphic trees, equality-class detection, grid
// sweeps of the scalar helper inequalities, and a per-gamma survey.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "abctree/abc.hpp"
#include "abctree/bounds.hpp"
#include "abctree/canonical.hpp"
#include "abctree/enumerate.hpp"
#include "abctree/roman.hpp"

namespace abctree {

inline constexpr double kDefaultGapTolerance = 1e-9;

struct BoundsRecord {
    int n = 0;
    CanonicalCode canonical;
    int gamma_r = 0;
    double abc = 0.0;
    double f_min = 0.0;
    double f_max = 0.0;
    double lower_gap = 0.0; // abc - f_min, negative means a violation
    double upper_gap = 0.0; // f_max - abc
    bool attains_lower = false;
    bool attains_upper = false;
    bool is_path = false;
    bool is_star = false;
};

struct Violation {
    BoundsRecord record;
    std::vector<Edge> edges;
};

struct EqualityFinding {
    int n = 0;
    std::vector<CanonicalCode> lower; // classes attaining the lower bound
    std::vector<CanonicalCode> upper;
    bool lower_only_path = false; // lower == { P_n } exactly
    bool upper_only_star = false;
};

struct EqualityClasses {
    std::vector<CanonicalCode> lower;
    std::vector<CanonicalCode> upper;
};

struct VerifyResult {
    std::vector<BoundsRecord> records; // sorted by (n, canonical)
    std::vector<Violation> violations; // empty iff both inequalities held
    std::vector<EqualityFinding> equality;
};

struct LemmaSweepReport {
    std::string id;
    std::string grid;
    double worst_a = 0.0;
    double worst_b = 0.0;
    bool two_dim = false;
    double min_slack = 0.0;
    double observed_min = 0.0;
    bool pass = false;
};

struct SurveyRow {
    int n = 0;
    int gamma_r = 0;
    long classes = 0;
    double abc_min = 0.0;
    double abc_max = 0.0;
    double f_min = 0.0;
    double f_max = 0.0;
    bool gamma_in_expected_range = true; // [2, ceil(2n/3)] for n >= 2
};

inline BoundsRecord make_bounds_record(const LabeledTree& t, double tol) {
    BoundsRecord r;
    r.n = t.order();
    r.canonical = canonical_code(t);
    r.gamma_r = roman_tree_dp(t).gamma_r;
    r.abc = abc_index(t);
    r.f_min = f_min(r.n, r.gamma_r);
    r.f_max = f_max(r.n, r.gamma_r);
    r.lower_gap = r.abc - r.f_min;
    r.upper_gap = r.f_max - r.abc;
    r.attains_lower = std::fabs(r.lower_gap) < tol;
    r.attains_upper = std::fabs(r.upper_gap) < tol;
    r.is_path = is_path_tree(t);
    r.is_star = is_star_tree(t);
    return r;
}

namespace detail {

inline EqualityFinding equality_finding_for(
    int n, const std::vector<BoundsRecord>& sorted_records) {
    EqualityFinding f;
    f.n = n;
    bool lower_has_nonpath = false, upper_has_nonstar = false;
    for (const BoundsRecord& r : sorted_records) {
        if (r.n != n)
            continue;
        if (r.attains_lower) {
            f.lower.push_back(r.canonical);
            if (!r.is_path)
                lower_has_nonpath = true;
        }
        if (r.attains_upper) {
            f.upper.push_back(r.canonical);
            if (!r.is_star)
                upper_has_nonstar = true;
        }
    }
    f.lower_only_path = f.lower.size() == 1 && !lower_has_nonpath;
    f.upper_only_star = f.upper.size() == 1 && !upper_has_nonstar;
    return f;
}

} // namespace detail

// One record per isomorphism class per order in [n_min, n_max]. Work is
// round-robin partitioned over the worker count; every operation underneath
// is pure, and the merged output is sorted by (n, canonical), so the result
// is byte-identical for any worker count.
inline VerifyResult verify_bounds(int n_min, int n_max,
                                  double tol = kDefaultGapTolerance,
                                  int workers = 1) {
    if (n_min < 4 || n_min > n_max)
        throw std::invalid_argument("verify_bounds requires 4 <= n_min <= n_max");
    if (n_max > tree_enum_cap())
        throw std::invalid_argument("n_max exceeds enumeration cap");
    if (workers < 1)
        throw std::invalid_argument("worker count must be positive");

    std::vector<std::vector<BoundsRecord>> records(static_cast<std::size_t>(workers));
    std::vector<std::vector<Violation>> violations(static_cast<std::size_t>(workers));

    auto run = [&](int w) {
        for (int n = n_min; n <= n_max; ++n) {
            TreeStream stream(n);
            long index = 0;
            while (stream.advance()) {
                if (index++ % workers != w)
                    continue;
                LabeledTree t = stream.current();
                BoundsRecord r = make_bounds_record(t, tol);
                if (r.lower_gap < -tol || r.upper_gap < -tol)
                    violations[static_cast<std::size_t>(w)].push_back({r, t.edges()});
                records[static_cast<std::size_t>(w)].push_back(std::move(r));
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (std::thread& th : pool)
            th.join();
    }

    VerifyResult out;
    for (auto& part : records)
        out.records.insert(out.records.end(),
                           std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
    for (auto& part : violations)
        out.violations.insert(out.violations.end(),
                              std::make_move_iterator(part.begin()),
                              std::make_move_iterator(part.end()));
    auto key = [](const BoundsRecord& r) { return std::tie(r.n, r.canonical); };
    std::sort(out.records.begin(), out.records.end(),
              [&](const BoundsRecord& a, const BoundsRecord& b) { return key(a) < key(b); });
    std::sort(out.violations.begin(), out.violations.end(),
              [&](const Violation& a, const Violation& b) {
                  return key(a.record) < key(b.record);
              });
    for (int n = n_min; n <= n_max; ++n)
        out.equality.push_back(detail::equality_finding_for(n, out.records));
    return out;
}

// Classes attaining |abc - bound| < tol at order n. P_n always lands in
// lower and S_n in upper (both bounds collapse to the respective closed
// forms); anything further is reported data.
inline EqualityClasses equality_classes(int n, double tol = kDefaultGapTolerance) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (n > tree_enum_cap())
        throw std::invalid_argument("order exceeds enumeration cap");
    EqualityClasses out;
    TreeStream stream(n);
    while (stream.advance()) {
        BoundsRecord r = make_bounds_record(stream.current(), tol);
        if (r.attains_lower)
            out.lower.push_back(r.canonical);
        if (r.attains_upper)
            out.upper.push_back(r.canonical);
    }
    std::sort(out.lower.begin(), out.lower.end());
    std::sort(out.upper.begin(), out.upper.end());
    return out;
}

// Per-(n, gamma_r) stratum summary over all classes of order n.
inline std::vector<SurveyRow> survey(int n, double /*tol*/ = kDefaultGapTolerance) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (n > tree_enum_cap())
        throw std::invalid_argument("order exceeds enumeration cap");
    std::map<int, SurveyRow> strata;
    TreeStream stream(n);
    while (stream.advance()) {
        LabeledTree t = stream.current();
        int g = roman_tree_dp(t).gamma_r;
        double abc = abc_index(t);
        auto it = strata.find(g);
        if (it == strata.end()) {
            SurveyRow row;
            row.n = n;
            row.gamma_r = g;
            row.classes = 1;
            row.abc_min = row.abc_max = abc;
            row.f_min = f_min(n, g);
            row.f_max = f_max(n, g);
            row.gamma_in_expected_range =
                n == 1 ? g == 1 : (g >= 2 && g <= roman_path_closed_form(n));
            strata.emplace(g, row);
        } else {
            ++it->second.classes;
            it->second.abc_min = std::min(it->second.abc_min, abc);
            it->second.abc_max = std::max(it->second.abc_max, abc);
        }
    }
    std::vector<SurveyRow> rows;
    rows.reserve(strata.size());
    for (auto& [g, row] : strata)
        rows.push_back(row);
    return rows;
}

// Grid sweeps of the five scalar inequalities behind the bounds. Tolerances:
// 1e-12 where rounding noise is negligible (small grids, O(1) values) and
// 1e-9 where the large-t evaluations cancel to ~1e-10 of noise. Worst points
// are the first grid point attaining the minimum slack in row-major order.
inline std::vector<LemmaSweepReport> sweep_lemmas(double grid_max = 200.0,
                                                  double step = 0.25) {
    if (grid_max < 10.0 || step <= 0.0)
        throw std::invalid_argument("degenerate sweep grid");
    std::vector<LemmaSweepReport> reports;

    const long a_steps = static_cast<long>((grid_max - 3.0) / step + 1e-9);
    const long b_steps = static_cast<long>((grid_max - 2.0) / step + 1e-9);

    { // pendant_delta: non-decreasing in a; anchor value at a = 3.
        LemmaSweepReport r;
        r.id = "pendant_delta";
        r.grid = "a in [3, " + std::to_string(grid_max) + "] step " + std::to_string(step);
        r.min_slack = 1e300;
        r.observed_min = 1e300;
        for (long i = 0; i < a_steps; ++i) {
            double a = 3.0 + static_cast<double>(i) * step;
            double slack = pendant_delta(a + step) - pendant_delta(a);
            r.observed_min = std::min(r.observed_min, pendant_delta(a));
            if (slack < r.min_slack) {
                r.min_slack = slack;
                r.worst_a = a;
            }
        }
        r.pass = r.min_slack >= -1e-12 &&
                 std::fabs(pendant_delta(3.0) - 0.9258) <= 1e-4;
        reports.push_back(r);
    }

    { // neighbor_delta: non-positive, 0 at b = 2, non-increasing in b.
        LemmaSweepReport r;
        r.id = "neighbor_delta";
        r.grid = "a in [3, " + std::to_string(grid_max) + "], b in [2, " +
                 std::to_string(grid_max) + "] step " + std::to_string(step);
        r.two_dim = true;
        r.min_slack = 1e300;
        r.observed_min = 1e300;
        bool nonpositive = true;
        bool zero_row = true;
        for (long i = 0; i <= a_steps; ++i) {
            double a = 3.0 + static_cast<double>(i) * step;
            zero_row = zero_row && neighbor_delta(a, 2.0) == 0.0;
            for (long j = 0; j < b_steps; ++j) {
                double b = 2.0 + static_cast<double>(j) * step;
                double value = neighbor_delta(a, b);
                double slack = value - neighbor_delta(a, b + step);
                nonpositive = nonpositive && value <= 1e-12;
                r.observed_min = std::min(r.observed_min, value);
                if (slack < r.min_slack) {
                    r.min_slack = slack;
                    r.worst_a = a;
                    r.worst_b = b;
                }
            }
        }
        r.pass = r.min_slack >= -1e-12 && nonpositive && zero_row;
        reports.push_back(r);
    }

    { // attach_leaf_delta: stays above sqrt(5)/(2 sqrt(2)); observed minimum.
        LemmaSweepReport r;
        r.id = "attach_leaf_delta";
        r.grid = "a in [3, " + std::to_string(grid_max) + "], b in [2, " +
                 std::to_string(grid_max) + "] step " + std::to_string(step);
        r.two_dim = true;
        r.min_slack = 1e300;
        r.observed_min = 1e300;
        const double floor = xi_floor();
        for (long i = 0; i <= a_steps; ++i) {
            double a = 3.0 + static_cast<double>(i) * step;
            for (long j = 0; j <= b_steps; ++j) {
                double b = 2.0 + static_cast<double>(j) * step;
                double value = attach_leaf_delta(a, b);
                double slack = value - floor;
                if (value < r.observed_min)
                    r.observed_min = value;
                if (slack < r.min_slack) {
                    r.min_slack = slack;
                    r.worst_a = a;
                    r.worst_b = b;
                }
            }
        }
        r.pass = r.min_slack > 0.0 && r.observed_min >= 0.7962 - 1e-4;
        reports.push_back(r);
    }

    // Log-uniform t grids for the radical steps; 601 points per sweep with
    // exact left endpoints.
    constexpr int kLogPoints = 600;

    { // radical_step: range [-sqrt(2), -1), non-decreasing, exact at t = 1.
        LemmaSweepReport r;
        r.id = "radical_step";
        r.grid = "t in [1, 1e6], 601 log-uniform points";
        r.min_slack = 1e300;
        r.observed_min = 1e300;
        double max_value = -1e300;
        double prev = 0.0;
        bool endpoint_exact = radical_step(1.0) == -std::sqrt(2.0);
        bool in_range = true;
        for (int j = 0; j <= kLogPoints; ++j) {
            double t = j == 0 ? 1.0 : std::pow(10.0, 6.0 * j / kLogPoints);
            double value = radical_step(t);
            r.observed_min = std::min(r.observed_min, value);
            max_value = std::max(max_value, value);
            if (value < -std::sqrt(2.0) || value >= -1.0 + 1e-9)
                in_range = false;
            if (j > 0) {
                double slack = value - prev;
                if (slack < r.min_slack) {
                    r.min_slack = slack;
                    r.worst_a = t;
                }
            }
            prev = value;
        }
        r.pass = endpoint_exact && in_range && r.min_slack >= -1e-9;
        reports.push_back(r);
    }

    { // radical_step2: range [-sqrt(6), -2), non-decreasing, exact at t = 2.
        LemmaSweepReport r;
        r.id = "radical_step2";
        r.grid = "t in [2, 1e6], 601 log-uniform points";
        r.min_slack = 1e300;
        r.observed_min = 1e300;
        const double span = 6.0 - std::log10(2.0);
        double prev = 0.0;
        bool endpoint_exact = radical_step2(2.0) == -std::sqrt(6.0);
        bool in_range = true;
        for (int j = 0; j <= kLogPoints; ++j) {
            double t = j == 0 ? 2.0 : 2.0 * std::pow(10.0, span * j / kLogPoints);
            double value = radical_step2(t);
            r.observed_min = std::min(r.observed_min, value);
            if (value < -std::sqrt(6.0) || value >= -2.0 + 1e-9)
                in_range = false;
            if (j > 0) {
                double slack = value - prev;
                if (slack < r.min_slack) {
                    r.min_slack = slack;
                    r.worst_a = t;
                }
            }
            prev = value;
        }
        r.pass = endpoint_exact && in_range && r.min_slack >= -1e-9;
        reports.push_back(r);
    }

    return reports;
}

} // namespace abctree
