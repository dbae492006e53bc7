// abctree — exact ABC-index and Roman-domination toolkit for trees.
//
// Subcommands: abc, roman, bounds, gen-trees, verify, lemmas, survey.
// Exit codes: 0 success, 1 usage/input error, 2 an expectation check failed
// (bound violations found, or a sweep did not pass); findings are still
// written in full before exiting with 2.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "abctree/abc.hpp"
#include "abctree/bounds.hpp"
#include "abctree/canonical.hpp"
#include "abctree/edgelist.hpp"
#include "abctree/enumerate.hpp"
#include "abctree/report.hpp"
#include "abctree/roman.hpp"
#include "abctree/verify.hpp"
#include "abctree/version.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
}

int cmd_abc(const std::string& file) {
    abctree::LabeledTree t = abctree::parse_edgelist(slurp(file));
    std::cout << abctree::format12(abctree::abc_index(t)) << "\n";
    return 0;
}

int cmd_roman(const std::string& file, bool brute) {
    abctree::RomanResult r;
    if (brute) {
        abctree::SimpleGraph g = abctree::parse_graph(slurp(file));
        r = abctree::roman_bruteforce(g);
    } else {
        abctree::LabeledTree t = abctree::parse_edgelist(slurp(file));
        r = abctree::roman_tree_dp(t);
    }
    std::cout << r.gamma_r << "\n";
    std::cout << "witness:";
    for (int label : r.witness)
        std::cout << ' ' << label;
    std::cout << "\n";
    return 0;
}

int cmd_bounds(int n, int gamma) {
    std::cout << "f_min " << abctree::format12(abctree::f_min(n, gamma)) << "\n";
    std::cout << "f_max " << abctree::format12(abctree::f_max(n, gamma)) << "\n";
    return 0;
}

int cmd_gen_trees(int n, const std::string& out_path) {
    abctree::TreeStream stream = abctree::enumerate_trees(n);
    std::string out;
    long count = 0;
    while (stream.advance()) {
        out += abctree::write_edgelist(stream.current());
        ++count;
    }
    if (out_path.empty())
        std::cout << out;
    else
        spill(out_path, out);
    std::cerr << count << " trees of order " << n << "\n";
    return 0;
}

int cmd_verify(int n_min, int n_max, double tol, int workers,
               const std::string& json_path, const std::string& csv_path) {
    auto t0 = std::chrono::steady_clock::now();
    abctree::VerifyResult result = abctree::verify_bounds(n_min, n_max, tol, workers);
    auto t1 = std::chrono::steady_clock::now();

    abctree::RunReport report;
    report.command = "verify";
    report.parameters["n_min"] = n_min;
    report.parameters["n_max"] = n_max;
    report.parameters["tol"] = abctree::round12(tol);
    report.records = std::move(result.records);
    report.violations = std::move(result.violations);
    report.equality = std::move(result.equality);
    report.timing_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (!json_path.empty())
        spill(json_path, abctree::write_report_json(report));
    if (!csv_path.empty()) {
        spill(csv_path, abctree::write_report_csv(report));
        spill(csv_path + ".findings.json", abctree::write_findings_json(report));
    }

    std::cout << "classes: " << report.records.size() << "\n";
    std::cout << "violations: " << report.violations.size() << "\n";
    for (const abctree::Violation& v : report.violations) {
        std::cout << "VIOLATION n=" << v.record.n << " gamma_r=" << v.record.gamma_r
                  << " abc=" << abctree::format12(v.record.abc) << " edges:";
        for (const abctree::Edge& e : v.edges)
            std::cout << " " << e.first << "-" << e.second;
        std::cout << "\n";
    }
    for (const abctree::EqualityFinding& e : report.equality) {
        std::cout << "n=" << e.n << " lower_classes=" << e.lower.size()
                  << " upper_classes=" << e.upper.size()
                  << " lower_only_path=" << (e.lower_only_path ? "yes" : "no")
                  << " upper_only_star=" << (e.upper_only_star ? "yes" : "no") << "\n";
    }
    std::cerr << "verify took " << abctree::format12(report.timing_ms) << " ms\n";
    return report.violations.empty() ? 0 : 2;
}

int cmd_lemmas(double grid_max, double step) {
    std::vector<abctree::LemmaSweepReport> sweeps =
        abctree::sweep_lemmas(grid_max, step);
    bool all_pass = true;
    for (const abctree::LemmaSweepReport& r : sweeps) {
        std::cout << r.id << ": " << (r.pass ? "pass" : "FAIL")
                  << " min_slack=" << abctree::format12(r.min_slack) << " worst=("
                  << abctree::format12(r.worst_a);
        if (r.two_dim)
            std::cout << ", " << abctree::format12(r.worst_b);
        std::cout << ") observed_min=" << abctree::format12(r.observed_min)
                  << " [" << r.grid << "]\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 2;
}

int cmd_survey(int n) {
    std::vector<abctree::SurveyRow> rows = abctree::survey(n);
    std::cout << "n gamma_r classes abc_min abc_max f_min f_max\n";
    for (const abctree::SurveyRow& r : rows) {
        std::cout << r.n << " " << r.gamma_r << " " << r.classes << " "
                  << abctree::format12(r.abc_min) << " "
                  << abctree::format12(r.abc_max) << " "
                  << abctree::format12(r.f_min) << " "
                  << abctree::format12(r.f_max);
        if (!r.gamma_in_expected_range)
            std::cout << " WARN:gamma_outside_[2,ceil(2n/3)]";
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ABC index and Roman domination toolkit for trees"};
    app.set_version_flag("--version", std::string(abctree::kToolVersion));
    app.require_subcommand(1);

    std::string file;
    bool brute = false;
    int n = 0, gamma = 0, n_min = 4, n_max = 10, workers = 1;
    double tol = abctree::kDefaultGapTolerance, grid_max = 200.0, step = 0.25;
    std::string out_path, json_path, csv_path;

    CLI::App* abc = app.add_subcommand("abc", "ABC index of a tree edge-list file");
    abc->add_option("FILE", file)->required();

    CLI::App* roman = app.add_subcommand("roman", "Roman domination number of a tree");
    roman->add_option("FILE", file)->required();
    roman->add_flag("--brute", brute, "force the 3^n oracle (accepts any graph)");

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate f_min/f_max");
    bounds->add_option("--n", n)->required();
    bounds->add_option("--gamma", gamma)->required();

    CLI::App* gen = app.add_subcommand("gen-trees", "emit all non-isomorphic trees");
    gen->add_option("--n", n)->required();
    gen->add_option("--out", out_path);

    CLI::App* verify = app.add_subcommand("verify", "check bounds over all trees");
    verify->add_option("--n-min", n_min);
    verify->add_option("--n-max", n_max);
    verify->add_option("--tol", tol);
    verify->add_option("--workers", workers);
    verify->add_option("--json", json_path);
    verify->add_option("--csv", csv_path);

    CLI::App* lemmas = app.add_subcommand("lemmas", "sweep the scalar inequalities");
    lemmas->add_option("--grid-max", grid_max);
    lemmas->add_option("--step", step);

    CLI::App* surv = app.add_subcommand("survey", "per-gamma stratum table");
    surv->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (abc->parsed())
            return cmd_abc(file);
        if (roman->parsed())
            return cmd_roman(file, brute);
        if (bounds->parsed())
            return cmd_bounds(n, gamma);
        if (gen->parsed())
            return cmd_gen_trees(n, out_path);
        if (verify->parsed())
            return cmd_verify(n_min, n_max, tol, workers, json_path, csv_path);
        if (lemmas->parsed())
            return cmd_lemmas(grid_max, step);
        if (surv->parsed())
            return cmd_survey(n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
