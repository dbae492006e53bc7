#include <doctest.h>

#include "abctree/canonical.hpp"
#include "abctree/edgelist.hpp"
#include "abctree/enumerate.hpp"
#include "abctree/report.hpp"
#include "abctree/verify.hpp"

using namespace abctree;

TEST_CASE("parse_edgelist") {
    LabeledTree p4 = parse_edgelist("4\n0 1\n1 2\n2 3\n");
    CHECK(canonical_code(p4) == canonical_code(make_path(4)));
    LabeledTree s4 = parse_edgelist("4\n0 1\n0 2\n0 3\n");
    CHECK(canonical_code(s4) == canonical_code(make_star(4)));
    // whitespace-tolerant
    CHECK_NOTHROW(parse_edgelist("  2\n 0   1 "));
}

TEST_CASE("parse errors carry distinct codes") {
    auto code_of = [](const std::string& text) {
        try {
            parse_edgelist(text);
        } catch (const ParseError& e) {
            return e.code();
        }
        throw std::logic_error("expected a parse error");
    };
    CHECK(code_of("4\n0 1\nx 2\n2 3\n") == ParseErrorCode::MalformedInteger);
    CHECK(code_of("") == ParseErrorCode::MalformedInteger);
    CHECK(code_of("4\n0 1\n99999999999999999999 2\n2 3\n") ==
          ParseErrorCode::MalformedInteger);
    CHECK(code_of("4\n0 1\n1 4\n2 3\n") == ParseErrorCode::VertexOutOfRange);
    CHECK(code_of("4\n0 1\n1 -1\n2 3\n") == ParseErrorCode::VertexOutOfRange);
    CHECK(code_of("4\n0 1\n2 2\n2 3\n") == ParseErrorCode::SelfLoop);
    CHECK(code_of("4\n0 1\n2 3\n1 0\n") == ParseErrorCode::DuplicateEdge);
    CHECK(code_of("4\n0 1\n1 2\n") == ParseErrorCode::WrongEdgeCount);
    CHECK(code_of("4\n0 1\n1 2\n2 3\n3 0\n") == ParseErrorCode::WrongEdgeCount);
    CHECK(code_of("4\n0 1\n0 2\n1 2\n") == ParseErrorCode::Disconnected);
}

TEST_CASE("parse_graph accepts general simple graphs") {
    SimpleGraph c4 = parse_graph("4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(c4.edges().size() == 4);
    SimpleGraph two = parse_graph("4\n0 1\n2 3\n"); // disconnected is fine
    CHECK_FALSE(two.connected());
    CHECK_THROWS_AS(parse_graph("4\n0 1\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("4\n0 0\n"), ParseError);
}

TEST_CASE("edge-list round trip per class") {
    for (int n = 1; n <= 10; ++n) {
        TreeStream s(n);
        while (s.advance()) {
            LabeledTree t = s.current();
            LabeledTree back = parse_edgelist(write_edgelist(t));
            CHECK(back.edges() == t.edges());
            CHECK(canonical_code(back) == canonical_code(t));
        }
    }
}

TEST_CASE("reports render 12 significant digits") {
    CHECK(format12(2.1213203435596424) == "2.12132034356");
    CHECK(format12(0.0) == "0");
    CHECK(format12(-0.0) == "0");
    CHECK(round12(2.1213203435596424) == doctest::Approx(2.12132034356).epsilon(1e-13));
}

TEST_CASE("verify report documents") {
    VerifyResult result = verify_bounds(4, 4);
    RunReport report;
    report.command = "verify";
    report.parameters["n_min"] = 4;
    report.parameters["n_max"] = 4;
    report.parameters["tol"] = 1e-9;
    report.records = result.records;
    report.violations = result.violations;
    report.equality = result.equality;

    std::string csv = write_report_csv(report);
    long data_rows = std::count(csv.begin(), csv.end(), '\n') - 1;
    CHECK(data_rows == 2);

    std::string json = write_report_json(report);
    auto doc = nlohmann::json::parse(json);
    CHECK(doc["schema_version"] == kReportSchemaVersion);
    CHECK(doc["records"].size() == 2);
    CHECK(doc["findings"]["violations"].empty());
    REQUIRE(doc["findings"]["equality"].size() == 1);
    CHECK(doc["findings"]["equality"][0]["lower_only_path"] == true);
    CHECK(doc["findings"]["equality"][0]["upper_only_star"] == true);

    // determinism: serializing twice is byte-identical
    CHECK(write_report_json(report) == json);
    CHECK(write_report_csv(report) == csv);
}

TEST_CASE("empty sweep report is a valid document") {
    RunReport report;
    report.command = "lemmas";
    std::string json = write_report_json(report);
    auto doc = nlohmann::json::parse(json);
    CHECK(doc["records"].empty());
    CHECK(doc["sweeps"].empty());
    std::string csv = write_report_csv(report);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1); // header only
}

TEST_CASE("sweep rows serialize") {
    RunReport report;
    report.command = "lemmas";
    report.sweeps = sweep_lemmas(50.0, 1.0);
    auto doc = nlohmann::json::parse(write_report_json(report));
    REQUIRE(doc["sweeps"].size() == 5);
    CHECK(doc["sweeps"][0]["id"] == "pendant_delta");
    CHECK(doc["sweeps"][1]["worst"].size() == 2);
    CHECK(doc["sweeps"][3]["worst"].size() == 1);
    for (const auto& sweep : doc["sweeps"])
        CHECK(sweep["pass"] == true);
}
