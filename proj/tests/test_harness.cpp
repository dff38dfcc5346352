#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <tuple>

#include "pathideal/harness.hpp"
#include "pathideal/hilbert.hpp"

using namespace pathideal;

namespace {

// normalize wall times, which legitimately differ between runs
VerificationReport strip_ms(VerificationReport report) {
    for (auto& r : report.records) r.ms = 0;
    return report;
}

}  // namespace

TEST_CASE("mismatches are counted and surfaced") {
    VerificationReport report;
    CheckRecord good;
    good.check = "b-check";
    good.match = true;
    CheckRecord bad;
    bad.check = "a-check";
    bad.engine = "2";
    bad.formula = "3";
    report.records = {good, bad};
    CHECK_FALSE(report.all_match());
    CHECK(report.mismatch_count() == 1);
    report.sort_records();
    CHECK(report.records.front().check == "a-check");
    CHECK(report.to_csv().find("a-check,0,0,0,2,3,,false,0") != std::string::npos);
}

TEST_CASE("range parsing") {
    Range r = Range::parse("4");
    CHECK(r.lo == 4);
    CHECK(r.hi == 4);
    r = Range::parse("2..8");
    CHECK(r.lo == 2);
    CHECK(r.hi == 8);
    CHECK_FALSE(r.hi_is_n);
    r = Range::parse("1..n");
    CHECK(r.hi_is_n);
    CHECK(r.resolve_hi(7) == 7);
    CHECK_THROWS_AS(Range::parse("x..3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scope("bogus"), std::invalid_argument);
}

TEST_CASE("small covers scope report") {
    VerifyRequest request;
    request.scope = Scope::covers;
    request.n = Range::parse("1..6");
    request.config.jobs = 2;
    VerificationReport report = run_verify(request);
    CHECK(report.all_match());
    // 21 (n,t) cells for each of the three cover checks
    CHECK(report.records.size() == 63);
    for (size_t i = 1; i < report.records.size(); ++i) {
        const auto& a = report.records[i - 1];
        const auto& b = report.records[i];
        CHECK(std::tie(a.check, a.n, a.t, a.s) < std::tie(b.check, b.n, b.t, b.s));
    }
}

TEST_CASE("reports are deterministic apart from timing") {
    VerifyRequest request;
    request.scope = Scope::counts;
    request.n = Range::parse("1..4");
    request.t = Range::parse("1..4");
    VerificationReport first = run_verify(request);
    VerificationReport second = run_verify(request);
    CHECK(strip_ms(first).to_csv() == strip_ms(second).to_csv());
    CHECK(strip_ms(first).to_json() == strip_ms(second).to_json());
    CHECK(first.all_match());
}

TEST_CASE("caps are rejected with a named bound") {
    VerifyRequest request;
    request.scope = Scope::covers;
    request.n = Range::parse("1..15");
    CHECK_THROWS_WITH_AS(run_verify(request),
                         "n=15 exceeds the combinatorial (cover scan) cap of 14",
                         std::invalid_argument);
    request.scope = Scope::ass;
    request.n = Range::parse("2..6");
    request.s = Range::parse("1..4");
    CHECK_THROWS_AS(run_verify(request), std::invalid_argument);
}

TEST_CASE("tables are byte identical across runs") {
    HarnessConfig config;
    std::string first = run_table("height", Range::parse("2..7"), std::nullopt, std::nullopt,
                                  "csv", config);
    std::string second = run_table("height", Range::parse("2..7"), std::nullopt, std::nullopt,
                                   "csv", config);
    CHECK(first == second);
    CHECK(first.find("7,2,3,3") != std::string::npos);
    std::string md = run_table("deg", Range::parse("7..7"), Range::parse("3"), std::nullopt,
                               "md", config);
    CHECK(md.find("| 7 | 3 | 3 | 3 |") != std::string::npos);
    std::string json = run_table("mult", Range::parse("4..4"), Range::parse("2"),
                                 Range::parse("2"), "json", config);
    CHECK(json.find("\"engine\": \"9\"") != std::string::npos);
}

TEST_CASE("show command output formats") {
    CHECK(run_show("ideal", 4, 2, 1, "text") == "[x1*x2, x2*x3, x3*x4]\n");
    CHECK(run_show("qpoly", 3, 2, 1, "text") == "1 + z - z^2\n");
    CHECK(run_show("covers", 3, 2, 1, "text") == "[[2], [1,3]]\n");
    CHECK(run_show("covers", 3, 2, 1, "json") == "[[2],[1,3]]\n");
    CHECK(run_show("kpoly", 3, 2, 1, "json") == "[1,0,-2,1]\n");
    CHECK(run_show("dual", 3, 2, 1, "text") == "[x2, x1*x3]\n");
    std::string decomp = run_show("decomposition", 3, 3, 2, "text");
    CHECK(decomp == "[x1^2]\n[x2^2]\n[x3^2]\n");
    CHECK_THROWS_AS(run_show("spectra", 3, 2, 1, "text"), std::invalid_argument);
}

TEST_CASE("config file and environment precedence") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pathideal_config_test";
    fs::create_directories(dir);
    fs::path config_path = dir / "config.json";
    {
        std::ofstream out(config_path);
        out << "{\"jobs\": 3, \"oracle\": true, \"cache_dir\": \"" << (dir / "cache").string()
            << "\"}\n";
    }
    setenv("PATHIDEAL_LAB_CONFIG", config_path.c_str(), 1);
    unsetenv("PATHIDEAL_LAB_CACHE_DIR");
    HarnessConfig cfg = HarnessConfig::from_environment();
    CHECK(cfg.jobs == 3);
    CHECK(cfg.oracle);
    CHECK(cfg.cache_dir == (dir / "cache").string());
    setenv("PATHIDEAL_LAB_CACHE_DIR", (dir / "cache2").c_str(), 1);
    cfg = HarnessConfig::from_environment();
    CHECK(cfg.cache_dir == (dir / "cache2").string());
    unsetenv("PATHIDEAL_LAB_CONFIG");
    unsetenv("PATHIDEAL_LAB_CACHE_DIR");
    fs::remove_all(dir);
}

TEST_CASE("disk cache does not change the report") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pathideal_cache_report_test";
    fs::remove_all(dir);
    VerifyRequest request;
    request.scope = Scope::mult;
    request.n = Range::parse("2..5");
    request.s = Range::parse("1..2");
    request.config.cache_dir = dir.string();
    VerificationReport with_cache = run_verify(request);   // writes entries
    VerificationReport from_cache = run_verify(request);   // reads them back
    request.config.no_cache = true;
    VerificationReport without = run_verify(request);
    set_hilbert_disk_cache("");
    CHECK(strip_ms(with_cache).to_csv() == strip_ms(without).to_csv());
    CHECK(strip_ms(from_cache).to_csv() == strip_ms(without).to_csv());
    CHECK(with_cache.all_match());
    fs::remove_all(dir);
}
