#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = jensenlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json strip_clock(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    j.erase("wall_clock_ms");
    return j;
}

}  // namespace

TEST_CASE("verify-phi passes with exit code zero") {
    const CliResult r = run_cli({"verify-phi", "--radius", "2", "--format", "json"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["params"]["pairs_checked"] == 125 * 125);
}

TEST_CASE("config errors exit with code two") {
    CHECK(run_cli({"stabilize", "--group", "t2:fp:2"}).code == 2);
    CHECK(run_cli({"stabilize", "--group", "nonsense"}).code == 2);
    CHECK(run_cli({"defect", "--group", "z", "--function", "what"}).code == 2);
    CHECK(run_cli({"--bogus-flag"}).code == 2);
    CHECK(run_cli({}).code == 2);
    const CliResult r = run_cli({"stabilize", "--group", "t2:fp:2"});
    CHECK(r.err.find("characteristic two") != std::string::npos);
}

TEST_CASE("failing experiments exit with code one") {
    const CliResult r = run_cli({"recover", "--eps", "0.1", "--seed", "42", "--accept", "1e-15",
                                 "--elements", "50", "--format", "json"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["pass"] == false);
}

TEST_CASE("json reports parse and re-serialize byte-identically") {
    const CliResult r = run_cli({"defect", "--group", "heisenberg", "--function", "phi",
                                 "--pairs", "50", "--format", "json"});
    REQUIRE(r.code == 0);
    const std::string body = r.out.substr(0, r.out.size() - 1);  // trailing newline
    CHECK(nlohmann::json::parse(body).dump(2) == body);
}

TEST_CASE("csv output has one row per residual check") {
    const CliResult r = run_cli({"recover", "--eps", "0.05", "--seed", "3", "--elements", "40",
                                 "--format", "csv"});
    REQUIRE(r.code == 0);
    const CliResult j = run_cli({"recover", "--eps", "0.05", "--seed", "3", "--elements", "40",
                                 "--format", "json"});
    const auto residuals = nlohmann::json::parse(j.out)["residuals"].size();
    std::size_t rows = 0;
    for (char c : r.out)
        if (c == '\n') ++rows;
    CHECK(rows == residuals + 1);  // header + rows
    CHECK(r.out.starts_with("experiment,group,check,value,tolerance,pass\n"));
}

TEST_CASE("text output carries a PASS line and a witness block") {
    const CliResult r = run_cli({"defect", "--group", "heisenberg", "--function", "phi",
                                 "--pairs", "20", "--format", "text"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("PASS\n") != std::string::npos);
    CHECK(r.out.find("witnesses:") != std::string::npos);
    CHECK(r.out.find("argmax_pair") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical json modulo wall clock") {
    const std::vector<std::string> args = {"recover",  "--group", "heisenberg", "--alpha", "2",
                                           "--beta",   "-1",      "--lambda",  "0.5",     "--eps",
                                           "0.1",      "--seed",  "42",        "--elements", "60",
                                           "--format", "json"};
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(strip_clock(a.out).dump(2) == strip_clock(b.out).dump(2));
}

TEST_CASE("reports can be written to a file") {
    const std::string path = "/tmp/jensen_lab_cli_test_report.json";
    std::remove(path.c_str());
    const CliResult r = run_cli({"verify-phi", "--radius", "1", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["pass"] == true);
    std::remove(path.c_str());

    CHECK(run_cli({"verify-phi", "--radius", "1", "--out", "/nonexistent-dir/x.json"}).code == 2);
}

TEST_CASE("help text documents the descriptor grammar") {
    const CliResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("heisenberg") != std::string::npos);
    CHECK(r.out.find("t2:fp:<odd prime>") != std::string::npos);
    CHECK(r.out.find("wreath:<base>:<factors>") != std::string::npos);
    for (const char* sub : {"verify-phi", "defect", "stabilize", "decompose", "classify",
                            "recover", "t2", "wreath", "invariance"})
        CHECK(r.out.find(sub) != std::string::npos);
}
