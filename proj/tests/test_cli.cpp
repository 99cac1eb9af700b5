#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nekbound/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "nekbound");
    std::ostringstream out, err;
    const int code = nekbound::cli::run(args, out, err);
    return CliResult{code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// Scoped temp file under the build tree.
struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("classify reports the class verdicts") {
    const CliResult r = run_cli({"classify", "A5"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "sdd: false"));
    CHECK(contains(r.out, "nekrasov: true"));
    CHECK(contains(r.out, "h-matrix: true"));
    CHECK(contains(r.out, "gudkov permutation: identity"));
}

TEST_CASE("classify emits json on request") {
    const CliResult r = run_cli({"classify", "A1", "--output", "json"});
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["class"]["sdd"] == true);
    CHECK(j["class"]["nekrasov"] == true);
    CHECK(j["name"] == "A1");
    CHECK(j["margins"]["sdd"].size() == 4);
}

TEST_CASE("classify of a missing file is an input error") {
    const CliResult r = run_cli({"classify", "missing.mtx"});
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "missing.mtx"));
}

TEST_CASE("bound with --exact prints the oracle value") {
    const CliResult r = run_cli({"bound", "A2", "--exact"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "varah: 1.0000"));
    CHECK(contains(r.out, "bound2: 0.8848"));
    CHECK(contains(r.out, "bound3: 0.6885"));
    CHECK(contains(r.out, "best: 0.6885"));
    CHECK(contains(r.out, "exact: 0.2390"));
}

TEST_CASE("bound marks inapplicable bounds") {
    const CliResult r = run_cli({"bound", "A5"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "varah: - (not SDD)"));
    CHECK(contains(r.out, "bound2: 1.4909"));
    CHECK(contains(r.out, "bound3: 2.4848"));
    CHECK_FALSE(contains(r.out, "exact:"));
}

TEST_CASE("bound of an unknown builtin exits 3") {
    const CliResult r = run_cli({"bound", "A7"});
    CHECK(r.exit_code == 3);
    CHECK(contains(r.err, "A7"));
}

TEST_CASE("bound reads matrix market and csv files") {
    const TempFile mm("cli_test_a5.mtx",
                      "%%MatrixMarket matrix coordinate real general\n"
                      "3 3 9\n1 1 6\n1 2 -3\n1 3 -2\n2 1 -1\n2 2 11\n2 3 -8\n"
                      "3 1 -7\n3 2 -3\n3 3 10\n");
    const CliResult r = run_cli({"bound", mm.path});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "bound2: 1.4909"));

    const TempFile csv("cli_test_a5.csv", "6,-3,-2\n-1,11,-8\n-7,-3,10\n");
    const CliResult rc = run_cli({"bound", csv.path, "--output", "json"});
    CHECK(rc.exit_code == 0);
    const json j = json::parse(rc.out);
    CHECK(j["class"]["nekrasov"] == true);
    CHECK(j["bounds"]["varah"].is_null());
}

TEST_CASE("malformed input files exit 2") {
    const TempFile bad("cli_test_bad.csv", "1,2\n3\n");
    const CliResult r = run_cli({"classify", bad.path});
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "ragged"));

    const TempFile noext("cli_test_noext", "1,2\n3,4\n");
    CHECK(run_cli({"classify", "./cli_test_noext"}).exit_code == 2);
}

TEST_CASE("paper-table reproduces the expected cells") {
    const CliResult r = run_cli({"paper-table"});
    CHECK(r.exit_code == 0);

    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // header
    CHECK(contains(line, "matrix"));

    const std::vector<std::vector<std::string>> expected = {
        {"A1", "SDD", "0.1921", "0.6667", "0.3805", "0.5263"},
        {"A2", "SDD", "0.2390", "1.0000", "0.8848", "0.6885"},
        {"A3", "SDD", "0.8759", "1.4286", "1.8076", "0.9676"},
        {"A4", "SDD", "0.2707", "0.5556", "0.6200", "0.7937"},
        {"A5", "Nekrasov", "1.1519", "-", "1.4909", "2.4848"},
        {"A6", "Nekrasov", "0.4474", "-", "1.1557", "0.5702"},
    };
    for (const auto& row : expected) {
        REQUIRE(static_cast<bool>(std::getline(lines, line)));
        std::istringstream cells(line);
        std::string cell;
        for (const std::string& want : row) {
            REQUIRE(static_cast<bool>(cells >> cell));
            CHECK(cell == want);
        }
    }
}

TEST_CASE("paper-table json carries the same rows") {
    const CliResult r = run_cli({"paper-table", "--output", "json"});
    CHECK(r.exit_code == 0);
    const json rows = json::parse(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[2]["name"] == "A3");
    CHECK(rows[2]["class"] == "SDD");
    CHECK(rows[2]["exact"].get<double>() == doctest::Approx(0.8759).epsilon(1e-12));
    CHECK(rows[2]["varah"].get<double>() == doctest::Approx(1.4286).epsilon(1e-12));
    CHECK(rows[4]["varah"].is_null());
    CHECK(rows[5]["bound3"].get<double>() == doctest::Approx(0.5702).epsilon(1e-12));
}

TEST_CASE("sweep is reproducible and clean") {
    const CliResult a = run_cli({"sweep", "--count", "25", "--n", "5", "--seed", "7"});
    const CliResult b = run_cli({"sweep", "--count", "25", "--n", "5", "--seed", "7"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "violations: 0"));

    const CliResult c = run_cli({"sweep", "--count", "25", "--n", "5", "--seed", "8"});
    CHECK(c.out != a.out);
}

TEST_CASE("sweep degenerate 1x1 case is exactly tight") {
    const CliResult r = run_cli({"sweep", "--count", "1", "--n", "1", "--seed", "1"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "violations: 0"));
    CHECK(contains(r.out, "tie=1"));
    CHECK(contains(r.out, "tightness bound2/exact: min=1.0000 median=1.0000"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({"sweep", "--count", "0"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"classify"}).exit_code == 2);
    CHECK(run_cli({"classify", "A1", "--output", "yaml"}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
}

TEST_CASE("help exits 0") {
    const CliResult r = run_cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "classify"));
    CHECK(contains(r.out, "sweep"));
}

TEST_CASE("sweep json output") {
    const CliResult r =
        run_cli({"sweep", "--count", "10", "--n", "4", "--seed", "3", "--output", "json"});
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["count"] == 10);
    CHECK(j["violations"] == 0);
    CHECK(j["wins"]["bound2"].get<std::uint64_t>() + j["wins"]["bound3"].get<std::uint64_t>() +
              j["wins"]["tie"].get<std::uint64_t>() ==
          10);
    CHECK(j["tightness"]["bound2"]["min"].get<double>() >= 1.0 - 1e-12);
}
