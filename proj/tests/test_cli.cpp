#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with stderr folded into the captured stream when asked;
// otherwise stderr is discarded so stdout assertions stay exact.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        std::string(LHD_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

class TempDir {
  public:
    explicit TempDir(const std::string& name)
        : path_(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string str() const { return path_.string(); }
    std::filesystem::path path() const { return path_; }

  private:
    std::filesystem::path path_;
};

std::string write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    return path.string();
}

/// Reports with volatile runtimes zeroed, so two runs compare byte-for-byte.
std::string normalized_reports(const std::string& text) {
    json arr = json::parse(text);
    for (auto& item : arr) item["runtime_ms"] = 0;
    return arr.dump();
}

}  // namespace

TEST_CASE("usage errors exit with code 2 and help with 0") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("frobnicate", true).exit_code == 2);
    CHECK(run_cli("asm", true).exit_code == 2);
    CHECK(run_cli("asm count", true).exit_code == 2);  // --n is required
}

TEST_CASE("asm count matches the product formula") {
    const RunResult six = run_cli("asm count --n 6");
    CHECK(six.exit_code == 0);
    CHECK(six.out == "7436\n");
    CHECK(run_cli("asm count --n 1").out == "1\n");

    const RunResult json_out = run_cli("asm count --n 6 --json");
    CHECK(json_out.exit_code == 0);
    const json doc = json::parse(json_out.out);
    CHECK(doc.at("n") == 6);
    CHECK(doc.at("count") == "7436");
}

TEST_CASE("asm list emits readable and machine forms") {
    const RunResult listed = run_cli("asm list --n 2");
    CHECK(listed.exit_code == 0);
    CHECK(listed.out == "[[0,1],[1,0]]\n[[1,0],[0,1]]\n");

    const RunResult json_out = run_cli("--json asm list --n 2");
    CHECK(json_out.exit_code == 0);
    const json arr = json::parse(json_out.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 2);
    CHECK(arr[0].at("n") == 2);
    CHECK(arr[0].at("rows").size() == 2);
}

TEST_CASE("asm stats tabulates the two statistics") {
    const RunResult stats = run_cli("asm stats --n 3");
    CHECK(stats.exit_code == 0);
    CHECK(contains(stats.out, "7 alternating sign matrices of order 3"));
    CHECK(contains(stats.out, "i(X): 0->1 1->2 2->3 3->1"));
    CHECK(contains(stats.out, "n(X): 0->6 1->1"));

    const json doc = json::parse(run_cli("asm stats --n 3 --json").out);
    CHECK(doc.at("count") == 7);
    CHECK(doc.at("negatives").at("1") == 1);
    CHECK(doc.at("inversions").at("2") == 3);
}

TEST_CASE("det handles numeric and symbolic matrices") {
    TempDir dir("lhd_cli_det");
    const std::string numeric = write_file(
        dir.path() / "numeric.json", R"({"n": 2, "entries": [["1", "2"], ["3", "4"]]})");
    const RunResult classical = run_cli("det --lambda 1 --input " + numeric);
    CHECK(classical.exit_code == 0);
    CHECK(classical.out == "-2\n");

    const std::string vandermonde = write_file(dir.path() / "vdm.json", R"({
        "n": 3,
        "entries": [["1", "x1", "x1^2"], ["1", "x2", "x2^2"], ["1", "x3", "x3^2"]]})");
    const RunResult deformed = run_cli("det --lambda sym --input " + vandermonde);
    CHECK(deformed.exit_code == 0);
    CHECK(contains(deformed.out, "(q^2 - q)*x1*x2*x3"));
    const RunResult at_one = run_cli("det --lambda 1 --input " + vandermonde);
    CHECK(at_one.exit_code == 0);
    CHECK(!contains(at_one.out, "x1*x2*x3"));

    const json doc = json::parse(run_cli("det --lambda sym --json --input " + numeric).out);
    CHECK(doc.at("lambda") == "q");
    CHECK(doc.at("det") == "-6*q + 4");

    CHECK(run_cli("det --lambda 0 --input " + numeric, true).exit_code == 2);
    CHECK(run_cli("det --input " + dir.str() + "/missing.json", true).exit_code == 2);
    const std::string malformed = write_file(dir.path() / "broken.json", "{ not json");
    const RunResult bad = run_cli("det --input " + malformed, true);
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.out, "broken.json"));
    // --matrix is an accepted spelling of --input.
    CHECK(run_cli("det --lambda 1 --matrix " + numeric).out == "-2\n");
}

TEST_CASE("hyperdet computes both modes and respects the budget") {
    TempDir dir("lhd_cli_hyper");
    const std::string input = write_file(dir.path() / "h.json", R"({
        "n": 2, "dim": 4,
        "entries": [
            {"index": [1,1,1,1], "value": "3/2"},
            {"index": [2,2,2,2], "value": "2"},
            {"index": [1,2,1,2], "value": "1"},
            {"index": [2,1,2,1], "value": "1"}
        ]})");
    const RunResult cayley = run_cli("hyperdet --input " + input);
    CHECK(cayley.exit_code == 0);
    CHECK(cayley.out == "4\n");

    const RunResult at_one =
        run_cli("hyperdet --mode lambda --convention paper --lambda 1 --input " + input);
    CHECK(at_one.exit_code == 0);
    CHECK(at_one.out == cayley.out);

    const json doc = json::parse(
        run_cli("hyperdet --mode lambda --lambda sym --json --input " + input).out);
    CHECK(doc.at("mode") == "lambda");
    CHECK(doc.at("convention") == "proof-consistent");
    CHECK(doc.at("lambda") == "q");
    CHECK(doc.at("value") == "(3*q^4 + q^3 + q + 3)/(q + 1)");

    CHECK(run_cli("hyperdet --mode bogus --input " + input, true).exit_code == 2);
    CHECK(run_cli("hyperdet", true).exit_code == 2);

    const RunResult starved = run_cli("hyperdet --budget 3 --input " + input, true);
    CHECK(starved.exit_code == 2);
    CHECK(contains(starved.out, "budget"));
    // The flag must beat a stingy environment value.
    const RunResult env_overridden =
        run_cli("hyperdet --budget 1000000 --input " + input, true);
    CHECK(env_overridden.exit_code == 0);
}

TEST_CASE("environment variables configure the budget, flags win") {
    TempDir dir("lhd_cli_env");
    const std::string input = write_file(dir.path() / "h.json", R"({
        "n": 2, "dim": 2,
        "entries": [{"index": [1,1], "value": "1"}, {"index": [2,2], "value": "1"}]})");
    const std::string base = "HYPERDET_BUDGET=1 " + std::string(LHD_CLI_PATH);

    RunResult starved;
    {
        FILE* pipe = popen((base + " hyperdet --input " + input + " 2>&1").c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buffer[4096];
        std::size_t got = 0;
        while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
            starved.out.append(buffer, got);
        starved.exit_code = WEXITSTATUS(pclose(pipe));
    }
    CHECK(starved.exit_code == 2);
    CHECK(contains(starved.out, "budget"));

    RunResult rescued;
    {
        FILE* pipe =
            popen((base + " hyperdet --budget 100 --input " + input + " 2>&1").c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buffer[4096];
        std::size_t got = 0;
        while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
            rescued.out.append(buffer, got);
        rescued.exit_code = WEXITSTATUS(pclose(pipe));
    }
    CHECK(rescued.exit_code == 0);
    CHECK(rescued.out == "1\n");
}

TEST_CASE("macdonald prints Q in the requested basis") {
    const RunResult e2 = run_cli("macdonald --partition 1,1 --m 1");
    CHECK(e2.exit_code == 0);
    CHECK(e2.out == "(1/2)*p[1,1] + (-1/2)*p[2]\n");

    const RunResult monomial = run_cli("macdonald --partition 1,1 --m 1 --basis m");
    CHECK(monomial.exit_code == 0);
    CHECK(monomial.out == "(1)*m[1,1]\n");

    const json doc = json::parse(run_cli("macdonald --partition 2,1 --m 2 --json").out);
    CHECK(doc.at("partition") == "[2,1]");
    CHECK(doc.at("m") == 2);
    CHECK(doc.at("basis") == "p");
    CHECK(doc.at("coefficients").size() == 3);

    CHECK(run_cli("macdonald --partition 9 --m 1", true).exit_code == 2);
    CHECK(run_cli("macdonald --partition 0,1 --m 1", true).exit_code == 2);
    CHECK(run_cli("macdonald --m 1", true).exit_code == 2);
}

TEST_CASE("dyson prints the extracted coefficient in the p basis") {
    const RunResult out = run_cli("dyson --k 1 --s 2 --m 1");
    CHECK(out.exit_code == 0);
    CHECK(out.out == "((q + 1)/2)*p[1,1] + ((-q - 1)/2)*p[2]\n");

    const json doc = json::parse(run_cli("dyson --k 1 --s 2 --m 2 --json").out);
    CHECK(doc.at("k") == 1);
    CHECK(doc.at("s") == 2);
    CHECK(doc.at("m") == 2);
    CHECK(doc.at("basis") == "p");
    CHECK(!doc.at("coefficients").empty());

    CHECK(run_cli("dyson --k 1 --s 2", true).exit_code == 2);
    CHECK(run_cli("dyson --k -1 --s 2 --m 1", true).exit_code == 2);
}

TEST_CASE("verify reports identities and distinguishes failure from documentation") {
    const RunResult documented = run_cli("verify det3-discrepancy");
    CHECK(documented.exit_code == 0);
    CHECK(contains(documented.out, "discrepancy-documented"));

    const RunResult vandermonde = run_cli("verify lambda-vandermonde --n 3");
    CHECK(vandermonde.exit_code == 0);
    CHECK(contains(vandermonde.out, "pass  lambda-vandermonde {n=3}"));

    const json arr = json::parse(
        run_cli("verify theorem-3-2 --k 1 --s 2 --m 1 --json").out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 2);  // both conventions by default
    for (const auto& report : arr) CHECK(report.at("status") == "pass");

    const json paper_only = json::parse(
        run_cli("verify theorem-3-2 --k 1 --s 3 --m 2 --convention paper --json").out);
    REQUIRE(paper_only.size() == 1);
    CHECK(paper_only[0].at("status") == "discrepancy-documented");
    CHECK(run_cli("verify theorem-3-2 --k 1 --s 3 --m 2 --convention paper").exit_code == 0);

    CHECK(run_cli("verify bogus-identity", true).exit_code == 2);
    CHECK(run_cli("verify theorem-3-2 --k 1 --s 2", true).exit_code == 2);
}

TEST_CASE("cache admin walks the stat, export, clear lifecycle") {
    TempDir dir("lhd_cli_cache");
    const std::string flag = " --cache-dir " + dir.str();

    const RunResult empty = run_cli("cache stat" + flag);
    CHECK(empty.exit_code == 0);
    CHECK(contains(empty.out, "empty"));

    CHECK(run_cli("macdonald --partition 2,1 --m 2" + flag).exit_code == 0);
    const RunResult populated = run_cli("cache stat" + flag);
    CHECK(populated.exit_code == 0);
    CHECK(contains(populated.out, "m=2"));
    CHECK(contains(populated.out, "[2,1]"));

    const json stat = json::parse(run_cli("cache stat --json" + flag).out);
    CHECK(stat.at("dir") == dir.str());
    REQUIRE(stat.at("files").size() == 1);
    CHECK(stat.at("files")[0].at("m") == 2);

    const json exported = json::parse(run_cli("cache export --m 2" + flag).out);
    CHECK(exported.at("m") == 2);
    CHECK(exported.at("basis") == "p");
    CHECK(exported.at("entries").contains("[2,1]"));

    const RunResult cleared = run_cli("cache clear" + flag);
    CHECK(cleared.exit_code == 0);
    CHECK(contains(cleared.out, "removed 1 cache file"));
    CHECK(contains(run_cli("cache stat" + flag).out, "empty"));
    CHECK(run_cli("cache export --m 2" + flag, true).exit_code == 2);

    CHECK(run_cli("cache stat", true).exit_code == 2);  // no directory configured
}

TEST_CASE("verify all is deterministic across cold and warm caches") {
    TempDir dir("lhd_cli_verify_all");
    const std::string cmd = "verify all --json --cache-dir " + dir.str();

    const RunResult cold = run_cli(cmd);
    REQUIRE(cold.exit_code == 0);
    const RunResult warm = run_cli(cmd);
    REQUIRE(warm.exit_code == 0);
    CHECK(normalized_reports(cold.out) == normalized_reports(warm.out));

    const json arr = json::parse(warm.out);
    int failures = 0;
    for (const auto& report : arr)
        if (report.at("status") == "fail") ++failures;
    CHECK(failures == 0);
}
