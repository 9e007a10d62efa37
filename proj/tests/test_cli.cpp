#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
// stderr is dropped so diagnostic messages never pollute golden comparisons.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TORSION_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("sigma command prints the polynomial in all formats") {
    RunResult text = run_cli("sigma --p 1 --q 3 --n 1");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "8*t^3 - 20*t^2 + 12*t - 1\n");

    RunResult latex = run_cli("sigma --p 1 --q 3 --n 1 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(latex.out == "8t^{3}-20t^{2}+12t-1\n");

    RunResult big = run_cli("sigma --p 1 --q 5 --n 1");
    CHECK(big.exit_code == 0);
    CHECK(big.out ==
          "1024*t^10 - 13824*t^9 + 70912*t^8 - 177408*t^7 + 236416*t^6 - 175776*t^5 + "
          "73408*t^4 - 16632*t^3 + 1880*t^2 - 90*t + 1\n");
}

TEST_CASE("sigma command emits a full json record for zero surgery") {
    RunResult r = run_cli("sigma --p 1 --q 3 --n 0 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["p"] == 1);
    CHECK(j["q"] == 3);
    CHECK(j["n"] == 0);
    CHECK(j["N"] == 1);
    CHECK(j["degree"] == 0);
    CHECK(j["coefficients"] == nlohmann::json::array({"1"}));
    CHECK(j["normalization_ok"] == true);
    CHECK(j["degree_ok"] == true);
    CHECK(j["oracle_match"] == true);
    CHECK(j["recurrence_ok"] == true);
}

TEST_CASE("sigma command agrees across explicit method choices") {
    RunResult base = run_cli("sigma --p 1 --q 5 --n 1 --method construct");
    RunResult oracle = run_cli("sigma --p 1 --q 5 --n 1 --method oracle");
    RunResult rec = run_cli("sigma --p 1 --q 5 --n 1 --method recurrence");
    CHECK(base.exit_code == 0);
    CHECK(oracle.exit_code == 0);
    CHECK(rec.exit_code == 0);
    CHECK(base.out == oracle.out);
    CHECK(base.out == rec.out);
}

TEST_CASE("torsion table lists one row per class") {
    RunResult r = run_cli("torsion-table --p 1 --q 3 --n -1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "(1,1,1)"));
    CHECK(contains(r.out, "(1,1,3)"));
    CHECK(contains(r.out, "5.2360679"));  // 3 + sqrt 5
    CHECK(contains(r.out, "0.76393202")); // 3 - sqrt 5

    RunResult j = run_cli("torsion-table --p 1 --q 3 --n -1 --format json");
    REQUIRE(j.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    REQUIRE(parsed["rows"].size() == 2);
    CHECK(parsed["rows"][0]["a"] == 1);
    CHECK(parsed["rows"][0]["k"] == 1);
    CHECK(parsed["rows"][0]["tau"].get<std::string>().substr(0, 9) == "5.2360679");

    RunResult empty = run_cli("torsion-table --p 1 --q 3 --n 0");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.empty());

    RunResult latex = run_cli("torsion-table --p 1 --q 3 --n -1 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(contains(latex.out, "\\begin{tabular}"));
}

TEST_CASE("verify battery passes on the trefoil") {
    RunResult r = run_cli("verify --p 1 --q 3 --n-range -3..3 --precision 128");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "verify p=1 q=3 n-range=-3..3 precision=128"));
    CHECK(contains(r.out, "n=0 trivial"));
    CHECK(contains(r.out,
                   "n=-3 lemma44=PASS oracle=PASS recurrence=PASS normalization=PASS degree=PASS "
                   "roots=PASS"));
    CHECK(contains(r.out, "three-term pair=(1,1) range=-3..3 PASS"));
    CHECK(contains(r.out, "RESULT: PASS"));
}

TEST_CASE("verify battery reports the external tabulation divergence as informational") {
    RunResult r = run_cli("verify --p 1 --q 5 --n-range -1..1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "computed degree 8"));
    CHECK(contains(r.out, "computed degree 10"));
    CHECK(contains(r.out, "external tabulation has degree 10"));
    CHECK(contains(r.out, "external tabulation has degree 12"));
    CHECK(contains(r.out, "differ (informational, not a failure)"));
    CHECK(contains(r.out, "RESULT: PASS"));
}

TEST_CASE("verify output is deterministic run to run") {
    RunResult first = run_cli("verify --p 1 --q 5 --n-range -2..2");
    RunResult second = run_cli("verify --p 1 --q 5 --n-range -2..2");
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
}

TEST_CASE("johnson command prints recurrence polynomials") {
    RunResult single = run_cli("johnson --n 2");
    CHECK(single.exit_code == 0);
    CHECK(single.out == "1*t^6 - 11*t^5 + 45*t^4 - 84*t^3 + 70*t^2 - 21*t + 1\n");

    RunResult neg = run_cli("johnson --n -1");
    CHECK(neg.exit_code == 0);
    CHECK(neg.out == "-1*t^2 + 3*t - 1\n");

    RunResult zero = run_cli("johnson --n 0 --format latex");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "1\n");

    RunResult checked = run_cli("johnson --n 1 --check");
    CHECK(checked.exit_code == 0);
    CHECK(checked.out == "1*t^3 - 5*t^2 + 6*t - 1\nbridge n=1: PASS\n");

    RunResult range = run_cli("johnson --n-range 1..3");
    CHECK(range.exit_code == 0);
    CHECK(contains(range.out, "n=1: "));
    CHECK(contains(range.out, "n=2: "));
    CHECK(contains(range.out, "n=3: "));

    RunResult json_range = run_cli("johnson --n-range -2..2 --format json");
    REQUIRE(json_range.exit_code == 0);
    nlohmann::json arr = nlohmann::json::parse(json_range.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 5);
    CHECK(arr[0]["n"] == -2);
    CHECK(arr[2]["n"] == 0);
    CHECK(arr[2]["degree"] == 0);
    CHECK(arr[2]["coefficients"] == nlohmann::json::array({"1"}));
}

TEST_CASE("invalid parameters exit with code 1") {
    CHECK(run_cli("sigma --p 2 --q 3 --n 1").exit_code == 1);
    CHECK(run_cli("sigma --p 3 --q 9 --n 1").exit_code == 1);
    CHECK(run_cli("sigma --p 0 --q 3 --n 1").exit_code == 1);
    CHECK(run_cli("verify --p 2 --q 3 --n-range -1..1").exit_code == 1);
    CHECK(run_cli("torsion-table --p 1 --q 4 --n 1").exit_code == 1);
}

TEST_CASE("malformed invocations exit with code 64") {
    CHECK(run_cli("sigma --p 1 --q 3").exit_code == 64);                   // missing --n
    CHECK(run_cli("sigma --p 1 --q 3 --n 1 --format yaml").exit_code == 64);
    CHECK(run_cli("sigma --p 1 --q 3 --n 1 --method fastest").exit_code == 64);
    CHECK(run_cli("bogus").exit_code == 64);
    CHECK(run_cli("").exit_code == 64);
    CHECK(run_cli("johnson").exit_code == 64);                             // no --n, no range
    CHECK(run_cli("johnson --n 1 --n-range 1..2").exit_code == 64);        // mutually exclusive
    CHECK(run_cli("verify --p 1 --q 3 --n-range 3..1").exit_code == 64);   // reversed bounds
    CHECK(run_cli("verify --p 1 --q 3 --n-range abc").exit_code == 64);
    CHECK(run_cli("--help").exit_code == 0);
}
