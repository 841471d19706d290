// End-to-end checks of the command-line surface: flag parsing, output
// formats, exit codes, determinism, and the JSON round-trip contract.
// Takes the path of the binary as its only argument.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using json = nlohmann::json;

std::string g_cli;
int g_failures = 0;
int g_checks = 0;

struct RunResult {
    std::string output;
    int exit_code = -1;
};

RunResult run(const std::string& args, bool quiet_stderr = false) {
    const std::string cmd =
        "\"" + g_cli + "\" " + args + (quiet_stderr ? " 2>/dev/null" : "");
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "FATAL: cannot run " << cmd << "\n";
        std::exit(1);
    }
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void check(bool ok, const std::string& what) {
    ++g_checks;
    if (!ok) {
        ++g_failures;
        std::cerr << "[FAIL] " << what << "\n";
    }
}

void check_near(double actual, double expected, double tol, const std::string& what) {
    check(std::abs(actual - expected) <= tol,
          what + " (got " + std::to_string(actual) + ", want " + std::to_string(expected) + ")");
}

json run_json(const std::string& args) {
    const RunResult r = run(args + " --format json");
    check(r.exit_code == 0, "exit code of: " + args);
    return json::parse(r.output, nullptr, false);
}

void test_amplitude() {
    json j = run_json("amplitude --mi + --a 0,0 --mf + --c 90,0");
    check_near(j["results"]["amplitude"]["re"], 0.7071067811865476, 1e-15, "amplitude re");
    check_near(j["results"]["amplitude"]["im"], 0.0, 1e-15, "amplitude im");
    check_near(j["results"]["probability"], 0.5, 1e-14, "amplitude probability");
    check_near(j["results"]["abs_difference"], 0.0, 1e-12, "amplitude oracle difference");

    j = run_json("amplitude --mi + --a 30,40 --mf + --c 30,40");
    check_near(j["results"]["amplitude"]["re"], 1.0, 0.0, "repeat amplitude is exactly 1");
    j = run_json("amplitude --mi + --a 30,40 --mf - --c 30,40");
    check_near(j["results"]["amplitude"]["re"], 0.0, 0.0, "flip amplitude is exactly 0");
}

void test_expect() {
    json j = run_json("expect --mi + --a 0,0 --c 60,0");
    for (const char* key : {"direct", "sandwich", "analytic", "oracle"}) {
        check_near(j["results"][key], 0.5, 1e-12, std::string("expect ") + key);
    }
    check_near(j["results"]["max_pairwise_difference"], 0.0, 1e-12, "expect max diff");

    j = run_json("expect --mi - --a 20,30 --c 20,30");
    check_near(j["results"]["sandwich"], -1.0, 1e-12, "expect repeated axis, minus");

    // The basis is arbitrary: two unrelated choices give the same value.
    const json j1 = run_json("expect --mi + --a 0,0 --c 60,0 --b 45,45");
    const json j2 = run_json("expect --mi + --a 0,0 --c 60,0 --b 10,200");
    check_near(j1["results"]["sandwich"].get<double>(),
               j2["results"]["sandwich"].get<double>(), 1e-12, "basis invariance");

    // Degrees and radians name the same computation.
    const json jr = run_json("expect --mi + --a 0,0 --c 1.0471975511965976,0 --radians");
    check_near(jr["results"]["direct"].get<double>(),
               j1["results"]["direct"].get<double>(), 1e-12, "radians equivalence");
}

void test_expect_cases() {
    json j = run_json("expect --mi + --a 10,20 --c 40,50 --case c");
    check_near(j["results"]["max_pairwise_difference"], 0.0, 1e-12, "case c agreement");

    j = run_json("expect --mi - --a 10,20 --case e");
    check_near(j["results"]["sandwich"], -1.0, 1e-12, "case e value");

    check(run("expect --mi + --a 0,0 --c 60,0 --case a", true).exit_code == 2,
          "case a without --b is a usage error");
    check(run("expect --mi + --a 0,0 --c 60,0 --b 1,2 --case b", true).exit_code == 2,
          "case b with --b is a usage error");
    check(run("expect --mi + --a 0,0 --c 60,0 --b 1,2 --case d", true).exit_code == 2,
          "case d with c != a is a usage error");
}

void test_operator() {
    json j = run_json("operator --c 90,0 --b 0,180");
    const auto& m = j["results"]["matrix"];
    check_near(m[0][0]["re"], 0.0, 1e-12, "sigma_x 00");
    check_near(m[0][1]["re"], 1.0, 1e-12, "sigma_x 01");
    check_near(m[1][0]["re"], 1.0, 1e-12, "sigma_x 10");
    check_near(m[1][1]["re"], 0.0, 1e-12, "sigma_x 11");
    check_near(m[0][1]["im"], 0.0, 1e-12, "sigma_x 01 imag");

    j = run_json("operator --c 50,10 --b 50,10");
    check_near(j["results"]["matrix"][0][0]["re"], 1.0, 0.0, "own basis diagonal +1");
    check_near(j["results"]["matrix"][1][1]["re"], -1.0, 0.0, "own basis diagonal -1");

    j = run_json("operator --c 50,10 --b 70,80 --compare-trig");
    check(j["results"]["max_abs_difference"].get<double>() > 1e-3,
          "trig transcription differs away from the reducing basis");
    j = run_json("operator --c 50,10 --b 0,180 --compare-trig");
    check(j["results"]["max_abs_difference"].get<double>() < 1e-12,
          "trig transcription agrees at the reducing basis");
}

void test_state_and_eigvec() {
    json j = run_json("state --mi + --a 60,0 --b 0,180");
    check_near(j["results"]["components"][0]["re"], std::cos(std::acos(-1.0) / 6.0), 1e-12,
               "state up component");
    check_near(j["results"]["norm"], 1.0, 1e-12, "state norm");

    j = run_json("eigvec --c 37,120 --b 74,11");
    check(j["results"]["residual_plus"].get<double>() < 1e-12, "eigvec plus residual");
    check(j["results"]["residual_minus"].get<double>() < 1e-12, "eigvec minus residual");
    check(j["results"]["orthogonality"].get<double>() < 1e-12, "eigvec orthogonality");
}

void test_cases() {
    json j = run_json("cases --mi + --a 0,0 --c 60,0 --b 30,30");
    check(j["results"]["coherent"].get<bool>(), "cases coherent");
    const auto& rows = j["results"]["cases"];
    check(rows.size() == 5, "five case rows");
    for (const auto& row : rows) {
        const std::string id = row["case"];
        const double expected = (id == "d" || id == "e") ? 1.0 : 0.5;
        check_near(row["expectation"], expected, 1e-12, "case " + id + " expectation");
    }

    j = run_json("cases --mi - --a 0,0 --c 60,0 --b 30,30");
    for (const auto& row : j["results"]["cases"]) {
        const std::string id = row["case"];
        const double expected = (id == "d" || id == "e") ? -1.0 : -0.5;
        check_near(row["expectation"], expected, 1e-12, "minus case " + id);
    }

    j = run_json("cases --mi + --a 25,75 --c 25,75 --b 30,30");
    for (const auto& row : j["results"]["cases"]) {
        check_near(row["expectation"], 1.0, 1e-12, "coincident axes case");
    }
}

void test_simulate() {
    const std::string args = "simulate --start 0,0,+ --stage 60,0 --shots 100000 --seed 7";
    const RunResult r1 = run(args + " --format json");
    const RunResult r2 = run(args + " --format json");
    check(r1.exit_code == 0, "simulate exit code");
    check(r1.output == r2.output, "simulate output is byte-identical under a fixed seed");

    const json j = json::parse(r1.output);
    const double estimate = j["results"]["estimate"];
    const double se = j["results"]["standard_error"];
    check(std::abs(estimate - 0.5) < 5.0 * se, "simulate estimate near cos(60 deg)");
    check(j["metadata"]["rng"] == "splitmix64", "rng recorded in metadata");

    const json exact = run_json("simulate --start 0,0,+ --stage 0,0 --shots 2000 --seed 9");
    check_near(exact["results"]["estimate"], 1.0, 0.0, "repeat stage estimate is exactly 1");

    check(run("simulate --start 0,0,+ --stage 60,0 --shots 0", true).exit_code == 2,
          "shots = 0 is a usage error");
}

void test_verify() {
    check(run("verify --trials 300 --seed 1 --tol 1e-12", true).exit_code == 0,
          "verify passes at 1e-12");
    check(run("verify --trials 300 --seed 1 --tol 1e-16", true).exit_code == 1,
          "verify fails at the double-precision floor");
    check(run("verify --trials 0", true).exit_code == 2, "trials = 0 is a usage error");
}

void test_usage_errors() {
    check(run("amplitude --mi + --a 0,0 --mf +", true).exit_code == 2, "missing flag");
    check(run("amplitude --mi x --a 0,0 --mf + --c 1,2", true).exit_code == 2,
          "bad projection");
    check(run("amplitude --mi + --a zero,0 --mf + --c 1,2", true).exit_code == 2, "bad angle");
    check(run("nonsense", true).exit_code == 2, "unknown subcommand");
    check(run("expect --mi + --a 0,0 --c 60,0 --format yaml", true).exit_code == 2,
          "unknown format");
    check(run("--help", true).exit_code == 0, "--help exits 0");
}

void test_json_round_trip() {
    // Re-running a command from its own echoed inputs reproduces the same
    // results, byte for byte.
    const json j = run_json("expect --mi + --a 33.5,71.25 --c 140,301.5");
    const auto& in = j["inputs"];
    char rebuilt[256];
    std::snprintf(rebuilt, sizeof(rebuilt),
                  "expect --mi %s --a %.17g,%.17g --c %.17g,%.17g --b %.17g,%.17g",
                  in["mi"].get<std::string>().c_str(), in["a"]["theta"].get<double>(),
                  in["a"]["phi"].get<double>(), in["c"]["theta"].get<double>(),
                  in["c"]["phi"].get<double>(), in["b"]["theta"].get<double>(),
                  in["b"]["phi"].get<double>());
    const json j2 = run_json(rebuilt);
    check(j["results"] == j2["results"], "expect results round-trip through echoed inputs");

    const json a1 = run_json("amplitude --mi - --a 18,296 --mf + --c 77.7,12.25");
    const json a2 = run_json("amplitude --mi - --a 18,296 --mf + --c 77.7,12.25");
    check(a1 == a2, "amplitude JSON is reproducible");
}

void test_csv() {
    const RunResult r = run("amplitude --mi + --a 0,0 --mf + --c 90,0 --format csv");
    const std::string header =
        "command,unit,mi,a_theta,a_phi,mf,c_theta,c_phi,re,im,probability,oracle_re,"
        "oracle_im,abs_difference";
    check(r.output.rfind(header, 0) == 0, "amplitude csv header");
    check(std::count(r.output.begin(), r.output.end(), '\n') == 2, "csv has header + 1 row");

    const RunResult c = run("cases --mi + --a 0,0 --c 60,0 --format csv");
    check(std::count(c.output.begin(), c.output.end(), '\n') == 6, "cases csv: 5 rows");

    const RunResult s =
        run("simulate --start 0,0,+ --stage 60,0 --stage 30,30 --shots 1000 --seed 2 "
            "--format csv");
    check(std::count(s.output.begin(), s.output.end(), '\n') == 3, "simulate csv: 2 stage rows");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: spinhalf_cli_tests <path-to-cli>\n";
        return 1;
    }
    g_cli = argv[1];

    test_amplitude();
    test_expect();
    test_expect_cases();
    test_operator();
    test_state_and_eigvec();
    test_cases();
    test_simulate();
    test_verify();
    test_usage_errors();
    test_json_round_trip();
    test_csv();

    std::cout << g_checks - g_failures << "/" << g_checks << " cli checks passed\n";
    return g_failures == 0 ? 0 : 1;
}
