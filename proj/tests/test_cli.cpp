// End-to-end tests of the command-line driver, run as a subprocess. The
// binary path comes from $TRIDEG_CLI and the data file from $TRIDEG_DATA
// (both set by the test harness).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

std::string cli_path() {
    const char* p = std::getenv("TRIDEG_CLI");
    REQUIRE_MESSAGE(p != nullptr, "TRIDEG_CLI must point at the binary");
    return p;
}

std::string data_path() {
    const char* p = std::getenv("TRIDEG_DATA");
    return p ? p : "data/appendix_polynomials.txt";
}

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("compute Gstar order 9 as JSON") {
    RunResult r = run("compute --family Gstar --order 9 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"family\": \"Gstar\""));
    CHECK(contains(r.output,
                   "[\"0\", \"0\", \"1\", \"3\", \"19\", \"128\", \"909\", "
                   "\"6737\", \"51683\", \"407802\"]"));
}

TEST_CASE("compute rejects order zero") {
    RunResult r = run("compute --family F --order 0");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "order must be"));
}

TEST_CASE("compute K order 17 as CSV") {
    RunResult r = run("compute --family K --order 17 --format csv");
    CHECK(r.exit_code == 0);
    std::string out = r.output;
    while (!out.empty() && (out.back() == '\n' || out.back() == '\r'))
        out.pop_back();
    CHECK(contains(out, ",14115,54306"));
    CHECK(out.substr(out.size() - 5) == "54306");
}

TEST_CASE("verify passes on the pristine data file") {
    RunResult r = run("verify --family K --order 40 --data " + data_path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "check equation-residual family=K status=pass"));
}

TEST_CASE("verify with elimination reproduces the published equations") {
    RunResult r =
        run("verify --family T --order 12 --eliminate --data " + data_path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "check eliminant-golden family=T status=pass"));
    CHECK(contains(r.output, "check eliminant-digon family=T status=pass"));
}

TEST_CASE("verify detects a corrupted appendix coefficient") {
    // Copy the data file with one coefficient of P_0 bumped by one.
    std::ifstream in(data_path());
    REQUIRE(in.good());
    std::string tmp = "corrupt_appendix_test.txt";
    std::ofstream out(tmp);
    std::string line;
    bool corrupted = false;
    while (std::getline(in, line)) {
        if (!corrupted && line.rfind("0 13 ", 0) == 0) {
            long c = std::stol(line.substr(5));
            out << "0 13 " << (c + 1) << "\n";
            corrupted = true;
        } else {
            out << line << "\n";
        }
    }
    out.close();
    REQUIRE(corrupted);
    RunResult r = run("verify --family K --order 40 --data " + tmp);
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "status=fail"));
    CHECK(contains(r.output, "first_bad_order=13"));
    CHECK(contains(r.output, "suspect=P_0"));
    std::remove(tmp.c_str());
}

TEST_CASE("unknown config keys are rejected") {
    std::string tmp = "bad_config_test.txt";
    std::ofstream(tmp) << "famly = F\n";
    RunResult r = run("compute --order 5 --config " + tmp);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "unknown key"));
    std::remove(tmp.c_str());
}

TEST_CASE("config file supplies defaults, flags win") {
    std::string tmp = "config_test.txt";
    std::ofstream(tmp) << "family = G\norder = 4\nformat = csv\n";
    RunResult base = run("compute --config " + tmp);
    CHECK(base.exit_code == 0);
    CHECK(contains(base.output, "G,4,0,0,1,5,29"));
    RunResult over = run("compute --order 5 --config " + tmp);
    CHECK(over.exit_code == 0);
    CHECK(contains(over.output, "G,5,0,0,1,5,29,186"));
    std::remove(tmp.c_str());
}

TEST_CASE("output is byte-identical across thread counts") {
    std::string args = "compute --family F --family G --family H --family K "
                       "--order 12 --format json";
    RunResult one = run(args + " --threads 1");
    RunResult four = run(args + " --threads 4");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.output == four.output);
}

TEST_CASE("asymptotics reports 1/rho_F = 13.5 exactly") {
    RunResult r = run("asymptotics --family F --order 160 --digits 10 --data " +
                      data_path());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "13.5000000000"));
    CHECK(contains(r.output, "0.0740740741"));
}

TEST_CASE("eliminate prints the derived cubic for S") {
    RunResult r = run("eliminate --family S --order 30");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "eliminant:"));
    CHECK(contains(r.output, "digon-substituted:"));
}

TEST_CASE("unknown family is a configuration error") {
    RunResult r = run("compute --family Q --order 5");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "unknown family"));
}
