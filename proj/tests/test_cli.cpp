#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// exercises the installed command line binary end to end; the binary path
// arrives as the first program argument
static std::string g_bin;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + g_bin + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

long count_lines(const std::string& s) {
    long n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("sequence text output") {
    RunResult q = run("sequence --family quartic --count 3");
    CHECK(q.exit_code == 0);
    CHECK(q.out == "4 35 402\n");
    RunResult g = run("sequence --family general --count 3");
    CHECK(g.exit_code == 0);
    CHECK(g.out == "1 5 33\n");
    RunResult zero = run("sequence --family general --count 0");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out.empty());
}

TEST_CASE("sequence json output parses back") {
    RunResult r = run("sequence --family quartic --count 4 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["family"] == "quartic");
    REQUIRE(j["values"].size() == 4);
    CHECK(j["values"][0] == "4");
    CHECK(j["values"][1] == "35");
    CHECK(j["values"][2] == "402");
}

TEST_CASE("identical invocations are byte-identical") {
    CHECK(run("sequence --family general --count 6").out ==
          run("sequence --family general --count 6").out);
    CHECK(run("verify --check trees").out == run("verify --check trees").out);
    CHECK(run("asym --family quartic --n-max 8").out ==
          run("asym --family quartic --n-max 8").out);
}

TEST_CASE("configuration precedence for ceilings") {
    // default ceiling is 64 terms
    CHECK(run("sequence --family general --count 100").exit_code == 3);
    // environment raises it
    CHECK(run("sequence --family general --count 100", "EO_MAX_ORDER=120 ").exit_code == 0);
    // flags beat the environment
    CHECK(run("sequence --family general --count 100 --max-order 120", "EO_MAX_ORDER=2 ")
              .exit_code == 0);
    CHECK(run("sequence --family general --count 10", "EO_MAX_ORDER=2 ").exit_code == 3);
}

TEST_CASE("enumerate emits one map per line") {
    RunResult r = run("enumerate --edges 2");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 9);
    CHECK(r.out.find("; ") != std::string::npos);

    CHECK(count_lines(run("enumerate --edges 2 --all-genus").out) == 10);
    CHECK(count_lines(run("enumerate --edges 2 --degrees 4").out) == 2);
    CHECK(count_lines(run("enumerate --edges 0").out) == 1); // the atomic map

    // over the edge ceiling
    CHECK(run("enumerate --edges 7").exit_code == 3);
    CHECK(run("enumerate --edges 7", "EO_MAX_EDGES=8 ").exit_code == 0);
}

TEST_CASE("verify single checks and exit codes") {
    RunResult ok = run("verify --check cat-identity --order 20");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "cat-identity: pass\n");

    CHECK(run("verify --check tutte33 --edges 3").exit_code == 0);
    CHECK(run("verify --check no-such").exit_code == 2);
    CHECK(run("verify").exit_code == 2);
    CHECK(run("verify --check trees --all").exit_code == 2);
}

TEST_CASE("verify json omits timing and parses back") {
    RunResult r = run("verify --check vandermonde --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["name"] == "vandermonde");
    CHECK(j[0]["status"] == "pass");
    CHECK_FALSE(j[0].contains("wall_time"));
    CHECK_FALSE(j[0].contains("wall_time_ms"));
}

TEST_CASE("solved system emits a well-formed triple") {
    RunResult r = run("solve-system --system quartic --order 3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["system"] == "quartic");
    CHECK(j["order"] == 3);
    // Q holds the counting coefficients as exact strings
    CHECK(j["Q"]["coeffs"][1] == "4");
    CHECK(j["Q"]["coeffs"][2] == "35");
    // the first D cell is the constant 1
    bool found = false;
    for (const auto& e : j["D"]["entries"]) {
        if (e["j"] == 0 && e["n"] == 0) {
            found = true;
            REQUIRE(e["x"].size() == 1);
            CHECK(e["x"][0][0] == 0);
            CHECK(e["x"][0][1] == "1");
        }
    }
    CHECK(found);

    CHECK(run("solve-system --system colourful --order 2").exit_code == 0);
    CHECK(run("solve-system --system quartic --order 80").exit_code == 3);
}

TEST_CASE("output files match stdout") {
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/eo_cli_out.json";
    RunResult direct = run("solve-system --system quartic --order 2");
    RunResult filed = run("solve-system --system quartic --order 2 --out " + path);
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    std::ifstream is(path, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    CHECK(ss.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("growth table rows") {
    RunResult r = run("asym --family general --n-max 12");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 13); // header plus 12 rows
    CHECK(r.out.rfind("n,r_n,ratio,normalized\n", 0) == 0);
    CHECK(run("asym --family general --n-max 2001").exit_code == 3);
}

TEST_CASE("tree table") {
    RunResult r = run("trees --family quartic");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,primitive,marked_u1,marked_u2\n"
                   "2,3,3,3\n"
                   "3,12,48,66\n"
                   "4,105,1005,1860\n");
    CHECK(run("trees --family general --max-size 3").out ==
          "n,primitive,marked_u1,marked_u2\n"
          "2,2,2,2\n"
          "3,4,20,28\n");
    CHECK(run("trees --family quartic --max-size 9").exit_code == 3);
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("sequence --family quartic").exit_code == 2);     // missing --count
    CHECK(run("sequence --count 3").exit_code == 2);            // missing --family
    CHECK(run("sequence --family nonsense --count 3").exit_code == 2);
    CHECK(run("enumerate --edges -1").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("sequence --help").exit_code == 0);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <cli-binary> [doctest args]\n", argv[0]);
        return 1;
    }
    g_bin = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
