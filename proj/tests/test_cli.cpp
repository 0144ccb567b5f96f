#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

// RANKLAB_BIN is injected by the build: the path of the ranklab executable.

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

// Runs the CLI through the shell, capturing stdout; stderr is dropped so
// error-path tests only see the exit code. env_prefix lets tests set
// RANKLAB_BRUTE_MAX for a single invocation.
CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + RANKLAB_BIN " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t nl = s.find('\n', pos);
        if (nl == std::string::npos) nl = s.size();
        lines.push_back(s.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

} // namespace

TEST_CASE("count prints the bare number by default") {
    CmdResult r = run_cli("count 40");
    CHECK(r.status == 0);
    CHECK(r.out == "37338\n");
    CHECK(run_cli("count 0").out == "1\n");
    CHECK(run_cli("count 19").out == "490\n");
    CHECK(run_cli("count 500").out == "2300165032574323995027\n");
    CHECK(run_cli("count 40 --format csv").out == "n,count\n40,37338\n");
    CHECK(run_cli("count 40 --format json").out == "{\"n\":40,\"count\":\"37338\"}\n");
}

TEST_CASE("histogram prints rank,count rows with zeros included") {
    CHECK(run_cli("histogram 1").out == "0,1\n");
    CmdResult r = run_cli("histogram 4");
    CHECK(r.status == 0);
    CHECK(r.out == "-3,1\n-2,0\n-1,1\n0,1\n1,1\n2,0\n3,1\n");
    // csv adds a header; plain does not
    CHECK(run_cli("histogram 4 --format csv").out ==
          "rank,count\n-3,1\n-2,0\n-1,1\n0,1\n1,1\n2,0\n3,1\n");
    CHECK(run_cli("histogram 4 --min-rank 0 --max-rank 3").out == "0,1\n1,1\n2,0\n3,1\n");
    CHECK(run_cli("histogram 4 --format json").out.find("{\"rank\":-3,\"count\":\"1\"}") == 0);
}

TEST_CASE("histogram of 40 reproduces the large-rank share") {
    CmdResult r = run_cli("histogram 40 --format csv");
    CHECK(r.status == 0);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 80); // header + ranks -39..39
    CHECK(rows[0] == "rank,count");
    long long total = 0, tail = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto fields = split_csv(rows[i]);
        REQUIRE(fields.size() == 2);
        long long rank = std::stoll(fields[0]);
        long long count = std::stoll(fields[1]);
        total += count;
        if (rank >= 20) tail += count;
    }
    CHECK(total == 37338);
    CHECK(tail == 490);
}

TEST_CASE("enumeration limit: default, flag, and environment variable") {
    CHECK(run_cli("histogram 50").status == 0);
    CHECK(run_cli("histogram 51").status == 1);
    CHECK(run_cli("histogram 51 --brute-max 51").status == 0);
    CHECK(run_cli("histogram 51", "RANKLAB_BRUTE_MAX=51 ").status == 0);
    CHECK(run_cli("histogram 4", "RANKLAB_BRUTE_MAX=abc ").status == 2);
    CHECK(run_cli("histogram 4", "RANKLAB_BRUTE_MAX=-3 ").status == 2);
    // an explicit flag wins over the environment
    CHECK(run_cli("histogram 51 --brute-max 51", "RANKLAB_BRUTE_MAX=10 ").status == 0);
    CHECK(run_cli("histogram 51 --brute-max 10", "RANKLAB_BRUTE_MAX=60 ").status == 1);
}

TEST_CASE("nplus computes large-rank counts") {
    CHECK(run_cli("nplus 2 19 20").out == "1\n");
    CHECK(run_cli("nplus 5 19 22").out == "4\n");
    CHECK(run_cli("nplus 14 19 32").out == "4\n");
    CHECK(run_cli("nplus 0 1 0").out == "0\n");
    CHECK(run_cli("nplus 2 19 20 --method brute").out == "1\n");
    CHECK(run_cli("nplus 2 19 20 --method both").out == "fast=1\nbrute=1\n");
    CHECK(run_cli("nplus 14 19 32 --format json").out ==
          "{\"r\":14,\"m\":19,\"n\":32,\"count\":\"4\"}\n");
    // the formula needs no enumeration bound; brute force does
    CHECK(run_cli("nplus 2 19 100").status == 0);
    CHECK(run_cli("nplus 2 19 60 --method brute").status == 1);
    CHECK(run_cli("nplus 2 19 60 --method brute --brute-max 60").status == 0);
}

TEST_CASE("search emits one canonical tuple per line, deterministically") {
    CmdResult r = run_cli("search 5 --a-max 10 --r-window 5");
    CHECK(r.status == 0);
    auto rows = lines_of(r.out);
    CHECK(rows.size() == 356);
    CHECK(rows[0] == "{\"m\":5,\"a\":[1,1,2,5],\"r\":[-1,1,0,0]}");
    CmdResult again = run_cli("search 5 --a-max 10 --r-window 5");
    CHECK(again.out == r.out); // byte-identical reruns

    CmdResult csv = run_cli("search 5 --a-max 10 --r-window 5 --format csv");
    auto csv_rows = lines_of(csv.out);
    REQUIRE(csv_rows.size() == 357);
    CHECK(csv_rows[0] == "m,a1,a2,a3,a4,r1,r2,r3,r4");
    CHECK(csv_rows[1] == "5,1,1,2,5,-1,1,0,0");
}

TEST_CASE("search rediscovers the published 19-tuple within bounds") {
    CmdResult r = run_cli("search 19 --a-max 38"); // default window: all residues
    CHECK(r.status == 0);
    auto rows = lines_of(r.out);
    CHECK(rows.size() == 59931);
    bool found = r.out.find("{\"m\":19,\"a\":[20,22,29,32],\"r\":[-2,-5,7,-5]}\n") !=
                 std::string::npos;
    CHECK(found);
}

TEST_CASE("search edge cases and the cell guard") {
    CmdResult empty = run_cli("search 1 --a-max 2");
    CHECK(empty.status == 0);
    CHECK(empty.out.empty());
    CHECK(run_cli("search 19 --a-max 100000 --max-cells 1000").status == 1);
    CHECK(run_cli("search 19").status == 2); // --a-max is required
}

TEST_CASE("verify presets pass within their exact ranges") {
    CmdResult r5 = run_cli("verify --preset ramanujan5 --n-max 9");
    CHECK(r5.status == 0);
    CHECK(r5.out.find("\"verdict\":\"all-pass\"") != std::string::npos);
    CHECK(run_cli("verify --preset ramanujan7 --n-max 6").status == 0);
    CHECK(run_cli("verify --preset dyson7 --n-max 6").status == 0);
}

TEST_CASE("verify confirms a tuple by formula to n-max 25") {
    CmdResult r = run_cli(
        R"(verify --tuple '{"m":19,"a":[20,22,32,29],"r":[2,5,14,7]}' --method fast --n-max 25)");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"conditions_ok\":true") != std::string::npos);
    CHECK(r.out.find("\"verdict\":\"all-pass\"") != std::string::npos);
    CHECK(r.out.find("\"lhs\":\"769\",\"rhs\":\"769\"") != std::string::npos);
}

TEST_CASE("verify flags the perturbed tuple with its first counterexample") {
    CmdResult r = run_cli(
        R"(verify --tuple '{"m":19,"a":[20,22,32,30],"r":[2,5,14,7]}' --n-max 3 --brute-max 70)");
    CHECK(r.status == 1);
    CHECK(r.out.find("\"conditions_ok\":false") != std::string::npos);
    CHECK(r.out.find("\"verdict\":\"counterexample\"") != std::string::npos);
    CHECK(r.out.find("\"counterexample_n\":1") != std::string::npos);
    CHECK(r.out.find("\"lhs\":\"769\",\"rhs\":\"825\"") != std::string::npos);
}

TEST_CASE("verify usage errors") {
    CHECK(run_cli(R"(verify --tuple '{"m":19')").status == 2); // malformed JSON
    CHECK(run_cli(R"(verify --tuple '{"m":19}')").status == 2); // missing keys
    CHECK(run_cli("verify").status == 2);                       // neither source
    CHECK(run_cli(R"(verify --tuple '{}' --preset dyson7)").status == 2); // both
    CHECK(run_cli("verify --preset nonsense").status == 2);
}

TEST_CASE("verify plain format is line oriented") {
    CmdResult r = run_cli("verify --preset dyson7 --n-max 1 --format plain");
    CHECK(r.status == 0);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "n=0 lhs=3 rhs=3 method=brute pass");
    CHECK(rows[2] == "verdict: all-pass");
}

TEST_CASE("tail prints exact fraction columns next to the decay curve") {
    CmdResult r = run_cli("tail --n-start 40 --n-end 40");
    CHECK(r.status == 0);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,exact_num,exact_den,exact_float,asymptote,ratio");
    CHECK(rows[1].rfind("40,490,37338,0.0131233596,", 0) == 0);

    CmdResult r2 = run_cli("tail --n-start 2 --n-end 3");
    auto rows2 = lines_of(r2.out);
    REQUIRE(rows2.size() == 3);
    CHECK(rows2[1].rfind("2,1,2,0.5,", 0) == 0);
    CHECK(rows2[2].rfind("3,1,3,", 0) == 0);
}

TEST_CASE("tail ratio stays within a factor of two of the curve") {
    CmdResult r = run_cli("tail --n-start 40 --n-end 200 --step 20");
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 10); // header + 9 sampled weights
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto fields = split_csv(rows[i]);
        REQUIRE(fields.size() == 6);
        double ratio = std::stod(fields[5]);
        CHECK(ratio > 0.5);
        CHECK(ratio < 2.0);
    }
}

TEST_CASE("tail argument validation") {
    CHECK(run_cli("tail --n-start 1 --n-end 5").status == 2);
    CHECK(run_cli("tail --n-start 10 --n-end 5").status == 2);
    CHECK(run_cli("tail --n-start 5 --n-end 10 --step 0").status == 2);
    CHECK(run_cli("tail --n-end 5").status == 2); // --n-start required
}

TEST_CASE("top-level usage") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate 4").status == 2);
    CHECK(run_cli("count").status == 2); // n required
}
