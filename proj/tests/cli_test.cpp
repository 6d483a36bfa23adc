#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcheb/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using fibcheb::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = run(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long long count_lines(const std::string& s) {
    long long n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("sequence command") {
    Result r = call({"sequence", "--id", "a138573", "--count", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "0, 1, 2, 5, 16, 45, 130, 377, 1088, 3145\n");
    CHECK(call({"sequence", "--id", "fib", "--count", "10"}).out ==
          "0, 1, 1, 2, 3, 5, 8, 13, 21, 34\n");
    CHECK(call({"sequence", "--id", "lucas", "--count", "8"}).out == "2, 1, 3, 4, 7, 11, 18, 29\n");
    CHECK(call({"sequence", "--id", "pell", "--count", "3"}).code == 2);
    CHECK(call({"sequence", "--id", "fib", "--count", "0"}).code == 2);
}

TEST_CASE("cheb command") {
    Result coeffs = call({"cheb", "--kind", "T", "--n", "3"});
    CHECK(coeffs.code == 0);
    CHECK(coeffs.out == "4*x^3 + -3*x^1\n");
    Result at = call({"cheb", "--kind", "T", "--n", "4", "--at", "3/2"});
    CHECK(at.out == "47/2\n");
    CHECK(call({"cheb", "--kind", "V", "--n", "3"}).code == 2);
    CHECK(call({"cheb", "--kind", "T", "--n", "-2"}).code == 2);
    CHECK(call({"cheb", "--kind", "T", "--n", "2", "--at", "1/0"}).code == 2);
}

TEST_CASE("list command") {
    Result r = call({"list"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) >= 85);
    CHECK(r.out.find("id=seq.a138573") != std::string::npos);
    CHECK(r.out.find("status=typo-suspect") != std::string::npos);
}

TEST_CASE("verify command") {
    Result ok = call({"verify", "--id", "ex5.1", "--set", "n=1..30"});
    CHECK(ok.code == 0);
    CHECK(count_lines(ok.out) == 32);  // 30 points + entry + summary
    CHECK(ok.out.find("status=fail") == std::string::npos);

    CHECK(call({"verify", "--id", "no.such.id"}).code == 2);
    CHECK(!call({"verify", "--id", "no.such.id"}).err.empty());
    CHECK(call({"verify", "--id", "ex5.1", "--set", "z=1..3"}).code == 2);
    CHECK(call({"verify", "--id", "ex5.1", "--bogus", "1"}).code == 2);
    CHECK(call({"bogus-subcommand"}).code == 2);
    CHECK(call({}).code == 2);

    // Constraint-violating points inside a --set range come back skipped.
    Result skips = call({"verify", "--id", "ex5.5", "--set", "n=1..6"});
    CHECK(skips.code == 0);
    CHECK(skips.out.find("status=skipped-constraint") != std::string::npos);

    // A typo-suspect entry reports printed and corrected forms but exits 0.
    Result ts = call({"verify", "--id", "thm16.l", "--set", "n=0..4", "--set", "t=0..1"});
    CHECK(ts.code == 0);
    CHECK(ts.out.find("form=printed") != std::string::npos);
    CHECK(ts.out.find("form=corrected") != std::string::npos);
    CHECK(ts.out.find("status=fail") != std::string::npos);
}

TEST_CASE("--out writes the identical report") {
    std::string path = "cli_test_out.tmp";
    Result r = call({"verify", "--id", "thm8.fib", "--set", "n=1..5", "--set", "t=-2..2",
                     "--out", path});
    CHECK(r.code == 0);
    CHECK(slurp(path) == r.out);
    std::remove(path.c_str());
}

TEST_CASE("reports are byte-identical across --jobs") {
    auto once = [](const char* jobs) {
        return call({"verify", "--id", "thm12.2", "--set", "n=1..6", "--set", "p=-2..2",
                     "--set", "q=-2..2", "--set", "t=-1..1", "--jobs", jobs});
    };
    Result a = once("1");
    Result b = once("7");
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
}

TEST_CASE("section5 command") {
    Result r = call({"section5", "--max-total", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("family=relation-A ") != std::string::npos);
    CHECK(r.out.find("family=relation-B") != std::string::npos);
    CHECK(r.out.find("failures=0") != std::string::npos);
    CHECK(call({"section5"}).code == 2);
    CHECK(call({"section5", "--max-total", "x"}).code == 2);
}
