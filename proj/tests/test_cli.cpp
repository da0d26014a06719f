#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hurwitz/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "hurwitz");
    std::ostringstream out, err;
    const int code = hurwitz::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("hurwitz_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("solve prints Fibonacci") {
    const auto r = run({"solve", "--field", "Q", "--coeffs", "-1,-1", "--ic", "0,1", "--precision", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 1 1 2 3 5 8 13\n");
    CHECK(r.err.empty());
}

TEST_CASE("exp of zero") {
    const auto r = run({"exp", "--field", "Q", "--beta", "0", "--precision", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 0 0 0\n");
    CHECK(run({"exp", "--field", "gf:7", "--beta", "3", "--precision", "5"}).out == "1 3 2 6 4\n");
    CHECK(run({"exp", "--beta", "1/2", "--precision", "3"}).out == "1 1/2 1/4\n");
}

TEST_CASE("group over GF(2) contains the char-2 family") {
    const auto r = run({"group", "--field", "gf:2", "--coeffs", "1,1,1"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const nlohmann::json expected = {{"a+b+c", "b", "c"}, {"c", "a+b", "b+c"}, {"b+c", "b", "a+c"}};
    CHECK(j.at("block_family").at("entries") == expected);
    CHECK(j.at("constraint") == "invertible");
    CHECK(j.at("spectral").at("roots") == nlohmann::json::array({"1"}));
}

TEST_CASE("group with a zero root and a non-split polynomial") {
    const auto r = run({"group", "--coeffs", "0,0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("constraint") == "fixes_constants");
    CHECK(j.at("block_family").at("conditions") == nlohmann::json::array({"a = 1"}));

    const auto fib = nlohmann::json::parse(run({"group", "--coeffs", "-1,-1"}).out);
    CHECK(fib.at("spectral").is_null());
    CHECK(fib.at("family").at("conditions") == nlohmann::json::array({"det != 0"}));
}

TEST_CASE("basis, wronskian and from-basis") {
    CHECK(run({"basis", "--coeffs", "0,0", "--precision", "4"}).out == "1 0 0 0\n0 1 0 0\n");
    CHECK(run({"wronskian", "--series", "1", "--series", "0 1", "--precision", "4"}).out == "1 0 0 0\n");
    CHECK(run({"wronskian", "--coeffs", "-2,-2", "--precision", "4"}).code == 0);
    const auto fb =
        run({"from-basis", "--series", "1 0 1 1 2 3 5 8 13 21", "--series", "0 1 1 2 3 5 8 13 21 34", "--precision", "8"});
    CHECK(fb.code == 0);
    CHECK(fb.out == "-1 -1\n");
}

TEST_CASE("mul, spectral and act") {
    CHECK(run({"mul", "--lhs", "0 1", "--rhs", "0 1", "--precision", "4"}).out == "0 0 2 0\n");
    CHECK(run({"mul", "--field", "gf:2", "--lhs", "0 1", "--rhs", "0 1", "--precision", "4"}).out == "0 0 0 0\n");

    const auto sp = run({"spectral", "--coeffs", "-1,3,-3"});
    REQUIRE(sp.code == 0);
    const auto j = nlohmann::json::parse(sp.out);
    const nlohmann::json t = {{"1", "0", "0"}, {"1", "1", "0"}, {"1", "2", "1"}};
    CHECK(j.at("T").at("entries") == t);
    CHECK(j.at("multiplicities") == nlohmann::json::array({3}));

    const auto a = run({"act", "--coeffs", "0,0", "--matrix", "1,5;0,1", "--precision", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == "1 0 0 0\n5 1 0 0\n");
}

TEST_CASE("solve then apply gives zeros") {
    for (const std::string field : {"Q", "gf:5"}) {
        const auto s = run({"solve", "--field", field, "--coeffs", "2,-1/3,1", "--ic", "1,2,3", "--precision", "20"});
        REQUIRE(s.code == 0);
        const auto a = run({"apply", "--field", field, "--coeffs", "2,-1/3,1", "--series", first_line(s.out)});
        REQUIRE(a.code == 0);
        std::istringstream words(a.out);
        std::string w;
        std::size_t count = 0;
        while (words >> w) {
            CHECK(w == "0");
            ++count;
        }
        CHECK(count == 17);
    }
}

TEST_CASE("file inputs") {
    const auto op = write_temp("op.json", R"({"field": "Q", "coeffs": [{"field": "Q", "coeffs": ["0", "1"]}, "0"]})");
    const auto r = run({"solve", "--operator", op, "--ic", "1,0", "--precision", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 0 0 -1 0 0 4 0 0 -28\n");

    const auto series = write_temp("series.json", R"([{"field": "Q", "coeffs": ["1"]}, {"field": "Q", "coeffs": ["0", "1"]}])");
    CHECK(run({"from-basis", "--series-file", series}).out == "0 0\n");

    const auto mat = write_temp("mat.json", R"({"field": "Q", "rows": 2, "cols": 2, "entries": [["2", "3"], ["3", "5"]]})");
    CHECK(run({"act", "--coeffs", "-1,-1", "--matrix-file", mat, "--precision", "3"}).code == 0);

    CHECK(run({"solve", "--operator", "/nonexistent/op.json", "--ic", "1"}).code == 2);
    const auto bad = write_temp("bad.json", "{not json");
    CHECK(run({"solve", "--operator", bad, "--ic", "1"}).code == 2);
}

TEST_CASE("exit codes and diagnostics") {
    const auto split = run({"spectral", "--coeffs", "-1,-1"});
    CHECK(split.code == 1);
    CHECK(split.out.empty());
    CHECK(split.err.rfind("error: NotSplitOverK", 0) == 0);

    const auto nonmember = run({"act", "--coeffs", "0,0", "--matrix", "2,0;0,2"});
    CHECK(nonmember.code == 1);
    CHECK(nonmember.err.find("NotAMember") != std::string::npos);

    CHECK(run({"solve", "--coeffs", "1,1", "--ic", "1"}).code == 1);
    CHECK(run({"from-basis", "--series", "0 1", "--series", "0 0 1"}).err.find("SingularWronskian") != std::string::npos);

    CHECK(run({"solve", "--coeffs", "1,x", "--ic", "0,1"}).code == 2);
    CHECK(run({"solve", "--field", "gf:4", "--coeffs", "1", "--ic", "1"}).code == 2);
    CHECK(run({"solve", "--coeffs", "1", "--ic", "1", "--precision", "0"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"solve", "--ic", "1"}).code == 2);
    CHECK(run({"exp", "--beta", "1/0"}).code != 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"group", "--field", "gf:3", "--coeffs", "1,0,2"},
        {"spectral", "--coeffs", "-1,3,-3", "--format", "table"},
        {"basis", "--coeffs", "1/2,-3", "--precision", "12", "--format", "json"},
    };
    for (const auto& c : commands) {
        const auto first = run(c);
        CHECK(first.code == 0);
        for (int i = 0; i < 3; ++i) CHECK(run(c).out == first.out);
    }
}

TEST_CASE("help documents the sign convention") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("X^n") != std::string::npos);
    CHECK(r.out.find("pad") != std::string::npos);
}
