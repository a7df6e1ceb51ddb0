#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "raagtc/cli.hpp"

using raagtc::run_cli;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

// Temp fixture files, removed when the suite object dies.
struct Fixtures {
    std::filesystem::path dir;

    Fixtures() {
        dir = std::filesystem::temp_directory_path() / "raagtc_cli_tests";
        std::filesystem::create_directories(dir);
        write("p3.edges", "a b\nb c\n");
        write("e3.edges", "a\nb\nc\n");
        write("k5.col", "p edge 5 10\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\n"
                        "e 3 4\ne 3 5\ne 4 5\n");
        write("c4.edges", "a b\nb c\nc d\nd a\n");
        write("bad.edges", "a b c\n");
        write("k3.dimacs_as_txt", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    }
    ~Fixtures() { std::filesystem::remove_all(dir); }

    void write(const std::string& name, const std::string& text) {
        std::ofstream f(dir / name);
        f << text;
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

Fixtures fx;

} // namespace

TEST_CASE("tc text output is stable") {
    auto res = run({"tc", "--graph", fx.path("p3.edges"), "--r", "2"});
    CHECK(res.code == 0);
    CHECK(res.out == "z_2 = 3 (exact-search)\nwitness: {a,b} {c}\n");
    CHECK(res.err.empty());
}

TEST_CASE("tc json output matches the schema") {
    auto res = run({"tc", "--graph", fx.path("k5.col"), "--r", "3", "--format", "json"});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "{\"r\":3,\"value\":10,\"method\":\"exact-search\","
          "\"witness\":[[\"1\",\"2\",\"3\",\"4\",\"5\"],"
          "[\"1\",\"2\",\"3\",\"4\",\"5\"],[]]}\n");
}

TEST_CASE("tc sequence mode") {
    auto res = run({"tc", "--graph", fx.path("e3.edges"), "--r-max", "4"});
    CHECK(res.code == 0);
    CHECK(res.out == "z_2 = 2 (exact-search)\nz_3 = 3 (exact-search)\n"
                     "z_4 = 4 (recurrence)\n");

    auto json = run({"tc", "--graph", fx.path("e3.edges"), "--r-max", "3", "--format",
                     "json"});
    CHECK(json.out ==
          "{\"r_max\":3,\"values\":[{\"r\":2,\"value\":2,\"method\":\"exact-search\"},"
          "{\"r\":3,\"value\":3,\"method\":\"exact-search\"}]}\n");
}

TEST_CASE("tc reads stdin and honors --input-format") {
    auto res = run({"tc", "--graph", "-", "--r", "2"}, "a b\nb c\n");
    CHECK(res.code == 0);
    CHECK(res.out.find("z_2 = 3") == 0);

    auto dimacs = run({"tc", "--graph", "-", "--input-format", "dimacs", "--r", "2"},
                      "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(dimacs.code == 0);
    CHECK(dimacs.out.find("z_2 = 3") == 0);

    // Extension-based inference: .col means DIMACS.
    auto col = run({"tc", "--graph", fx.path("k5.col"), "--r", "2"});
    CHECK(col.code == 0);
    CHECK(col.out.find("z_2 = 5") == 0);

    // Same bytes under a neutral name parse as DIMACS only when forced.
    auto forced = run({"tc", "--graph", fx.path("k3.dimacs_as_txt"), "--input-format",
                       "dimacs", "--r", "2"});
    CHECK(forced.code == 0);
    auto unforced = run({"tc", "--graph", fx.path("k3.dimacs_as_txt"), "--r", "2"});
    CHECK(unforced.code == 2);
}

TEST_CASE("tc methods agree and are labeled") {
    auto oracle =
        run({"tc", "--graph", fx.path("p3.edges"), "--r", "2", "--method", "oracle"});
    CHECK(oracle.code == 0);
    CHECK(oracle.out == "z_2 = 3 (oracle)\n");

    auto exact =
        run({"tc", "--graph", fx.path("p3.edges"), "--r", "2", "--method", "exact"});
    CHECK(exact.out.find("z_2 = 3 (exact-search)") == 0);

    // Past the anchor the default path is the recurrence; forcing stays exact.
    auto auto5 = run({"tc", "--graph", fx.path("p3.edges"), "--r", "5"});
    CHECK(auto5.out.find("z_5 = 9 (recurrence)") == 0);
    auto forced = run({"tc", "--graph", fx.path("p3.edges"), "--r", "5", "--force-exact"});
    CHECK(forced.out.find("z_5 = 9 (exact-search)") == 0);

    // The oracle guard maps to a domain error unless overridden.
    auto guarded =
        run({"tc", "--graph", fx.path("p3.edges"), "--r", "6", "--method", "oracle"});
    CHECK(guarded.code == 1);
    CHECK(guarded.err.find("guard") != std::string::npos);
    auto overridden = run({"tc", "--graph", fx.path("p3.edges"), "--r", "6", "--method",
                           "oracle", "--force-oracle"});
    CHECK(overridden.code == 0);
    CHECK(overridden.out == "z_6 = 11 (oracle)\n");
}

TEST_CASE("tc thread flag and environment fallback keep output identical") {
    auto one = run({"tc", "--graph", fx.path("c4.edges"), "--r", "4", "--threads", "1",
                    "--format", "json"});
    auto many = run({"tc", "--graph", fx.path("c4.edges"), "--r", "4", "--threads", "7",
                     "--format", "json"});
    CHECK(one.code == 0);
    CHECK(one.out == many.out);

    setenv("RAAG_TC_THREADS", "3", 1);
    auto env = run({"tc", "--graph", fx.path("c4.edges"), "--r", "4", "--format",
                    "json"});
    CHECK(env.out == one.out);
    setenv("RAAG_TC_THREADS", "banana", 1);
    auto bad_env = run({"tc", "--graph", fx.path("c4.edges"), "--r", "4", "--format",
                        "json"});
    CHECK(bad_env.out == one.out);
    CHECK(bad_env.err.find("RAAG_TC_THREADS") != std::string::npos);
    unsetenv("RAAG_TC_THREADS");
}

TEST_CASE("cliques command") {
    auto res = run({"cliques", "--graph", fx.path("p3.edges")});
    CHECK(res.code == 0);
    CHECK(res.out == "maximal cliques: 2, max size: 2\n  {a,b}\n  {b,c}\n");

    auto json = run({"cliques", "--graph", fx.path("p3.edges"), "--format", "json"});
    CHECK(json.out ==
          "{\"count\":2,\"max_clique_size\":2,\"cliques\":[[\"a\",\"b\"],"
          "[\"b\",\"c\"]]}\n");
}

TEST_CASE("genfunc command") {
    auto res = run({"genfunc", "--graph", fx.path("p3.edges"), "--expand", "6"});
    CHECK(res.code == 0);
    CHECK(res.out == "P(x) = 3x - x^2\nF(x) = (3x - x^2)/(1-x)^2\nP(1) = 2\n"
                     "series: 0 3 5 7 9 11 13\n");

    // Edgeless pair: the free group of rank 2.
    auto json = run({"genfunc", "--graph", "-", "--format", "json"}, "a\nb\n");
    CHECK(json.out == "{\"numerator\":[0,2,-1],\"denom_exponent\":2}\n");

    auto latex = run({"genfunc", "--graph", fx.path("p3.edges"), "--format", "latex"});
    CHECK(latex.out == "\\frac{3x - x^2}{(1-x)^2}\n");

    auto empty = run({"genfunc", "--graph", "-"}, "");
    CHECK(empty.code == 0);
    CHECK(empty.out == "P(x) = 0\nF(x) = 0\nP(1) = 0\n");
    CHECK(empty.err.find("warning") != std::string::npos);
}

TEST_CASE("catalog command") {
    auto latex = run({"catalog", "--space", "higman", "--format", "latex"});
    CHECK(latex.code == 0);
    CHECK(latex.out == "\\frac{2x(2-x)}{(1-x)^2}\n");

    auto text = run({"catalog", "--space", "unitary", "--param", "3", "--expand", "5"});
    CHECK(text.out == "F(x) = 3x/(1-x)^2\nseries: 0 3 6 9 12 15\n");

    auto json = run({"catalog", "--space", "sphere-even", "--format", "json"});
    CHECK(json.out ==
          "{\"space\":\"sphere-even\",\"numerator\":[0,2,-1],\"denom_exponent\":2}\n");

    auto raag = run({"catalog", "--space", "raag", "--graph", fx.path("p3.edges"),
                     "--format", "latex"});
    CHECK(raag.out == "\\frac{3x - x^2}{(1-x)^2}\n");

    CHECK(run({"catalog", "--space", "free", "--param", "1"}).code == 1);
    CHECK(run({"catalog", "--space", "nope"}).code == 1);
    CHECK(run({"catalog", "--space", "raag"}).code == 1);
}

TEST_CASE("verify command") {
    auto res = run({"verify", "--graph", fx.path("p3.edges"), "--samples", "300",
                    "--seed", "5"});
    CHECK(res.code == 0);
    CHECK(res.out.find("samples: 300, seed: 5") == 0);
    CHECK(res.out.find("all checks passed") != std::string::npos);

    auto json = run({"verify", "--graph", fx.path("c4.edges"), "--samples", "200",
                     "--seed", "9", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"all_passed\":true") != std::string::npos);
    CHECK(json.out.find("\"pass\":200") != std::string::npos);

    // Identical invocations give byte-identical output.
    auto again = run({"verify", "--graph", fx.path("c4.edges"), "--samples", "200",
                      "--seed", "9", "--format", "json"});
    CHECK(again.out == json.out);
}

TEST_CASE("exit codes") {
    CHECK(run({"tc", "--graph", fx.path("bad.edges"), "--r", "2"}).code == 2);
    CHECK(run({"tc", "--graph", fx.path("p3.edges"), "--r", "1"}).code == 1);
    CHECK(run({"tc", "--graph", "/nonexistent/file", "--r", "2"}).code == 1);
    CHECK(run({"tc", "--graph", fx.path("p3.edges")}).code == 1); // no r
    CHECK(run({"tc", "--graph", fx.path("p3.edges"), "--r", "2", "--r-max", "3"}).code ==
          1);
    CHECK(run({"tc", "--graph", fx.path("p3.edges"), "--r", "2", "--method",
               "psychic"}).code == 1);
    CHECK(run({"tc", "--graph", fx.path("p3.edges"), "--r", "2", "--format",
               "yaml"}).code == 1);
    CHECK(run({"tc", "--graph", fx.path("p3.edges"), "--r", "2", "--format",
               "latex"}).code == 1); // latex is genfunc/catalog only
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);

    auto parse_err = run({"tc", "--graph", fx.path("bad.edges"), "--r", "2"});
    CHECK(parse_err.err.find("line 1") != std::string::npos);
}
