#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pbound/cli.hpp"
#include "pbound/npartite.hpp"
#include "pbound/properties.hpp"

using namespace pbound;

namespace {

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    CliResult result;
    result.status = run_cli(args, in, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path.string();
}

}  // namespace

TEST_CASE("bound partition") {
    const auto r = run({"bound", "partition", "-"}, fig3_network().serialize());
    CHECK(r.status == 0);
    CHECK(r.out == "|E|=16 |I|=5 opt=5 bound=8/5\n");
}

TEST_CASE("bound partition kv output") {
    const auto r =
        run({"--kv", "bound", "partition", "-"}, fig3_network().serialize());
    CHECK(r.status == 0);
    CHECK(r.out == "edge_count=16\nsession_count=5\nopt=5\nbound=8/5\n");
}

TEST_CASE("bound partition rejects a sessionless network") {
    const auto r = run({"bound", "partition", "-"}, "node a\nnode b\nedge a b\n");
    CHECK(r.status == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("bound sparsest-cut") {
    const auto r = run({"bound", "sparsest-cut", "-"},
                       "node a\nnode b\nedge a b\nsession 1 a b\n");
    CHECK(r.status == 0);
    CHECK(r.out == "sparsest-cut=1/1 alpha={b} crossing=1\n");
}

TEST_CASE("opt subcommand") {
    const auto exact = run({"opt", "-"}, fig3_network().serialize());
    CHECK(exact.status == 0);
    CHECK(exact.out ==
          "opt=5 parts={v1,v2}|{v3,v4}|{v5,v6,v7} realized={1,2,3,4,5}\n");

    const auto rec =
        run({"opt", "-", "--method", "recursion"}, fig3_network().serialize());
    CHECK(rec.status == 0);
    CHECK(rec.out == "opt=5\n");

    const auto bad = run({"opt", "-", "--method", "blah"}, "");
    CHECK(bad.status == 2);
}

TEST_CASE("gen piped into bound reproduces the fixture result") {
    const auto gen = run({"gen", "type1", "2", "2", "3"});
    CHECK(gen.status == 0);
    const auto bound = run({"bound", "partition", "-"}, gen.out);
    CHECK(bound.status == 0);
    CHECK(bound.out == "|E|=16 |I|=5 opt=5 bound=8/5\n");
}

TEST_CASE("gen output parses back") {
    const auto r = run({"gen", "type2", "2", "2"});
    CHECK(r.status == 0);
    const Network net = Network::parse(r.out);
    CHECK(net == gen_type2({2, 2}));
}

TEST_CASE("route and verify") {
    const auto net_text = run({"gen", "type1", "2", "2", "3"}).out;
    const auto scheme_text = run({"route", "type1", "2", "2", "3"}).out;
    const auto net_file = write_temp("pbound_test_net.txt", net_text);
    const auto scheme_file = write_temp("pbound_test_scheme.txt", scheme_text);
    const auto r = run({"verify", net_file, scheme_file});
    CHECK(r.status == 0);
    CHECK(r.out == "feasible=yes rate=16/1 uniform=yes saturated=yes\n");
    std::remove(net_file.c_str());
    std::remove(scheme_file.c_str());
}

TEST_CASE("check p1 output") {
    const auto r = run({"check", "p1", "-"}, fig3_network().serialize());
    CHECK(r.status == 0);
    CHECK(r.out ==
          "P1: holds (63 cut-sets, min non-orthogonal sessions per cut-set: 1)\n");

    const auto violated =
        run({"check", "p1", "-"}, gen_type1({2, 2, 2}).serialize());
    CHECK(violated.status == 0);
    CHECK(violated.out.find("P1: violated") == 0);
}

TEST_CASE("check p2 output") {
    const auto r = run({"check", "p2", "-"}, fig3_network().serialize());
    CHECK(r.status == 0);
    CHECK(r.out ==
          "P2: holds (8 disjoint cut-set pairs, 0 compatible with all sessions)\n");
}

TEST_CASE("table1 defaults to the built-in fixture") {
    const auto r = run({"table1"});
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string first;
    std::getline(lines, first);
    CHECK(first == "alpha={v1} nonorth={2,3,4,5} partners={v2}");
    int count = 1;
    for (std::string line; std::getline(lines, line);) ++count;
    CHECK(count == 19);
}

TEST_CASE("reduce") {
    const auto r = run({"reduce", "-"},
                       "node a\nnode b\nnode c\nedge a b\nedge b c\n");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "anchor=b independent-set=2 witness={a,c} gadget-opt=1 equivalence=ok\n");

    const auto anchored = run({"reduce", "-", "--anchor", "a"},
                              "node a\nnode b\nnode c\nedge a b\nedge b c\n");
    CHECK(anchored.status == 0);
    CHECK(anchored.out.find("anchor=a") == 0);
    CHECK(anchored.out.find("equivalence=ok") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"bound"}).status == 2);
    CHECK(run({"gen", "type1"}).status == 2);
    CHECK(run({}).status == 2);
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("pbound") != std::string::npos);
}

TEST_CASE("output is byte-stable across runs") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"table1"},
          {"gen", "type2", "2", "3"},
          {"route", "type2", "2", "2", "3"}}) {
        const auto a = run(args, "");
        const auto b = run(args, "");
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}
