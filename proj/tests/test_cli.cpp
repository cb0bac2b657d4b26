#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "cayley/bijections.hpp"
#include "cayley/cactus.hpp"
#include "cayley/formulas.hpp"
#include "cayley/lagrange.hpp"

using nlohmann::json;
using namespace cayley;

namespace {

std::string g_cli;

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs `prefix cli args < stdin_file`, capturing stdout; stderr is dropped.
RunResult run(const std::string& args, const std::string& stdin_data = "",
              const std::string& env_prefix = "") {
    std::string cmd = env_prefix + " \"" + g_cli + "\" " + args + " 2>/dev/null";
    if (!stdin_data.empty()) {
        std::ofstream tmp("/tmp/cayley_cli_stdin.json");
        tmp << stdin_data;
        tmp.close();
        cmd += " < /tmp/cayley_cli_stdin.json";
    } else {
        cmd += " < /dev/null";
    }
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("count subcommand") {
    auto r = run("count --stat unitype-degree --gamma 2,1,1");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = run("count --stat edge-types --profile 2,2 --root 1 --m \"1,2:1;2,1:2\"");
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");

    r = run("count --stat plane-trees --counts 2,1,1");
    CHECK(r.out == "3\n");

    r = run("count --stat indegree --profile 3 --root 1 --gamma \"1,1,1:2\"");
    CHECK(r.out == "1\n");

    r = run("count --stat embedded --profile 2,2 --root 1 --arcs \"1,2;2,1\"");
    CHECK(r.out == "8\n");

    r = run("count --stat injective-edge-types --profile 3 --root 1 --m \"1,1:2\"");
    CHECK(r.out == "6\n");

    std::string classes = "'[{\"t\":1,\"c\":[2],\"count\":1},{\"t\":1,\"c\":[0],\"count\":2}]'";
    r = run("count --stat degree-classes --root 1 --classes " + classes);
    CHECK(r.out == "3\n");

    std::string complete =
        "'[{\"t\":1,\"u\":2,\"c\":[2],\"count\":1},{\"t\":1,\"u\":1,\"c\":[0],\"count\":2}]'";
    r = run("count --stat complete-types --root 1 --classes " + complete);
    CHECK(r.out == "3\n");
    r = run("count --stat complete-special --root 1 --classes " + complete);
    CHECK(r.out == "3\n");
}

TEST_CASE("gf subcommand matches the library and is deterministic") {
    auto r = run("gf --kind multitype --profile 2 --root 1");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == to_json(gf_multitype(Profile({2}), 1)));

    auto again = run("gf --kind multitype --profile 2 --root 1");
    CHECK(again.out == r.out);

    r = run("gf --kind forests --profile 2 --root 1");
    CHECK(json::parse(r.out) == to_json(gf_forests(Profile({2}))));

    r = run("gf --kind delta --profile 1,2 --root 1");
    auto det = run("gf --kind delta-det --profile 1,2 --root 1");
    CHECK(r.out == det.out);
}

TEST_CASE("list subcommand") {
    auto r = run("list --what trees --profile 1,1 --root 1");
    CHECK(r.code == 0);
    auto tree_lines = lines(r.out);
    REQUIRE(tree_lines.size() == 1);
    RootedMultitypeTree want(Profile({1, 1}), {1, 1}, {{{2, 1}, {1, 1}}});
    CHECK(json::parse(tree_lines[0]) == to_json(want));

    CHECK(lines(run("list --what skeletons --d 2 --root 1").out).size() == 1);
    CHECK(lines(run("list --what plane-trees --n 3").out).size() == 2);
    CHECK(lines(run("list --what forests --profile 2").out).size() == 3);
    CHECK(lines(run("list --what cacti --d 2 --profile 2,1").out).size() == 2);
}

TEST_CASE("bijection subcommand") {
    auto r = run("bijection --move phi-unitype --i 1 --j 2 --verify",
                 R"({"n":3,"edges":[[1,2],[1,3]],"pivot":1,"other":3})");
    CHECK(r.code == 0);
    auto out = json::parse(r.out);
    CHECK(out.at("pivot") == 2);
    CHECK(out.at("edges") == json::parse("[[1,2],[2,3]]"));

    RootedMultitypeTree t(Profile({1, 2}), {2, 1},
                          {{{1, 1}, {2, 1}}, {{2, 2}, {1, 1}}});
    MarkedTree m{t, {1, 1}};
    r = run("bijection --move indegree --s 1 --t 2 --i 1 --j 2 --verify",
            to_json(m).dump());
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == to_json(classify_and_apply(m, 1, 2, 1, 2)));

    // size-3 chain of 2-gons, profile (2,2), with vertex (1,1) of degree 2
    Gon tail{{GonCorner{2, {}}, GonCorner{2, {}}}};
    Gon middle{{GonCorner{1, {}}, GonCorner{2, {tail}}}};
    Cactus source{2, Gon{{GonCorner{1, {middle}}, GonCorner{1, {}}}}};
    REQUIRE(!validate_cactus(source));
    r = run("bijection --move cactus-phi --s 1 --j 1 --k 2 --verify",
            to_json(source).dump());
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == to_json(cactus_phi(source, 1, 1, 2)));
}

TEST_CASE("lagrange subcommand") {
    Polynomial geom_body;
    Polynomial pow(Rat(1));
    for (int k = 0; k < 8; ++k) {
        geom_body += pow;
        pow = pow * Polynomial::variable(Var::axis(1));
    }
    json system = {{"d", 1},
                   {"order", 8},
                   {"G", json::array({to_json(PowerSeries(geom_body, 8)),
                                      to_json(PowerSeries(geom_body, 8))})}};
    auto r = run("lagrange --route rhs --n 3", system.dump());
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    CHECK(run("lagrange --route observable --n 3", system.dump()).out == "5\n");
    CHECK(run("lagrange --route tree-sum --n 4 --root 1", system.dump()).out == "5\n");

    r = run("lagrange --route solve", system.dump());
    CHECK(r.code == 0);
    FunctionalSystem s{1, {PowerSeries(geom_body, 8)}, 8};
    CHECK(json::parse(lines(r.out)[0]) == to_json(solve_functional_system(s)[0]));
}

TEST_CASE("cacti subcommand") {
    CHECK(run("cacti --action count-total --d 2 --profile 2,2").out == "12\n");
    CHECK(run("cacti --action count-degree --d 2 --gamma \"1,1:1;1,2:1;2,1:2\"").out ==
          "2\n");
    CHECK(lines(run("cacti --action list --d 2 --profile 2,2").out).size() == 12);
}

TEST_CASE("verify subcommand") {
    auto r = run("verify --suite unitype --max-vertices 5");
    CHECK(r.code == 0);
    auto report = json::parse(lines(r.out)[0]);
    CHECK(report.at("suite") == "unitype");
    CHECK(report.at("failures").empty());
    CHECK(report.at("cases").get<int>() > 0);
}

TEST_CASE("exit codes") {
    CHECK(run("count --stat no-such-stat --gamma 1").code == 2);
    CHECK(run("count").code == 2);           // missing required flag
    CHECK(run("no-such-subcommand").code == 2);
    CHECK(run("list --what trees --profile 10 --root 1").code == 3);
    // env var tightens the bound
    CHECK(run("list --what trees --profile 5 --root 1").code == 0);
    CHECK(run("list --what trees --profile 5 --root 1", "",
              "CAYLEY_MAX_TREE_VERTICES=4").code == 3);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <cayley-cli-binary>\n");
        return 1;
    }
    g_cli = argv[argc - 1];
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv);
    return context.run();
}
