#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cli_app.hpp"
#include "support/games.hpp"

using namespace coordcut;
using coordcut::io::json;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "coordcut");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Result r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

json load(const std::string& name) {
    std::ifstream in(fixture(name));
    return json::parse(in);
}

/// Sets an environment variable for the lifetime of the guard.
struct EnvGuard {
    EnvGuard(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
    ~EnvGuard() { unsetenv(name_); }
    const char* name_;
};

}  // namespace

TEST(Cli, SolveAllAReportsMinCut) {
    const auto r = run_cli({"solve", fixture("mwdp_all_a.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.report();
    EXPECT_EQ(j["method"], "MinCut");
    EXPECT_EQ(j["exact"], true);
    EXPECT_EQ(j["seed"], 0);
    const auto inst = io::parse_mwdp(load("mwdp_all_a.json"));
    EXPECT_EQ(io::parse_rational(j["value"], "value"), oracle::mwdp_max(inst));
    ASSERT_TRUE(j.contains("audit"));
    const Rational cut = io::parse_rational(j["audit"]["cut_value"], "cut");
    const Rational theta = io::parse_rational(j["audit"]["theta"], "theta");
    EXPECT_EQ(cut, -io::parse_rational(j["value"], "value") - Rational(4) * theta);
}

TEST(Cli, ClassifyMaxCutIsHard) {
    const auto r = run_cli({"classify", fixture("mwdp_max_cut.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.report();
    EXPECT_EQ(j["verdict"], "Hard");
    EXPECT_EQ(j["polynomial"], false);
    for (const auto& a : j["arcs"]) {
        EXPECT_EQ(a["a"], false);
        EXPECT_NE(a["violated"].get<std::string>().find('a'), std::string::npos);
    }
}

TEST(Cli, ThresholdCase3AuditLine) {
    const auto r = run_cli({"threshold-ne", fixture("threshold_case3.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.report();
    EXPECT_EQ(j["method"], "ComponentMinCut");
    EXPECT_EQ(j["value"], 12);
    EXPECT_EQ(j["audit"]["twice_edges"], 14);
    EXPECT_EQ(j["audit"]["cross_edges"], 1);
    EXPECT_EQ(j["audit"]["cut"], 1);
    EXPECT_EQ(j["audit"]["line"], "wel = 2|E|-|E(A,B)|-cut: 12 = 14 - 1 - 1");
    EXPECT_EQ(j["nash"], true);
}

TEST(Cli, ThresholdPerPlayerMatchesOracle) {
    const auto r = run_cli({"threshold-ne", fixture("threshold_mixed.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto parsed = io::parse_threshold(load("threshold_mixed.json"));
    const auto& tg = std::get<ThresholdGame<UndirectedGraph>>(parsed);
    EXPECT_EQ(io::parse_rational(r.report()["value"], "value"),
              oracle::threshold_best_nash_welfare(tg.graph, tg.gamma));
}

TEST(Cli, GameFrontEnds) {
    const auto w = run_cli({"game-welfare", fixture("game_coordination.json")});
    ASSERT_EQ(w.code, 0) << w.err;
    EXPECT_EQ(w.report()["method"], "MinCut");
    EXPECT_EQ(w.report()["game_class"], "PureCoordination");
    const auto g = io::parse_game(load("game_coordination.json"));
    EXPECT_EQ(io::parse_rational(w.report()["value"], "value"), oracle::max_welfare(g));

    const auto p = run_cli({"game-potential", fixture("game_coordination.json")});
    ASSERT_EQ(p.code, 0) << p.err;
    EXPECT_EQ(p.report()["method"], "MinCut");

    const auto bad = run_cli({"game-potential", fixture("game_not_potential.json")});
    EXPECT_EQ(bad.code, 3);
    EXPECT_NE(bad.err.find("NotPotential"), std::string::npos);
}

TEST(Cli, EncodeProblems) {
    const auto g = io::parse_graph(load("graph.json"));
    const auto d = io::parse_digraph(load("digraph.json"));
    const auto cg = io::parse_colored_graph(load("colored.json"));
    auto value = [](const Result& r) {
        EXPECT_EQ(r.code, 0) << r.err;
        return io::parse_rational(r.report()["value"], "value");
    };
    EXPECT_EQ(value(run_cli({"encode", "--problem", "max-cut", fixture("graph.json")})), Rational(oracle::max_cut(g)));
    EXPECT_EQ(value(run_cli({"encode", "--problem", "directed-max-cut", fixture("digraph.json")})),
              Rational(oracle::directed_max_cut(d)));
    EXPECT_EQ(value(run_cli({"encode", "--problem", "eulerian-closeness", fixture("digraph.json")})),
              Rational(oracle::eulerian_closeness(d)));
    EXPECT_EQ(value(run_cli({"encode", "--problem", "min-st-cut", "--s", "0", "--t", "3", fixture("digraph.json")})),
              Rational(oracle::min_st_cut(4, d.arcs(), 0, 3, false)));
    std::vector<Arc> edges;
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    EXPECT_EQ(value(run_cli({"encode", "--problem", "undirected-min-st-cut", "--s", "0", "--t", "4", fixture("graph.json")})),
              Rational(oracle::min_st_cut(5, edges, 0, 4, true)));
    EXPECT_EQ(value(run_cli({"encode", "--problem", "two-color-partition", fixture("colored.json")})),
              Rational(oracle::two_color_partition(cg)));
    EXPECT_EQ(value(run_cli({"encode", "--problem", "two-color-difference", fixture("colored.json")})),
              oracle::two_color_difference(cg));

    const auto avg = run_cli({"encode", "--problem", "max-avg-degree", "--k", "2", fixture("graph.json")});
    ASSERT_EQ(avg.code, 0) << avg.err;
    EXPECT_EQ(avg.report()["found"], oracle::has_avg_degree_above(g, 2));

    const auto emitted = run_cli({"encode", "--problem", "max-cut", "--emit-instance", fixture("graph.json")});
    ASSERT_EQ(emitted.code, 0);
    EXPECT_EQ(io::parse_mwdp(emitted.report()).arc_count(), g.edge_count());

    EXPECT_EQ(run_cli({"encode", "--problem", "nonsense", fixture("graph.json")}).code, 1);
    EXPECT_EQ(run_cli({"encode", "--problem", "min-st-cut", fixture("digraph.json")}).code, 1);
    EXPECT_EQ(run_cli({"encode", "--problem", "max-avg-degree", "--k", "-1", fixture("graph.json")}).code, 2);
}

TEST(Cli, DensityAndGadget) {
    const auto d = run_cli({"density", fixture("graph.json")});
    ASSERT_EQ(d.code, 0) << d.err;
    EXPECT_EQ(io::parse_rational(d.report()["value"], "value"), oracle::max_density(io::parse_graph(load("graph.json"))));

    const auto g = run_cli({"gadget", fixture("hypergraph.json")});
    ASSERT_EQ(g.code, 0) << g.err;
    const auto j = g.report();
    EXPECT_EQ(j["nash"], true);
    for (const auto& [k, v] : j["checks"].items()) EXPECT_EQ(v, true) << k;
    EXPECT_EQ(j["recovered_size"], oracle::min_hitting_set(io::parse_hypergraph(load("hypergraph.json"))));
    EXPECT_EQ(run_cli({"gadget", fixture("hypergraph.json"), "--gamma-a", "1/4"}).code, 3);
    EXPECT_EQ(run_cli({"gadget", fixture("hypergraph.json"), "--gamma-b", "x"}).code, 2);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"solve", fixture("mwdp_max_cut.json")},
             {"solve", fixture("mwdp_all_a.json"), "--format", "dot"},
             {"threshold-ne", fixture("threshold_mixed.json"), "--format", "text"},
             {"encode", "--problem", "two-color-difference", fixture("colored.json")}}) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
    auto single = run_cli({"solve", fixture("mwdp_max_cut.json"), "--threads", "1"});
    auto many = run_cli({"solve", fixture("mwdp_max_cut.json"), "--threads", "4"});
    EXPECT_EQ(single.out, many.out);
}

TEST(Cli, ExitCodes) {
    for (const char* name : {"malformed_syntax.json", "malformed_missing_arcs.json", "malformed_matrix.json",
                             "malformed_two_cycle.json", "malformed_zero_weight.json"}) {
        const auto r = run_cli({"solve", fixture(name)});
        EXPECT_EQ(r.code, 2) << name;
        EXPECT_TRUE(r.out.empty());
    }
    EXPECT_NE(run_cli({"solve", fixture("malformed_matrix.json")}).err.find("arcs[0].m[1][1]"), std::string::npos);
    EXPECT_NE(run_cli({"solve", fixture("malformed_missing_arcs.json")}).err.find("'arcs'"), std::string::npos);
    EXPECT_EQ(run_cli({"threshold-ne", fixture("malformed_types.json")}).code, 2);
    EXPECT_EQ(run_cli({"solve", fixture("does_not_exist.json")}).code, 4);
    EXPECT_EQ(run_cli({"solve", fixture("mwdp_all_a.json"), "-o", "/nonexistent-dir/out.json"}).code, 4);
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"solve"}).code, 1);
    EXPECT_EQ(run_cli({"solve", fixture("mwdp_all_a.json"), "--format", "xml"}).code, 1);
    EXPECT_EQ(run_cli({"classify", fixture("mwdp_all_a.json"), "--format", "dot"}).code, 1);
}

TEST(Cli, VersionAndFormats) {
    const auto v = run_cli({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find(kLibraryVersion), std::string::npos);

    const auto text = run_cli({"solve", fixture("mwdp_all_a.json"), "--format", "text"});
    EXPECT_NE(text.out.find("method: MinCut\n"), std::string::npos);
    const auto dot = run_cli({"game-welfare", fixture("game_coordination.json"), "--format", "dot"});
    EXPECT_EQ(dot.out.rfind("graph game {", 0), 0U);
}

TEST(Cli, OutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "coordcut_cli_test.json";
    const auto r = run_cli({"solve", fixture("mwdp_all_a.json"), "-o", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    EXPECT_EQ(json::parse(in)["method"], "MinCut");
    std::filesystem::remove(path);
}

TEST(Cli, BudgetFromEnvironment) {
    {
        EnvGuard env("COORDCUT_BUDGET", "2");
        const auto r = run_cli({"solve", fixture("mwdp_max_cut.json")});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(r.report()["method"], "LocalSearch");
        EXPECT_EQ(r.report()["exact"], false);
        EXPECT_TRUE(r.report().contains("warning"));
        // the flag wins over the environment
        EXPECT_EQ(run_cli({"solve", fixture("mwdp_max_cut.json"), "--budget", "10"}).report()["method"], "Exact");
    }
    {
        EnvGuard env("COORDCUT_BUDGET", "zero");
        EXPECT_EQ(run_cli({"solve", fixture("mwdp_max_cut.json")}).code, 1);
    }
    EXPECT_EQ(run_cli({"solve", fixture("mwdp_max_cut.json")}).report()["method"], "Exact");
}
