#pragma once

// Command-line front end. Everything lives in run() so tests can drive the
// exact code path of the binary with in-memory streams.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "coordcut/coordcut.hpp"
#include "coordcut/io.hpp"
#include "coordcut/version.hpp"

namespace coordcut::cli {

using io::json;

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kSolver = 3, kIo = 4 };

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string command;
    std::string input;
    std::string output;
    std::size_t budget = kDefaultExactBudget;
    std::size_t restarts = 32;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string format = "json";

    std::string problem;  // encode
    std::optional<Vertex> s, t;
    std::string k;
    bool emit_instance = false;

    std::string gamma_a = "3/4";  // gadget
    std::string gamma_b = "1/4";
};

struct Report {
    json body;
    std::string dot;  ///< empty when the command has no graph rendering
};

namespace detail {

inline std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path + "'");
    return buf.str();
}

inline json parse_document(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw io::ParseError("<document>", "'" + path + "' is not valid JSON (" + e.what() + ")");
    }
}

inline Rational option_rational(const std::string& text, const std::string& name) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw io::ParseError(name, e.what());
    }
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline const char* fill(bool second) { return second ? "#fdae6b" : "#9ecae1"; }

inline std::string mwdp_dot(const MwdpInstance& inst, const Partition& p) {
    std::ostringstream os;
    os << "digraph mwdp {\n  node [style=filled];\n";
    for (Vertex v = 0; v < inst.vertex_count(); ++v)
        os << "  " << v << " [label=\"" << v << (p[v] == Side::X1 ? " X1" : " X2") << "\", fillcolor=\""
           << fill(p[v] == Side::X2) << "\"];\n";
    for (const auto& a : inst.arcs())
        os << "  " << a.tail << " -> " << a.head << " [label=\"" << dot_escape(a.c.str() + " " + a.m.str())
           << "\"];\n";
    os << "}\n";
    return os.str();
}

/// Undirected rendering; `label(v)` names each vertex, `second(v)` picks its fill.
template <typename Label, typename Second>
std::string graph_dot(const char* name, const UndirectedGraph& g, Label label, Second second) {
    std::ostringstream os;
    os << "graph " << name << " {\n  node [style=filled];\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << " [label=\"" << dot_escape(label(v)) << "\", fillcolor=\"" << fill(second(v))
           << "\"];\n";
    for (const auto& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string profile_dot(const char* name, const UndirectedGraph& g, const StrategyProfile& s) {
    return graph_dot(
        name, g, [&](Vertex v) { return std::to_string(v) + (s[v] == Action::one ? " one" : " two"); },
        [&](Vertex v) { return s[v] == Action::two; });
}

/// key: value lines, nested keys joined with '.', scalar arrays space separated.
inline void render_text(const json& j, const std::string& prefix, std::ostream& os) {
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) render_text(value, prefix.empty() ? key : prefix + "." + key, os);
        return;
    }
    if (j.is_array()) {
        const bool flat = std::none_of(j.begin(), j.end(), [](const json& v) { return v.is_structured(); });
        if (flat) {
            os << prefix << ":";
            for (const auto& v : j) os << ' ' << scalar(v);
            os << '\n';
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
        return;
    }
    os << prefix << ": " << scalar(j) << '\n';
}

inline SolvePolicy policy(const Config& c) { return {c.budget, c.restarts, c.seed, c.threads}; }

inline json solve_fields(const SolveOutcome& out) {
    json j = {{"method", to_string(out.method)},
              {"exact", out.exact},
              {"value", io::rational_json(out.value)},
              {"partition", io::partition_json(out.partition)}};
    if (out.audit)
        j["audit"] = {{"cut_value", io::rational_json(out.audit->cut_value)},
                      {"theta", io::rational_json(out.audit->theta)},
                      {"identity", "cut_value = -value - n*theta"}};
    if (!out.exact) j["warning"] = "heuristic result beyond the exact budget; optimality not certified";
    return j;
}

inline std::string props_violated(const MatrixProperties& p) {
    std::string out;
    if (!p.a) out += "a";
    if (!p.b) out += out.empty() ? "b" : ",b";
    if (!p.c) out += out.empty() ? "c" : ",c";
    return out.empty() ? "none" : out;
}

// ---------------------------------------------------------------------------
// commands

inline Report cmd_solve(const Config& c, const json& doc) {
    const auto inst = io::parse_mwdp(doc);
    const auto fc = classify_family(inst);
    const auto out = solve(inst, policy(c));
    Report r;
    r.body = solve_fields(out);
    r.body["command"] = "solve";
    r.body["family"] = to_string(fc.tag);
    r.dot = mwdp_dot(inst, out.partition);
    return r;
}

inline Report cmd_classify(const Config&, const json& doc) {
    const auto inst = io::parse_mwdp(doc);
    const auto fc = classify_family(inst);
    json arcs = json::array();
    for (std::size_t i = 0; i < inst.arcs().size(); ++i) {
        const auto& a = inst.arcs()[i];
        const auto& p = fc.per_arc[i];
        arcs.push_back({{"tail", a.tail},
                        {"head", a.head},
                        {"m", io::matrix_json(a.m)},
                        {"a", p.a},
                        {"b", p.b},
                        {"c", p.c},
                        {"violated", props_violated(p)}});
    }
    Report r;
    r.body = {{"command", "classify"},
              {"verdict", to_string(fc.tag)},
              {"polynomial", fc.tag != FamilyTag::Hard},
              {"all_a", fc.all_a},
              {"all_b", fc.all_b},
              {"all_c", fc.all_c},
              {"arcs", arcs}};
    return r;
}

inline Report cmd_game(const Config& c, const json& doc, bool potential) {
    const auto g = io::parse_game(doc);
    const auto gc = classify_game(g);
    const auto opt = potential ? maximize_potential(g, policy(c)) : maximize_welfare(g, policy(c));
    Report r;
    r.body = {{"command", potential ? "game-potential" : "game-welfare"},
              {"game_class", to_string(gc.tag)},
              {"family", to_string(opt.family.tag)},
              {"method", to_string(opt.method)},
              {"exact", opt.exact},
              {"value", io::rational_json(opt.value)},
              {"profile", io::profile_json(opt.profile)}};
    if (!potential) r.body["welfare"] = io::rational_json(social_welfare(g, opt.profile));
    r.dot = profile_dot("game", g.graph(), opt.profile);
    return r;
}

inline Report cmd_threshold(const Config& c, const json& doc) {
    const auto parsed = io::parse_threshold(doc);
    ThresholdNash res;
    const UndirectedGraph* graph = nullptr;
    std::vector<std::string> labels;
    bool nash = false;
    if (const auto* tt = std::get_if<TwoTypeThreshold<UndirectedGraph>>(&parsed)) {
        res = welfare_optimal_nash(*tt, {c.budget, c.restarts, c.seed});
        graph = &tt->graph;
        for (auto t : tt->types) labels.push_back(t == PlayerType::A ? "A" : "B");
        nash = nash_ratio_check(*tt, res.profile);
    } else {
        const auto& tg = std::get<ThresholdGame<UndirectedGraph>>(parsed);
        const std::size_t n = tg.player_count();
        if (n <= c.budget && n <= 62) {
            res = threshold_nash_exhaustive(tg, c.budget);
        } else {
            res = threshold_nash_best_response(tg, c.restarts, c.seed);
            res.warning = "n = " + std::to_string(n) + " exceeds the exact budget " + std::to_string(c.budget) +
                          "; result is a best-response equilibrium, not certified optimal";
        }
        graph = &tg.graph;
        for (const auto& g : tg.gamma) labels.push_back(g.str());
        nash = nash_ratio_check(tg, res.profile);
    }
    Report r;
    r.body = {{"command", "threshold-ne"},
              {"method", to_string(res.method)},
              {"exact", res.exact},
              {"value", io::rational_json(res.welfare)},
              {"profile", io::profile_json(res.profile)},
              {"nash", nash}};
    if (res.audit) {
        const auto& a = *res.audit;
        r.body["audit"] = {{"twice_edges", a.twice_edges},
                           {"cross_edges", a.cross_edges},
                           {"cut", io::rational_json(a.cut)},
                           {"line", "wel = 2|E|-|E(A,B)|-cut: " + res.welfare.str() + " = " +
                                        std::to_string(a.twice_edges) + " - " + std::to_string(a.cross_edges) +
                                        " - " + a.cut.str()}};
    }
    if (!res.warning.empty()) r.body["warning"] = res.warning;
    r.dot = graph_dot(
        "threshold", *graph,
        [&](Vertex v) {
            return std::to_string(v) + " " + labels[v] + (res.profile[v] == Action::one ? " one" : " two");
        },
        [&](Vertex v) { return res.profile[v] == Action::two; });
    return r;
}

inline EncodingKind parse_problem(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(EncodingKind::TwoColorDifference); ++i) {
        const auto k = static_cast<EncodingKind>(i);
        if (name == to_string(k)) return k;
    }
    throw UsageError("unknown --problem '" + name + "'");
}

inline EncodedProblem build_encoding(const Config& c, const json& doc) {
    const EncodingKind kind = parse_problem(c.problem);
    auto terminals = [&] {
        if (!c.s || !c.t) throw UsageError(std::string(to_string(kind)) + " needs --s and --t");
        return std::pair{*c.s, *c.t};
    };
    switch (kind) {
        case EncodingKind::MaxCut: return encode_max_cut(io::parse_graph(doc));
        case EncodingKind::DirectedMaxCut: return encode_directed_max_cut(io::parse_digraph(doc));
        case EncodingKind::EulerianCloseness: return encode_eulerian_closeness(io::parse_digraph(doc));
        case EncodingKind::MinStCut: {
            const auto d = io::parse_digraph(doc);
            const auto [s, t] = terminals();
            return io::validated("--s", [&] { return encode_min_st_cut(d, s, t); });
        }
        case EncodingKind::UndirectedMinStCut: {
            const auto g = io::parse_graph(doc);
            const auto [s, t] = terminals();
            return io::validated("--s", [&] { return encode_min_st_cut(g, s, t); });
        }
        case EncodingKind::TwoColorPartition: return encode_two_color_partition(io::parse_colored_graph(doc));
        case EncodingKind::MaxAvgDegree: {
            if (c.k.empty()) throw UsageError("max-avg-degree needs --k");
            const Rational k = option_rational(c.k, "--k");
            const auto g = io::parse_graph(doc);
            return io::validated("--k", [&] { return encode_max_avg_degree_decision(g, k); });
        }
        case EncodingKind::TwoColorDifference: return encode_two_color_difference(io::parse_colored_graph(doc));
    }
    throw UsageError("unknown problem");
}

inline Report cmd_encode(const Config& c, const json& doc) {
    const auto ep = build_encoding(c, doc);
    Report r;
    if (c.emit_instance) {
        r.body = io::mwdp_json(ep.instance);
        return r;
    }
    const auto out = solve(ep.instance, policy(c));
    const auto d = decode(ep, out);
    r.body = {{"command", "encode"},
              {"problem", to_string(ep.kind)},
              {"family", to_string(classify_family(ep.instance).tag)},
              {"method", to_string(out.method)},
              {"exact", out.exact},
              {"value", io::rational_json(d.value)},
              {"mwdp_value", io::rational_json(out.value)},
              {"partition", io::partition_json(d.partition)}};
    if (ep.kind == EncodingKind::MaxAvgDegree) {
        r.body["found"] = d.found;
        r.body["k"] = io::rational_json(ep.k);
    }
    if (ep.kind == EncodingKind::MaxAvgDegree || ep.kind == EncodingKind::TwoColorDifference)
        r.body["chosen"] = d.chosen;
    if (!out.exact) r.body["warning"] = "heuristic result beyond the exact budget; optimality not certified";
    r.dot = mwdp_dot(ep.instance, out.partition);
    return r;
}

inline Report cmd_density(const Config&, const json& doc) {
    const auto g = io::parse_graph(doc);
    const auto res = io::validated("n", [&] { return max_density_subgraph(g); });
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : res.subset) in[v] = true;
    Partition p(g.vertex_count());
    for (Vertex v : res.subset) p[v] = Side::X2;
    Report r;
    r.body = {{"command", "density"},
              {"method", "MinCutBisection"},
              {"exact", true},
              {"value", io::rational_json(res.density)},
              {"subset", res.subset},
              {"partition", io::partition_json(p)}};
    r.dot = graph_dot(
        "density", g, [](Vertex v) { return std::to_string(v); }, [&](Vertex v) { return bool(in[v]); });
    return r;
}

inline Report cmd_gadget(const Config& c, const json& doc) {
    const auto h = io::parse_hypergraph(doc);
    const Rational ga = option_rational(c.gamma_a, "--gamma-a");
    const Rational gb = option_rational(c.gamma_b, "--gamma-b");
    const auto g = build_hitting_set_gadget(h, ga, gb);
    const auto check = check_gadget_constants(h, ga, gb, g.constants);
    const auto traversal = minimum_traversal(h, c.budget);
    const auto s = g_extension(g, traversal);
    const Rational w = threshold_welfare(g.game, s);
    const auto& k = g.constants;
    Report r;
    r.body = {{"command", "gadget"},
              {"gamma_A", io::rational_json(ga)},
              {"gamma_B", io::rational_json(gb)},
              {"constants",
               {{"theta", k.theta}, {"x_B", k.x_B}, {"x_A", k.x_A}, {"c_A", k.c_A}, {"c_B", k.c_B}, {"z", k.z}}},
              {"checks", {{"a", check.a}, {"b", check.b}, {"c", check.c}, {"d", check.d}, {"e", check.e}, {"f", check.f}}},
              {"vertices", g.game.player_count()},
              {"edges", g.game.graph.edge_count()},
              {"method", "GExtension"},
              {"exact", true},
              {"traversal", traversal},
              {"nash", nash_ratio_check(g.game, s)},
              {"value", io::rational_json(w)},
              {"w_star", io::rational_json(gadget_w_star(g))},
              {"recovered_size", traversal_from_welfare(g, w)}};
    return r;
}

inline Report dispatch(const Config& c, const json& doc) {
    if (c.command == "solve") return cmd_solve(c, doc);
    if (c.command == "classify") return cmd_classify(c, doc);
    if (c.command == "game-welfare") return cmd_game(c, doc, false);
    if (c.command == "game-potential") return cmd_game(c, doc, true);
    if (c.command == "threshold-ne") return cmd_threshold(c, doc);
    if (c.command == "encode") return cmd_encode(c, doc);
    if (c.command == "density") return cmd_density(c, doc);
    if (c.command == "gadget") return cmd_gadget(c, doc);
    throw UsageError("unknown command '" + c.command + "'");
}

inline std::string render(const Config& c, Report r) {
    if (c.format == "dot") {
        if (c.emit_instance) throw UsageError("--emit-instance writes JSON only");
        if (r.dot.empty()) throw UsageError("no dot rendering for '" + c.command + "'");
        return r.dot;
    }
    if (!c.emit_instance) {
        r.body["seed"] = c.seed;
        r.body["format_version"] = kFormatVersion;
    }
    if (c.format == "text") {
        std::ostringstream os;
        render_text(r.body, "", os);
        return os.str();
    }
    return r.body.dump(2) + "\n";
}

inline void emit(const Config& c, const std::string& text, std::ostream& out) {
    if (c.output.empty() || c.output == "-") {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + c.output + "' for writing");
    f << text;
    f.flush();
    if (!f) throw IoError("cannot write '" + c.output + "'");
}

inline std::size_t budget_from_env(std::size_t fallback) {
    const char* env = std::getenv("COORDCUT_BUDGET");
    if (env == nullptr || *env == '\0') return fallback;
    std::size_t value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        throw UsageError("COORDCUT_BUDGET must be a positive integer, got '" + std::string(text) + "'");
    return value;
}

}  // namespace detail

/// Parses arguments, runs one subcommand and writes the report. Returns the
/// process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Exact solver for weighted digraph partition problems and their game front ends", "coordcut"};
    app.set_version_flag("--version", std::string("coordcut ") + kLibraryVersion + " (format " +
                                          std::to_string(kFormatVersion) + ")");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "text", "dot"}));
    auto* budget_opt =
        app.add_option("--budget", c.budget, "Largest vertex count solved exhaustively")->check(CLI::PositiveNumber);
    app.add_option("--restarts", c.restarts, "Random restarts for heuristic fallbacks");
    app.add_option("--seed", c.seed, "Seed for every random choice");
    app.add_option("--threads", c.threads, "Worker threads for exhaustive scans")->check(CLI::Range(1U, 256U));
    app.add_option("-o,--output", c.output, "Write the report here instead of stdout");

    auto add = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", c.input, "Instance file, or - for stdin")->required();
        return sub;
    };
    add("solve", "Solve an MWDP instance");
    add("classify", "Classify an MWDP instance against properties (a), (b), (c)");
    add("game-welfare", "Maximize social welfare of a polymatrix game");
    add("game-potential", "Maximize the pairwise potential of a polymatrix game");
    add("threshold-ne", "Welfare-optimal pure equilibrium of a threshold game");
    auto* enc = add("encode", "Solve a graph problem through its MWDP encoding");
    enc->add_option("--problem", c.problem, "Source problem")->required();
    enc->add_option("--s", c.s, "Source terminal");
    enc->add_option("--t", c.t, "Sink terminal");
    enc->add_option("--k", c.k, "Average-degree threshold, integer or p/q");
    enc->add_flag("--emit-instance", c.emit_instance, "Print the encoded MWDP instance instead of solving");
    add("density", "Densest subgraph by bisection over min cuts");
    auto* gad = add("gadget", "Build and audit the hitting-set threshold gadget");
    gad->add_option("--gamma-a", c.gamma_a, "Threshold of type A players");
    gad->add_option("--gamma-b", c.gamma_b, "Threshold of type B players");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    c.command = app.get_subcommands().front()->get_name();

    try {
        if (budget_opt->count() == 0) c.budget = detail::budget_from_env(c.budget);
        const json doc = detail::parse_document(detail::read_input(c.input), c.input);
        detail::emit(c, detail::render(c, detail::dispatch(c, doc)), out);
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const InvalidInput& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << '\n';
        return kSolver;
    } catch (const RationalOverflow& e) {
        err << "solver error: arithmetic overflow: " << e.what() << '\n';
        return kSolver;
    }
}

}  // namespace coordcut::cli
