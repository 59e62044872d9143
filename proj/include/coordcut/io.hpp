#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "coordcut/encodings.hpp"
#include "coordcut/gadget.hpp"
#include "coordcut/polymatrix.hpp"
#include "coordcut/threshold.hpp"

namespace coordcut::io {

using nlohmann::json;

/// Malformed input document; `field()` is the JSON path of the offending value.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string field, const std::string& why)
        : std::runtime_error("field '" + field + "': " + why), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

namespace detail {

inline const json& require(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

inline std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
inline std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline std::size_t parse_index(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ParseError(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

/// Vertex counts beyond this are rejected before anything is allocated.
inline constexpr std::size_t kMaxVertices = std::size_t{1} << 24;

inline std::size_t parse_count(const json& j, const std::string& path) {
    const std::size_t n = parse_index(j, path);
    if (n > kMaxVertices) throw ParseError(path, "more than " + std::to_string(kMaxVertices) + " vertices");
    return n;
}

inline const json& require_array(const json& j, const std::string& path, std::size_t size = 0) {
    if (!j.is_array()) throw ParseError(path, "expected an array");
    if (size != 0 && j.size() != size) throw ParseError(path, "expected " + std::to_string(size) + " entries");
    return j;
}

}  // namespace detail

inline Rational parse_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(path, e.what());
        }
    }
    throw ParseError(path, "expected an integer or a \"p/q\" string");
}

inline json rational_json(const Rational& r) {
    if (r.is_integer()) return r.num();
    return r.str();
}

inline Matrix2 parse_matrix(const json& j, const std::string& path) {
    detail::require_array(j, path, 2);
    Rational m[2][2];
    for (std::size_t r = 0; r < 2; ++r) {
        detail::require_array(j[r], detail::idx(path, r), 2);
        for (std::size_t c = 0; c < 2; ++c) m[r][c] = parse_rational(j[r][c], detail::idx(detail::idx(path, r), c));
    }
    return {m[0][0], m[0][1], m[1][0], m[1][1]};
}

inline json matrix_json(const Matrix2& m) {
    return json::array({json::array({rational_json(m.m11), rational_json(m.m12)}),
                        json::array({rational_json(m.m21), rational_json(m.m22)})});
}

/// Wraps constructor validation so every rejection surfaces as a ParseError.
template <typename F>
auto validated(const std::string& path, F&& build) {
    try {
        return build();
    } catch (const InvalidInput& e) {
        throw ParseError(path, e.what());
    }
}

inline MwdpInstance parse_mwdp(const json& j) {
    const std::size_t n = detail::parse_count(detail::require(j, "n", ""), "n");
    const json& arcs = detail::require_array(detail::require(j, "arcs", ""), "arcs");
    std::vector<MwdpArc> out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const std::string p = detail::idx("arcs", i);
        MwdpArc a;
        a.tail = detail::parse_index(detail::require(arcs[i], "tail", p), detail::sub(p, "tail"));
        a.head = detail::parse_index(detail::require(arcs[i], "head", p), detail::sub(p, "head"));
        a.c = arcs[i].contains("c") ? parse_rational(arcs[i]["c"], detail::sub(p, "c")) : Rational(1);
        a.m = parse_matrix(detail::require(arcs[i], "m", p), detail::sub(p, "m"));
        out.push_back(a);
    }
    return validated("arcs", [&] { return MwdpInstance(n, std::move(out)); });
}

inline json mwdp_json(const MwdpInstance& inst) {
    json arcs = json::array();
    for (const auto& a : inst.arcs())
        arcs.push_back({{"tail", a.tail}, {"head", a.head}, {"c", rational_json(a.c)}, {"m", matrix_json(a.m)}});
    return {{"n", inst.vertex_count()}, {"arcs", arcs}};
}

inline PolymatrixGame parse_game(const json& j) {
    const std::size_t n = detail::parse_count(detail::require(j, "n", ""), "n");
    const json& edges = detail::require_array(detail::require(j, "edges", ""), "edges");
    std::vector<GameEdge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string p = detail::idx("edges", i);
        GameEdge e;
        e.u = detail::parse_index(detail::require(edges[i], "u", p), detail::sub(p, "u"));
        e.v = detail::parse_index(detail::require(edges[i], "v", p), detail::sub(p, "v"));
        e.game.pi_uv = parse_matrix(detail::require(edges[i], "pi_uv", p), detail::sub(p, "pi_uv"));
        e.game.pi_vu = parse_matrix(detail::require(edges[i], "pi_vu", p), detail::sub(p, "pi_vu"));
        out.push_back(e);
    }
    return validated("edges", [&] { return PolymatrixGame(n, std::move(out)); });
}

/// Plain graph: {"n": int, "edges": [[u, v], ...]}.
inline UndirectedGraph parse_graph(const json& j) {
    const std::size_t n = detail::parse_count(detail::require(j, "n", ""), "n");
    const json& edges = detail::require_array(detail::require(j, "edges", ""), "edges");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string p = detail::idx("edges", i);
        detail::require_array(edges[i], p, 2);
        out.push_back({detail::parse_index(edges[i][0], detail::idx(p, 0)),
                       detail::parse_index(edges[i][1], detail::idx(p, 1)), 1});
    }
    return validated("edges", [&] { return UndirectedGraph(n, std::move(out)); });
}

/// Plain digraph: {"n": int, "arcs": [[tail, head], ...]}.
inline OrientedDigraph parse_digraph(const json& j) {
    const std::size_t n = detail::parse_count(detail::require(j, "n", ""), "n");
    const json& arcs = detail::require_array(detail::require(j, "arcs", ""), "arcs");
    std::vector<Arc> out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const std::string p = detail::idx("arcs", i);
        detail::require_array(arcs[i], p, 2);
        out.push_back({detail::parse_index(arcs[i][0], detail::idx(p, 0)),
                       detail::parse_index(arcs[i][1], detail::idx(p, 1))});
    }
    return validated("arcs", [&] { return OrientedDigraph(n, std::move(out)); });
}

inline ColoredGraph parse_colored_graph(const json& j) {
    const std::size_t n = detail::parse_count(detail::require(j, "n", ""), "n");
    const json& edges = detail::require_array(detail::require(j, "edges", ""), "edges");
    std::vector<ColoredEdge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string p = detail::idx("edges", i);
        ColoredEdge e;
        e.u = detail::parse_index(detail::require(edges[i], "u", p), detail::sub(p, "u"));
        e.v = detail::parse_index(detail::require(edges[i], "v", p), detail::sub(p, "v"));
        const json& color = detail::require(edges[i], "color", p);
        if (!color.is_number_integer() || (color.get<int>() != 1 && color.get<int>() != 2))
            throw ParseError(detail::sub(p, "color"), "expected 1 or 2");
        e.color = color.get<int>();
        e.w = edges[i].contains("w") ? parse_rational(edges[i]["w"], detail::sub(p, "w")) : Rational(1);
        out.push_back(e);
    }
    return validated("edges", [&] { return ColoredGraph(n, std::move(out)); });
}

using AnyThreshold = std::variant<ThresholdGame<UndirectedGraph>, TwoTypeThreshold<UndirectedGraph>>;

/// Either per-player thresholds ("gamma") or the two-type shorthand
/// ("types", "gamma_A", "gamma_B").
inline AnyThreshold parse_threshold(const json& j) {
    UndirectedGraph g = parse_graph(j);
    if (j.contains("types")) {
        const json& t = j["types"];
        if (!t.is_string()) throw ParseError("types", "expected a string over {A, B}");
        const auto s = t.get<std::string>();
        if (s.size() != g.vertex_count()) throw ParseError("types", "expected one letter per player");
        std::vector<PlayerType> types;
        for (char c : s) {
            if (c != 'A' && c != 'B') throw ParseError("types", "unexpected letter '" + std::string(1, c) + "'");
            types.push_back(c == 'A' ? PlayerType::A : PlayerType::B);
        }
        const Rational ga = parse_rational(detail::require(j, "gamma_A", ""), "gamma_A");
        const Rational gb = parse_rational(detail::require(j, "gamma_B", ""), "gamma_B");
        return validated("gamma_A", [&] {
            return AnyThreshold(TwoTypeThreshold<UndirectedGraph>(std::move(g), std::move(types), ga, gb));
        });
    }
    const json& gam = detail::require_array(detail::require(j, "gamma", ""), "gamma");
    std::vector<Rational> gamma;
    for (std::size_t i = 0; i < gam.size(); ++i) gamma.push_back(parse_rational(gam[i], detail::idx("gamma", i)));
    return validated("gamma", [&] { return AnyThreshold(ThresholdGame<UndirectedGraph>(std::move(g), std::move(gamma))); });
}

inline Hypergraph3 parse_hypergraph(const json& j) {
    const std::size_t n = detail::parse_count(detail::require(j, "n", ""), "n");
    const json& edges = detail::require_array(detail::require(j, "hyperedges", ""), "hyperedges");
    std::vector<std::array<Vertex, 3>> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string p = detail::idx("hyperedges", i);
        detail::require_array(edges[i], p, 3);
        std::array<Vertex, 3> e{};
        for (std::size_t k = 0; k < 3; ++k) e[k] = detail::parse_index(edges[i][k], detail::idx(p, k));
        out.push_back(e);
    }
    return validated("hyperedges", [&] { return Hypergraph3(n, std::move(out)); });
}

inline json partition_json(const Partition& p) {
    json out = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p[i] == Side::X1 ? 1 : 2);
    return out;
}

inline json profile_json(const StrategyProfile& s) {
    json out = json::array();
    for (Action a : s) out.push_back(a == Action::one ? "one" : "two");
    return out;
}

}  // namespace coordcut::io
