#pragma once

#include <optional>
#include <vector>

#include "coordcut/solvers.hpp"

namespace coordcut {

enum class EncodingKind {
    MaxCut,
    DirectedMaxCut,
    EulerianCloseness,
    MinStCut,
    UndirectedMinStCut,
    TwoColorPartition,
    MaxAvgDegree,
    TwoColorDifference,
};

inline const char* to_string(EncodingKind k) {
    switch (k) {
        case EncodingKind::MaxCut: return "max-cut";
        case EncodingKind::DirectedMaxCut: return "directed-max-cut";
        case EncodingKind::EulerianCloseness: return "eulerian-closeness";
        case EncodingKind::MinStCut: return "min-st-cut";
        case EncodingKind::UndirectedMinStCut: return "undirected-min-st-cut";
        case EncodingKind::TwoColorPartition: return "two-color-partition";
        case EncodingKind::MaxAvgDegree: return "max-avg-degree";
        case EncodingKind::TwoColorDifference: return "two-color-difference";
    }
    return "?";
}

struct ColoredEdge {
    Vertex u = 0;
    Vertex v = 0;
    int color = 1;  ///< 1 or 2
    Rational w = 1;
};

/// Simple undirected graph whose edges carry a color in {1, 2} and a positive weight.
class ColoredGraph {
public:
    ColoredGraph() = default;
    ColoredGraph(std::size_t n, std::vector<ColoredEdge> edges) : n_(n), edges_(std::move(edges)) {
        std::vector<Edge> plain;
        for (const auto& e : edges_) {
            if (e.color != 1 && e.color != 2) throw InvalidInput("edge color must be 1 or 2");
            if (e.w.sign() <= 0) throw InvalidInput("edge weight must be positive, got " + e.w.str());
            plain.push_back({e.u, e.v, e.w});
        }
        UndirectedGraph check(n_, std::move(plain));
    }

    std::size_t vertex_count() const { return n_; }
    const std::vector<ColoredEdge>& edges() const { return edges_; }

private:
    std::size_t n_ = 0;
    std::vector<ColoredEdge> edges_;
};

/// An MWDP instance built from a source problem plus what the decoder needs.
struct EncodedProblem {
    EncodingKind kind = EncodingKind::MaxCut;
    MwdpInstance instance;
    std::size_t source_n = 0;       ///< vertices 0..source_n-1 are the source problem's vertices
    std::size_t source_arcs = 0;    ///< |A| or |E| of the source
    Rational k;                     ///< decision threshold for MaxAvgDegree
    Vertex s = 0, t = 0;            ///< terminals for the min-cut encodings
    std::vector<Arc> source_digraph;  ///< arcs of the source, for decoders that recount
};

struct Decoded {
    Partition partition;          ///< restricted to the source vertices
    Rational value;               ///< objective of the source problem
    std::vector<Vertex> chosen;   ///< set answer (MaxAvgDegree: W; TwoColorDifference: X)
    bool found = true;            ///< MaxAvgDegree: whether a qualifying W exists
};

namespace detail {

inline EncodedProblem make_encoded(EncodingKind kind, std::size_t n, std::vector<MwdpArc> arcs, std::size_t m) {
    EncodedProblem ep;
    ep.kind = kind;
    ep.instance = MwdpInstance(n, std::move(arcs));
    ep.source_n = n;
    ep.source_arcs = m;
    return ep;
}

}  // namespace detail

/// Every edge, in an arbitrary orientation, gets [[0,1],[1,0]]: value = cut size.
inline EncodedProblem encode_max_cut(const UndirectedGraph& g) {
    std::vector<MwdpArc> arcs;
    for (const auto& e : g.edges()) arcs.push_back({e.u, e.v, 1, {0, 1, 1, 0}});
    return detail::make_encoded(EncodingKind::MaxCut, g.vertex_count(), std::move(arcs), g.edge_count());
}

/// [[0,1],[0,0]] on every arc: value = number of arcs from X1 to X2.
inline EncodedProblem encode_directed_max_cut(const OrientedDigraph& d) {
    std::vector<MwdpArc> arcs;
    for (const auto& a : d.arcs()) arcs.push_back({a.tail, a.head, 1, {0, 1, 0, 0}});
    return detail::make_encoded(EncodingKind::DirectedMaxCut, d.vertex_count(), std::move(arcs), d.arc_count());
}

/// [[1,2],[0,1]] on every arc; value - |A| = (arcs X1->X2) - (arcs X2->X1).
inline EncodedProblem encode_eulerian_closeness(const OrientedDigraph& d) {
    std::vector<MwdpArc> arcs;
    for (const auto& a : d.arcs()) arcs.push_back({a.tail, a.head, 1, {1, 2, 0, 1}});
    return detail::make_encoded(EncodingKind::EulerianCloseness, d.vertex_count(), std::move(arcs), d.arc_count());
}

namespace detail {

/// Shared min-cut encoding: arc matrix `m`, plus s'->s rewarding s in X1 and
/// t->t' rewarding t in X2, both scaled by the arc count.
inline EncodedProblem encode_st(EncodingKind kind, std::size_t n, const std::vector<Arc>& source, Vertex s, Vertex t,
                                const Matrix2& m) {
    check_vertex(s, n, "s");
    check_vertex(t, n, "t");
    if (s == t) throw InvalidInput("s and t must differ");
    const auto big = static_cast<std::int64_t>(source.size());
    const Vertex s_pad = n, t_pad = n + 1;
    std::vector<MwdpArc> arcs;
    for (const auto& a : source) arcs.push_back({a.tail, a.head, 1, m});
    arcs.push_back({s_pad, s, 1, {big, 0, 0, 0}});
    arcs.push_back({t, t_pad, 1, {0, 0, 0, big}});
    EncodedProblem ep = make_encoded(kind, n + 2, std::move(arcs), source.size());
    ep.source_n = n;
    ep.s = s;
    ep.t = t;
    ep.source_digraph = source;
    return ep;
}

}  // namespace detail

/// M = [[1,0],[1,1]] on arcs: optimum = 3|A| - (minimum s-t cut).
inline EncodedProblem encode_min_st_cut(const OrientedDigraph& d, Vertex s, Vertex t) {
    return detail::encode_st(EncodingKind::MinStCut, d.vertex_count(), d.arcs(), s, t, {1, 0, 1, 1});
}

/// M = [[1,0],[0,1]] on edges: optimum = 3|E| - (minimum s-t cut).
inline EncodedProblem encode_min_st_cut(const UndirectedGraph& g, Vertex s, Vertex t) {
    std::vector<Arc> arcs;
    for (const auto& e : g.edges()) arcs.push_back({e.u, e.v});
    return detail::encode_st(EncodingKind::UndirectedMinStCut, g.vertex_count(), arcs, s, t, {1, 0, 0, 1});
}

/// Color-1 edges get [[1,0],[0,0]], color-2 edges [[0,0],[0,1]]: value =
/// color-1 edges inside X1 plus color-2 edges inside X2. Weights are ignored.
inline EncodedProblem encode_two_color_partition(const ColoredGraph& g) {
    std::vector<MwdpArc> arcs;
    for (const auto& e : g.edges()) {
        const Matrix2 m = e.color == 1 ? Matrix2{1, 0, 0, 0} : Matrix2{0, 0, 0, 1};
        arcs.push_back({e.u, e.v, 1, m});
    }
    return detail::make_encoded(EncodingKind::TwoColorPartition, g.vertex_count(), std::move(arcs),
                                g.edges().size());
}

/// Auxiliary vertex n+u per vertex u with arc u -> n+u carrying [[k,0],[0,0]];
/// original edges carry [[0,0],[0,2]]. With W = V(G) ∩ X2 the value is
/// k|V \ W| + 2e(W), so the optimum exceeds k|V| iff some W has 2e(W) > k|W|.
inline EncodedProblem encode_max_avg_degree_decision(const UndirectedGraph& g, const Rational& k) {
    if (k.sign() < 0) throw InvalidInput("k must be non-negative");
    const std::size_t n = g.vertex_count();
    std::vector<MwdpArc> arcs;
    for (Vertex u = 0; u < n; ++u) arcs.push_back({u, n + u, 1, {k, 0, 0, 0}});
    for (const auto& e : g.edges()) arcs.push_back({e.u, e.v, 1, {0, 0, 0, 2}});
    EncodedProblem ep = detail::make_encoded(EncodingKind::MaxAvgDegree, 2 * n, std::move(arcs), g.edge_count());
    ep.source_n = n;
    ep.k = k;
    return ep;
}

/// Color-2 edges get c = w and [[1,0],[0,0]]; color-1 edges c = w and
/// [[-1,0],[0,0]]. With X = X1 the value is w2(X) - w1(X).
inline EncodedProblem encode_two_color_difference(const ColoredGraph& g) {
    std::vector<MwdpArc> arcs;
    for (const auto& e : g.edges()) {
        const Matrix2 m = e.color == 2 ? Matrix2{1, 0, 0, 0} : Matrix2{-1, 0, 0, 0};
        arcs.push_back({e.u, e.v, e.w, m});
    }
    return detail::make_encoded(EncodingKind::TwoColorDifference, g.vertex_count(), std::move(arcs),
                                g.edges().size());
}

/// The family an encoder's instances belong to; AllA encoders are solved by
/// one min cut, the others go through the exact or heuristic path.
inline bool encoder_is_polynomial(EncodingKind k) {
    switch (k) {
        case EncodingKind::MaxCut:
        case EncodingKind::DirectedMaxCut:
        case EncodingKind::TwoColorDifference: return false;
        default: return true;
    }
}

inline Decoded decode(const EncodedProblem& ep, const SolveOutcome& out) {
    Decoded d;
    Partition p(ep.source_n);
    for (Vertex v = 0; v < ep.source_n; ++v) p[v] = out.partition[v];
    const auto m = static_cast<std::int64_t>(ep.source_arcs);

    switch (ep.kind) {
        case EncodingKind::MaxCut:
        case EncodingKind::DirectedMaxCut:
        case EncodingKind::TwoColorPartition:
            d.value = out.value;
            break;
        case EncodingKind::EulerianCloseness:
            d.value = out.value - m;
            break;
        case EncodingKind::MinStCut:
        case EncodingKind::UndirectedMinStCut: {
            // A maximizer that does not separate s from t only occurs when every
            // s-t cut has size |A|; forcing the terminals onto their sides then
            // yields a minimum cut.
            p[ep.s] = Side::X1;
            p[ep.t] = Side::X2;
            std::int64_t cut = 0;
            for (const auto& a : ep.source_digraph) {
                if (p[a.tail] == Side::X1 && p[a.head] == Side::X2) ++cut;
                if (ep.kind == EncodingKind::UndirectedMinStCut && p[a.tail] == Side::X2 && p[a.head] == Side::X1)
                    ++cut;
            }
            if (out.exact && Rational(3 * m) - out.value != Rational(cut))
                throw std::logic_error("min-cut decoding lost optimality");
            d.value = cut;
            break;
        }
        case EncodingKind::MaxAvgDegree: {
            d.value = out.value;
            d.found = out.value > ep.k * static_cast<std::int64_t>(ep.source_n);
            if (d.found) d.chosen = p.members(Side::X2);
            break;
        }
        case EncodingKind::TwoColorDifference:
            d.value = out.value;
            d.chosen = p.members(Side::X1);
            break;
    }
    d.partition = std::move(p);
    return d;
}

inline Decoded solve_encoded(const EncodedProblem& ep, const SolvePolicy& policy = {}) {
    return decode(ep, solve(ep.instance, policy));
}

struct DensityResult {
    std::vector<Vertex> subset;
    Rational density;
};

/// Densest subgraph (edges / vertices) by bisection over the average-degree
/// decision encoding. Stops once the bracket is narrower than 1/(n(n-1)), the
/// minimum gap between two distinct subgraph densities.
inline DensityResult max_density_subgraph(const UndirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw InvalidInput("density needs at least one vertex");
    DensityResult best{{0}, 0};
    if (g.edge_count() == 0) return best;

    const auto nn = static_cast<std::int64_t>(n);
    const Rational gap(1, nn * (nn - 1));
    Rational lo = 0;                         // achieved
    Rational hi = Rational(nn - 1, 2);       // no subgraph is denser
    // any edge gives density 1/2
    best = {{g.edges().front().u, g.edges().front().v}, Rational(1, 2)};
    std::sort(best.subset.begin(), best.subset.end());
    lo = best.density;

    while (hi - lo >= gap) {
        const Rational mid = (lo + hi) / 2;
        const Decoded d = solve_encoded(encode_max_avg_degree_decision(g, 2 * mid));
        if (!d.found) {
            hi = mid;
            continue;
        }
        std::vector<bool> in(n, false);
        for (Vertex v : d.chosen) in[v] = true;
        std::int64_t inside = 0;
        for (const auto& e : g.edges()) inside += in[e.u] && in[e.v];
        const Rational density(inside, static_cast<std::int64_t>(d.chosen.size()));
        best = {d.chosen, density};
        lo = density;
    }
    return best;
}

}  // namespace coordcut
