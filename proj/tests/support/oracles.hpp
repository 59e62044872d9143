#pragma once

// Brute-force reference implementations. They only use the library's data
// types and evaluate every objective straight from its definition, so they
// share no solver code with what they check.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "coordcut/coordcut.hpp"

namespace oracle {

using namespace coordcut;

inline bool bit(std::uint64_t mask, std::size_t i) { return (mask >> i) & 1U; }

/// Side of vertex i under mask (bit set = X2).
inline std::size_t side_index(std::uint64_t mask, std::size_t i) { return bit(mask, i) ? 1 : 0; }

inline Rational entry(const Matrix2& m, std::size_t r, std::size_t c) {
    if (r == 0) return c == 0 ? m.m11 : m.m12;
    return c == 0 ? m.m21 : m.m22;
}

inline Rational mwdp_value(const MwdpInstance& inst, std::uint64_t mask) {
    Rational total;
    for (const auto& a : inst.arcs()) total += a.c * entry(a.m, side_index(mask, a.tail), side_index(mask, a.head));
    return total;
}

/// Largest value over all 2^n partitions.
inline Rational mwdp_max(const MwdpInstance& inst) {
    Rational best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.vertex_count()); ++mask) {
        const Rational v = mwdp_value(inst, mask);
        if (mask == 0 || v > best) best = v;
    }
    return best;
}

/// Payoff of player i, summed edge by edge from the raw bimatrices.
inline Rational payoff(const PolymatrixGame& g, std::uint64_t mask, Vertex i) {
    Rational total;
    for (const auto& e : g.edges()) {
        if (e.u == i) total += entry(e.game.pi_uv, side_index(mask, e.u), side_index(mask, e.v));
        if (e.v == i) total += entry(e.game.pi_vu, side_index(mask, e.v), side_index(mask, e.u));
    }
    return total;
}

inline Rational welfare(const PolymatrixGame& g, std::uint64_t mask) {
    Rational total;
    for (Vertex i = 0; i < g.player_count(); ++i) total += payoff(g, mask, i);
    return total;
}

inline bool is_nash(const PolymatrixGame& g, std::uint64_t mask) {
    for (Vertex i = 0; i < g.player_count(); ++i)
        if (payoff(g, mask ^ (std::uint64_t{1} << i), i) > payoff(g, mask, i)) return false;
    return true;
}

/// Threshold-game payoff from the definition: gamma per neighbor on `one`,
/// 1 - gamma per neighbor on `two`.
inline Rational threshold_payoff(const UndirectedGraph& g, const std::vector<Rational>& gamma, std::uint64_t mask,
                                 Vertex u) {
    Rational total;
    for (const auto& inc : g.incident(u)) {
        if (bit(mask, u) != bit(mask, inc.neighbor)) continue;
        total += bit(mask, u) ? Rational(1) - gamma[u] : gamma[u];
    }
    return total;
}

inline Rational threshold_welfare(const UndirectedGraph& g, const std::vector<Rational>& gamma, std::uint64_t mask) {
    Rational total;
    for (Vertex u = 0; u < g.vertex_count(); ++u) total += threshold_payoff(g, gamma, mask, u);
    return total;
}

inline bool threshold_is_nash(const UndirectedGraph& g, const std::vector<Rational>& gamma, std::uint64_t mask) {
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (threshold_payoff(g, gamma, mask ^ (std::uint64_t{1} << u), u) > threshold_payoff(g, gamma, mask, u))
            return false;
    return true;
}

/// Welfare of the best pure equilibrium; all-one is always an equilibrium so
/// the result exists.
inline Rational threshold_best_nash_welfare(const UndirectedGraph& g, const std::vector<Rational>& gamma) {
    std::optional<Rational> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
        if (!threshold_is_nash(g, gamma, mask)) continue;
        const Rational w = threshold_welfare(g, gamma, mask);
        if (!best || w > *best) best = w;
    }
    return *best;
}

inline std::int64_t max_cut(const UndirectedGraph& g) {
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
        std::int64_t cut = 0;
        for (const auto& e : g.edges()) cut += bit(mask, e.u) != bit(mask, e.v);
        best = std::max(best, cut);
    }
    return best;
}

/// max over S of #arcs leaving S (S = mask complement is irrelevant: S is the set of cleared bits).
inline std::int64_t directed_max_cut(const OrientedDigraph& d) {
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.vertex_count()); ++mask) {
        std::int64_t cut = 0;
        for (const auto& a : d.arcs()) cut += !bit(mask, a.tail) && bit(mask, a.head);
        best = std::max(best, cut);
    }
    return best;
}

/// max over S of (arcs leaving S) - (arcs entering S).
inline std::int64_t eulerian_closeness(const OrientedDigraph& d) {
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.vertex_count()); ++mask) {
        std::int64_t diff = 0;
        for (const auto& a : d.arcs()) {
            if (!bit(mask, a.tail) && bit(mask, a.head)) ++diff;
            if (bit(mask, a.tail) && !bit(mask, a.head)) --diff;
        }
        best = std::max(best, diff);
    }
    return best;
}

/// Minimum number of arcs (or edges, if undirected) from S to its complement
/// over all S containing s but not t.
inline std::int64_t min_st_cut(std::size_t n, const std::vector<Arc>& arcs, Vertex s, Vertex t, bool undirected) {
    std::int64_t best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (bit(mask, s) || !bit(mask, t)) continue;
        std::int64_t cut = 0;
        for (const auto& a : arcs) {
            cut += !bit(mask, a.tail) && bit(mask, a.head);
            if (undirected) cut += bit(mask, a.tail) && !bit(mask, a.head);
        }
        if (best < 0 || cut < best) best = cut;
    }
    return best;
}

/// max over X of (color-1 edges inside X) + (color-2 edges outside X).
inline std::int64_t two_color_partition(const ColoredGraph& g) {
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
        std::int64_t v = 0;
        for (const auto& e : g.edges()) {
            if (e.color == 1 && !bit(mask, e.u) && !bit(mask, e.v)) ++v;
            if (e.color == 2 && bit(mask, e.u) && bit(mask, e.v)) ++v;
        }
        best = std::max(best, v);
    }
    return best;
}

inline Rational two_color_difference(const ColoredGraph& g) {
    Rational best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
        Rational v;
        for (const auto& e : g.edges())
            if (bit(mask, e.u) && bit(mask, e.v)) v += e.color == 2 ? e.w : -e.w;
        best = max(best, v);
    }
    return best;
}

inline std::int64_t edges_inside(const UndirectedGraph& g, std::uint64_t mask) {
    std::int64_t inside = 0;
    for (const auto& e : g.edges()) inside += bit(mask, e.u) && bit(mask, e.v);
    return inside;
}

/// Does some nonempty W have 2 e(W) > k |W|?
inline bool has_avg_degree_above(const UndirectedGraph& g, const Rational& k) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.vertex_count()); ++mask)
        if (Rational(2 * edges_inside(g, mask)) > k * std::popcount(mask)) return true;
    return false;
}

inline Rational max_density(const UndirectedGraph& g) {
    Rational best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.vertex_count()); ++mask)
        best = max(best, Rational(edges_inside(g, mask), std::popcount(mask)));
    return best;
}

inline std::size_t min_hitting_set(const Hypergraph3& h) {
    std::size_t best = h.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.vertex_count()); ++mask) {
        bool ok = true;
        for (const auto& e : h.edges()) ok = ok && (bit(mask, e[0]) || bit(mask, e[1]) || bit(mask, e[2]));
        if (ok) best = std::min<std::size_t>(best, std::popcount(mask));
    }
    return best;
}

// ---------------------------------------------------------------------------
// random instances

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

    /// Rational in [lo, hi] with denominator in {1, 2, 3, 4}.
    Rational rational(std::int64_t lo, std::int64_t hi) {
        const std::int64_t den = integer(1, 4);
        return Rational(integer(lo * den, hi * den), den);
    }

    Matrix2 matrix(std::int64_t lo = -10, std::int64_t hi = 10) {
        return {rational(lo, hi), rational(lo, hi), rational(lo, hi), rational(lo, hi)};
    }

    /// Random oriented simple digraph: every unordered pair becomes an arc
    /// with probability p, in a random direction.
    std::vector<Arc> arcs(std::size_t n, double p) {
        std::vector<Arc> out;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(p)) out.push_back(coin() ? Arc{u, v} : Arc{v, u});
        return out;
    }

    UndirectedGraph graph(std::size_t n, double p) {
        std::vector<Edge> edges;
        for (const auto& a : arcs(n, p)) edges.push_back({a.tail, a.head, 1});
        return UndirectedGraph(n, std::move(edges));
    }

    /// Instance where every matrix is drawn until it satisfies `keep`.
    template <typename Keep>
    MwdpInstance instance(std::size_t n, double p, Keep keep) {
        std::vector<MwdpArc> out;
        for (const auto& a : arcs(n, p)) {
            Matrix2 m = matrix();
            while (!keep(m)) m = matrix();
            out.push_back({a.tail, a.head, rational(1, 3), m});
        }
        return MwdpInstance(n, std::move(out));
    }
};

/// Matrix with property (a), obtained by raising the diagonal when needed.
inline Matrix2 force_property_a(Matrix2 m) {
    const Rational gap = m.m12 + m.m21 - m.m11 - m.m22;
    if (gap.sign() > 0) m.m22 += gap;
    return m;
}

}  // namespace oracle
