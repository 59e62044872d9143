#pragma once

// Random game families shared by the polymatrix tests and the acceptance run.

#include <algorithm>
#include <array>
#include <set>

#include "support/oracles.hpp"

namespace oracle {

inline EdgeGame random_edge_game(Gen& gen) { return {gen.matrix(-5, 5), gen.matrix(-5, 5)}; }

inline bool pure_coordination(const EdgeGame& g) {
    const auto& u = g.pi_uv;
    const auto& v = g.pi_vu;
    return u.m11 >= u.m21 && u.m22 >= u.m12 && v.m11 >= v.m21 && v.m22 >= v.m12;
}

inline bool anti_coordination(const EdgeGame& g) {
    const auto& u = g.pi_uv;
    const auto& v = g.pi_vu;
    return u.m12 >= u.m22 && u.m21 >= u.m11 && v.m12 >= v.m22 && v.m21 >= v.m11;
}

template <typename Keep>
EdgeGame edge_game_where(Gen& gen, Keep keep) {
    EdgeGame g = random_edge_game(gen);
    while (!keep(g)) g = random_edge_game(gen);
    return g;
}

template <typename MakeEdge>
PolymatrixGame random_game(Gen& gen, std::size_t n, double p, MakeEdge make) {
    std::vector<GameEdge> edges;
    for (const auto& a : gen.arcs(n, p)) edges.push_back({a.tail, a.head, make()});
    return PolymatrixGame(n, std::move(edges));
}

/// Pure-coordination game with a pairwise potential: a random potential with
/// dominant diagonal, realized as a bimatrix and then perturbed by payoff terms
/// that depend only on the opponent's action (these leave every deviation
/// difference unchanged).
inline EdgeGame potential_coordination_edge(Gen& gen) {
    Matrix2 phi = gen.matrix(-5, 5);
    const Rational top = max(phi.m12, phi.m21);
    if (phi.m11 < top) phi.m11 = top + gen.rational(0, 2);
    if (phi.m22 < top) phi.m22 = top + gen.rational(0, 2);
    EdgeGame g = game_with_potential(phi);
    const Rational a = gen.rational(-3, 3), b = gen.rational(-3, 3);
    g.pi_uv.m11 += a;
    g.pi_uv.m21 += a;
    g.pi_uv.m12 += b;
    g.pi_uv.m22 += b;
    const Rational c = gen.rational(-3, 3), d = gen.rational(-3, 3);
    g.pi_vu.m11 += c;
    g.pi_vu.m21 += c;
    g.pi_vu.m12 += d;
    g.pi_vu.m22 += d;
    return g;
}

inline Rational max_welfare(const PolymatrixGame& g) {
    Rational best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.player_count()); ++mask) {
        const Rational w = welfare(g, mask);
        if (mask == 0 || w > best) best = w;
    }
    return best;
}

/// Random 3-uniform hypergraph with distinct hyperedges; m is capped at the
/// number of available triples.
inline Hypergraph3 random_hypergraph(Gen& gen, std::size_t n, std::size_t m) {
    m = std::min(m, n * (n - 1) * (n - 2) / 6);
    std::set<std::array<Vertex, 3>> picked;
    while (picked.size() < m) {
        std::array<Vertex, 3> e{};
        for (auto& v : e) v = static_cast<Vertex>(gen.integer(0, static_cast<std::int64_t>(n) - 1));
        std::sort(e.begin(), e.end());
        if (e[0] != e[1] && e[1] != e[2]) picked.insert(e);
    }
    return Hypergraph3(n, {picked.begin(), picked.end()});
}

/// Every traversal of h, as sorted vertex lists.
inline std::vector<std::vector<Vertex>> all_traversals(const Hypergraph3& h) {
    std::vector<std::vector<Vertex>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.vertex_count()); ++mask) {
        std::vector<Vertex> t;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (bit(mask, v)) t.push_back(v);
        if (h.is_traversal(t)) out.push_back(std::move(t));
    }
    return out;
}

}  // namespace oracle
