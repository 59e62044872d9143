#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coordcut/graph.hpp"
#include "coordcut/mwdp.hpp"
#include "coordcut/solvers.hpp"

namespace coordcut {

/// Bimatrix game on one edge uv. `pi_uv` holds u's payoffs indexed
/// [u's action][v's action]; `pi_vu` holds v's payoffs indexed
/// [v's action][u's action].
struct EdgeGame {
    Matrix2 pi_uv;
    Matrix2 pi_vu;

    /// The same game seen from v's end.
    EdgeGame reversed() const { return {pi_vu, pi_uv}; }

    /// Social welfare of the edge indexed [u's action][v's action].
    Matrix2 welfare_matrix() const { return pi_uv + pi_vu.transposed(); }

    friend bool operator==(const EdgeGame&, const EdgeGame&) = default;
};

struct GameEdge {
    Vertex u = 0;
    Vertex v = 0;
    EdgeGame game;
};

/// Binary-action polymatrix game on a simple undirected graph.
class PolymatrixGame {
public:
    PolymatrixGame() = default;

    PolymatrixGame(std::size_t n, std::vector<GameEdge> edges) : n_(n), edges_(std::move(edges)), incident_(n) {
        std::vector<Edge> plain;
        plain.reserve(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            plain.push_back({edges_[i].u, edges_[i].v, 1});
        }
        graph_ = UndirectedGraph(n_, std::move(plain));
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            incident_[edges_[i].u].push_back(i);
            incident_[edges_[i].v].push_back(i);
        }
    }

    std::size_t player_count() const { return n_; }
    const std::vector<GameEdge>& edges() const { return edges_; }
    const UndirectedGraph& graph() const { return graph_; }
    const std::vector<std::size_t>& incident(Vertex v) const { return incident_[v]; }

private:
    std::size_t n_ = 0;
    std::vector<GameEdge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
    UndirectedGraph graph_;
};

/// Payoff player i earns on edge e under actions (own, other).
inline Rational edge_payoff(const GameEdge& e, Vertex i, Action own, Action other_action) {
    return i == e.u ? e.game.pi_uv.at(own, other_action) : e.game.pi_vu.at(own, other_action);
}

inline Rational player_payoff(const PolymatrixGame& g, const StrategyProfile& s, Vertex i) {
    require_size(s.size(), g.player_count(), "profile");
    detail::check_vertex(i, g.player_count(), "player");
    Rational total;
    for (std::size_t idx : g.incident(i)) {
        const auto& e = g.edges()[idx];
        const Vertex j = e.u == i ? e.v : e.u;
        total += edge_payoff(e, i, s[i], s[j]);
    }
    return total;
}

inline Rational social_welfare(const PolymatrixGame& g, const StrategyProfile& s) {
    require_size(s.size(), g.player_count(), "profile");
    Rational total;
    for (const auto& e : g.edges()) total += e.game.welfare_matrix().at(s[e.u], s[e.v]);
    return total;
}

struct NashCheck {
    bool is_nash = true;
    std::vector<Vertex> deviators;  ///< players with a strictly profitable flip
};

inline NashCheck is_pure_nash(const PolymatrixGame& g, const StrategyProfile& s) {
    require_size(s.size(), g.player_count(), "profile");
    NashCheck out;
    StrategyProfile probe = s;
    for (Vertex i = 0; i < g.player_count(); ++i) {
        const Rational now = player_payoff(g, s, i);
        probe[i] = other(s[i]);
        const Rational flipped = player_payoff(g, probe, i);
        probe[i] = s[i];
        if (flipped > now) {
            out.is_nash = false;
            out.deviators.push_back(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coordination classes

/// Whether (a, b) is a (weak) Nash equilibrium of the two-player edge game.
inline bool edge_profile_is_nash(const EdgeGame& eg, Action a, Action b) {
    const bool u_ok = eg.pi_uv.at(a, b) >= eg.pi_uv.at(other(a), b);
    const bool v_ok = eg.pi_vu.at(b, a) >= eg.pi_vu.at(other(b), a);
    return u_ok && v_ok;
}

enum class EdgeTag { PureCoordination, AntiCoordination, Neither };
enum class GameTag { PureCoordination, AntiCoordination, Mixed };

inline const char* to_string(EdgeTag t) {
    switch (t) {
        case EdgeTag::PureCoordination: return "PureCoordination";
        case EdgeTag::AntiCoordination: return "AntiCoordination";
        case EdgeTag::Neither: return "Neither";
    }
    return "?";
}

inline const char* to_string(GameTag t) {
    switch (t) {
        case GameTag::PureCoordination: return "PureCoordination";
        case GameTag::AntiCoordination: return "AntiCoordination";
        case GameTag::Mixed: return "Mixed";
    }
    return "?";
}

struct EdgeClass {
    bool pure = false;
    bool anti = false;
    EdgeTag tag = EdgeTag::Neither;
};

inline EdgeClass classify_edge(const EdgeGame& eg) {
    EdgeClass c;
    c.pure = edge_profile_is_nash(eg, Action::one, Action::one) && edge_profile_is_nash(eg, Action::two, Action::two);
    c.anti = edge_profile_is_nash(eg, Action::one, Action::two) && edge_profile_is_nash(eg, Action::two, Action::one);
    c.tag = c.pure ? EdgeTag::PureCoordination : c.anti ? EdgeTag::AntiCoordination : EdgeTag::Neither;
    return c;
}

struct GameClass {
    GameTag tag = GameTag::Mixed;
    std::vector<EdgeClass> per_edge;
};

inline GameClass classify_game(const PolymatrixGame& g) {
    GameClass gc;
    bool all_pure = true;
    bool all_anti = true;
    for (const auto& e : g.edges()) {
        gc.per_edge.push_back(classify_edge(e.game));
        all_pure = all_pure && gc.per_edge.back().pure;
        all_anti = all_anti && gc.per_edge.back().anti;
    }
    gc.tag = all_pure ? GameTag::PureCoordination : all_anti ? GameTag::AntiCoordination : GameTag::Mixed;
    return gc;
}

// ---------------------------------------------------------------------------
// Pairwise potentials

/// Potential of one edge game indexed [u's action][v's action], normalized so
/// that phi11 = 0.
using PotentialMatrix = Matrix2;

/// Integrates the deviation differences around the four profiles starting at
/// (one, one). Returns nullopt when the closing four-cycle condition fails.
inline std::optional<PotentialMatrix> try_derive_pairwise_potential(const EdgeGame& eg) {
    const auto& pu = eg.pi_uv;
    const auto& pv = eg.pi_vu;
    PotentialMatrix phi;
    phi.m11 = 0;
    phi.m21 = pu.m21 - pu.m11;               // u deviates, v at one
    phi.m12 = pv.m21 - pv.m11;               // v deviates, u at one
    phi.m22 = phi.m21 + (pv.m22 - pv.m12);   // v deviates, u at two
    if (phi.m22 != phi.m12 + (pu.m22 - pu.m12)) return std::nullopt;
    return phi;
}

inline PotentialMatrix derive_pairwise_potential(const EdgeGame& eg) {
    if (auto phi = try_derive_pairwise_potential(eg)) return *phi;
    throw SolverError(SolverErrorKind::NotPotential, "edge game fails the four-cycle condition");
}

inline std::vector<PotentialMatrix> edge_potentials(const PolymatrixGame& g) {
    std::vector<PotentialMatrix> out;
    std::string bad;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        if (auto phi = try_derive_pairwise_potential(e.game)) {
            out.push_back(*phi);
        } else {
            if (!bad.empty()) bad += ", ";
            bad += std::to_string(e.u) + "-" + std::to_string(e.v);
        }
    }
    if (!bad.empty()) throw SolverError(SolverErrorKind::NotPotential, "edges without a pairwise potential: " + bad);
    return out;
}

inline bool is_pairwise_potential(const PolymatrixGame& g) {
    for (const auto& e : g.edges())
        if (!try_derive_pairwise_potential(e.game)) return false;
    return true;
}

inline Rational total_potential(const PolymatrixGame& g, const StrategyProfile& s) {
    require_size(s.size(), g.player_count(), "profile");
    const auto phis = edge_potentials(g);
    Rational total;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const auto& e = g.edges()[i];
        total += phis[i].at(s[e.u], s[e.v]);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Reductions to and from MWDP

/// One arc per edge, tail = smaller endpoint. `arc_of_edge[i]` is the arc
/// index of game edge i and `flipped[i]` records that the arc runs v -> u, in
/// which case the matrix was transposed so the tail stays the row player.
struct GameReduction {
    MwdpInstance instance;
    std::vector<std::size_t> arc_of_edge;
    std::vector<bool> flipped;
};

namespace detail {

template <typename MatrixOf>
GameReduction reduce_edges(const PolymatrixGame& g, MatrixOf matrix_of) {
    GameReduction red;
    std::vector<MwdpArc> arcs;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        const Matrix2 m = matrix_of(i);
        const bool flip = e.v < e.u;
        arcs.push_back(flip ? MwdpArc{e.v, e.u, 1, m.transposed()} : MwdpArc{e.u, e.v, 1, m});
        red.arc_of_edge.push_back(i);
        red.flipped.push_back(flip);
    }
    red.instance = MwdpInstance(g.player_count(), std::move(arcs));
    return red;
}

}  // namespace detail

inline GameReduction welfare_mwdp(const PolymatrixGame& g) {
    return detail::reduce_edges(g, [&](std::size_t i) { return g.edges()[i].game.welfare_matrix(); });
}

inline GameReduction potential_mwdp(const PolymatrixGame& g) {
    const auto phis = edge_potentials(g);
    return detail::reduce_edges(g, [&](std::size_t i) { return phis[i]; });
}

/// Each arc with weight c and matrix M becomes an edge game in which both
/// players receive c*m/2, so social welfare equals the partition value.
inline PolymatrixGame game_from_mwdp_welfare(const MwdpInstance& inst) {
    std::vector<GameEdge> edges;
    for (const auto& a : inst.arcs()) {
        const Matrix2 half = (a.c * Rational(1, 2)) * a.m;
        edges.push_back({a.tail, a.head, {half, half.transposed()}});
    }
    return PolymatrixGame(inst.vertex_count(), std::move(edges));
}

/// Edge game whose pairwise potential is `phi` (up to an additive constant).
inline EdgeGame game_with_potential(const PotentialMatrix& phi) {
    const Rational h = phi.m11 * Rational(1, 2);
    // u's payoffs [u][v]
    const Matrix2 pu{h, 0, phi.m21 - h, phi.m22 - phi.m12};
    // v's payoffs in [u][v] layout, transposed below into [v][u]
    const Matrix2 pv_uv{h, phi.m12 - h, 0, phi.m22 - phi.m21};
    return {pu, pv_uv.transposed()};
}

inline PolymatrixGame game_from_mwdp_potential(const MwdpInstance& inst) {
    std::vector<GameEdge> edges;
    for (const auto& a : inst.arcs()) edges.push_back({a.tail, a.head, game_with_potential(a.c * a.m)});
    return PolymatrixGame(inst.vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Optimization front ends

struct GameOptimum {
    StrategyProfile profile;
    Rational value;
    SolveMethod method = SolveMethod::Exact;
    bool exact = true;
    FamilyClass family;
};

namespace detail {

/// Games whose matrices all have property (a) always take the min-cut route,
/// even when a trivial uniform profile would also be optimal.
inline GameOptimum optimize_reduction(const GameReduction& red, const SolvePolicy& policy) {
    FamilyClass fc = classify_family(red.instance);
    const auto res = fc.all_a ? solve_mincut(red.instance) : solve(red.instance, policy);
    return {to_profile(res.partition), res.value, res.method, res.exact, std::move(fc)};
}

}  // namespace detail

inline GameOptimum maximize_welfare(const PolymatrixGame& g, const SolvePolicy& policy = {}) {
    return detail::optimize_reduction(welfare_mwdp(g), policy);
}

inline GameOptimum maximize_potential(const PolymatrixGame& g, const SolvePolicy& policy = {}) {
    return detail::optimize_reduction(potential_mwdp(g), policy);
}

// ---------------------------------------------------------------------------
// Exhaustive equilibrium scans

inline void require_budget(std::size_t n, std::size_t budget) {
    if (n > budget || n > 62)
        throw SolverError(SolverErrorKind::BudgetExceeded, "profile scan needs n <= " + std::to_string(budget) +
                                                               ", game has n = " + std::to_string(n));
}

/// All pure Nash equilibria in lexicographic order of the profile (one < two,
/// player 0 first).
inline std::vector<StrategyProfile> enumerate_pure_nash(const PolymatrixGame& g,
                                                        std::size_t budget = kDefaultExactBudget) {
    const std::size_t n = g.player_count();
    require_budget(n, budget);
    std::vector<StrategyProfile> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto s = profile_from_mask(n, mask);
        if (is_pure_nash(g, s).is_nash) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct NashOptimum {
    StrategyProfile profile;
    Rational welfare;
};

/// Welfare-maximizing pure Nash equilibrium, lexicographically smallest among
/// ties; nullopt when the game has no pure equilibrium.
inline std::optional<NashOptimum> welfare_optimal_nash_exact(const PolymatrixGame& g,
                                                             std::size_t budget = kDefaultExactBudget) {
    std::optional<NashOptimum> best;
    for (auto& s : enumerate_pure_nash(g, budget)) {
        const Rational w = social_welfare(g, s);
        if (!best || w > best->welfare) best = NashOptimum{std::move(s), w};
    }
    return best;
}

}  // namespace coordcut
