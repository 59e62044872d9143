#pragma once

#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "coordcut/flow.hpp"
#include "coordcut/graph.hpp"
#include "coordcut/polymatrix.hpp"

namespace coordcut {

namespace detail {

inline void check_gamma(const Rational& g, const char* what) {
    if (g.sign() < 0 || g > Rational(1))
        throw InvalidInput(std::string(what) + " = " + g.str() + " outside [0,1]");
}

}  // namespace detail

/// Player u has payoff matrix [[gamma_u, 0], [0, 1 - gamma_u]] against every
/// neighbor.
template <NeighborCountGraph G = UndirectedGraph>
struct ThresholdGame {
    G graph;
    std::vector<Rational> gamma;

    ThresholdGame() = default;
    ThresholdGame(G g, std::vector<Rational> gammas) : graph(std::move(g)), gamma(std::move(gammas)) {
        require_size(gamma.size(), graph.vertex_count(), "gamma");
        for (const auto& x : gamma) detail::check_gamma(x, "gamma");
    }

    std::size_t player_count() const { return graph.vertex_count(); }
};

enum class PlayerType : std::uint8_t { A, B };

/// Two thresholds: every type-A player uses gamma_A, every type-B player gamma_B,
/// with 0 <= gamma_B <= gamma_A <= 1.
template <NeighborCountGraph G = UndirectedGraph>
struct TwoTypeThreshold {
    G graph;
    std::vector<PlayerType> types;
    Rational gamma_A;
    Rational gamma_B;

    TwoTypeThreshold() = default;
    TwoTypeThreshold(G g, std::vector<PlayerType> t, Rational ga, Rational gb)
        : graph(std::move(g)), types(std::move(t)), gamma_A(ga), gamma_B(gb) {
        require_size(types.size(), graph.vertex_count(), "types");
        detail::check_gamma(gamma_A, "gamma_A");
        detail::check_gamma(gamma_B, "gamma_B");
        if (gamma_B > gamma_A) throw InvalidInput("two-type thresholds need gamma_B <= gamma_A");
    }

    std::size_t player_count() const { return graph.vertex_count(); }
    Rational gamma(Vertex u) const { return types[u] == PlayerType::A ? gamma_A : gamma_B; }

    std::vector<Rational> gammas() const {
        std::vector<Rational> out(types.size());
        for (Vertex u = 0; u < types.size(); ++u) out[u] = gamma(u);
        return out;
    }

    ThresholdGame<G> as_threshold_game() const { return ThresholdGame<G>(graph, gammas()); }
};

inline PolymatrixGame to_polymatrix(const ThresholdGame<UndirectedGraph>& tg) {
    auto diag = [](const Rational& g) { return Matrix2{g, 0, 0, Rational(1) - g}; };
    std::vector<GameEdge> edges;
    edges.reserve(tg.graph.edge_count());
    for (const auto& e : tg.graph.edges()) edges.push_back({e.u, e.v, {diag(tg.gamma[e.u]), diag(tg.gamma[e.v])}});
    return PolymatrixGame(tg.player_count(), std::move(edges));
}

namespace detail {

inline Rational threshold_payoff(const Rational& gamma, Action a, const SideCounts& c) {
    return a == Action::one ? gamma * c.ones : (Rational(1) - gamma) * c.twos;
}

/// NE conditions as neighbor-count ratios, cross-multiplied so that gamma in
/// {0, 1} needs no special casing.
inline bool ratio_condition_holds(const Rational& gamma, Action a, const SideCounts& c) {
    const Rational one_minus = Rational(1) - gamma;
    if (a == Action::one) {
        // N(u) ∩ X_two empty, or |N∩one| / |N∩two| >= (1-γ)/γ
        return c.twos == 0 || gamma * c.ones >= one_minus * c.twos;
    }
    // N(u) ∩ X_one empty, or |N∩two| / |N∩one| >= γ/(1-γ)
    return c.ones == 0 || one_minus * c.twos >= gamma * c.ones;
}

}  // namespace detail

template <NeighborCountGraph G>
Rational threshold_welfare(const G& graph, std::span<const Rational> gamma, const StrategyProfile& s) {
    require_size(s.size(), graph.vertex_count(), "profile");
    const auto counts = neighbor_side_counts(graph, s);
    Rational total;
    for (Vertex u = 0; u < s.size(); ++u) total += detail::threshold_payoff(gamma[u], s[u], counts[u]);
    return total;
}

template <NeighborCountGraph G>
Rational threshold_welfare(const ThresholdGame<G>& tg, const StrategyProfile& s) {
    return threshold_welfare(tg.graph, tg.gamma, s);
}

template <NeighborCountGraph G>
Rational threshold_welfare(const TwoTypeThreshold<G>& tt, const StrategyProfile& s) {
    return threshold_welfare(tt.graph, tt.gammas(), s);
}

/// Players violating the neighbor-ratio equilibrium conditions.
template <NeighborCountGraph G>
std::vector<Vertex> ratio_violators(const G& graph, std::span<const Rational> gamma, const StrategyProfile& s) {
    require_size(s.size(), graph.vertex_count(), "profile");
    const auto counts = neighbor_side_counts(graph, s);
    std::vector<Vertex> bad;
    for (Vertex u = 0; u < s.size(); ++u)
        if (!detail::ratio_condition_holds(gamma[u], s[u], counts[u])) bad.push_back(u);
    return bad;
}

template <NeighborCountGraph G>
bool nash_ratio_check(const ThresholdGame<G>& tg, const StrategyProfile& s) {
    return ratio_violators(tg.graph, tg.gamma, s).empty();
}

template <NeighborCountGraph G>
bool nash_ratio_check(const TwoTypeThreshold<G>& tt, const StrategyProfile& s) {
    return ratio_violators(tt.graph, tt.gammas(), s).empty();
}

// ---------------------------------------------------------------------------
// Welfare-optimal equilibria

enum class ThresholdMethod { AllTwo, AllOne, ComponentMinCut, Exact, BestResponse };

inline const char* to_string(ThresholdMethod m) {
    switch (m) {
        case ThresholdMethod::AllTwo: return "AllTwo";
        case ThresholdMethod::AllOne: return "AllOne";
        case ThresholdMethod::ComponentMinCut: return "ComponentMinCut";
        case ThresholdMethod::Exact: return "Exact";
        case ThresholdMethod::BestResponse: return "BestResponse";
    }
    return "?";
}

/// wel = 2|E(G)| - |E(A,B)| - cut, the identity behind the 0/1-threshold solver.
struct Case3Audit {
    std::int64_t twice_edges = 0;
    std::int64_t cross_edges = 0;
    Rational cut;
};

struct ThresholdNash {
    StrategyProfile profile;
    Rational welfare;
    ThresholdMethod method = ThresholdMethod::Exact;
    bool exact = true;
    std::optional<Case3Audit> audit;
    std::string warning;
};

/// Exhaustive welfare-optimal equilibrium of an arbitrary threshold game.
/// Lexicographically smallest profile among ties.
inline ThresholdNash threshold_nash_exhaustive(const ThresholdGame<UndirectedGraph>& tg,
                                               std::size_t budget = kDefaultExactBudget) {
    const std::size_t n = tg.player_count();
    require_budget(n, budget);
    // Order masks so that iteration visits profiles lexicographically: player 0
    // is the most significant bit.
    std::optional<ThresholdNash> best;
    StrategyProfile s(n, Action::one);
    for (std::uint64_t key = 0; key < (std::uint64_t{1} << n); ++key) {
        for (Vertex i = 0; i < n; ++i) s[i] = ((key >> (n - 1 - i)) & 1U) ? Action::two : Action::one;
        if (!nash_ratio_check(tg, s)) continue;
        const Rational w = threshold_welfare(tg, s);
        if (!best || w > best->welfare) best = ThresholdNash{s, w, ThresholdMethod::Exact, true, std::nullopt, {}};
    }
    // all-one is always an equilibrium of a threshold game, so best is set
    return *best;
}

/// Best-response dynamics from seeded starts; every run ends in an equilibrium
/// because threshold games are potential games.
inline ThresholdNash threshold_nash_best_response(const ThresholdGame<UndirectedGraph>& tg, std::size_t restarts,
                                                  std::uint64_t seed) {
    const std::size_t n = tg.player_count();
    std::mt19937_64 rng(seed);
    std::optional<ThresholdNash> best;
    auto run = [&](StrategyProfile s) {
        for (;;) {
            const auto bad = ratio_violators(tg.graph, tg.gamma, s);
            if (bad.empty()) break;
            s[bad.front()] = other(s[bad.front()]);
        }
        const Rational w = threshold_welfare(tg, s);
        if (!best || w > best->welfare || (w == best->welfare && s < best->profile))
            best = ThresholdNash{s, w, ThresholdMethod::BestResponse, false, std::nullopt, {}};
    };
    run(uniform_profile(n, Action::one));
    run(uniform_profile(n, Action::two));
    for (std::size_t r = 0; r < restarts; ++r) {
        StrategyProfile s(n);
        for (auto& a : s) a = (rng() & 1U) ? Action::two : Action::one;
        run(std::move(s));
    }
    return *best;
}

/// Exchange the roles of the two types and of the two actions. Equilibria and
/// welfare are preserved once the profile is flipped back.
inline TwoTypeThreshold<UndirectedGraph> swap_roles(const TwoTypeThreshold<UndirectedGraph>& tt) {
    std::vector<PlayerType> swapped(tt.types.size());
    for (Vertex u = 0; u < swapped.size(); ++u)
        swapped[u] = tt.types[u] == PlayerType::A ? PlayerType::B : PlayerType::A;
    return TwoTypeThreshold<UndirectedGraph>(tt.graph, std::move(swapped), Rational(1) - tt.gamma_B,
                                             Rational(1) - tt.gamma_A);
}

inline StrategyProfile flipped(StrategyProfile s) {
    for (auto& a : s) a = other(a);
    return s;
}

struct Case3Result {
    StrategyProfile profile;
    Rational welfare;
    Case3Audit audit;
};

/// Welfare-optimal equilibrium for gamma_A = 1, gamma_B = 0 by contracting the
/// components of G[A] and G[B] and taking one minimum s-t cut.
inline Case3Result solve_case3(const TwoTypeThreshold<UndirectedGraph>& tt) {
    if (tt.gamma_A != Rational(1) || tt.gamma_B != Rational(0))
        throw SolverError(SolverErrorKind::InvalidThresholds, "component min-cut needs gamma_A = 1 and gamma_B = 0");

    const auto& g = tt.graph;
    const std::size_t n = g.vertex_count();

    // components of G[A] and G[B]: keep only same-type edges
    std::vector<Edge> same_type;
    for (const auto& e : g.edges())
        if (tt.types[e.u] == tt.types[e.v]) same_type.push_back({e.u, e.v, 1});
    const auto comps = connected_components(UndirectedGraph(n, std::move(same_type)));

    // node ids in D: s = 0, t = 1, then one node per component
    std::vector<std::size_t> comp_of(n);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c]) comp_of[v] = c;
    const Vertex s = 0, t = 1;
    auto node = [](std::size_t comp) { return comp + 2; };

    std::vector<std::int64_t> inner_edges(comps.size(), 0);
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> between;  // (A comp, B comp) -> |E(C_A, C_B)|
    std::int64_t cross = 0;
    for (const auto& e : g.edges()) {
        if (tt.types[e.u] == tt.types[e.v]) {
            ++inner_edges[comp_of[e.u]];
        } else {
            ++cross;
            const Vertex a = tt.types[e.u] == PlayerType::A ? e.u : e.v;
            const Vertex b = a == e.u ? e.v : e.u;
            ++between[{comp_of[a], comp_of[b]}];
        }
    }

    FlowNetwork net(comps.size() + 2, s, t);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const bool is_a = tt.types[comps[c].front()] == PlayerType::A;
        if (is_a)
            net.add_arc(s, node(c), 2 * inner_edges[c]);
        else
            net.add_arc(node(c), t, 2 * inner_edges[c]);
    }
    for (const auto& [key, count] : between) {
        net.add_arc(node(key.first), node(key.second), count);
        net.add_infinite_arc(node(key.second), node(key.first));
    }
    const MinCut mc = max_flow_min_cut(net);

    StrategyProfile profile(n, Action::one);
    for (Vertex v = 0; v < n; ++v)
        if (mc.cut[node(comp_of[v])] == Side::X2) profile[v] = Action::two;

    Case3Result out;
    out.welfare = threshold_welfare(tt, profile);
    out.profile = std::move(profile);
    out.audit = {2 * static_cast<std::int64_t>(g.edge_count()), cross, mc.value};
    return out;
}

struct ThresholdNashOptions {
    std::size_t budget = kDefaultExactBudget;
    std::size_t restarts = 32;
    std::uint64_t seed = 0;
};

/// Welfare-optimal pure equilibrium of a two-type threshold game, dispatched by
/// threshold regime.
inline ThresholdNash welfare_optimal_nash(const TwoTypeThreshold<UndirectedGraph>& tt,
                                          const ThresholdNashOptions& opt = {}) {
    const Rational half(1, 2);
    const std::size_t n = tt.player_count();

    // gamma_B >= 1/2: every player weakly prefers `one` (includes the 1/2, 1/2 tie)
    if (tt.gamma_B >= half) {
        auto s = uniform_profile(n, Action::one);
        return {s, threshold_welfare(tt, s), ThresholdMethod::AllOne, true, std::nullopt, {}};
    }
    if (tt.gamma_A <= half) {
        auto s = uniform_profile(n, Action::two);
        return {s, threshold_welfare(tt, s), ThresholdMethod::AllTwo, true, std::nullopt, {}};
    }
    if (tt.gamma_A == Rational(1) && tt.gamma_B == Rational(0)) {
        auto r = solve_case3(tt);
        return {std::move(r.profile), r.welfare, ThresholdMethod::ComponentMinCut, true, r.audit, {}};
    }
    if (tt.gamma_B == Rational(0)) {
        // 1/2 < gamma_A < 1: solve the role-swapped game (gamma_B' > 0, gamma_A' = 1)
        auto res = welfare_optimal_nash(swap_roles(tt), opt);
        res.profile = flipped(std::move(res.profile));
        if (res.method == ThresholdMethod::Exact) {
            // recover the lexicographic tie-break in the original action labels
            res = threshold_nash_exhaustive(tt.as_threshold_game(), opt.budget);
        }
        return res;
    }
    const auto tg = tt.as_threshold_game();
    if (n <= opt.budget && n <= 62) return threshold_nash_exhaustive(tg, opt.budget);
    auto res = threshold_nash_best_response(tg, opt.restarts, opt.seed);
    res.warning = "n = " + std::to_string(n) + " exceeds the exact budget " + std::to_string(opt.budget) +
                  "; result is a best-response equilibrium, not certified optimal";
    return res;
}

}  // namespace coordcut
