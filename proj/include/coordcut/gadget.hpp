#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <vector>

#include "coordcut/threshold.hpp"

namespace coordcut {

/// 3-uniform hypergraph; every hyperedge is stored sorted.
class Hypergraph3 {
public:
    Hypergraph3() = default;
    Hypergraph3(std::size_t n, std::vector<std::array<Vertex, 3>> edges) : n_(n), edges_(std::move(edges)) {
        std::set<std::array<Vertex, 3>> seen;
        for (auto& e : edges_) {
            for (Vertex v : e) detail::check_vertex(v, n_, "hyperedge");
            std::sort(e.begin(), e.end());
            if (e[0] == e[1] || e[1] == e[2])
                throw InvalidInput("hyperedge {" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
                                   std::to_string(e[2]) + "} repeats a vertex");
            if (!seen.insert(e).second) throw InvalidInput("duplicate hyperedge");
        }
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::array<Vertex, 3>>& edges() const { return edges_; }

    bool is_traversal(const std::vector<Vertex>& t) const {
        std::vector<bool> in(n_, false);
        for (Vertex v : t) {
            detail::check_vertex(v, n_, "traversal");
            in[v] = true;
        }
        return std::all_of(edges_.begin(), edges_.end(),
                           [&](const auto& e) { return in[e[0]] || in[e[1]] || in[e[2]]; });
    }

private:
    std::size_t n_ = 0;
    std::vector<std::array<Vertex, 3>> edges_;
};

/// A minimum traversal, by subset enumeration; the smallest mask wins ties.
inline std::vector<Vertex> minimum_traversal(const Hypergraph3& h, std::size_t budget = kDefaultExactBudget) {
    const std::size_t n = h.vertex_count();
    require_budget(n, budget);
    std::uint64_t best_mask = (std::uint64_t{1} << n) - 1;
    auto best = static_cast<std::size_t>(std::popcount(best_mask));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size >= best) continue;
        const bool hits = std::all_of(h.edges().begin(), h.edges().end(), [&](const auto& e) {
            return ((mask >> e[0]) | (mask >> e[1]) | (mask >> e[2])) & 1U;
        });
        if (hits) {
            best = size;
            best_mask = mask;
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if ((best_mask >> v) & 1U) out.push_back(v);
    return out;
}

inline std::size_t minimum_traversal_size(const Hypergraph3& h, std::size_t budget = kDefaultExactBudget) {
    return minimum_traversal(h, budget).size();
}

struct GadgetConstants {
    std::int64_t theta = 0;
    std::int64_t x_B = 0;
    std::int64_t x_A = 0;
    std::int64_t c_A = 0;
    std::int64_t c_B = 0;
    std::int64_t z = 0;
};

namespace detail {

inline void check_gadget_thresholds(const Rational& gA, const Rational& gB) {
    const Rational half(1, 2);
    if (!(gB.sign() > 0 && gB < half && half < gA && gA <= Rational(1)))
        throw SolverError(SolverErrorKind::InvalidThresholds,
                          "gadget needs 0 < gamma_B < 1/2 < gamma_A <= 1, got gamma_A = " + gA.str() +
                              ", gamma_B = " + gB.str());
}

/// Largest integer strictly below r.
inline std::int64_t floor_strict(const Rational& r) { return r.is_integer() ? r.num() - 1 : r.floor(); }

/// Smallest integer strictly above r.
inline std::int64_t ceil_strict(const Rational& r) { return r.floor() + 1; }

}  // namespace detail

inline GadgetConstants gadget_constants(const Hypergraph3& h, const Rational& gA, const Rational& gB) {
    detail::check_gadget_thresholds(gA, gB);
    const auto E = static_cast<std::int64_t>(h.edge_count());
    const auto V = static_cast<std::int64_t>(h.vertex_count());
    const Rational one(1);

    GadgetConstants k;
    k.z = (Rational(3 * E) * (one - gB) / (gB * (one - 2 * gB))).ceil();
    k.theta = 6 * E + 2 * k.z * V;

    const Rational xb_rate = (one - gB) * (gA - gB) / gB;
    k.x_B = std::max<std::int64_t>(1, detail::ceil_strict(Rational(k.theta) / xb_rate));

    const Rational upper = Rational(k.x_B + 3) * (one - gB) / gB;
    k.x_A = detail::floor_strict(upper);
    if (!(Rational(k.x_A) > upper - one / gB))
        throw SolverError(SolverErrorKind::NoValidXA, "no integer strictly inside (" + (upper - one / gB).str() +
                                                          ", " + upper.str() + ")");

    const Rational rhs = Rational(k.theta) + Rational(2 * E) * Rational(k.x_A + k.x_B);
    // (c - 1) * rate > rhs  <=>  c >= floor(rhs / rate) + 2
    k.c_A = std::max(k.x_A, detail::ceil_strict(rhs / (2 * gA - one)) + 1);
    k.c_B = std::max(k.x_B, detail::ceil_strict(rhs / (one - 2 * gB)) + 1);
    if (E > 0) k.c_B = std::max(k.c_B, (Rational(E) * gB / (one - gB)).ceil() + 1);
    return k;
}

/// Re-checks every defining condition of the constants, including minimality.
struct ConstantsCheck {
    bool a = false, b = false, c = false, d = false, e = false, f = false;
    bool all() const { return a && b && c && d && e && f; }
};

inline ConstantsCheck check_gadget_constants(const Hypergraph3& h, const Rational& gA, const Rational& gB,
                                             const GadgetConstants& k) {
    const auto E = static_cast<std::int64_t>(h.edge_count());
    const auto V = static_cast<std::int64_t>(h.vertex_count());
    const Rational one(1);
    ConstantsCheck out;

    const std::int64_t z = (Rational(3 * E) * (one - gB) / (gB * (one - 2 * gB))).ceil();
    out.f = k.z == z;
    out.a = k.theta == 6 * E + 2 * V * z;

    auto xb_ok = [&](std::int64_t x) { return Rational(x) * (one - gB) * (gA - gB) / gB > Rational(k.theta); };
    out.b = k.x_B >= 1 && xb_ok(k.x_B) && (k.x_B == 1 || !xb_ok(k.x_B - 1));

    const Rational upper = Rational(k.x_B + 3) * (one - gB) / gB;
    out.c = upper - one / gB < Rational(k.x_A) && Rational(k.x_A) < upper;

    const Rational rhs = Rational(k.theta) + Rational(2 * E) * Rational(k.x_A + k.x_B);
    auto ca_ok = [&](std::int64_t c) { return c >= k.x_A && Rational(c - 1) * (2 * gA - one) > rhs; };
    out.d = ca_ok(k.c_A) && !ca_ok(k.c_A - 1);

    auto cb_ok = [&](std::int64_t c) {
        const bool ratio = E == 0 || Rational(c - 1) / Rational(E) >= gB / (one - gB);
        return c >= k.x_B && Rational(c - 1) * (one - 2 * gB) > rhs && ratio;
    };
    out.e = cb_ok(k.c_B) && !cb_ok(k.c_B - 1);
    return out;
}

enum class GadgetRole : std::uint8_t { CliqueA, CliqueB, R, VPrime, Z };

struct HittingSetGadget {
    Hypergraph3 hypergraph;
    GadgetConstants constants;
    TwoTypeThreshold<CliqueBlockGraph> game;
    std::vector<Vertex> clique_a, clique_b;
    std::vector<Vertex> r;                    ///< one per hyperedge
    std::vector<Vertex> v_prime;              ///< one per hypergraph vertex
    std::vector<std::vector<Vertex>> z_sets;  ///< z leaves per hypergraph vertex
    std::vector<GadgetRole> role;
};

/// Threshold game whose welfare-optimal equilibria encode minimum traversals.
/// Vertices are numbered C_A, C_B, R, V', Z in that order; the x_A and x_B
/// attachment edges of each r_e go to the lowest-indexed clique vertices.
inline HittingSetGadget build_hitting_set_gadget(const Hypergraph3& h, const Rational& gA, const Rational& gB) {
    HittingSetGadget g;
    g.hypergraph = h;
    g.constants = gadget_constants(h, gA, gB);
    const auto& k = g.constants;
    if (k.x_A > k.c_A || k.x_B > k.c_B) throw SolverError(SolverErrorKind::NoValidXA, "attachment exceeds clique");

    Vertex next = 0;
    auto take = [&](std::int64_t count, GadgetRole role) {
        std::vector<Vertex> out(static_cast<std::size_t>(count));
        for (auto& v : out) {
            v = next++;
            g.role.push_back(role);
        }
        return out;
    };
    g.clique_a = take(k.c_A, GadgetRole::CliqueA);
    g.clique_b = take(k.c_B, GadgetRole::CliqueB);
    g.r = take(static_cast<std::int64_t>(h.edge_count()), GadgetRole::R);
    g.v_prime = take(static_cast<std::int64_t>(h.vertex_count()), GadgetRole::VPrime);
    for (std::size_t u = 0; u < h.vertex_count(); ++u) g.z_sets.push_back(take(k.z, GadgetRole::Z));

    std::vector<Edge> sparse;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const Vertex re = g.r[e];
        for (std::int64_t i = 0; i < k.x_A; ++i) sparse.push_back({re, g.clique_a[i], 1});
        for (std::int64_t i = 0; i < k.x_B; ++i) sparse.push_back({re, g.clique_b[i], 1});
        for (Vertex u : h.edges()[e]) sparse.push_back({re, g.v_prime[u], 1});
    }
    for (std::size_t u = 0; u < h.vertex_count(); ++u)
        for (Vertex zv : g.z_sets[u]) sparse.push_back({g.v_prime[u], zv, 1});

    std::vector<PlayerType> types(next, PlayerType::B);
    for (Vertex v : g.clique_a) types[v] = PlayerType::A;
    g.game = TwoTypeThreshold<CliqueBlockGraph>(CliqueBlockGraph(next, {g.clique_a, g.clique_b}, std::move(sparse)),
                                                std::move(types), gA, gB);
    return g;
}

/// The canonical profile of a traversal T: C_A and R play one, C_B plays two,
/// u' and Z_u play one exactly when u is in T.
inline StrategyProfile g_extension(const HittingSetGadget& g, const std::vector<Vertex>& traversal) {
    if (!g.hypergraph.is_traversal(traversal))
        throw SolverError(SolverErrorKind::NotATraversal, "vertex set misses a hyperedge");
    StrategyProfile s(g.role.size(), Action::two);
    for (Vertex v : g.clique_a) s[v] = Action::one;
    for (Vertex v : g.r) s[v] = Action::one;
    for (Vertex u : traversal) {
        s[g.v_prime[u]] = Action::one;
        for (Vertex zv : g.z_sets[u]) s[zv] = Action::one;
    }
    return s;
}

/// Welfare contributed by one edge under the given actions.
inline Rational edge_welfare(PlayerType tu, Action au, PlayerType tv, Action av, const Rational& gA,
                             const Rational& gB) {
    if (au != av) return 0;
    const Rational one(1);
    const Rational g1 = tu == PlayerType::A ? gA : gB;
    const Rational g2 = tv == PlayerType::A ? gA : gB;
    return au == Action::one ? g1 + g2 : (one - g1) + (one - g2);
}

/// Welfare of the clique and attachment edges when C_A and R play one and C_B
/// plays two, evaluated edge by edge.
inline Rational gadget_w_star(const HittingSetGadget& g) {
    const Rational& gA = g.game.gamma_A;
    const Rational& gB = g.game.gamma_B;
    auto pairs = [](std::size_t k) { return Rational(static_cast<std::int64_t>(k * (k - 1) / 2)); };
    Rational total = pairs(g.clique_a.size()) * edge_welfare(PlayerType::A, Action::one, PlayerType::A, Action::one, gA, gB);
    total += pairs(g.clique_b.size()) * edge_welfare(PlayerType::B, Action::two, PlayerType::B, Action::two, gA, gB);
    std::vector<bool> is_r(g.role.size(), false);
    for (Vertex v : g.r) is_r[v] = true;
    for (const auto& e : g.game.graph.sparse().edges()) {
        const Vertex re = is_r[e.u] ? e.u : e.v;
        const Vertex other_end = re == e.u ? e.v : e.u;
        if (!is_r[re]) continue;
        const GadgetRole role = g.role[other_end];
        if (role == GadgetRole::CliqueA)
            total += edge_welfare(PlayerType::B, Action::one, PlayerType::A, Action::one, gA, gB);
        else if (role == GadgetRole::CliqueB)
            total += edge_welfare(PlayerType::B, Action::one, PlayerType::B, Action::two, gA, gB);
    }
    return total;
}

/// Welfare of the r_e to u' edges under a profile.
inline Rational gadget_incidence_welfare(const HittingSetGadget& g, const StrategyProfile& s) {
    Rational total;
    for (std::size_t e = 0; e < g.r.size(); ++e)
        for (Vertex u : g.hypergraph.edges()[e])
            total += edge_welfare(PlayerType::B, s[g.r[e]], PlayerType::B, s[g.v_prime[u]], g.game.gamma_A,
                                  g.game.gamma_B);
    return total;
}

/// W* + eps_T + |V(H)| z 2(1 - gamma_B) - |T| 2z(1 - 2 gamma_B)
inline Rational predicted_extension_welfare(const HittingSetGadget& g, std::size_t traversal_size,
                                            const Rational& eps) {
    const Rational one(1);
    const Rational& gB = g.game.gamma_B;
    const auto V = static_cast<std::int64_t>(g.hypergraph.vertex_count());
    const std::int64_t z = g.constants.z;
    return gadget_w_star(g) + eps + Rational(V * z) * 2 * (one - gB) -
           Rational(static_cast<std::int64_t>(traversal_size)) * 2 * z * (one - 2 * gB);
}

/// Minimum traversal size recovered from the welfare of a welfare-optimal
/// equilibrium of the gadget.
inline std::int64_t traversal_from_welfare(const HittingSetGadget& g, const Rational& w_opt) {
    if (g.hypergraph.edge_count() == 0) return 0;
    const Rational one(1);
    const Rational& gB = g.game.gamma_B;
    const auto V = static_cast<std::int64_t>(g.hypergraph.vertex_count());
    const std::int64_t z = g.constants.z;
    const Rational num = gadget_w_star(g) + Rational(V * z) * (2 - 2 * gB) - w_opt;
    return (num / (Rational(2 * z) * (one - 2 * gB))).ceil();
}

/// Loss bound for an all-A clique on a >= 2 vertices (gamma > 1/2): every
/// non-uniform profile loses at least this much welfare against the optimum.
inline Rational clique_loss_bound_a(std::int64_t a, const Rational& gamma) {
    return min(2 * gamma * (a - 1), Rational(a * (a - 1)) * (2 * gamma - 1));
}

/// Same bound for an all-B clique on b >= 2 vertices (gamma < 1/2).
inline Rational clique_loss_bound_b(std::int64_t b, const Rational& gamma) {
    const Rational one(1);
    return min(2 * (one - gamma) * (b - 1), Rational(b * (b - 1)) * (one - 2 * gamma));
}

}  // namespace coordcut
