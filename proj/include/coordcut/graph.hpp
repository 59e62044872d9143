#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "coordcut/errors.hpp"
#include "coordcut/rational.hpp"
#include "coordcut/types.hpp"

namespace coordcut {

namespace detail {

inline std::uint64_t pair_key(Vertex a, Vertex b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

inline void check_vertex(Vertex v, std::size_t n, const char* what) {
    if (v >= n)
        throw InvalidInput(std::string(what) + ": vertex " + std::to_string(v) + " out of range (n=" +
                           std::to_string(n) + ")");
}

}  // namespace detail

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Rational weight = 1;
};

/// Simple undirected graph, immutable after construction.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    UndirectedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(edges_.size() * 2);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            detail::check_vertex(e.u, n_, "edge");
            detail::check_vertex(e.v, n_, "edge");
            if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
            if (!seen.insert(detail::pair_key(std::min(e.u, e.v), std::max(e.u, e.v))).second)
                throw InvalidInput("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
            adj_[e.u].push_back({e.v, i});
            adj_[e.v].push_back({e.u, i});
        }
    }

    /// Unit-weight convenience constructor.
    static UndirectedGraph from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [u, v] : pairs) edges.push_back({u, v, 1});
        return UndirectedGraph(n, std::move(edges));
    }

    struct Incidence {
        Vertex neighbor;
        std::size_t edge;
    };

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Incidence>& incident(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        const Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::any_of(list.begin(), list.end(), [&](const Incidence& i) { return i.neighbor == target; });
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
};

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
};

/// Directed graph without self-loops, parallel arcs or 2-cycles.
class OrientedDigraph {
public:
    OrientedDigraph() = default;

    OrientedDigraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(arcs_.size() * 2);
        for (const auto& a : arcs_) {
            detail::check_vertex(a.tail, n_, "arc");
            detail::check_vertex(a.head, n_, "arc");
            if (a.tail == a.head) throw InvalidInput("self-loop at vertex " + std::to_string(a.tail));
            if (seen.count(detail::pair_key(a.head, a.tail)))
                throw InvalidInput("2-cycle between " + std::to_string(a.tail) + " and " + std::to_string(a.head));
            if (!seen.insert(detail::pair_key(a.tail, a.head)).second)
                throw InvalidInput("parallel arc " + std::to_string(a.tail) + "->" + std::to_string(a.head));
        }
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Underlying simple undirected graph (unit weights).
    UndirectedGraph underlying() const {
        std::vector<Edge> edges;
        edges.reserve(arcs_.size());
        for (const auto& a : arcs_) edges.push_back({a.tail, a.head, 1});
        return UndirectedGraph(n_, std::move(edges));
    }

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
};

/// Connected components, each sorted ascending; components ordered by their
/// smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<Vertex> comp;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& inc : g.incident(v)) {
                if (!seen[inc.neighbor]) {
                    seen[inc.neighbor] = 1;
                    stack.push_back(inc.neighbor);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Per-vertex count of neighbors playing each action.
struct SideCounts {
    std::int64_t ones = 0;
    std::int64_t twos = 0;
};

/// Graph that can report, for a whole profile at once, how many neighbors of
/// each vertex play each action. Threshold-game routines only need this.
template <typename G>
concept NeighborCountGraph = requires(const G& g, std::span<const Action> s, Vertex v) {
    { g.vertex_count() } -> std::convertible_to<std::size_t>;
    { g.edge_count() } -> std::convertible_to<std::size_t>;
    { g.degree(v) } -> std::convertible_to<std::size_t>;
    { neighbor_side_counts(g, s) } -> std::same_as<std::vector<SideCounts>>;
};

inline std::vector<SideCounts> neighbor_side_counts(const UndirectedGraph& g, std::span<const Action> s) {
    require_size(s.size(), g.vertex_count(), "profile");
    std::vector<SideCounts> out(g.vertex_count());
    for (const auto& e : g.edges()) {
        (s[e.v] == Action::one ? out[e.u].ones : out[e.u].twos) += 1;
        (s[e.u] == Action::one ? out[e.v].ones : out[e.v].twos) += 1;
    }
    return out;
}

/// Graph made of disjoint cliques plus an explicit sparse edge set. Cliques are
/// stored as vertex lists, so a clique on k vertices costs O(k) memory instead
/// of O(k^2) edges; the hitting-set gadget relies on this.
class CliqueBlockGraph {
public:
    CliqueBlockGraph() = default;

    CliqueBlockGraph(std::size_t n, std::vector<std::vector<Vertex>> cliques, std::vector<Edge> sparse)
        : n_(n), cliques_(std::move(cliques)), clique_of_(n, kNone), sparse_(n, std::move(sparse)) {
        for (std::size_t c = 0; c < cliques_.size(); ++c) {
            for (Vertex v : cliques_[c]) {
                detail::check_vertex(v, n_, "clique");
                if (clique_of_[v] != kNone) throw InvalidInput("vertex " + std::to_string(v) + " in two cliques");
                clique_of_[v] = c;
            }
        }
        for (const auto& e : sparse_.edges()) {
            if (clique_of_[e.u] != kNone && clique_of_[e.u] == clique_of_[e.v])
                throw InvalidInput("sparse edge duplicates a clique edge");
        }
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const {
        std::size_t m = sparse_.edge_count();
        for (const auto& c : cliques_) m += c.size() * (c.size() - (c.empty() ? 0 : 1)) / 2;
        return m;
    }
    std::size_t degree(Vertex v) const {
        const std::size_t in_clique = clique_of_[v] == kNone ? 0 : cliques_[clique_of_[v]].size() - 1;
        return in_clique + sparse_.degree(v);
    }

    const std::vector<std::vector<Vertex>>& cliques() const { return cliques_; }
    const UndirectedGraph& sparse() const { return sparse_; }

    /// Materializes every edge. Intended for small instances and tests.
    UndirectedGraph to_undirected() const {
        std::vector<Edge> edges = sparse_.edges();
        for (const auto& c : cliques_)
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j) edges.push_back({c[i], c[j], 1});
        return UndirectedGraph(n_, std::move(edges));
    }

    friend std::vector<SideCounts> neighbor_side_counts(const CliqueBlockGraph& g, std::span<const Action> s) {
        auto out = neighbor_side_counts(g.sparse_, s);
        for (const auto& c : g.cliques_) {
            std::int64_t ones = 0;
            for (Vertex v : c) ones += s[v] == Action::one;
            const std::int64_t twos = static_cast<std::int64_t>(c.size()) - ones;
            for (Vertex v : c) {
                out[v].ones += ones - (s[v] == Action::one);
                out[v].twos += twos - (s[v] == Action::two);
            }
        }
        return out;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::size_t n_ = 0;
    std::vector<std::vector<Vertex>> cliques_;
    std::vector<std::size_t> clique_of_;
    UndirectedGraph sparse_;
};

}  // namespace coordcut
