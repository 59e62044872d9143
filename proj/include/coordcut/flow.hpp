#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "coordcut/errors.hpp"
#include "coordcut/graph.hpp"
#include "coordcut/rational.hpp"
#include "coordcut/types.hpp"

namespace coordcut {

struct FlowArc {
    Vertex tail = 0;
    Vertex head = 0;
    Rational capacity = 0;
    bool infinite = false;
};

/// s-t network with exact rational capacities. An arc may be marked infinite;
/// it is then replaced by a sentinel larger than every finite cut.
class FlowNetwork {
public:
    FlowNetwork(std::size_t n, Vertex source, Vertex sink) : n_(n), source_(source), sink_(sink) {
        detail::check_vertex(source, n, "source");
        detail::check_vertex(sink, n, "sink");
        if (source == sink) throw InvalidInput("source and sink coincide");
    }

    void add_arc(Vertex tail, Vertex head, Rational capacity) {
        detail::check_vertex(tail, n_, "flow arc");
        detail::check_vertex(head, n_, "flow arc");
        if (capacity.sign() < 0) throw InvalidInput("negative capacity " + capacity.str());
        arcs_.push_back({tail, head, capacity, false});
    }

    void add_infinite_arc(Vertex tail, Vertex head) {
        detail::check_vertex(tail, n_, "flow arc");
        detail::check_vertex(head, n_, "flow arc");
        arcs_.push_back({tail, head, 0, true});
    }

    std::size_t node_count() const { return n_; }
    Vertex source() const { return source_; }
    Vertex sink() const { return sink_; }
    const std::vector<FlowArc>& arcs() const { return arcs_; }

private:
    std::size_t n_;
    Vertex source_;
    Vertex sink_;
    std::vector<FlowArc> arcs_;
};

struct MinCut {
    Rational value;
    Partition cut;  ///< source side is X1, sink side X2
};

/// Capacity of the arcs from X1 to X2; `crosses_infinite` is set when an
/// infinite arc crosses forward.
struct CutCapacity {
    Rational value;
    bool crosses_infinite = false;
};

inline CutCapacity cut_capacity(const FlowNetwork& net, const Partition& p) {
    require_size(p.size(), net.node_count(), "cut");
    CutCapacity out;
    for (const auto& a : net.arcs()) {
        if (p[a.tail] == Side::X1 && p[a.head] == Side::X2) {
            if (a.infinite)
                out.crosses_infinite = true;
            else
                out.value += a.capacity;
        }
    }
    return out;
}

namespace detail {

/// Dinic's algorithm on int64 capacities.
class Dinic {
public:
    explicit Dinic(std::size_t n) : adj_(n), level_(n), next_(n) {}

    void add_arc(Vertex a, Vertex b, std::int64_t cap) {
        adj_[a].push_back({b, adj_[b].size(), cap});
        adj_[b].push_back({a, adj_[a].size() - 1, 0});
    }

    std::int64_t run(Vertex s, Vertex t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += pushed;
        }
        return flow;
    }

    /// Vertices that can still reach t in the residual graph.
    std::vector<char> reaches_sink(Vertex t) const {
        std::vector<char> mark(adj_.size(), 0);
        std::vector<Vertex> stack{t};
        mark[t] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const auto& e : adj_[v]) {
                // residual u->v exists iff the reverse record of e has capacity
                const auto& back = adj_[e.to][e.rev];
                if (back.cap > 0 && !mark[e.to]) {
                    mark[e.to] = 1;
                    stack.push_back(e.to);
                }
            }
        }
        return mark;
    }

private:
    struct Rec {
        Vertex to;
        std::size_t rev;
        std::int64_t cap;
    };

    bool bfs(Vertex s, Vertex t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<Vertex> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (const auto& e : adj_[v]) {
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[v] + 1;
                    q.push(e.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(Vertex v, Vertex t, std::int64_t limit) {
        if (v == t) return limit;
        for (std::size_t& i = next_[v]; i < adj_[v].size(); ++i) {
            Rec& e = adj_[v][i];
            if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
            if (std::int64_t got = dfs(e.to, t, std::min(limit, e.cap)); got > 0) {
                e.cap -= got;
                adj_[e.to][e.rev].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<Rec>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace detail

/// Maximum flow value together with a minimum cut certifying it.
///
/// Capacities are scaled to integers by the lcm of their denominators. The
/// returned cut has the largest possible source side among all minimum cuts
/// (every vertex that cannot reach the sink in the final residual graph), which
/// makes it the lexicographically smallest minimum cut when X1 sorts first.
/// Throws SolverError(NoFiniteCut) when every s-t cut crosses an infinite arc.
inline MinCut max_flow_min_cut(const FlowNetwork& net) {
    std::int64_t scale = 1;
    for (const auto& a : net.arcs())
        if (!a.infinite) scale = detail::checked_lcm(scale, a.capacity.den());

    std::int64_t finite_total = 0;
    for (const auto& a : net.arcs())
        if (!a.infinite) finite_total = detail::checked_add(finite_total, detail::scaled(a.capacity, scale));
    const std::int64_t sentinel = detail::checked_add(finite_total, 1);

    detail::Dinic dinic(net.node_count());
    for (const auto& a : net.arcs())
        dinic.add_arc(a.tail, a.head, a.infinite ? sentinel : detail::scaled(a.capacity, scale));

    const std::int64_t flow = dinic.run(net.source(), net.sink());
    if (flow >= sentinel) throw SolverError(SolverErrorKind::NoFiniteCut, "every s-t cut crosses an infinite arc");

    const auto sink_side = dinic.reaches_sink(net.sink());
    Partition cut(net.node_count());
    for (Vertex v = 0; v < net.node_count(); ++v)
        if (sink_side[v]) cut[v] = Side::X2;
    return {Rational(flow, scale), std::move(cut)};
}

/// Minimum s-t cut of an undirected weighted graph: each edge becomes two
/// opposed arcs of equal capacity.
inline MinCut undirected_min_st_cut(const UndirectedGraph& g, Vertex s, Vertex t) {
    FlowNetwork net(g.vertex_count(), s, t);
    for (const auto& e : g.edges()) {
        net.add_arc(e.u, e.v, e.weight);
        net.add_arc(e.v, e.u, e.weight);
    }
    return max_flow_min_cut(net);
}

/// Total weight of undirected edges whose endpoints lie on different sides.
inline Rational undirected_cut_weight(const UndirectedGraph& g, const Partition& p) {
    require_size(p.size(), g.vertex_count(), "cut");
    Rational total;
    for (const auto& e : g.edges())
        if (p[e.u] != p[e.v]) total += e.weight;
    return total;
}

}  // namespace coordcut
