#pragma once

#include <vector>

#include "coordcut/flow.hpp"
#include "coordcut/mwdp.hpp"

namespace coordcut {

/// Undirected cut network H for an all-Property-(a) instance.
///
/// Vertices 0..n-1 are the instance vertices, `source()` is n and `sink()` is
/// n+1. `raw` carries the accumulated weights w before the shift; `shifted`
/// is the same graph with theta subtracted from every s/t-incident edge (w*).
struct CutNetwork {
    UndirectedGraph raw;
    UndirectedGraph shifted;
    Rational theta;
    std::size_t n = 0;

    Vertex source() const { return n; }
    Vertex sink() const { return n + 1; }

    /// w*-weight of the H-cut induced by a partition of the instance vertices
    /// (s joins X1, t joins X2).
    Rational cut_weight(const Partition& p) const {
        require_size(p.size(), n, "partition");
        Partition full(n + 2);
        for (Vertex v = 0; v < n; ++v) full[v] = p[v];
        full[sink()] = Side::X2;
        return undirected_cut_weight(shifted, full);
    }
};

inline CutNetwork build_cut_network(const MwdpInstance& inst) {
    const std::size_t n = inst.vertex_count();
    const Vertex s = n;
    const Vertex t = n + 1;

    std::vector<Rational> s_weight(n), t_weight(n);
    std::vector<Edge> inner;
    inner.reserve(inst.arc_count());
    for (const auto& a : inst.arcs()) {
        const Matrix2& m = a.m;
        if (!m.property_a())
            throw SolverError(SolverErrorKind::NotPropertyA, "matrix " + m.str() + " on arc " +
                                                                 std::to_string(a.tail) + "->" +
                                                                 std::to_string(a.head) + " violates m11+m22>=m12+m21");
        const Rational half = a.c * Rational(1, 2);
        inner.push_back({a.tail, a.head, half * (m.m11 + m.m22 - m.m12 - m.m21)});
        s_weight[a.tail] += half * -m.m22;
        s_weight[a.head] += half * -m.m22;
        t_weight[a.tail] += half * (m.m21 - m.m11 - m.m12);
        t_weight[a.head] += half * (m.m12 - m.m11 - m.m21);
    }

    Rational theta;
    for (Vertex v = 0; v < n; ++v) {
        const Rational low = min(s_weight[v], t_weight[v]);
        if (v == 0 || low < theta) theta = low;
    }

    std::vector<Edge> raw = inner;
    std::vector<Edge> shifted = std::move(inner);
    for (Vertex v = 0; v < n; ++v) {
        raw.push_back({s, v, s_weight[v]});
        raw.push_back({v, t, t_weight[v]});
        shifted.push_back({s, v, s_weight[v] - theta});
        shifted.push_back({v, t, t_weight[v] - theta});
    }
    return {UndirectedGraph(n + 2, std::move(raw)), UndirectedGraph(n + 2, std::move(shifted)), theta, n};
}

/// Exact maximizer for all-Property-(a) instances via one minimum s-t cut.
/// Among all maximizers the lexicographically smallest side vector is returned.
inline SolveOutcome solve_mincut(const MwdpInstance& inst) {
    const CutNetwork net = build_cut_network(inst);
    const MinCut mc = undirected_min_st_cut(net.shifted, net.source(), net.sink());

    Partition p(inst.vertex_count());
    for (Vertex v = 0; v < inst.vertex_count(); ++v) p[v] = mc.cut[v];

    SolveOutcome out;
    out.value = partition_value(inst, p);
    out.partition = std::move(p);
    out.method = SolveMethod::MinCut;
    out.exact = true;
    out.audit = CutAudit{mc.value, net.theta};
    return out;
}

}  // namespace coordcut
