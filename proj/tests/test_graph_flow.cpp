#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace coordcut;

namespace {

/// Cheapest s-t cut by enumeration, and the lexicographically smallest side
/// vector attaining it.
std::optional<std::pair<Rational, Partition>> brute_min_cut(const FlowNetwork& net) {
    const std::size_t n = net.node_count();
    std::optional<Rational> best;
    Partition arg;
    for (std::uint64_t key = 0; key < (std::uint64_t{1} << n); ++key) {
        Partition p(n);
        for (Vertex i = 0; i < n; ++i)
            if ((key >> (n - 1 - i)) & 1U) p[i] = Side::X2;
        if (p[net.source()] != Side::X1 || p[net.sink()] != Side::X2) continue;
        Rational cap;
        bool infinite = false;
        for (const auto& a : net.arcs()) {
            if (p[a.tail] != Side::X1 || p[a.head] != Side::X2) continue;
            if (a.infinite) infinite = true;
            cap += a.capacity;
        }
        if (infinite) continue;
        if (!best || cap < *best) {
            best = cap;
            arg = p;
        }
    }
    if (!best) return std::nullopt;
    return std::make_pair(*best, arg);
}

}  // namespace

TEST(UndirectedGraph, RejectsLoopsAndParallelEdges) {
    EXPECT_THROW(UndirectedGraph::from_pairs(3, {{0, 0}}), InvalidInput);
    EXPECT_THROW(UndirectedGraph::from_pairs(3, {{0, 1}, {1, 0}}), InvalidInput);
    EXPECT_THROW(UndirectedGraph::from_pairs(3, {{0, 3}}), InvalidInput);
    const auto g = UndirectedGraph::from_pairs(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(g.degree(1), 2U);
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(OrientedDigraph, RejectsTwoCycles) {
    EXPECT_THROW(OrientedDigraph(2, {{0, 1}, {1, 0}}), InvalidInput);
    EXPECT_THROW(OrientedDigraph(2, {{0, 1}, {0, 1}}), InvalidInput);
    EXPECT_NO_THROW(OrientedDigraph(3, {{0, 1}, {1, 2}, {2, 0}}));
}

TEST(Components, SortedAndOrderedBySmallestVertex) {
    const auto g = UndirectedGraph::from_pairs(6, {{4, 1}, {5, 3}, {3, 0}});
    const auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 3U);
    EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 3, 5}));
    EXPECT_EQ(comps[1], (std::vector<Vertex>{1, 4}));
    EXPECT_EQ(comps[2], (std::vector<Vertex>{2}));
}

TEST(CliqueBlockGraph, CountsMatchMaterializedGraph) {
    oracle::Gen gen(7);
    const CliqueBlockGraph g(9, {{0, 1, 2, 3}, {5, 6, 7}}, {{3, 4, 1}, {4, 5, 1}, {8, 0, 1}, {2, 7, 1}});
    const UndirectedGraph full = g.to_undirected();
    EXPECT_EQ(g.edge_count(), full.edge_count());
    for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(g.degree(v), full.degree(v));
    for (int trial = 0; trial < 50; ++trial) {
        StrategyProfile s(9);
        for (auto& a : s) a = gen.coin() ? Action::two : Action::one;
        const auto a = neighbor_side_counts(g, s);
        const auto b = neighbor_side_counts(full, s);
        for (Vertex v = 0; v < 9; ++v) {
            EXPECT_EQ(a[v].ones, b[v].ones);
            EXPECT_EQ(a[v].twos, b[v].twos);
        }
    }
    EXPECT_THROW(CliqueBlockGraph(4, {{0, 1, 2}}, {{0, 2, 1}}), InvalidInput);
}

TEST(MaxFlow, TextbookNetwork) {
    FlowNetwork net(4, 0, 3);
    net.add_arc(0, 1, 3);
    net.add_arc(0, 2, 2);
    net.add_arc(1, 2, 1);
    net.add_arc(1, 3, 2);
    net.add_arc(2, 3, 3);
    const MinCut mc = max_flow_min_cut(net);
    EXPECT_EQ(mc.value, Rational(5));
    EXPECT_EQ(cut_capacity(net, mc.cut).value, Rational(5));
}

TEST(MaxFlow, RationalCapacities) {
    FlowNetwork net(3, 0, 2);
    net.add_arc(0, 1, Rational(1, 3));
    net.add_arc(1, 2, Rational(1, 2));
    net.add_arc(0, 2, Rational(1, 4));
    EXPECT_EQ(max_flow_min_cut(net).value, Rational(7, 12));
}

TEST(MaxFlow, InfiniteArcs) {
    FlowNetwork blocked(3, 0, 2);
    blocked.add_infinite_arc(0, 1);
    blocked.add_infinite_arc(1, 2);
    try {
        max_flow_min_cut(blocked);
        FAIL() << "expected NoFiniteCut";
    } catch (const SolverError& e) {
        EXPECT_EQ(e.kind(), SolverErrorKind::NoFiniteCut);
    }

    FlowNetwork net(3, 0, 2);
    net.add_infinite_arc(0, 1);
    net.add_arc(1, 2, 4);
    net.add_arc(0, 2, 1);
    const MinCut mc = max_flow_min_cut(net);
    EXPECT_EQ(mc.value, Rational(5));
    EXPECT_EQ(mc.cut[1], Side::X1);
}

TEST(MaxFlow, MatchesEnumerationAndPicksLexSmallestCut) {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(2, 8));
        FlowNetwork net(n, 0, n - 1);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                if (u == v || !gen.coin(0.4)) continue;
                if (gen.coin(0.05))
                    net.add_infinite_arc(u, v);
                else
                    net.add_arc(u, v, gen.rational(0, 3));
            }
        const auto expect = brute_min_cut(net);
        if (!expect) {
            try {
                max_flow_min_cut(net);
                ADD_FAILURE() << "expected NoFiniteCut";
            } catch (const SolverError& e) {
                EXPECT_EQ(e.kind(), SolverErrorKind::NoFiniteCut);
            }
            continue;
        }
        const MinCut got = max_flow_min_cut(net);
        EXPECT_EQ(got.value, expect->first);
        EXPECT_EQ(got.cut, expect->second);
    }
}

TEST(MaxFlow, UndirectedCut) {
    const auto g = UndirectedGraph(4, {{0, 1, 2}, {1, 3, 1}, {0, 2, 1}, {2, 3, 5}});
    const MinCut mc = undirected_min_st_cut(g, 0, 3);
    EXPECT_EQ(mc.value, Rational(2));
    EXPECT_EQ(undirected_cut_weight(g, mc.cut), Rational(2));
}
