#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <thread>
#include <vector>

#include "coordcut/cut_network.hpp"
#include "coordcut/mwdp.hpp"

namespace coordcut {

inline constexpr std::size_t kDefaultExactBudget = 24;

/// Solve trivially when every matrix has m11 (AllB) or m22 (AllC) as a maximum.
inline SolveOutcome solve_trivial(const MwdpInstance& inst, FamilyTag which) {
    const FamilyClass fc = classify_family(inst);
    SolveOutcome out;
    if (which == FamilyTag::AllB) {
        if (!fc.all_b) throw SolverError(SolverErrorKind::ClassificationMismatch, "instance is not AllB");
        out.partition = Partition(inst.vertex_count(), Side::X1);
        out.method = SolveMethod::TrivialAllX1;
    } else if (which == FamilyTag::AllC) {
        if (!fc.all_c) throw SolverError(SolverErrorKind::ClassificationMismatch, "instance is not AllC");
        out.partition = Partition(inst.vertex_count(), Side::X2);
        out.method = SolveMethod::TrivialAllX2;
    } else {
        throw SolverError(SolverErrorKind::ClassificationMismatch, "trivial solver needs AllB or AllC");
    }
    out.value = partition_value(inst, out.partition);
    out.exact = true;
    return out;
}

namespace detail {

/// Integer image of an instance: every c*m entry multiplied by a common scale.
struct ScaledInstance {
    struct Incidence {
        std::size_t arc;
        bool is_tail;
    };

    std::size_t n = 0;
    std::int64_t scale = 1;
    std::vector<Vertex> tail, head;
    std::vector<std::array<std::int64_t, 4>> table;  // index = 2*side(tail) + side(head)
    std::vector<std::vector<Incidence>> incident;

    explicit ScaledInstance(const MwdpInstance& inst) : n(inst.vertex_count()), incident(inst.vertex_count()) {
        std::vector<Matrix2> weighted;
        weighted.reserve(inst.arc_count());
        for (const auto& a : inst.arcs()) {
            weighted.push_back(a.c * a.m);
            for (const auto* r : {&weighted.back().m11, &weighted.back().m12, &weighted.back().m21,
                                  &weighted.back().m22})
                scale = checked_lcm(scale, r->den());
        }
        std::int64_t bound = 0;
        for (std::size_t i = 0; i < inst.arc_count(); ++i) {
            const auto& a = inst.arcs()[i];
            const auto& w = weighted[i];
            table.push_back({scaled(w.m11, scale), scaled(w.m12, scale), scaled(w.m21, scale), scaled(w.m22, scale)});
            std::int64_t largest = 0;
            for (auto x : table.back()) largest = std::max(largest, x < 0 ? -x : x);
            // any partial sum is bounded by `bound`, so the scans can use plain int64
            bound = checked_add(bound, largest);
            tail.push_back(a.tail);
            head.push_back(a.head);
            incident[a.tail].push_back({i, true});
            incident[a.head].push_back({i, false});
        }
    }

    std::int64_t value(const std::vector<std::uint8_t>& side) const {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < table.size(); ++i) total += table[i][2 * side[tail[i]] + side[head[i]]];
        return total;
    }

    /// Change in value when vertex v switches sides.
    std::int64_t flip_delta(const std::vector<std::uint8_t>& side, Vertex v) const {
        std::int64_t delta = 0;
        for (const auto& inc : incident[v]) {
            const std::size_t a = inc.arc;
            const std::uint8_t st = side[tail[a]];
            const std::uint8_t sh = side[head[a]];
            if (inc.is_tail)
                delta += table[a][2 * (1 - st) + sh] - table[a][2 * st + sh];
            else
                delta += table[a][2 * st + (1 - sh)] - table[a][2 * st + sh];
        }
        return delta;
    }
};

struct ScanBest {
    std::int64_t value = 0;
    std::uint64_t key = 0;  // vertex 0 is the most significant bit; X2 = 1
    bool found = false;

    void offer(std::int64_t v, std::uint64_t k) {
        if (!found || v > value || (v == value && k < key)) {
            value = v;
            key = k;
            found = true;
        }
    }
};

/// Gray-code scan over the free low vertices [0, free) while the rest keep the
/// sides encoded in `fixed_high`.
inline ScanBest scan_chunk(const ScaledInstance& si, std::size_t free, std::uint64_t fixed_high) {
    const std::size_t n = si.n;
    std::vector<std::uint8_t> side(n, 0);
    std::uint64_t key = 0;
    for (std::size_t i = free; i < n; ++i) {
        if ((fixed_high >> (i - free)) & 1U) {
            side[i] = 1;
            key |= std::uint64_t{1} << (n - 1 - i);
        }
    }
    ScanBest best;
    std::int64_t value = si.value(side);
    best.offer(value, key);
    const std::uint64_t count = std::uint64_t{1} << free;
    for (std::uint64_t step = 1; step < count; ++step) {
        const auto v = static_cast<Vertex>(std::countr_zero(step));
        value += si.flip_delta(side, v);
        side[v] ^= 1U;
        key ^= std::uint64_t{1} << (n - 1 - v);
        best.offer(value, key);
    }
    return best;
}

}  // namespace detail

/// Exhaustive maximization over all 2^n partitions (a partition and its
/// complement are different solutions). Ties go to the lexicographically
/// smallest side vector. `threads` only affects speed, never the answer.
inline SolveOutcome solve_exact(const MwdpInstance& inst, std::size_t budget = kDefaultExactBudget,
                                unsigned threads = 1) {
    const std::size_t n = inst.vertex_count();
    if (n > budget || n > 62)
        throw SolverError(SolverErrorKind::BudgetExceeded,
                          "exact scan needs n <= " + std::to_string(std::min<std::size_t>(budget, 62)) +
                              ", instance has n = " + std::to_string(n));

    const detail::ScaledInstance si(inst);
    std::size_t high_bits = 0;
    if (threads > 1) {
        while ((std::size_t{1} << high_bits) < std::size_t{4} * threads && high_bits + 8 < n) ++high_bits;
    }
    const std::size_t free = n - high_bits;
    const std::uint64_t chunks = std::uint64_t{1} << high_bits;

    std::vector<detail::ScanBest> results(chunks);
    if (chunks == 1) {
        results[0] = detail::scan_chunk(si, free, 0);
    } else {
        std::vector<std::thread> pool;
        const unsigned workers = std::min<std::uint64_t>(threads, chunks);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t c = w; c < chunks; c += workers) results[c] = detail::scan_chunk(si, free, c);
            });
        }
        for (auto& th : pool) th.join();
    }

    detail::ScanBest best;
    for (const auto& r : results) best.offer(r.value, r.key);

    Partition p(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((best.key >> (n - 1 - i)) & 1U) p[i] = Side::X2;

    SolveOutcome out;
    out.value = partition_value(inst, p);
    out.partition = std::move(p);
    out.method = SolveMethod::Exact;
    out.exact = true;
    return out;
}

/// Seeded 1-flip hill climbing. The all-X1 and all-X2 partitions are always
/// among the starts, followed by `restarts` uniformly random ones.
inline SolveOutcome solve_local_search(const MwdpInstance& inst, std::size_t restarts = 32, std::uint64_t seed = 0) {
    const std::size_t n = inst.vertex_count();
    const detail::ScaledInstance si(inst);
    std::mt19937_64 rng(seed);

    bool have_best = false;
    std::int64_t best_value = 0;
    std::vector<std::uint8_t> best_side(n, 0);

    auto climb = [&](std::vector<std::uint8_t> side) {
        std::int64_t value = si.value(side);
        for (;;) {
            std::int64_t best_gain = 0;
            Vertex best_v = n;
            for (Vertex v = 0; v < n; ++v) {
                const std::int64_t gain = si.flip_delta(side, v);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_v = v;
                }
            }
            if (best_v == n) break;
            side[best_v] ^= 1U;
            value += best_gain;
        }
        const bool better = !have_best || value > best_value ||
                            (value == best_value && std::lexicographical_compare(side.begin(), side.end(),
                                                                                 best_side.begin(), best_side.end()));
        if (better) {
            have_best = true;
            best_value = value;
            best_side = std::move(side);
        }
    };

    climb(std::vector<std::uint8_t>(n, 0));
    climb(std::vector<std::uint8_t>(n, 1));
    for (std::size_t r = 0; r < restarts; ++r) {
        std::vector<std::uint8_t> side(n);
        for (auto& s : side) s = static_cast<std::uint8_t>(rng() & 1U);
        climb(std::move(side));
    }

    Partition p(n);
    for (Vertex v = 0; v < n; ++v)
        if (best_side[v]) p[v] = Side::X2;
    SolveOutcome out;
    out.value = partition_value(inst, p);
    out.partition = std::move(p);
    out.method = SolveMethod::LocalSearch;
    out.exact = false;
    return out;
}

struct SolvePolicy {
    std::size_t budget = kDefaultExactBudget;
    std::size_t restarts = 32;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// Dispatch over the dichotomy: AllB/AllC trivially, AllA by min cut, and
/// everything else exhaustively within budget or heuristically beyond it.
inline SolveOutcome solve(const MwdpInstance& inst, const SolvePolicy& policy = {}) {
    const FamilyClass fc = classify_family(inst);
    switch (fc.tag) {
        case FamilyTag::AllB:
        case FamilyTag::AllC: return solve_trivial(inst, fc.tag);
        case FamilyTag::AllA: return solve_mincut(inst);
        case FamilyTag::Hard: break;
    }
    if (inst.vertex_count() <= policy.budget && inst.vertex_count() <= 62)
        return solve_exact(inst, policy.budget, policy.threads);
    return solve_local_search(inst, policy.restarts, policy.seed);
}

}  // namespace coordcut
