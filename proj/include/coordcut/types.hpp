#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coordcut/errors.hpp"

namespace coordcut {

using Vertex = std::size_t;

/// Side of a two-way split. X1 sorts before X2, so comparing side vectors with
/// operator< is the lexicographic tie-break used by every exact solver.
enum class Side : std::uint8_t { X1 = 0, X2 = 1 };

/// Binary action of a player. `one` corresponds to X1, `two` to X2.
enum class Action : std::uint8_t { one = 0, two = 1 };

inline Side other(Side s) { return s == Side::X1 ? Side::X2 : Side::X1; }
inline Action other(Action a) { return a == Action::one ? Action::two : Action::one; }
inline Side to_side(Action a) { return a == Action::one ? Side::X1 : Side::X2; }
inline Action to_action(Side s) { return s == Side::X1 ? Action::one : Action::two; }

/// Two-way split (X1, X2) of the vertices 0..n-1.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::size_t n, Side fill = Side::X1) : sides_(n, fill) {}
    explicit Partition(std::vector<Side> sides) : sides_(std::move(sides)) {}

    /// Bit i of `mask` set means vertex i is in X2.
    static Partition from_mask(std::size_t n, std::uint64_t mask) {
        Partition p(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1U) p.sides_[i] = Side::X2;
        return p;
    }

    std::size_t size() const { return sides_.size(); }
    Side operator[](Vertex v) const { return sides_[v]; }
    Side& operator[](Vertex v) { return sides_[v]; }
    void flip(Vertex v) { sides_[v] = other(sides_[v]); }

    const std::vector<Side>& sides() const { return sides_; }

    std::vector<Vertex> members(Side s) const {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < sides_.size(); ++i)
            if (sides_[i] == s) out.push_back(i);
        return out;
    }

    /// "0" for X1 and "1" for X2, vertex 0 first.
    std::string bits() const {
        std::string out(sides_.size(), '0');
        for (std::size_t i = 0; i < sides_.size(); ++i)
            if (sides_[i] == Side::X2) out[i] = '1';
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.sides_ <=> b.sides_; }

private:
    std::vector<Side> sides_;
};

/// Pure strategy profile of a binary-action game.
using StrategyProfile = std::vector<Action>;

inline Partition to_partition(const StrategyProfile& s) {
    Partition p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) p[i] = to_side(s[i]);
    return p;
}

inline StrategyProfile to_profile(const Partition& p) {
    StrategyProfile s(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) s[i] = to_action(p[i]);
    return s;
}

inline StrategyProfile uniform_profile(std::size_t n, Action a) { return StrategyProfile(n, a); }

/// Bit i set means player i plays `two`.
inline StrategyProfile profile_from_mask(std::size_t n, std::uint64_t mask) {
    StrategyProfile s(n, Action::one);
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) s[i] = Action::two;
    return s;
}

inline std::string profile_bits(const StrategyProfile& s) { return to_partition(s).bits(); }

inline void require_size(std::size_t got, std::size_t want, const char* what) {
    if (got != want)
        throw InvalidInput(std::string(what) + ": expected length " + std::to_string(want) + ", got " +
                           std::to_string(got));
}

}  // namespace coordcut
