#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coordcut/errors.hpp"
#include "coordcut/graph.hpp"
#include "coordcut/rational.hpp"
#include "coordcut/types.hpp"

namespace coordcut {

/// 2x2 payoff matrix; the row is the side of an arc's tail, the column the side
/// of its head.
struct Matrix2 {
    Rational m11, m12, m21, m22;

    const Rational& at(Side row, Side col) const {
        if (row == Side::X1) return col == Side::X1 ? m11 : m12;
        return col == Side::X1 ? m21 : m22;
    }
    const Rational& at(Action row, Action col) const { return at(to_side(row), to_side(col)); }

    Matrix2 transposed() const { return {m11, m21, m12, m22}; }

    Rational max_entry() const { return max(max(m11, m12), max(m21, m22)); }

    /// m11 + m22 >= m12 + m21
    bool property_a() const { return m11 + m22 >= m12 + m21; }
    /// m11 is a maximum entry
    bool property_b() const { return m11 == max_entry(); }
    /// m22 is a maximum entry
    bool property_c() const { return m22 == max_entry(); }

    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
        return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
    }
    friend Matrix2 operator*(const Rational& k, const Matrix2& a) {
        return {k * a.m11, k * a.m12, k * a.m21, k * a.m22};
    }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;

    std::string str() const {
        return "[[" + m11.str() + "," + m12.str() + "],[" + m21.str() + "," + m22.str() + "]]";
    }
};

struct MwdpArc {
    Vertex tail = 0;
    Vertex head = 0;
    Rational c = 1;
    Matrix2 m;
};

/// Oriented digraph with a positive weight and a 2x2 matrix on every arc.
class MwdpInstance {
public:
    MwdpInstance() = default;

    MwdpInstance(std::size_t n, std::vector<MwdpArc> arcs) : n_(n), arcs_(std::move(arcs)) {
        std::vector<Arc> plain;
        plain.reserve(arcs_.size());
        for (const auto& a : arcs_) {
            if (a.c.sign() <= 0)
                throw InvalidInput("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                                   " has non-positive weight " + a.c.str());
            plain.push_back({a.tail, a.head});
        }
        digraph_ = OrientedDigraph(n_, std::move(plain));
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<MwdpArc>& arcs() const { return arcs_; }
    const OrientedDigraph& digraph() const { return digraph_; }

private:
    std::size_t n_ = 0;
    std::vector<MwdpArc> arcs_;
    OrientedDigraph digraph_;
};

/// w^P(D): sum over arcs of c(uv) * m[side(u)][side(v)].
inline Rational partition_value(const MwdpInstance& inst, const Partition& p) {
    require_size(p.size(), inst.vertex_count(), "partition");
    Rational total;
    for (const auto& a : inst.arcs()) total += a.c * a.m.at(p[a.tail], p[a.head]);
    return total;
}

enum class FamilyTag { AllA, AllB, AllC, Hard };

inline const char* to_string(FamilyTag t) {
    switch (t) {
        case FamilyTag::AllA: return "AllA";
        case FamilyTag::AllB: return "AllB";
        case FamilyTag::AllC: return "AllC";
        case FamilyTag::Hard: return "Hard";
    }
    return "?";
}

struct MatrixProperties {
    bool a = false;
    bool b = false;
    bool c = false;
};

inline MatrixProperties properties_of(const Matrix2& m) { return {m.property_a(), m.property_b(), m.property_c()}; }

struct FamilyClass {
    FamilyTag tag = FamilyTag::Hard;
    bool all_a = true;
    bool all_b = true;
    bool all_c = true;
    std::vector<MatrixProperties> per_arc;  ///< aligned with inst.arcs()
};

/// Dichotomy classification. Tag priority is AllB, AllC, AllA; an instance may
/// satisfy several all-flags at once and any of them yields a polynomial solver.
inline FamilyClass classify_family(const MwdpInstance& inst) {
    FamilyClass fc;
    fc.per_arc.reserve(inst.arc_count());
    for (const auto& a : inst.arcs()) {
        const auto props = properties_of(a.m);
        fc.all_a = fc.all_a && props.a;
        fc.all_b = fc.all_b && props.b;
        fc.all_c = fc.all_c && props.c;
        fc.per_arc.push_back(props);
    }
    if (fc.all_b)
        fc.tag = FamilyTag::AllB;
    else if (fc.all_c)
        fc.tag = FamilyTag::AllC;
    else if (fc.all_a)
        fc.tag = FamilyTag::AllA;
    else
        fc.tag = FamilyTag::Hard;
    return fc;
}

enum class SolveMethod { TrivialAllX1, TrivialAllX2, MinCut, Exact, LocalSearch };

inline const char* to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::TrivialAllX1: return "TrivialAllX1";
        case SolveMethod::TrivialAllX2: return "TrivialAllX2";
        case SolveMethod::MinCut: return "MinCut";
        case SolveMethod::Exact: return "Exact";
        case SolveMethod::LocalSearch: return "LocalSearch";
    }
    return "?";
}

/// Min-cut audit trail: cut_value == -value - n * theta.
struct CutAudit {
    Rational cut_value;
    Rational theta;
};

struct SolveOutcome {
    Partition partition;
    Rational value;
    SolveMethod method = SolveMethod::Exact;
    bool exact = true;
    std::optional<CutAudit> audit;
};

}  // namespace coordcut
