#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <charconv>

namespace coordcut {

class RationalOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Exact rational number over 64-bit integers.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Intermediate products are
/// formed in 128 bits and reduced before narrowing; a result that still does not
/// fit throws RationalOverflow instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool is_integer() const { return den_ == 1; }
    constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const {
        if (num_ == INT64_MIN) throw RationalOverflow("rational negation overflow");
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return from_wide(__int128(a.num_) + b.num_, a.den_);
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const __int128 lhs = __int128(a.num_) * (b.den_ / g);
        const __int128 rhs = __int128(b.num_) * (a.den_ / g);
        return from_wide(lhs + rhs, __int128(a.den_ / g) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.num_ == 0 || b.num_ == 0) return Rational{};
        // cross-reduce first so the 128-bit product rarely needs a big gcd
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        return from_wide(__int128(a.num_ / g1) * (b.num_ / g2), __int128(a.den_ / g2) * (b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        Rational inv;
        inv.num_ = b.sign() * b.den_;
        inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
        return a * inv;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = __int128(a.num_) * b.den_;
        const __int128 rhs = __int128(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    /// Largest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    /// Smallest integer >= value.
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text) {
        auto parse_int = [&](std::string_view part) {
            std::int64_t v = 0;
            if (!part.empty() && part.front() == '+') part.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
            if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
                throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
            return v;
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        const std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(text.substr(0, slash)), den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void assign(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        *this = from_wide(num, den);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_wide(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) return Rational{};
        const __int128 g = gcd128(num, den);
        num /= g;
        den /= g;
        if (num > INT64_MAX || num < -INT64_MAX || den > INT64_MAX)
            throw RationalOverflow("rational arithmetic overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw RationalOverflow("integer scaling overflow");
    return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw RationalOverflow("integer scaling overflow");
    return out;
}

inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    return checked_mul(a / std::gcd(a, b), b);
}

/// Exact integer value of r * scale; scale must be a multiple of r.den().
inline std::int64_t scaled(const Rational& r, std::int64_t scale) {
    return checked_mul(r.num(), scale / r.den());
}

}  // namespace detail

}  // namespace coordcut
