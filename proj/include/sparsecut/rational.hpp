#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace sparsecut {

// Exact nonnegative-denominator fraction. Only used for comparisons, so no
// arithmetic beyond what the callers need.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }

    Rational reduced() const {
        if (num == 0) return {0, 1};
        auto g = std::gcd(num, den);
        return {num / g, den / g};
    }

    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // den > 0 on both sides; values here are small so no overflow
        return a.num * b.den <=> b.num * a.den;
    }
    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }

    std::string str() const {
        auto r = reduced();
        return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sparsecut
