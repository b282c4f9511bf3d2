#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace chromix {

// Exact non-negative rational, always reduced, den > 0.  Magnitudes stay
// tiny (edge / vertex counts), so int64 with __int128 comparisons is ample.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;

    Rational(std::int64_t n, std::int64_t d = 1) :
        num(n),
        den(d)
    {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend auto operator==(const Rational & a, const Rational & b) -> bool
    {
        return a.num == b.num && a.den == b.den;
    }

    friend auto operator<(const Rational & a, const Rational & b) -> bool
    {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }

    friend auto operator<=(const Rational & a, const Rational & b) -> bool
    {
        return (__int128)a.num * b.den <= (__int128)b.num * a.den;
    }

    auto str() const -> std::string
    {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace chromix
