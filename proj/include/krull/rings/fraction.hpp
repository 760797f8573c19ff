#pragma once

#include "krull/intutil.hpp"

namespace krull {

/// Reduced fraction with positive denominator; the default value is 0/1.
struct Fraction {
    Int num{0};
    Int den{1};

    bool operator==(const Fraction&) const = default;
};

inline Fraction make_fraction(Int num, Int den) {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {std::move(num), std::move(den)};
}

inline Fraction fraction_add(const Fraction& a, const Fraction& b) {
    return make_fraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline Fraction fraction_sub(const Fraction& a, const Fraction& b) {
    return make_fraction(a.num * b.den - b.num * a.den, a.den * b.den);
}

inline Fraction fraction_mul(const Fraction& a, const Fraction& b) {
    return make_fraction(a.num * b.num, a.den * b.den);
}

inline Fraction fraction_div(const Fraction& a, const Fraction& b) {
    if (b.num == 0) throw DivisionByZero("division by the zero fraction");
    return make_fraction(a.num * b.den, a.den * b.num);
}

inline Fraction fraction_neg(const Fraction& a) { return {-a.num, a.den}; }

inline bool fraction_less(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
}

inline std::string fraction_to_string(const Fraction& a) {
    if (a.den == 1) return a.num.get_str();
    return a.num.get_str() + "/" + a.den.get_str();
}

} // namespace krull
