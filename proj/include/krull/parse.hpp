#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "krull/ring_ops.hpp"
#include "krull/rings/fp.hpp"
#include "krull/rings/gaussian.hpp"
#include "krull/rings/integers.hpp"
#include "krull/rings/localized.hpp"
#include "krull/rings/prime_field_poly.hpp"
#include "krull/rings/rationals.hpp"

namespace krull {

/// Whitespace-insensitive scanner over an input literal.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool try_eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* grammar) {
        if (!try_eat(c))
            fail(std::string("expected '") + c + "' in " + grammar);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
    }
};

inline Int parse_digits(Cursor& cur) {
    cur.skip_ws();
    std::string digits;
    while (cur.pos < cur.text.size() && cur.text[cur.pos] >= '0' && cur.text[cur.pos] <= '9')
        digits += cur.text[cur.pos++];
    if (digits.empty()) cur.fail("expected digits");
    return Int(digits, 10);
}

inline Int parse_signed_int(Cursor& cur) {
    bool neg = cur.try_eat('-');
    if (!neg) cur.try_eat('+');
    Int v = parse_digits(cur);
    return neg ? Int(-v) : v;
}

inline int parse_exponent(Cursor& cur, const Capacity& cap) {
    Int e = parse_digits(cur);
    if (e > cap.degree_max)
        throw CapacityError("exponent " + e.get_str() + " exceeds the degree guard of " +
                            std::to_string(cap.degree_max));
    return static_cast<int>(mpz_get_ui(e.get_mpz_t()));
}

// --- element grammars -------------------------------------------------------

/// INTEGERS: -?[0-9]+
inline Int parse_element(const IntegerRing&, Cursor& cur) { return parse_signed_int(cur); }

/// RATIONALS / LOCALIZED: -?[0-9]+(/[0-9]+)?
inline Fraction parse_element(const RationalRing& ring, Cursor& cur) {
    Int num = parse_signed_int(cur);
    if (cur.try_eat('/')) return ring.make(std::move(num), parse_digits(cur));
    return ring.make(std::move(num), Int(1));
}

inline Fraction parse_element(const LocalizedRing& ring, Cursor& cur) {
    Int num = parse_signed_int(cur);
    if (cur.try_eat('/')) return ring.make(std::move(num), parse_digits(cur));
    return ring.make(std::move(num), Int(1));
}

namespace detail {

/// One Gaussian component: [sign] (digits ['i'] | 'i'); value and imaginary flag.
inline std::pair<Int, bool> parse_gaussian_part(Cursor& cur) {
    bool neg = cur.try_eat('-');
    if (!neg) cur.try_eat('+');
    cur.skip_ws();
    Int v(1);
    bool have_digits = false;
    if (cur.pos < cur.text.size() && cur.text[cur.pos] >= '0' && cur.text[cur.pos] <= '9') {
        v = parse_digits(cur);
        have_digits = true;
    }
    bool imag = false;
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == 'i') {
        ++cur.pos;
        imag = true;
    }
    if (!have_digits && !imag) cur.fail("expected a Gaussian integer component");
    return {neg ? Int(-v) : v, imag};
}

inline GaussianInt parse_gaussian_body(Cursor& cur) {
    GaussianInt out;
    auto [v1, imag1] = parse_gaussian_part(cur);
    (imag1 ? out.im : out.re) = v1;
    cur.skip_ws();
    if (cur.peek() == '+' || cur.peek() == '-') {
        auto [v2, imag2] = parse_gaussian_part(cur);
        if (imag1 == imag2) cur.fail("Gaussian integer with two " + std::string(imag1 ? "imaginary" : "real") + " parts");
        (imag2 ? out.im : out.re) = v2;
    }
    return out;
}

} // namespace detail

/// GAUSSIAN: (a+bi), (a-bi), (a), (bi); bare forms accepted for round-trips.
inline GaussianInt parse_element(const GaussianRing&, Cursor& cur) {
    if (cur.try_eat('(')) {
        GaussianInt v = detail::parse_gaussian_body(cur);
        cur.expect(')', "the Gaussian element grammar");
        return v;
    }
    return detail::parse_gaussian_body(cur);
}

// --- polynomial grammar ------------------------------------------------------
// poly := term (('+'|'-') term)*
// term := coeff ('*'? var ('^' nat)?)? | var ('^' nat)?
// A leading sign is accepted so printed canonical forms round-trip.

/// Coefficient literals per ring (signs belong to the term separators).
inline Int parse_coefficient(const IntegerRing&, Cursor& cur) { return parse_digits(cur); }
inline Int parse_coefficient(const Fp& fp, Cursor& cur) { return fp.reduce(parse_digits(cur)); }

inline Fraction parse_coefficient(const RationalRing& ring, Cursor& cur) {
    Int num = parse_digits(cur);
    if (cur.try_eat('/')) return ring.make(std::move(num), parse_digits(cur));
    return ring.make(std::move(num), Int(1));
}

inline Fraction parse_coefficient(const LocalizedRing& ring, Cursor& cur) {
    Int num = parse_digits(cur);
    if (cur.try_eat('/')) return ring.make(std::move(num), parse_digits(cur));
    return ring.make(std::move(num), Int(1));
}

inline GaussianInt parse_coefficient(const GaussianRing&, Cursor& cur) {
    if (cur.try_eat('(')) {
        GaussianInt v = detail::parse_gaussian_body(cur);
        cur.expect(')', "the Gaussian coefficient grammar");
        return v;
    }
    return {parse_digits(cur), Int(0)};
}

template <typename R>
PolyOf<R> parse_poly_body(const R& ring, Cursor& cur, char var, const Capacity& cap = {});

/// FINITE_FIELD_POLY: bracketed t-polynomials such as [t^2+t+1], [1], [t].
inline Polynomial<Int> parse_element(const PrimeFieldPolyRing& ring, Cursor& cur) {
    cur.expect('[', "the finite-field element grammar");
    auto v = parse_poly_body(ring.coeff_field(), cur, 't');
    cur.expect(']', "the finite-field element grammar");
    return v;
}

inline Polynomial<Int> parse_coefficient(const PrimeFieldPolyRing& ring, Cursor& cur) {
    if (cur.peek() == '[') return parse_element(ring, cur);
    return Polynomial<Int>::constant(ring.coeff_field(), ring.coeff_field().reduce(parse_digits(cur)));
}

template <typename R>
PolyOf<R> parse_poly_body(const R& ring, Cursor& cur, char var, const Capacity& cap) {
    using E = typename R::Element;
    std::vector<E> acc;
    bool negative = cur.try_eat('-');
    for (;;) {
        cur.skip_ws();
        E coeff = ring.one();
        bool have_coeff = false;
        const char c = cur.peek();
        if ((c >= '0' && c <= '9') || c == '(' || c == '[') {
            coeff = parse_coefficient(ring, cur);
            have_coeff = true;
            cur.try_eat('*');
        }
        int exp = 0;
        if (cur.peek() == var) {
            ++cur.pos;
            exp = 1;
            if (cur.try_eat('^')) exp = parse_exponent(cur, cap);
        } else if (!have_coeff) {
            cur.fail(std::string("expected a term of the polynomial grammar in ") + var);
        }
        if (negative) coeff = ring.neg(coeff);
        if (static_cast<std::size_t>(exp) >= acc.size()) acc.resize(static_cast<std::size_t>(exp) + 1, E{});
        acc[static_cast<std::size_t>(exp)] = ring.add(acc[static_cast<std::size_t>(exp)], coeff);
        cur.skip_ws();
        if (cur.try_eat('+')) negative = false;
        else if (cur.try_eat('-')) negative = true;
        else break;
    }
    return Polynomial<E>::from_coeffs(ring, std::move(acc));
}

// --- whole-string entry points ----------------------------------------------

template <PidRing R>
typename R::Element parse_elem(const R& ring, std::string_view text) {
    Cursor cur{text};
    auto v = parse_element(ring, cur);
    if (!cur.eof()) cur.fail("trailing characters after the element");
    return v;
}

template <PidRing R>
PolyOf<R> parse_poly(const R& ring, std::string_view text, const Capacity& cap = {}) {
    Cursor cur{text};
    auto v = parse_poly_body(ring, cur, 'x', cap);
    if (!cur.eof()) cur.fail("trailing characters after the polynomial");
    return v;
}

} // namespace krull
