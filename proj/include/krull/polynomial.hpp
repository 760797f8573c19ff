#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krull/errors.hpp"

namespace krull {

/// Minimal coefficient-ring interface shared by the five PID instances, the
/// internal prime field, and the residue fields A/(p).
template <typename R>
concept CoeffRing = requires(const R& r, const typename R::Element& a, const typename R::Element& b) {
    { r.zero() } -> std::same_as<typename R::Element>;
    { r.one() } -> std::same_as<typename R::Element>;
    { r.add(a, b) } -> std::same_as<typename R::Element>;
    { r.sub(a, b) } -> std::same_as<typename R::Element>;
    { r.mul(a, b) } -> std::same_as<typename R::Element>;
    { r.neg(a) } -> std::same_as<typename R::Element>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.is_unit(a) } -> std::same_as<bool>;
};

template <typename R>
concept FieldCoeffRing = CoeffRing<R> && requires(const R& r, const typename R::Element& a) {
    { r.inv(a) } -> std::same_as<typename R::Element>;
};

/// Dense univariate polynomial, index = exponent. The zero polynomial stores
/// no coefficients; its degree is the nullopt sentinel (never -1), so degree
/// arithmetic on it fails loudly.
template <typename E>
class Polynomial {
public:
    Polynomial() = default;

    template <CoeffRing R>
    static Polynomial from_coeffs(const R& ring, std::vector<E> cs) {
        while (!cs.empty() && ring.is_zero(cs.back())) cs.pop_back();
        Polynomial p;
        p.c_ = std::move(cs);
        return p;
    }

    template <CoeffRing R>
    static Polynomial constant(const R& ring, E c) {
        std::vector<E> cs;
        cs.push_back(std::move(c));
        return from_coeffs(ring, std::move(cs));
    }

    template <CoeffRing R>
    static Polynomial monomial(const R& ring, E c, int exp) {
        std::vector<E> cs(static_cast<std::size_t>(exp) + 1, E{});
        cs.back() = std::move(c);
        return from_coeffs(ring, std::move(cs));
    }

    const std::vector<E>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    int degree_nonzero() const {
        if (c_.empty()) throw ZeroPolynomial("degree of the zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }

    E coeff(std::size_t i) const { return i < c_.size() ? c_[i] : E{}; }

    const E& leading() const {
        if (c_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<E> c_;
};

template <CoeffRing R>
using PolyOf = Polynomial<typename R::Element>;

template <CoeffRing R>
PolyOf<R> poly_one(const R& ring) {
    return PolyOf<R>::constant(ring, ring.one());
}

template <CoeffRing R>
PolyOf<R> poly_x(const R& ring) {
    return PolyOf<R>::monomial(ring, ring.one(), 1);
}

template <CoeffRing R>
PolyOf<R> poly_add(const R& ring, const PolyOf<R>& f, const PolyOf<R>& g) {
    using E = typename R::Element;
    std::vector<E> cs(std::max(f.coeffs().size(), g.coeffs().size()), E{});
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = ring.add(f.coeff(i), g.coeff(i));
    return Polynomial<E>::from_coeffs(ring, std::move(cs));
}

template <CoeffRing R>
PolyOf<R> poly_sub(const R& ring, const PolyOf<R>& f, const PolyOf<R>& g) {
    using E = typename R::Element;
    std::vector<E> cs(std::max(f.coeffs().size(), g.coeffs().size()), E{});
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = ring.sub(f.coeff(i), g.coeff(i));
    return Polynomial<E>::from_coeffs(ring, std::move(cs));
}

template <CoeffRing R>
PolyOf<R> poly_neg(const R& ring, const PolyOf<R>& f) {
    using E = typename R::Element;
    std::vector<E> cs(f.coeffs());
    for (auto& c : cs) c = ring.neg(c);
    return Polynomial<E>::from_coeffs(ring, std::move(cs));
}

template <CoeffRing R>
PolyOf<R> poly_mul(const R& ring, const PolyOf<R>& f, const PolyOf<R>& g) {
    using E = typename R::Element;
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<E> cs(f.coeffs().size() + g.coeffs().size() - 1, E{});
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (ring.is_zero(f.coeffs()[i])) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            cs[i + j] = ring.add(cs[i + j], ring.mul(f.coeffs()[i], g.coeffs()[j]));
    }
    return Polynomial<E>::from_coeffs(ring, std::move(cs));
}

template <CoeffRing R>
PolyOf<R> poly_scale(const R& ring, const typename R::Element& c, const PolyOf<R>& f) {
    using E = typename R::Element;
    std::vector<E> cs(f.coeffs());
    for (auto& x : cs) x = ring.mul(c, x);
    return Polynomial<E>::from_coeffs(ring, std::move(cs));
}

/// f * x^k.
template <CoeffRing R>
PolyOf<R> poly_shift(const R& ring, const PolyOf<R>& f, int k) {
    using E = typename R::Element;
    if (f.is_zero()) return {};
    std::vector<E> cs(static_cast<std::size_t>(k), E{});
    cs.insert(cs.end(), f.coeffs().begin(), f.coeffs().end());
    return Polynomial<E>::from_coeffs(ring, std::move(cs));
}

/// Long division over a field coefficient ring: a = b*q + r, deg r < deg b.
template <FieldCoeffRing R>
std::pair<PolyOf<R>, PolyOf<R>> poly_divmod_field(const R& ring, const PolyOf<R>& a, const PolyOf<R>& b) {
    using E = typename R::Element;
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const int db = b.degree_nonzero();
    if (a.is_zero() || *a.degree() < db) return {PolyOf<R>{}, a};
    const E lcinv = ring.inv(b.leading());
    std::vector<E> rem(a.coeffs());
    const int da = a.degree_nonzero();
    std::vector<E> q(static_cast<std::size_t>(da - db) + 1, E{});
    for (int k = da; k >= db; --k) {
        const E& top = rem[static_cast<std::size_t>(k)];
        if (ring.is_zero(top)) continue;
        E s = ring.mul(top, lcinv);
        q[static_cast<std::size_t>(k - db)] = s;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(k - db + j);
            rem[idx] = ring.sub(rem[idx], ring.mul(s, b.coeffs()[static_cast<std::size_t>(j)]));
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial<E>::from_coeffs(ring, std::move(q)), Polynomial<E>::from_coeffs(ring, std::move(rem))};
}

/// d | f over a field coefficient ring.
template <FieldCoeffRing R>
bool poly_divides_field(const R& ring, const PolyOf<R>& d, const PolyOf<R>& f) {
    return poly_divmod_field(ring, f, d).second.is_zero();
}

template <CoeffRing R>
struct PseudoDivision {
    typename R::Element scale;  // nonzero multiplier applied to the dividend
    PolyOf<R> quotient;
    PolyOf<R> remainder;        // zero or deg < deg divisor
};

/// Fraction-free division inside A[x]:
///   scale * f = g * quotient + remainder,
/// scale = lc(g)^max(deg f - deg g + 1, 0). When lc(g) is a unit this is the
/// ordinary division with scale normalized to 1.
template <CoeffRing R>
PseudoDivision<R> pseudo_divide(const R& ring, const PolyOf<R>& f, const PolyOf<R>& g) {
    using E = typename R::Element;
    if (g.is_zero()) throw DivisionByZero("pseudo-division by the zero polynomial");
    const int dg = g.degree_nonzero();
    if (f.is_zero() || *f.degree() < dg) return {ring.one(), PolyOf<R>{}, f};
    const int df = f.degree_nonzero();
    const E& d = g.leading();

    if (ring.is_unit(d)) {
        const E dinv = ring.unit_inverse(d);
        std::vector<E> rem(f.coeffs());
        std::vector<E> q(static_cast<std::size_t>(df - dg) + 1, E{});
        for (int k = df; k >= dg; --k) {
            const E& top = rem[static_cast<std::size_t>(k)];
            if (ring.is_zero(top)) continue;
            E s = ring.mul(top, dinv);
            q[static_cast<std::size_t>(k - dg)] = s;
            for (int j = 0; j <= dg; ++j) {
                auto idx = static_cast<std::size_t>(k - dg + j);
                rem[idx] = ring.sub(rem[idx], ring.mul(s, g.coeffs()[static_cast<std::size_t>(j)]));
            }
        }
        rem.resize(static_cast<std::size_t>(dg));
        return {ring.one(), Polynomial<E>::from_coeffs(ring, std::move(q)),
                Polynomial<E>::from_coeffs(ring, std::move(rem))};
    }

    // Classical pseudo-division.
    std::vector<E> rem(f.coeffs());
    std::vector<E> q(static_cast<std::size_t>(df - dg) + 1, E{});
    auto top_degree = [&](const std::vector<E>& v) {
        int i = static_cast<int>(v.size()) - 1;
        while (i >= 0 && ring.is_zero(v[static_cast<std::size_t>(i)])) --i;
        return i;
    };
    int e = df - dg + 1;
    int dr = top_degree(rem);
    while (dr >= dg) {
        E s = rem[static_cast<std::size_t>(dr)];
        for (auto& qc : q) qc = ring.mul(d, qc);
        q[static_cast<std::size_t>(dr - dg)] = ring.add(q[static_cast<std::size_t>(dr - dg)], s);
        for (auto& rc : rem) rc = ring.mul(d, rc);
        for (int j = 0; j <= dg; ++j) {
            auto idx = static_cast<std::size_t>(dr - dg + j);
            rem[idx] = ring.sub(rem[idx], ring.mul(s, g.coeffs()[static_cast<std::size_t>(j)]));
        }
        --e;
        dr = top_degree(rem);
    }
    E tail = ring.one();
    for (int i = 0; i < e; ++i) tail = ring.mul(tail, d);
    for (auto& qc : q) qc = ring.mul(tail, qc);
    for (auto& rc : rem) rc = ring.mul(tail, rc);
    E scale = ring.one();
    for (int i = 0; i < df - dg + 1; ++i) scale = ring.mul(scale, d);
    return {std::move(scale), Polynomial<E>::from_coeffs(ring, std::move(q)),
            Polynomial<E>::from_coeffs(ring, std::move(rem))};
}

template <CoeffRing R>
struct ContentSplit {
    typename R::Element content;  // canonical associate of the coefficient gcd
    PolyOf<R> primitive;          // f = content * primitive
};

/// Content and primitive part. Not meaningful over a field.
template <CoeffRing R>
ContentSplit<R> content_primitive(const R& ring, const PolyOf<R>& f) {
    using E = typename R::Element;
    if (f.is_zero()) throw ZeroPolynomial("content of the zero polynomial");
    if constexpr (R::kIsField)
        throw DomainError("content over a field is trivially a unit");
    E c = ring.zero();
    for (const auto& x : f.coeffs()) {
        if (ring.is_zero(x)) continue;
        c = ring.is_zero(c) ? ring.canonical_associate(x).canonical : ring.gcd(c, x);
    }
    std::vector<E> cs(f.coeffs());
    for (auto& x : cs) x = ring.exact_div(x, c);
    return {std::move(c), Polynomial<E>::from_coeffs(ring, std::move(cs))};
}

/// Exact value of f(num/den) in the fraction field, returned as a reduced
/// pair over A with canonical denominator.
template <CoeffRing R>
std::pair<typename R::Element, typename R::Element> evaluate_fraction(const R& ring, const PolyOf<R>& f,
                                                                      const typename R::Element& num,
                                                                      const typename R::Element& den) {
    using E = typename R::Element;
    if (ring.is_zero(den)) throw DivisionByZero("evaluation point with zero denominator");
    if (f.is_zero()) return {ring.zero(), ring.one()};
    const int d = f.degree_nonzero();
    std::vector<E> num_pow(static_cast<std::size_t>(d) + 1, ring.one());
    std::vector<E> den_pow(static_cast<std::size_t>(d) + 1, ring.one());
    for (int i = 1; i <= d; ++i) {
        num_pow[static_cast<std::size_t>(i)] = ring.mul(num_pow[static_cast<std::size_t>(i - 1)], num);
        den_pow[static_cast<std::size_t>(i)] = ring.mul(den_pow[static_cast<std::size_t>(i - 1)], den);
    }
    E vn = ring.zero();
    for (int i = 0; i <= d; ++i) {
        E term = ring.mul(f.coeffs()[static_cast<std::size_t>(i)],
                          ring.mul(num_pow[static_cast<std::size_t>(i)], den_pow[static_cast<std::size_t>(d - i)]));
        vn = ring.add(vn, term);
    }
    if (ring.is_zero(vn)) return {ring.zero(), ring.one()};
    E vd = den_pow[static_cast<std::size_t>(d)];
    E g = ring.gcd(vn, vd);
    vn = ring.exact_div(vn, g);
    vd = ring.exact_div(vd, g);
    auto dec = ring.canonical_associate(vd);
    vn = ring.mul(vn, ring.unit_inverse(dec.unit));
    return {std::move(vn), std::move(dec.canonical)};
}

/// Canonical grammar printer: descending powers, no zero terms, compact.
template <CoeffRing R>
std::string to_string(const R& ring, const PolyOf<R>& f, char var = 'x') {
    if (f.is_zero()) return "0";
    std::string out;
    for (int e = f.degree_nonzero(); e >= 0; --e) {
        auto c = f.coeff(static_cast<std::size_t>(e));
        if (ring.is_zero(c)) continue;
        const bool neg = ring.is_negative(c);
        if (neg) c = ring.neg(c);
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        const bool omit_coeff = e > 0 && ring.is_one(c);
        if (!omit_coeff) {
            out += ring.coeff_to_string(c);
            if (e > 0 && ring.coeff_needs_star(c)) out += '*';
        }
        if (e > 0) {
            out += var;
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
    }
    return out;
}

} // namespace krull
