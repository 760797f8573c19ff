#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krull/capacity.hpp"
#include "krull/descriptor.hpp"
#include "krull/prng.hpp"
#include "krull/rings/fraction.hpp"

namespace krull {

/// The localization of ZZ at a prime p: fractions a/b with p not dividing b.
/// A discrete valuation ring; the Euclidean size is the p-adic valuation and
/// the canonical associate of a nonzero element is p^v.
class LocalizedRing {
public:
    using Element = Fraction;
    static constexpr RingKind kKind = RingKind::LocalizedIntegers;
    static constexpr bool kIsField = false;
    static constexpr bool kInfinitelyManyIrreducibles = false;

    explicit LocalizedRing(Int p) : p_(std::move(p)) {
        if (!is_prime_trial(p_)) throw DomainError("localization prime " + p_.get_str() + " is not a prime");
    }

    const Int& prime() const { return p_; }

    RingDescriptor descriptor() const { return RingDescriptor::localized_integers(p_); }
    std::string name() const { return "Zloc(" + p_.get_str() + ")"; }

    /// Builds an element and rejects denominators divisible by p.
    Element make(Int num, Int den) const {
        Fraction f = make_fraction(std::move(num), std::move(den));
        if (f.den % p_ == 0)
            throw DomainError("denominator " + f.den.get_str() + " of " + fraction_to_string(f) +
                              " is not coprime to " + p_.get_str());
        return f;
    }

    Element from_int(long v) const { return {Int(v), Int(1)}; }

    Element zero() const { return {}; }
    Element one() const { return {Int(1), Int(1)}; }
    Element add(const Element& a, const Element& b) const { return fraction_add(a, b); }
    Element sub(const Element& a, const Element& b) const { return fraction_sub(a, b); }
    Element mul(const Element& a, const Element& b) const { return fraction_mul(a, b); }
    Element neg(const Element& a) const { return fraction_neg(a); }

    bool is_zero(const Element& a) const { return a.num == 0; }
    bool is_one(const Element& a) const { return a.num == 1 && a.den == 1; }
    bool is_unit(const Element& a) const { return a.num != 0 && a.num % p_ != 0; }
    bool is_negative(const Element& a) const { return a.num < 0; }
    bool less(const Element& a, const Element& b) const { return fraction_less(a, b); }

    Element unit_inverse(const Element& a) const {
        if (!is_unit(a)) throw DomainError("unit inverse of nonunit " + fraction_to_string(a) + " in " + name());
        return make_fraction(a.den, a.num);
    }

    /// p-adic valuation of a nonzero element (the denominator is coprime to p).
    long valuation(const Element& a) const {
        if (a.num == 0) throw ZeroElement("valuation of zero");
        long v = 0;
        Int n = a.num;
        while (n % p_ == 0) {
            n /= p_;
            ++v;
        }
        return v;
    }

    Int euclidean_size(const Element& a) const { return Int(valuation(a)); }

    /// (a/b, 0) when v(a) >= v(b), else (0, a).
    std::pair<Element, Element> divmod(const Element& a, const Element& b) const {
        if (b.num == 0) throw DivisionByZero("division by zero in " + name());
        if (a.num == 0) return {zero(), zero()};
        if (valuation(a) >= valuation(b)) return {fraction_div(a, b), zero()};
        return {zero(), a};
    }

    Element exact_div(const Element& a, const Element& b) const {
        auto [q, r] = divmod(a, b);
        if (!is_zero(r))
            throw DomainError("exact division failure: " + fraction_to_string(b) + " does not divide " +
                              fraction_to_string(a) + " in " + name());
        return q;
    }

    Element gcd(const Element& a, const Element& b) const {
        if (a.num == 0 && b.num == 0) throw BothZero("gcd(0, 0) is undefined");
        if (a.num == 0) return canonical_associate(b).canonical;
        if (b.num == 0) return canonical_associate(a).canonical;
        const long v = std::min(valuation(a), valuation(b));
        return power_of_p(v);
    }

    UnitDecomp<Element> canonical_associate(const Element& a) const {
        if (a.num == 0) throw ZeroElement("canonical associate of zero");
        const long v = valuation(a);
        Element canon = power_of_p(v);
        return {fraction_div(a, canon), std::move(canon)};
    }

    bool is_irreducible(const Element& a, const Capacity& = {}) const {
        return a.num != 0 && valuation(a) == 1;
    }

    /// num * den^{-1} mod p as the canonical integer representative;
    /// pre: p irreducible (any associate of the ring's prime).
    Element residue_reduce(const Element& a, const Element&) const {
        Int n;
        mpz_fdiv_r(n.get_mpz_t(), a.num.get_mpz_t(), p_.get_mpz_t());
        Int d;
        mpz_fdiv_r(d.get_mpz_t(), a.den.get_mpz_t(), p_.get_mpz_t());
        Int g, s;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, d.get_mpz_t(), p_.get_mpz_t());
        Int r;
        Int prod = n * s;
        mpz_fdiv_r(r.get_mpz_t(), prod.get_mpz_t(), p_.get_mpz_t());
        return {std::move(r), Int(1)};
    }

    Int residue_field_size(const Element&) const { return p_; }

    std::vector<Element> residue_transversal(const Element&, const Capacity& cap = {}) const {
        if (p_ > Int(static_cast<unsigned long>(cap.quotient_max)))
            throw CapacityError("residue transversal of size " + p_.get_str() + " exceeds the quotient guard");
        std::vector<Element> out;
        for (Int k = 0; k < p_; ++k) out.push_back({k, Int(1)});
        return out;
    }

    /// Exactly one irreducible class: p itself.
    class IrreducibleStream {
    public:
        explicit IrreducibleStream(Int p) : p_(std::move(p)) {}
        std::optional<Element> next() {
            if (done_) return std::nullopt;
            done_ = true;
            return Element{p_, Int(1)};
        }

    private:
        Int p_;
        bool done_ = false;
    };

    IrreducibleStream irreducible_stream(const Capacity& = {}) const { return IrreducibleStream(p_); }

    std::string to_string(const Element& a) const { return fraction_to_string(a); }
    std::string coeff_to_string(const Element& a) const { return fraction_to_string(a); }
    bool coeff_needs_star(const Element& a) const { return a.den != 1; }

    Element random_element(SplitMix64& rng, long long bound) const {
        Int num(static_cast<long>(rng.range(-bound, bound)));
        for (;;) {
            Int den(static_cast<long>(rng.range(1, std::max<long long>(bound, 1))));
            if (den % p_ != 0) return make_fraction(std::move(num), std::move(den));
        }
    }

private:
    Element power_of_p(long v) const { return {pow_int(p_, static_cast<unsigned long>(v)), Int(1)}; }

    Int p_;
};

} // namespace krull
