#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krull/capacity.hpp"
#include "krull/descriptor.hpp"
#include "krull/intutil.hpp"
#include "krull/prng.hpp"

namespace krull {

/// The ring of integers ZZ. Canonical associates are positive; the Euclidean
/// size is the absolute value and remainders are least nonnegative.
class IntegerRing {
public:
    using Element = Int;
    static constexpr RingKind kKind = RingKind::Integers;
    static constexpr bool kIsField = false;
    static constexpr bool kInfinitelyManyIrreducibles = true;

    RingDescriptor descriptor() const { return RingDescriptor::integers(); }
    std::string name() const { return "ZZ"; }

    Element zero() const { return Int(0); }
    Element one() const { return Int(1); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }

    bool is_zero(const Element& a) const { return a == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    bool is_unit(const Element& a) const { return a == 1 || a == -1; }
    bool is_negative(const Element& a) const { return a < 0; }
    bool less(const Element& a, const Element& b) const { return a < b; }

    Element unit_inverse(const Element& a) const {
        if (!is_unit(a)) throw DomainError("unit inverse of nonunit integer " + a.get_str());
        return a;
    }

    Int euclidean_size(const Element& a) const {
        if (a == 0) throw ZeroElement("Euclidean size of zero");
        return abs_int(a);
    }

    /// a = b*q + r with 0 <= r < |b|.
    std::pair<Element, Element> divmod(const Element& a, const Element& b) const {
        if (b == 0) throw DivisionByZero("integer division by zero");
        Int q, r;
        Int babs = abs_int(b);
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), babs.get_mpz_t());
        if (b < 0) q = -q;
        return {std::move(q), std::move(r)};
    }

    Element exact_div(const Element& a, const Element& b) const {
        auto [q, r] = divmod(a, b);
        if (r != 0) throw DomainError("exact division failure: " + b.get_str() + " does not divide " + a.get_str());
        return q;
    }

    Element gcd(const Element& a, const Element& b) const {
        if (a == 0 && b == 0) throw BothZero("gcd(0, 0) is undefined");
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }

    UnitDecomp<Element> canonical_associate(const Element& a) const {
        if (a == 0) throw ZeroElement("canonical associate of zero");
        if (a < 0) return {Int(-1), -a};
        return {Int(1), a};
    }

    bool is_irreducible(const Element& a, const Capacity& cap = {}) const {
        if (abs_int(a) < 2) return false;
        return is_prime_trial(a, cap);
    }

    /// Least nonnegative residue mod |p|; pre: p irreducible.
    Element residue_reduce(const Element& a, const Element& p) const {
        Int r;
        Int pabs = abs_int(p);
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pabs.get_mpz_t());
        return r;
    }

    Int residue_field_size(const Element& p) const { return abs_int(p); }

    std::vector<Element> residue_transversal(const Element& p, const Capacity& cap = {}) const {
        Int n = abs_int(p);
        if (n > Int(static_cast<unsigned long>(cap.quotient_max)))
            throw CapacityError("residue transversal of size " + n.get_str() + " exceeds the quotient guard");
        std::vector<Element> out;
        for (Int k = 0; k < n; ++k) out.push_back(k);
        return out;
    }

    class IrreducibleStream {
    public:
        explicit IrreducibleStream(Capacity cap) : cap_(cap) {}
        std::optional<Element> next() {
            Int k = last_ + 1;
            while (!is_prime_trial(k, cap_)) ++k;
            last_ = k;
            return k;
        }

    private:
        Int last_{1};
        Capacity cap_;
    };

    IrreducibleStream irreducible_stream(const Capacity& cap = {}) const { return IrreducibleStream(cap); }

    std::string to_string(const Element& a) const { return a.get_str(); }
    std::string coeff_to_string(const Element& a) const { return a.get_str(); }
    bool coeff_needs_star(const Element&) const { return false; }

    Element random_element(SplitMix64& rng, long long bound) const {
        return Int(static_cast<long>(rng.range(-bound, bound)));
    }
};

} // namespace krull
