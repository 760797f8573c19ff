#pragma once

#include <string>
#include <utility>

#include "krull/intutil.hpp"

namespace krull {

/// The prime field Z/p with canonical residues in [0, p). Serves as the
/// coefficient field of GF(p)[t] and is a CoeffRing in its own right.
class Fp {
public:
    using Element = Int;
    static constexpr bool kIsField = true;

    explicit Fp(Int p) : p_(std::move(p)) {
        if (!is_prime_trial(p_)) throw DomainError("Fp modulus " + p_.get_str() + " is not a prime");
    }

    const Int& modulus() const { return p_; }

    Element zero() const { return Int(0); }
    Element one() const { return Int(1); }

    Element reduce(const Int& a) const {
        Int r;
        mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
        return r;
    }

    Element add(const Element& a, const Element& b) const {
        Int r = a + b;
        if (r >= p_) r -= p_;
        return r;
    }

    Element sub(const Element& a, const Element& b) const {
        Int r = a - b;
        if (r < 0) r += p_;
        return r;
    }

    Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
    Element neg(const Element& a) const { return a == 0 ? Int(0) : Int(p_ - a); }

    bool is_zero(const Element& a) const { return a == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    bool is_unit(const Element& a) const { return a != 0; }
    bool is_negative(const Element&) const { return false; }

    Element inv(const Element& a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in F_" + p_.get_str());
        Int g, s;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, a.get_mpz_t(), p_.get_mpz_t());
        return reduce(s);
    }

    Element unit_inverse(const Element& a) const { return inv(a); }

    std::string to_string(const Element& a) const { return a.get_str(); }
    std::string coeff_to_string(const Element& a) const { return a.get_str(); }
    bool coeff_needs_star(const Element&) const { return false; }

private:
    Int p_;
};

} // namespace krull
