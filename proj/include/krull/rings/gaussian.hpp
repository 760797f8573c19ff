#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krull/capacity.hpp"
#include "krull/descriptor.hpp"
#include "krull/intutil.hpp"
#include "krull/prng.hpp"

namespace krull {

struct GaussianInt {
    Int re{0};
    Int im{0};

    bool operator==(const GaussianInt&) const = default;
};

/// The Gaussian integers ZZ[i]. Euclidean size is the norm re^2 + im^2;
/// canonical associates are the representatives with re > 0, im >= 0;
/// remainders come from rounding the exact quotient to the nearest lattice
/// point (ties toward +infinity per component, which keeps the residue map
/// translation invariant).
class GaussianRing {
public:
    using Element = GaussianInt;
    static constexpr RingKind kKind = RingKind::Gaussian;
    static constexpr bool kIsField = false;
    static constexpr bool kInfinitelyManyIrreducibles = true;

    RingDescriptor descriptor() const { return RingDescriptor::gaussian(); }
    std::string name() const { return "ZZ[i]"; }

    Element zero() const { return {}; }
    Element one() const { return {Int(1), Int(0)}; }

    Element add(const Element& a, const Element& b) const { return {a.re + b.re, a.im + b.im}; }
    Element sub(const Element& a, const Element& b) const { return {a.re - b.re, a.im - b.im}; }
    Element neg(const Element& a) const { return {-a.re, -a.im}; }

    Element mul(const Element& a, const Element& b) const {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    Element conj(const Element& a) const { return {a.re, -a.im}; }
    Int norm(const Element& a) const { return a.re * a.re + a.im * a.im; }

    bool is_zero(const Element& a) const { return a.re == 0 && a.im == 0; }
    bool is_one(const Element& a) const { return a.re == 1 && a.im == 0; }
    bool is_unit(const Element& a) const { return norm(a) == 1; }
    bool is_negative(const Element& a) const { return a.im == 0 && a.re < 0; }

    bool less(const Element& a, const Element& b) const {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    Element unit_inverse(const Element& a) const {
        if (!is_unit(a)) throw DomainError("unit inverse of nonunit Gaussian integer " + to_string(a));
        return conj(a);
    }

    Int euclidean_size(const Element& a) const {
        if (is_zero(a)) throw ZeroElement("Euclidean size of zero");
        return norm(a);
    }

    std::pair<Element, Element> divmod(const Element& a, const Element& b) const {
        if (is_zero(b)) throw DivisionByZero("Gaussian division by zero");
        const Int n = norm(b);
        const Element t = mul(a, conj(b));
        Element q{round_div(t.re, n), round_div(t.im, n)};
        Element r = sub(a, mul(q, b));
        return {std::move(q), std::move(r)};
    }

    Element exact_div(const Element& a, const Element& b) const {
        auto [q, r] = divmod(a, b);
        if (!is_zero(r))
            throw DomainError("exact division failure: " + to_string(b) + " does not divide " + to_string(a));
        return q;
    }

    Element gcd(const Element& a, const Element& b) const {
        if (is_zero(a) && is_zero(b)) throw BothZero("gcd(0, 0) is undefined");
        Element x = a, y = b;
        while (!is_zero(y)) {
            auto [q, r] = divmod(x, y);
            x = y;
            y = r;
        }
        return canonical_associate(x).canonical;
    }

    UnitDecomp<Element> canonical_associate(const Element& a) const {
        if (is_zero(a)) throw ZeroElement("canonical associate of zero");
        Element cand = a;
        Element unit = one();  // a = unit * cand throughout
        for (int k = 0; k < 4; ++k) {
            if (cand.re > 0 && cand.im >= 0) return {unit, cand};
            cand = mul(cand, Element{Int(0), Int(1)});   // rotate by i
            unit = mul(unit, Element{Int(0), Int(-1)});  // compensate by -i
        }
        throw Error("no canonical associate found for " + to_string(a));
    }

    bool is_irreducible(const Element& a, const Capacity& cap = {}) const {
        const Int n = norm(a);
        if (n > Int(cap.size_max)) throw CapacityError("Gaussian norm exceeds the size guard: " + n.get_str());
        if (n <= 1) return false;
        if (a.im == 0) return inert_prime(a.re, cap);
        if (a.re == 0) return inert_prime(a.im, cap);
        return is_prime_trial(n, cap);
    }

    /// Canonical coset representative under rounded Gaussian division;
    /// pre: p irreducible.
    Element residue_reduce(const Element& a, const Element& p) const { return divmod(a, p).second; }

    Int residue_field_size(const Element& p) const { return norm(p); }

    std::vector<Element> residue_transversal(const Element& p, const Capacity& cap = {}) const {
        const Int n = norm(p);
        if (n > Int(static_cast<unsigned long>(cap.quotient_max)))
            throw CapacityError("residue transversal of size " + n.get_str() + " exceeds the quotient guard");
        const long bound = mpz_get_si(Int(isqrt_int(n) + 1).get_mpz_t());
        std::vector<Element> out;
        for (long x = -bound; x <= bound; ++x) {
            for (long y = -bound; y <= bound; ++y) {
                Element r = residue_reduce(Element{Int(x), Int(y)}, p);
                bool seen = false;
                for (const auto& s : out) {
                    if (s == r) { seen = true; break; }
                }
                if (!seen) out.push_back(std::move(r));
            }
        }
        std::sort(out.begin(), out.end(), [this](const Element& a, const Element& b) { return less(a, b); });
        if (Int(static_cast<unsigned long>(out.size())) != n)
            throw Error("Gaussian transversal size mismatch for modulus " + to_string(p));
        return out;
    }

    /// Enumerates canonical irreducibles by increasing norm; within a norm the
    /// representatives appear by increasing real part.
    class IrreducibleStream {
    public:
        explicit IrreducibleStream(Capacity cap) : cap_(cap) {}

        std::optional<Element> next() {
            while (idx_ >= bucket_.size()) {
                ++norm_;
                refill();
            }
            return bucket_[idx_++];
        }

    private:
        void refill() {
            bucket_.clear();
            idx_ = 0;
            GaussianRing ring;
            for (Int a = 1; a * a <= norm_; ++a) {
                Int b2 = norm_ - a * a;
                Int b = isqrt_int(b2);
                if (b * b != b2) continue;
                Element cand{a, b};
                if (ring.is_irreducible(cand, cap_)) bucket_.push_back(std::move(cand));
            }
        }

        Int norm_{1};
        std::vector<Element> bucket_;
        std::size_t idx_ = 0;
        Capacity cap_;
    };

    IrreducibleStream irreducible_stream(const Capacity& cap = {}) const { return IrreducibleStream(cap); }

    std::string to_string(const Element& a) const {
        if (a.re == 0 && a.im == 0) return "0";
        std::string out;
        if (a.re != 0) out += a.re.get_str();
        if (a.im != 0) {
            if (a.im > 0 && a.re != 0) out += '+';
            if (a.im == -1) out += '-';
            else if (a.im != 1) out += a.im.get_str();
            out += 'i';
        }
        return out;
    }

    std::string coeff_to_string(const Element& a) const {
        if (a.im == 0) return a.re.get_str();
        return "(" + to_string(a) + ")";
    }

    bool coeff_needs_star(const Element&) const { return false; }

    Element random_element(SplitMix64& rng, long long bound) const {
        return {Int(static_cast<long>(rng.range(-bound, bound))), Int(static_cast<long>(rng.range(-bound, bound)))};
    }

private:
    /// floor(u/v + 1/2) for v > 0: nearest integer, ties toward +infinity.
    static Int round_div(const Int& u, const Int& v) {
        Int q;
        Int num = 2 * u + v;
        Int den = 2 * v;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
    }

    static bool inert_prime(const Int& a, const Capacity& cap) {
        Int v = abs_int(a);
        return is_prime_trial(v, cap) && v % 4 == 3;
    }
};

} // namespace krull
