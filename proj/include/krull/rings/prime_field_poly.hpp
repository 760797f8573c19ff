#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krull/capacity.hpp"
#include "krull/descriptor.hpp"
#include "krull/polynomial.hpp"
#include "krull/prng.hpp"
#include "krull/rings/fp.hpp"

namespace krull {

/// The polynomial ring GF(p)[t] in the indeterminate t. Elements are dense
/// residue-coefficient polynomials; canonical associates are monic and the
/// Euclidean size is the degree.
class PrimeFieldPolyRing {
public:
    using Element = Polynomial<Int>;
    static constexpr RingKind kKind = RingKind::FiniteFieldPoly;
    static constexpr bool kIsField = false;
    static constexpr bool kInfinitelyManyIrreducibles = true;

    explicit PrimeFieldPolyRing(Int p) : fp_(std::move(p)) {}

    const Fp& coeff_field() const { return fp_; }
    const Int& prime() const { return fp_.modulus(); }

    RingDescriptor descriptor() const { return RingDescriptor::finite_field_poly(prime()); }
    std::string name() const { return "GF(" + prime().get_str() + ")[t]"; }

    Element zero() const { return {}; }
    Element one() const { return Element::constant(fp_, Int(1)); }

    Element add(const Element& a, const Element& b) const { return poly_add(fp_, a, b); }
    Element sub(const Element& a, const Element& b) const { return poly_sub(fp_, a, b); }
    Element mul(const Element& a, const Element& b) const { return poly_mul(fp_, a, b); }
    Element neg(const Element& a) const { return poly_neg(fp_, a); }

    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool is_one(const Element& a) const { return !a.is_zero() && a.degree_nonzero() == 0 && a.coeff(0) == 1; }
    bool is_unit(const Element& a) const { return !a.is_zero() && a.degree_nonzero() == 0; }
    bool is_negative(const Element&) const { return false; }

    /// Degree-major order, then by coefficient digits from the top down.
    bool less(const Element& a, const Element& b) const {
        if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
        for (std::size_t i = a.coeffs().size(); i-- > 0;) {
            if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
        }
        return false;
    }

    Element unit_inverse(const Element& a) const {
        if (!is_unit(a)) throw DomainError("unit inverse of nonunit in " + name());
        return Element::constant(fp_, fp_.inv(a.coeff(0)));
    }

    Int euclidean_size(const Element& a) const {
        if (a.is_zero()) throw ZeroElement("Euclidean size of zero");
        return Int(a.degree_nonzero());
    }

    std::pair<Element, Element> divmod(const Element& a, const Element& b) const {
        return poly_divmod_field(fp_, a, b);
    }

    Element exact_div(const Element& a, const Element& b) const {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero())
            throw DomainError("exact division failure in " + name());
        return q;
    }

    Element gcd(const Element& a, const Element& b) const {
        if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
        Element x = a, y = b;
        while (!y.is_zero()) {
            auto [q, r] = divmod(x, y);
            x = y;
            y = r;
        }
        return canonical_associate(x).canonical;
    }

    UnitDecomp<Element> canonical_associate(const Element& a) const {
        if (a.is_zero()) throw ZeroElement("canonical associate of zero");
        const Int lc = a.leading();
        Element monic = poly_scale(fp_, fp_.inv(lc), a);
        return {Element::constant(fp_, lc), std::move(monic)};
    }

    bool is_irreducible(const Element& a, const Capacity& cap = {}) const {
        if (a.is_zero() || a.degree_nonzero() == 0) return false;
        const int d = a.degree_nonzero();
        if (d == 1) return true;
        guard_candidate_count(d / 2, cap);
        for (int e = 1; e <= d / 2; ++e) {
            Int total = pow_int(prime(), static_cast<unsigned long>(e));
            for (Int k = 0; k < total; ++k) {
                Element h = monic_from_index(e, k);
                if (divmod(a, h).second.is_zero()) return false;
            }
        }
        return true;
    }

    /// Remainder mod p(t); pre: p irreducible.
    Element residue_reduce(const Element& a, const Element& p) const { return divmod(a, p).second; }

    Int residue_field_size(const Element& p) const {
        return pow_int(prime(), static_cast<unsigned long>(p.degree_nonzero()));
    }

    std::vector<Element> residue_transversal(const Element& p, const Capacity& cap = {}) const {
        const Int n = residue_field_size(p);
        if (n > Int(static_cast<unsigned long>(cap.quotient_max)))
            throw CapacityError("residue transversal of size " + n.get_str() + " exceeds the quotient guard");
        std::vector<Element> out;
        const int d = p.degree_nonzero();
        for (Int k = 0; k < n; ++k) out.push_back(from_index(d, k));
        return out;
    }

    /// Monic irreducibles by increasing degree, ties by ascending coefficient
    /// digits read from the top power down.
    class IrreducibleStream {
    public:
        IrreducibleStream(PrimeFieldPolyRing ring, Capacity cap)
            : ring_(std::move(ring)), cap_(cap), total_(ring_.prime()) {}

        std::optional<Element> next() {
            for (;;) {
                if (index_ >= total_) {
                    ++degree_;
                    index_ = 0;
                    total_ = pow_int(ring_.prime(), static_cast<unsigned long>(degree_));
                }
                Element cand = ring_.monic_from_index(degree_, index_);
                ++index_;
                if (ring_.is_irreducible(cand, cap_)) return cand;
            }
        }

    private:
        PrimeFieldPolyRing ring_;
        Capacity cap_;
        int degree_ = 1;
        Int index_{0};
        Int total_;
    };

    IrreducibleStream irreducible_stream(const Capacity& cap = {}) const { return IrreducibleStream(*this, cap); }

    std::string to_string(const Element& a) const { return "[" + krull::to_string(fp_, a, 't') + "]"; }
    std::string coeff_to_string(const Element& a) const { return to_string(a); }
    bool coeff_needs_star(const Element&) const { return false; }

    Element random_element(SplitMix64& rng, long long /*bound*/) const {
        const auto p = static_cast<std::uint64_t>(mpz_get_ui(prime().get_mpz_t()));
        std::vector<Int> cs(3);
        for (auto& c : cs) c = Int(static_cast<unsigned long>(rng.below(p)));
        return Element::from_coeffs(fp_, std::move(cs));
    }

    /// Polynomial of degree < width whose coefficient of t^j is the j-th
    /// base-p digit of the index.
    Element from_index(int width, Int index) const {
        std::vector<Int> cs(static_cast<std::size_t>(width));
        for (int j = 0; j < width; ++j) {
            Int digit;
            mpz_fdiv_qr(index.get_mpz_t(), digit.get_mpz_t(), index.get_mpz_t(), prime().get_mpz_t());
            cs[static_cast<std::size_t>(j)] = digit;
        }
        return Element::from_coeffs(fp_, std::move(cs));
    }

    Element monic_from_index(int degree, const Int& index) const {
        Element low = from_index(degree, index);
        std::vector<Int> cs(static_cast<std::size_t>(degree) + 1, Int(0));
        for (std::size_t i = 0; i < low.coeffs().size(); ++i) cs[i] = low.coeffs()[i];
        cs.back() = 1;
        return Element::from_coeffs(fp_, std::move(cs));
    }

private:
    void guard_candidate_count(int max_degree, const Capacity& cap) const {
        Int count(0);
        for (int e = 1; e <= max_degree; ++e) count += pow_int(prime(), static_cast<unsigned long>(e));
        if (count > Int(static_cast<unsigned long>(cap.search_max)))
            throw CapacityError("factor search over " + count.get_str() + " candidates exceeds the search guard");
    }

    Fp fp_;
};

} // namespace krull
