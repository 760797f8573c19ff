#pragma once

#include <string>
#include <utility>
#include <vector>

#include "krull/ring_ops.hpp"

namespace krull {

/// The residue field A/(p) for an irreducible p, viewed through its canonical
/// transversal inside A: elements are representatives, operations reduce
/// after computing in A. Models FieldCoeffRing, so the generic polynomial
/// machinery works over it directly.
template <PidRing R>
class ResidueField {
public:
    using Element = typename R::Element;
    static constexpr bool kIsField = true;

    ResidueField(const R& ring, Element p, const Capacity& cap = {})
        : ring_(&ring), p_(std::move(p)), cap_(cap) {
        if constexpr (R::kIsField)
            throw InfiniteResidueField("no residue fields over " + ring.name());
        else if (!ring.is_irreducible(p_, cap))
            throw NotIrreducible("residue modulus " + ring.to_string(p_) + " is not irreducible in " + ring.name());
    }

    const R& base() const { return *ring_; }
    const Element& modulus() const { return p_; }

    Element reduce(const Element& a) const { return ring_->residue_reduce(a, p_); }

    Element zero() const { return ring_->zero(); }
    Element one() const { return reduce(ring_->one()); }

    Element add(const Element& a, const Element& b) const { return reduce(ring_->add(a, b)); }
    Element sub(const Element& a, const Element& b) const { return reduce(ring_->sub(a, b)); }
    Element mul(const Element& a, const Element& b) const { return reduce(ring_->mul(a, b)); }
    Element neg(const Element& a) const { return reduce(ring_->neg(a)); }

    bool is_zero(const Element& a) const { return ring_->is_zero(a); }
    bool is_one(const Element& a) const { return a == one(); }
    bool is_unit(const Element& a) const { return !is_zero(a); }
    bool is_negative(const Element&) const { return false; }

    Element inv(const Element& a) const {
        if (is_zero(a)) throw DivisionByZero("inverse of zero residue mod " + ring_->to_string(p_));
        auto bez = ext_gcd(*ring_, a, p_);
        // bez.g = bez.s * a + bez.t * p, and bez.g is a unit of A.
        return reduce(ring_->mul(bez.s, ring_->unit_inverse(bez.g)));
    }

    Element unit_inverse(const Element& a) const { return inv(a); }

    Int size() const { return ring_->residue_field_size(p_); }
    std::vector<Element> transversal() const { return ring_->residue_transversal(p_, cap_); }

    std::string to_string(const Element& a) const { return ring_->to_string(a); }
    std::string coeff_to_string(const Element& a) const { return ring_->coeff_to_string(a); }
    bool coeff_needs_star(const Element& a) const { return ring_->coeff_needs_star(a); }

private:
    const R* ring_;
    Element p_;
    Capacity cap_;
};

/// Coefficient-wise reduction A[x] -> (A/(p))[x] through an already-built
/// residue field.
template <PidRing R>
PolyOf<R> poly_reduce(const ResidueField<R>& field, const PolyOf<R>& f) {
    using E = typename R::Element;
    std::vector<E> cs(f.coeffs());
    for (auto& c : cs) c = field.reduce(c);
    return Polynomial<E>::from_coeffs(field, std::move(cs));
}

/// The spec-facing reduction: verifies p and reduces coefficient-wise.
template <PidRing R>
PolyOf<R> reduce_mod(const R& ring, const PolyOf<R>& f, const typename R::Element& p, const Capacity& cap = {}) {
    ResidueField<R> field(ring, p, cap);
    return poly_reduce(field, f);
}

/// Monic residue polynomial of the given degree whose non-leading
/// coefficients are the base-q digits of the index (digit j = coefficient of
/// x^j); ascending index enumerates ascending top-down coefficient order.
template <PidRing R>
PolyOf<R> monic_residue_poly(const ResidueField<R>& field, const std::vector<typename R::Element>& transversal,
                             int degree, Int index) {
    using E = typename R::Element;
    const Int q(static_cast<unsigned long>(transversal.size()));
    std::vector<E> cs(static_cast<std::size_t>(degree) + 1, field.zero());
    for (int j = 0; j < degree; ++j) {
        Int digit;
        mpz_fdiv_qr(index.get_mpz_t(), digit.get_mpz_t(), index.get_mpz_t(), q.get_mpz_t());
        cs[static_cast<std::size_t>(j)] = transversal[static_cast<std::size_t>(mpz_get_ui(digit.get_mpz_t()))];
    }
    cs.back() = field.one();
    return Polynomial<E>::from_coeffs(field, std::move(cs));
}

/// Exhaustive irreducibility over a finite residue field: true iff no monic
/// residue polynomial of degree 1..deg/2 divides fbar.
template <PidRing R>
bool residue_irreducible(const ResidueField<R>& field, const PolyOf<R>& fbar, const Capacity& cap = {}) {
    if (fbar.is_zero() || fbar.degree_nonzero() == 0)
        throw ConstantPolynomial("residue irreducibility requires degree >= 1");
    const int d = fbar.degree_nonzero();
    if (d == 1) return true;
    const Int q = field.size();
    Int count(0);
    for (int e = 1; e <= d / 2; ++e) count += pow_int(q, static_cast<unsigned long>(e));
    if (count > Int(static_cast<unsigned long>(cap.search_max)))
        throw CapacityError("residue factor search over " + count.get_str() + " candidates exceeds the search guard");
    const auto T = field.transversal();
    for (int e = 1; e <= d / 2; ++e) {
        const Int total = pow_int(q, static_cast<unsigned long>(e));
        for (Int k = 0; k < total; ++k) {
            auto h = monic_residue_poly(field, T, e, k);
            if (poly_divides_field(field, h, fbar)) return false;
        }
    }
    return true;
}

} // namespace krull
