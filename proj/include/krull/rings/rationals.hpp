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

/// The field QQ. Every nonzero element is a unit, so there are no
/// irreducibles, the canonical associate of any nonzero element is 1, and the
/// irreducible stream is empty.
class RationalRing {
public:
    using Element = Fraction;
    static constexpr RingKind kKind = RingKind::Rationals;
    static constexpr bool kIsField = true;
    static constexpr bool kInfinitelyManyIrreducibles = false;

    RingDescriptor descriptor() const { return RingDescriptor::rationals(); }
    std::string name() const { return "QQ"; }

    Element make(Int num, Int den) const { return make_fraction(std::move(num), std::move(den)); }
    Element from_int(long v) const { return {Int(v), Int(1)}; }

    Element zero() const { return {}; }
    Element one() const { return {Int(1), Int(1)}; }
    Element add(const Element& a, const Element& b) const { return fraction_add(a, b); }
    Element sub(const Element& a, const Element& b) const { return fraction_sub(a, b); }
    Element mul(const Element& a, const Element& b) const { return fraction_mul(a, b); }
    Element neg(const Element& a) const { return fraction_neg(a); }

    bool is_zero(const Element& a) const { return a.num == 0; }
    bool is_one(const Element& a) const { return a.num == 1 && a.den == 1; }
    bool is_unit(const Element& a) const { return a.num != 0; }
    bool is_negative(const Element& a) const { return a.num < 0; }
    bool less(const Element& a, const Element& b) const { return fraction_less(a, b); }

    Element inv(const Element& a) const {
        if (a.num == 0) throw DivisionByZero("inverse of zero in QQ");
        return make_fraction(a.den, a.num);
    }

    Element unit_inverse(const Element& a) const { return inv(a); }

    Int euclidean_size(const Element& a) const {
        if (a.num == 0) throw ZeroElement("Euclidean size of zero");
        return Int(0);
    }

    std::pair<Element, Element> divmod(const Element& a, const Element& b) const {
        if (b.num == 0) throw DivisionByZero("division by zero in QQ");
        return {fraction_div(a, b), zero()};
    }

    Element exact_div(const Element& a, const Element& b) const { return divmod(a, b).first; }

    Element gcd(const Element& a, const Element& b) const {
        if (a.num == 0 && b.num == 0) throw BothZero("gcd(0, 0) is undefined");
        return one();
    }

    UnitDecomp<Element> canonical_associate(const Element& a) const {
        if (a.num == 0) throw ZeroElement("canonical associate of zero");
        return {a, one()};
    }

    bool is_irreducible(const Element&, const Capacity& = {}) const { return false; }

    Element residue_reduce(const Element&, const Element&) const {
        throw InfiniteResidueField("QQ has no residue fields: fields have no irreducibles");
    }

    Int residue_field_size(const Element&) const {
        throw InfiniteResidueField("QQ has no residue fields: fields have no irreducibles");
    }

    std::vector<Element> residue_transversal(const Element&, const Capacity& = {}) const {
        throw InfiniteResidueField("QQ has no residue fields: fields have no irreducibles");
    }

    class IrreducibleStream {
    public:
        std::optional<Element> next() { return std::nullopt; }
    };

    IrreducibleStream irreducible_stream(const Capacity& = {}) const { return {}; }

    std::string to_string(const Element& a) const { return fraction_to_string(a); }
    std::string coeff_to_string(const Element& a) const { return fraction_to_string(a); }
    bool coeff_needs_star(const Element& a) const { return a.den != 1; }

    Element random_element(SplitMix64& rng, long long bound) const {
        Int num(static_cast<long>(rng.range(-bound, bound)));
        Int den(static_cast<long>(rng.range(1, std::max<long long>(bound, 1))));
        return make_fraction(std::move(num), std::move(den));
    }
};

} // namespace krull
