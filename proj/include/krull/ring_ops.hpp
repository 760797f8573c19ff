#pragma once

#include <utility>

#include "krull/capacity.hpp"
#include "krull/intutil.hpp"
#include "krull/polynomial.hpp"

namespace krull {

/// Full interface of the five concrete PID instances: CoeffRing plus the
/// Euclidean structure, canonical associates, irreducibility, residues and an
/// irreducible stream.
template <typename R>
concept PidRing = CoeffRing<R> && requires(const R& r, const typename R::Element& a, const typename R::Element& b,
                                           const Capacity& cap) {
    { r.divmod(a, b) } -> std::same_as<std::pair<typename R::Element, typename R::Element>>;
    { r.gcd(a, b) } -> std::same_as<typename R::Element>;
    { r.canonical_associate(a) } -> std::same_as<UnitDecomp<typename R::Element>>;
    { r.is_irreducible(a, cap) } -> std::same_as<bool>;
    { r.euclidean_size(a) } -> std::same_as<Int>;
    { r.unit_inverse(a) } -> std::same_as<typename R::Element>;
    { r.name() } -> std::same_as<std::string>;
};

template <PidRing R>
typename R::Element pow_elem(const R& ring, const typename R::Element& a, unsigned long e) {
    auto out = ring.one();
    for (unsigned long i = 0; i < e; ++i) out = ring.mul(out, a);
    return out;
}

/// a | b in the ring; zero divides only zero.
template <PidRing R>
bool divides(const R& ring, const typename R::Element& a, const typename R::Element& b) {
    if (ring.is_zero(a)) return ring.is_zero(b);
    return ring.is_zero(ring.divmod(b, a).second);
}

/// a and b nonzero differ by a unit factor.
template <PidRing R>
bool associates(const R& ring, const typename R::Element& a, const typename R::Element& b) {
    return ring.canonical_associate(a).canonical == ring.canonical_associate(b).canonical;
}

template <typename E>
struct ExtGcd {
    E g;  // g = s*a + t*b
    E s;
    E t;
};

template <PidRing R>
ExtGcd<typename R::Element> ext_gcd(const R& ring, const typename R::Element& a, const typename R::Element& b) {
    using E = typename R::Element;
    E r0 = a, r1 = b;
    E s0 = ring.one(), s1 = ring.zero();
    E t0 = ring.zero(), t1 = ring.one();
    while (!ring.is_zero(r1)) {
        auto [q, r] = ring.divmod(r0, r1);
        E s2 = ring.sub(s0, ring.mul(q, s1));
        E t2 = ring.sub(t0, ring.mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

/// Canonical representative of a in A/(p); verifies that p is irreducible.
template <PidRing R>
typename R::Element mod_reduce(const R& ring, const typename R::Element& a, const typename R::Element& p,
                               const Capacity& cap = {}) {
    if (!ring.is_irreducible(p, cap))
        throw NotIrreducible("mod_reduce modulus is not irreducible in " + ring.name());
    return ring.residue_reduce(a, p);
}

} // namespace krull
