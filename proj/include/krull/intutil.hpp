#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "krull/capacity.hpp"
#include "krull/errors.hpp"

namespace krull {

/// Exact arbitrary-precision integer (GMP).
using Int = mpz_class;

/// Unit decomposition a = unit * canonical produced by canonical_associate.
template <typename E>
struct UnitDecomp {
    E unit;
    E canonical;
};

inline Int abs_int(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int isqrt_int(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Trial-division primality test on |n|.
inline bool is_prime_trial(const Int& n, const Capacity& cap = {}) {
    Int v = abs_int(n);
    if (v < 2) return false;
    if (v > Int(cap.size_max)) throw CapacityError("primality input exceeds the size guard: " + v.get_str());
    unsigned long long m = mpz_get_ui(v.get_mpz_t());
    if (m % 2 == 0) return m == 2;
    for (unsigned long long d = 3; d * d <= m; d += 2) {
        if (m % d == 0) return false;
    }
    return true;
}

/// Distinct positive prime factors of |n|, ascending; |n| >= 1.
inline std::vector<Int> prime_factors(const Int& n, const Capacity& cap = {}) {
    Int v = abs_int(n);
    if (v == 0) throw ZeroElement("prime factors of zero");
    if (v > Int(cap.size_max)) throw CapacityError("factorization input exceeds the size guard");
    std::vector<Int> out;
    unsigned long long m = mpz_get_ui(v.get_mpz_t());
    for (unsigned long long d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
        if (m % d == 0) {
            out.emplace_back(static_cast<unsigned long>(d));
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.emplace_back(static_cast<unsigned long>(m));
    return out;
}

/// All positive divisors of |n| (including 1 and |n|), ascending; |n| >= 1.
inline std::vector<Int> divisors(const Int& n, const Capacity& cap = {}) {
    Int v = abs_int(n);
    if (v == 0) throw ZeroElement("divisors of zero");
    if (v > Int(cap.size_max)) throw CapacityError("divisor enumeration exceeds the size guard");
    unsigned long long m = mpz_get_ui(v.get_mpz_t());
    std::vector<unsigned long long> small, large;
    for (unsigned long long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    std::vector<Int> out;
    out.reserve(small.size() + large.size());
    for (auto d : small) out.emplace_back(static_cast<unsigned long>(d));
    for (auto it = large.rbegin(); it != large.rend(); ++it) out.emplace_back(static_cast<unsigned long>(*it));
    return out;
}

} // namespace krull
