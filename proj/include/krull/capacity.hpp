#pragma once

#include <cstddef>
#include <cstdlib>

namespace krull {

/// Size guards for the brute-force decision procedures. Values above a guard
/// raise CapacityError instead of being answered slowly (or wrongly).
///
/// The environment variable KRULL_CAPACITY, when set to a positive integer,
/// overrides quotient_max; the remaining guards keep their defaults.
struct Capacity {
    std::size_t quotient_max = 4096;                 // elements materialized for a finite quotient
    long long size_max = 1'000'000'000'000LL;        // Euclidean size bound for irreducibility tests
    int degree_max = 16;                             // polynomial degree accepted by the parsers
    std::size_t search_max = 1'000'000;              // candidate bound for exhaustive factor searches

    static Capacity from_env() {
        Capacity cap;
        if (const char* s = std::getenv("KRULL_CAPACITY")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end != nullptr && *end == '\0' && v > 0) cap.quotient_max = static_cast<std::size_t>(v);
        }
        return cap;
    }
};

} // namespace krull
