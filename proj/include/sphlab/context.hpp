#pragma once

// The ambient pair (p, n): we work with n-by-n matrices over Q whose entries
// are read p-adically.  Everything downstream carries one of these.

#include <string>

#include "sphlab/errors.hpp"

namespace sphlab {

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct PrimeContext {
    long p;
    int n;

    PrimeContext(long p_, int n_) : p(p_), n(n_) {
        if (!is_prime(p)) throw Error("p must be prime, got " + std::to_string(p));
        if (n < 2) throw Error("n must be at least 2, got " + std::to_string(n));
    }

    friend bool operator==(const PrimeContext& a, const PrimeContext& b) {
        return a.p == b.p && a.n == b.n;
    }
    friend bool operator!=(const PrimeContext& a, const PrimeContext& b) { return !(a == b); }
};

inline void require_same_context(const PrimeContext& a, const PrimeContext& b,
                                 const char* where) {
    if (a != b)
        throw ContextMismatchError(std::string(where) + ": contexts differ ((p,n)=(" +
                                   std::to_string(a.p) + "," + std::to_string(a.n) + ") vs (" +
                                   std::to_string(b.p) + "," + std::to_string(b.n) + "))");
}

// Run-time caps for the enumerative routines.  Defaults are generous enough
// for the shipped test grid while still catching runaway inputs.
struct Limits {
    std::size_t coset_cap = 1'000'000;        // accepted coset representatives per coweight
    std::size_t candidate_cap = 200'000'000;  // Hermite-form candidates scanned per coweight
    double oracle_group_cap = 1e9;            // |SL_n(Z/p^N)| allowed for the quotient oracle
    std::size_t lift_group_cap = 300'000;     // elements enumerated with exact SL_n(Z) lifts
    long oracle_level_cap = 8;                // max m_1 - m_n accepted by the quotient oracle
};

}  // namespace sphlab
