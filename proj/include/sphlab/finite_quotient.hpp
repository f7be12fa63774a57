#pragma once

// Finite-quotient routes that are independent of the Hermite-form coset
// enumeration, used to cross-check it and to average over the compact group.
//
//  * quotient_coset_count: the number of left cosets in Gamma pi^m Gamma
//    equals the orbit size of one explicit submodule of (Z/p^N)^n under
//    SL_n(Z/p^N), N = m_1 - m_n.  The stabilizer of that submodule is exactly
//    the image of Gamma intersect pi^m Gamma pi^-m, and the congruence kernel
//    sits inside it, so the orbit-stabilizer count is exact.
//
//  * congruence_reps: one exact SL_n(Z) lift per residue class in
//    SL_n(Z/p^N), grown by breadth-first products of elementary matrices.
//    Averaging a bi-invariant function over these lifts integrates it over
//    SL_n(Z_p) exactly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "sphlab/cosets.hpp"

namespace sphlab {

inline Integer sl_group_order(long p, int n, long N) {
    Integer order;
    mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>((static_cast<long>(n) * n - 1) * (N - 1) +
                                             n * (n - 1) / 2));
    for (int k = 2; k <= n; ++k) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
        order *= (t - 1);
    }
    return order;
}

inline std::size_t quotient_coset_count(const PrimeContext& ctx, const DominantCoweight& m,
                                        const Limits& limits = {}) {
    if (m.rank() != ctx.n)
        throw DimensionMismatchError("coweight rank does not match context");
    if (m.is_zero()) return 1;

    const long p = ctx.p;
    const int n = ctx.n;
    const long N = m.spread();
    if (N > limits.oracle_level_cap)
        throw ResourceLimitError("quotient oracle level " + std::to_string(N) + " exceeds cap " +
                                 std::to_string(limits.oracle_level_cap));
    if (sl_group_order(p, n, N).get_d() > limits.oracle_group_cap)
        throw ResourceLimitError("quotient oracle group too large for " + m.str());

    std::uint64_t q = 1;
    for (long t = 0; t < N; ++t) q *= static_cast<std::uint64_t>(p);
    {
        double bits = static_cast<double>(n) * std::log2(static_cast<double>(q));
        if (bits > 62.0) throw ResourceLimitError("quotient oracle codes exceed 62 bits");
    }
    std::vector<std::uint64_t> place(static_cast<std::size_t>(n), 1);
    for (int k = 1; k < n; ++k)
        place[static_cast<std::size_t>(k)] = place[static_cast<std::size_t>(k - 1)] * q;

    // Base submodule: coordinate k ranges over multiples of p^{a_k}.
    IntVector a(static_cast<std::size_t>(n));
    std::uint64_t wsize = 1;
    for (int k = 0; k < n; ++k) {
        a[static_cast<std::size_t>(k)] =
            m.entries()[static_cast<std::size_t>(k)] - m.entries().back();
        std::uint64_t span = 1;
        for (long t = a[static_cast<std::size_t>(k)]; t < N; ++t)
            span *= static_cast<std::uint64_t>(p);
        wsize *= span;
        if (wsize > limits.candidate_cap)
            throw ResourceLimitError("quotient oracle base submodule too large for " + m.str());
    }
    std::vector<std::uint64_t> base;
    base.reserve(wsize);
    std::vector<std::uint64_t> coord(static_cast<std::size_t>(n), 0);
    while (true) {
        std::uint64_t code = 0;
        for (int k = 0; k < n; ++k) code += coord[static_cast<std::size_t>(k)] * place[static_cast<std::size_t>(k)];
        base.push_back(code);
        int k = 0;
        while (k < n) {
            std::uint64_t step = 1;
            for (long t = 0; t < a[static_cast<std::size_t>(k)]; ++t)
                step *= static_cast<std::uint64_t>(p);
            coord[static_cast<std::size_t>(k)] += step;
            if (coord[static_cast<std::size_t>(k)] < q) break;
            coord[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == n) break;
    }
    std::sort(base.begin(), base.end());

    // Elementary generators E_{ij}(+-1) act coordinatewise.
    struct Gen {
        int i, j;
        long sign;
    };
    std::vector<Gen> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                gens.push_back({i, j, 1});
                gens.push_back({i, j, -1});
            }

    std::set<std::vector<std::uint64_t>> seen;
    std::deque<std::vector<std::uint64_t>> frontier;
    seen.insert(base);
    frontier.push_back(base);
    while (!frontier.empty()) {
        std::vector<std::uint64_t> w = std::move(frontier.front());
        frontier.pop_front();
        for (const Gen& g : gens) {
            std::vector<std::uint64_t> next(w.size());
            for (std::size_t t = 0; t < w.size(); ++t) {
                std::uint64_t code = w[t];
                std::uint64_t xi = (code / place[static_cast<std::size_t>(g.i)]) % q;
                std::uint64_t xj = (code / place[static_cast<std::size_t>(g.j)]) % q;
                std::uint64_t yi = g.sign > 0 ? (xi + xj) % q : (xi + q - xj) % q;
                next[t] = code + (yi - xi) * place[static_cast<std::size_t>(g.i)];
            }
            std::sort(next.begin(), next.end());
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
        if (seen.size() > limits.coset_cap)
            throw ResourceLimitError("quotient oracle orbit exceeds coset cap");
    }
    return seen.size();
}

// One exact integral lift per class of SL_n(Z/p^N), in breadth-first order
// starting at the identity.  Throws when the group order exceeds the cap.
inline std::vector<GroupElement> congruence_reps(const PrimeContext& ctx, long N,
                                                 const Limits& limits = {}) {
    const long p = ctx.p;
    const int n = ctx.n;
    if (N < 1) throw SchemaError("congruence level must be at least 1");
    Integer order = sl_group_order(p, n, N);
    if (order > Integer(static_cast<unsigned long>(limits.lift_group_cap)))
        throw ResourceLimitError("congruence lift set of size " + order.get_str() +
                                 " exceeds cap " + std::to_string(limits.lift_group_cap));

    Integer q = 1;
    for (long t = 0; t < N; ++t) q *= p;

    auto residue_key = [&](const RationalMatrix& g) {
        std::vector<long> key;
        key.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Integer num = g(i, j).get_num();
                Integer r;
                mpz_mod(r.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
                key.push_back(r.get_si());
            }
        return key;
    };

    struct Gen {
        int i, j;
        long sign;
    };
    std::vector<Gen> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                gens.push_back({i, j, 1});
                gens.push_back({i, j, -1});
            }

    std::vector<GroupElement> reps;
    std::set<std::vector<long>> seen;
    reps.push_back(GroupElement::identity(ctx));
    seen.insert(residue_key(reps.front().entries()));
    for (std::size_t head = 0; head < reps.size(); ++head) {
        RationalMatrix cur = reps[head].entries();
        for (const Gen& g : gens) {
            RationalMatrix next = cur;
            for (int r = 0; r < n; ++r) next(r, g.j) += Rational(g.sign) * cur(r, g.i);
            if (seen.insert(residue_key(next)).second) {
                if (reps.size() >= limits.lift_group_cap)
                    throw ResourceLimitError("congruence lift set exceeds cap");
                reps.emplace_back(ctx, next);
            }
        }
    }
    if (Integer(static_cast<unsigned long>(reps.size())) != order)
        throw InternalError("congruence lift enumeration missed classes");
    return reps;
}

}  // namespace sphlab
