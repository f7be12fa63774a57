#pragma once

// Left coset representatives of the double coset labeled by a dominant
// coweight m.  Cosets w*Gamma inside Gamma pi^m Gamma correspond to
// sublattices of Z_p^n with prescribed elementary divisor type, enumerated
// here as integer column-style Hermite forms and filtered by minor
// valuations.  Representatives come back in a deterministic order and are
// cached per (p, n, m).
//
// Because every representative is upper triangular with diagonal
// p^{m_n} * p^{d_k}, the Iwasawa diagonal valuations of its inverse are
// (-m_n - d_k); their multiset is tabulated here once so downstream
// averages run over a handful of distinct vectors.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sphlab/cartan.hpp"

namespace sphlab {

struct CosetList {
    PrimeContext ctx;
    DominantCoweight label;
    std::vector<GroupElement> reps;
    // multiset of Iwasawa diagonal valuations of the representative inverses
    std::map<IntVector, std::size_t> inverse_hval_histogram;

    std::size_t size() const { return reps.size(); }
};

namespace detail {

inline std::string coset_cache_key(const PrimeContext& ctx, const DominantCoweight& m) {
    return std::to_string(ctx.p) + ";" + std::to_string(ctx.n) + ";" + m.str();
}

}  // namespace detail

// Enumerate the left coset representatives for Gamma pi^m Gamma.  Results are
// shared and memoized; the returned list is immutable.
inline std::shared_ptr<const CosetList> left_coset_reps(const PrimeContext& ctx,
                                                        const DominantCoweight& m,
                                                        const Limits& limits = {}) {
    if (m.rank() != ctx.n)
        throw DimensionMismatchError("coweight rank " + std::to_string(m.rank()) +
                                     " does not match n=" + std::to_string(ctx.n));

    static std::mutex cache_mutex;
    static std::map<std::string, std::shared_ptr<const CosetList>> cache;
    // Enumerations that hit a resource cap are remembered too, so a retry
    // under the same or tighter limits fails without redoing the scan.
    struct CapFailure {
        std::size_t coset_cap;
        std::size_t candidate_cap;
        std::string message;
    };
    static std::map<std::string, CapFailure> failure_cache;
    const std::string key = detail::coset_cache_key(ctx, m);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            // A hit must honor the caller's cap, or results would depend on
            // which enumerations ran earlier in the process.
            if (it->second->size() > limits.coset_cap)
                throw ResourceLimitError("coset list for " + m.str() + " exceeds cap " +
                                         std::to_string(limits.coset_cap));
            return it->second;
        }
        auto fit = failure_cache.find(key);
        if (fit != failure_cache.end() && limits.coset_cap <= fit->second.coset_cap &&
            limits.candidate_cap <= fit->second.candidate_cap)
            throw ResourceLimitError(fit->second.message);
    }

    const long p = ctx.p;
    const int n = ctx.n;
    const long shift = m.entries().back();

    // Shifted cotype: a_k = m_k - m_n is a partition; divisors ascending.
    IntVector target_cumulative(static_cast<std::size_t>(n) + 1, 0);
    {
        IntVector asc(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            asc[static_cast<std::size_t>(k)] =
                m.entries()[static_cast<std::size_t>(n - 1 - k)] - shift;
        for (int k = 1; k <= n; ++k)
            target_cumulative[static_cast<std::size_t>(k)] =
                target_cumulative[static_cast<std::size_t>(k - 1)] +
                asc[static_cast<std::size_t>(k - 1)];
    }
    const long total = target_cumulative[static_cast<std::size_t>(n)];
    const long level = m.spread();  // every Hermite diagonal exponent is <= level

    auto list = std::make_shared<CosetList>(CosetList{ctx, m, {}, {}});
    const Rational scale = rational_pow(p, shift);

    try {
    // Candidate count before enumerating: sum over diagonal-exponent
    // compositions of the off-diagonal residue count.
    {
        Integer candidates = 0;
        IntVector d(static_cast<std::size_t>(n), 0);
        auto count_rec = [&](auto&& self, int k, long remaining) -> void {
            if (k == n - 1) {
                if (remaining > level) return;
                d[static_cast<std::size_t>(k)] = remaining;
                long ebits = 0;
                for (int i = 0; i < n; ++i)
                    ebits += d[static_cast<std::size_t>(i)] * (n - 1 - i);
                Integer block;
                mpz_ui_pow_ui(block.get_mpz_t(), static_cast<unsigned long>(p),
                              static_cast<unsigned long>(ebits));
                candidates += block;
                return;
            }
            for (long dk = 0; dk <= std::min(level, remaining); ++dk) {
                d[static_cast<std::size_t>(k)] = dk;
                self(self, k + 1, remaining - dk);
            }
        };
        count_rec(count_rec, 0, total);
        if (candidates > Integer(static_cast<unsigned long>(limits.candidate_cap)))
            throw ResourceLimitError("coset enumeration for " + m.str() + " needs " +
                                     candidates.get_str() + " candidates (cap " +
                                     std::to_string(limits.candidate_cap) + ")");
    }

    IntVector d(static_cast<std::size_t>(n), 0);
    std::vector<Integer> diag_power(static_cast<std::size_t>(n));
    std::vector<Integer> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto emit_composition = [&](const IntVector& dd) {
        for (int k = 0; k < n; ++k)
            mpz_ui_pow_ui(diag_power[static_cast<std::size_t>(k)].get_mpz_t(),
                          static_cast<unsigned long>(p),
                          static_cast<unsigned long>(dd[static_cast<std::size_t>(k)]));
        IntVector hval(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            hval[static_cast<std::size_t>(k)] = -shift - dd[static_cast<std::size_t>(k)];
        // Odometer over the strictly upper entries: entry (k, l), k < l, runs
        // over residues mod p^{d_k}.
        std::vector<std::pair<int, int>> slots;
        std::vector<long> radix;
        for (int l = 1; l < n; ++l)
            for (int k = 0; k < l; ++k) {
                long dk = dd[static_cast<std::size_t>(k)];
                if (dk == 0) continue;
                slots.emplace_back(k, l);
                long r = 1;
                for (long t = 0; t < dk; ++t) r *= p;
                radix.push_back(r);
            }
        std::vector<long> digits(slots.size(), 0);
        while (true) {
            for (auto& z : flat) z = 0;
            for (int k = 0; k < n; ++k)
                flat[static_cast<std::size_t>(k * n + k)] = diag_power[static_cast<std::size_t>(k)];
            for (std::size_t s = 0; s < slots.size(); ++s)
                flat[static_cast<std::size_t>(slots[s].first * n + slots[s].second)] = digits[s];

            auto cumulative = detail::cumulative_minor_valuations(flat, n, p);
            cumulative[static_cast<std::size_t>(n)] = total;
            bool match = true;
            for (int k = 1; k < n && match; ++k)
                if (cumulative[static_cast<std::size_t>(k)] !=
                    target_cumulative[static_cast<std::size_t>(k)])
                    match = false;
            if (match) {
                if (list->reps.size() >= limits.coset_cap)
                    throw ResourceLimitError("coset list for " + m.str() + " exceeds cap " +
                                             std::to_string(limits.coset_cap));
                RationalMatrix h(n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        h(i, j) = Rational(flat[static_cast<std::size_t>(i * n + j)]);
                list->reps.emplace_back(ctx, scale * h);
                list->inverse_hval_histogram[hval] += 1;
            }
            std::size_t pos = 0;
            while (pos < digits.size()) {
                if (++digits[pos] < radix[pos]) break;
                digits[pos] = 0;
                ++pos;
            }
            if (pos == digits.size()) break;
        }
    };
    auto enumerate_rec = [&](auto&& self, int k, long remaining) -> void {
        if (k == n - 1) {
            if (remaining > level) return;
            d[static_cast<std::size_t>(k)] = remaining;
            emit_composition(d);
            return;
        }
        for (long dk = 0; dk <= std::min(level, remaining); ++dk) {
            d[static_cast<std::size_t>(k)] = dk;
            self(self, k + 1, remaining - dk);
        }
    };
    enumerate_rec(enumerate_rec, 0, total);
    } catch (const ResourceLimitError& err) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        failure_cache[key] = CapFailure{limits.coset_cap, limits.candidate_cap, err.what()};
        throw;
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.emplace(key, list);
    return it->second;
}

inline std::size_t coset_count(const PrimeContext& ctx, const DominantCoweight& m,
                               const Limits& limits = {}) {
    return left_coset_reps(ctx, m, limits)->size();
}

// Test helpers: structural facts every representative list must satisfy.

inline bool reps_lie_in_double_coset(const CosetList& list) {
    for (const GroupElement& w : list.reps)
        if (cartan_label(w) != list.label) return false;
    return true;
}

inline bool reps_pairwise_distinct(const CosetList& list) {
    for (std::size_t i = 0; i < list.reps.size(); ++i)
        for (std::size_t j = i + 1; j < list.reps.size(); ++j) {
            GroupElement q = list.reps[i].inverse() * list.reps[j];
            if (q.is_integral()) return false;  // same left coset
        }
    return true;
}

}  // namespace sphlab
