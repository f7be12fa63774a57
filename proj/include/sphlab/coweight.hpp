#pragma once

// Dominant coweights: weakly decreasing integer vectors summing to zero.
// They label the double cosets U pi^m U and index the Hecke algebra basis.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sphlab/errors.hpp"

namespace sphlab {

using IntVector = std::vector<long>;

inline std::string format_int_vector(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

inline long vector_sum(const IntVector& v) {
    return std::accumulate(v.begin(), v.end(), 0L);
}

class DominantCoweight {
public:
    explicit DominantCoweight(IntVector entries) : m_(std::move(entries)) {
        if (m_.empty()) throw InvalidCoweightError("coweight must be nonempty");
        if (!std::is_sorted(m_.rbegin(), m_.rend()))
            throw InvalidCoweightError("coweight not dominant: " + format_int_vector(m_));
        if (vector_sum(m_) != 0)
            throw InvalidCoweightError("coweight entries must sum to zero: " +
                                       format_int_vector(m_));
    }

    static DominantCoweight zero(int n) { return DominantCoweight(IntVector(n, 0)); }

    // The label of the inverse double coset: sort(-m) in decreasing order.
    DominantCoweight inverse_label() const {
        IntVector w(m_);
        for (long& x : w) x = -x;
        std::sort(w.rbegin(), w.rend());
        return DominantCoweight(std::move(w));
    }

    const IntVector& entries() const { return m_; }
    int rank() const { return static_cast<int>(m_.size()); }
    long operator[](int k) const { return m_[static_cast<std::size_t>(k)]; }
    bool is_zero() const { return m_.front() == 0 && m_.back() == 0; }

    // m_1 - m_n, the congruence level of the double coset.
    long spread() const { return m_.front() - m_.back(); }

    std::string str() const { return format_int_vector(m_); }

    friend bool operator==(const DominantCoweight& a, const DominantCoweight& b) {
        return a.m_ == b.m_;
    }
    friend bool operator!=(const DominantCoweight& a, const DominantCoweight& b) {
        return !(a == b);
    }
    friend bool operator<(const DominantCoweight& a, const DominantCoweight& b) {
        return a.m_ < b.m_;
    }

private:
    IntVector m_;
};

// All dominant coweights of the given rank with m_1 - m_n <= max_spread, in
// lexicographic order.  The zero coweight is included.
inline std::vector<DominantCoweight> dominant_labels_up_to(int n, long max_spread) {
    if (n < 2) throw InvalidCoweightError("rank must be at least 2");
    if (max_spread < 0) throw InvalidCoweightError("spread bound must be nonnegative");
    std::vector<DominantCoweight> out;
    IntVector m(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int k, long partial) -> void {
        const long lo = m.front() - max_spread;
        if (k == n - 1) {
            long last = -partial;
            if (last <= m[static_cast<std::size_t>(k - 1)] && last >= lo) {
                m[static_cast<std::size_t>(k)] = last;
                out.emplace_back(m);
            }
            return;
        }
        const long rest = n - 1 - k;  // entries after index k
        for (long v = m[static_cast<std::size_t>(k - 1)]; v >= lo; --v) {
            if (partial + v + rest * v < 0) break;     // later entries only get smaller
            if (partial + v + rest * lo > 0) continue; // cannot come back down to zero
            m[static_cast<std::size_t>(k)] = v;
            self(self, k + 1, partial + v);
        }
    };
    for (long first = 0; first <= max_spread; ++first) {
        m.front() = first;
        rec(rec, 1, first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sphlab
