#pragma once

// Satake parameters: n complex coordinates, exact rational real and
// imaginary parts, canonicalized to sum zero.  Two parameters index the same
// spherical function exactly when some coordinate permutation matches them
// modulo a constant diagonal shift and per-coordinate periods 2*pi*i/log p;
// with rational coordinates the period shifts collapse (log p / pi is
// irrational), so exact comparison is multiset equality of canonical forms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "sphlab/complex_rational.hpp"
#include "sphlab/context.hpp"
#include "sphlab/coweight.hpp"
#include "sphlab/errors.hpp"

namespace sphlab {

class SatakeParameter {
  public:
    SatakeParameter(PrimeContext ctx, std::vector<ComplexRational> coords)
        : ctx_(ctx), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != ctx_.n)
            throw DimensionMismatchError("parameter needs " + std::to_string(ctx_.n) +
                                         " coordinates");
        ComplexRational mean;
        for (const ComplexRational& c : coords_) mean = mean + c;
        mean.re /= ctx_.n;
        mean.im /= ctx_.n;
        for (ComplexRational& c : coords_) c = c - mean;
    }

    // Parameter of the constant spherical function: the half-sum shift
    // itself, so every evaluation exponent vanishes.
    static SatakeParameter trivial(const PrimeContext& ctx) {
        std::vector<ComplexRational> c(static_cast<std::size_t>(ctx.n));
        Rational half_sum(ctx.n + 1, 2);
        half_sum.canonicalize();
        for (int k = 1; k <= ctx.n; ++k)
            c[static_cast<std::size_t>(k - 1)].re = half_sum - k;
        return SatakeParameter(ctx, std::move(c));
    }

    // Purely imaginary perturbation of the trivial parameter in the first
    // and last coordinates.  Bounded for every j, tends to the trivial
    // parameter, and is fixed by minus-conjugate-reversal, but is degenerate
    // below rank 3 (the perturbation is then a diagonal shift).
    static SatakeParameter sequence(const PrimeContext& ctx, long j) {
        if (ctx.n < 3)
            throw RankTooSmallError("perturbation sequence needs n >= 3, got n=" +
                                    std::to_string(ctx.n));
        if (j < 1) throw SchemaError("sequence index must be positive");
        SatakeParameter s = trivial(ctx);
        s.coords_.front().im += Rational(1, j);
        s.coords_.back().im += Rational(1, j);
        ComplexRational mean;
        mean.im = Rational(2, static_cast<long>(ctx.n) * j);
        mean.im.canonicalize();
        for (ComplexRational& c : s.coords_) c = c - mean;
        return s;
    }

    const PrimeContext& context() const { return ctx_; }
    const std::vector<ComplexRational>& coords() const { return coords_; }

    bool operator==(const SatakeParameter& o) const {
        return ctx_ == o.ctx_ && coords_ == o.coords_;
    }
    bool operator!=(const SatakeParameter& o) const { return !(*this == o); }

    // Coordinate-wise minus-conjugate; the involution on parameters induced
    // by the algebra involution.
    SatakeParameter minus_conjugate() const {
        std::vector<ComplexRational> c = coords_;
        for (ComplexRational& z : c) z = ComplexRational{-z.re, z.im};
        return SatakeParameter(ctx_, std::move(c));
    }

    SatakeParameter permuted(const std::vector<int>& perm) const {
        std::vector<ComplexRational> c(coords_.size());
        for (std::size_t k = 0; k < coords_.size(); ++k)
            c[k] = coords_[static_cast<std::size_t>(perm[k])];
        return SatakeParameter(ctx_, std::move(c));
    }

    // Exponent sum_k m_k (s_k - rho_k) with rho the half-sum vector; alpha
    // evaluation is p^(-exponent).  Exact, so an exactly vanishing exponent
    // is detectable.
    ComplexRational evaluation_exponent(const IntVector& m) const {
        if (static_cast<int>(m.size()) != ctx_.n)
            throw DimensionMismatchError("coweight rank does not match parameter");
        if (vector_sum(m) != 0)
            throw BadCoweightSumError("alpha is only defined on sum-zero vectors");
        ComplexRational e;
        Rational half_sum(ctx_.n + 1, 2);
        half_sum.canonicalize();
        for (int k = 1; k <= ctx_.n; ++k) {
            ComplexRational term = coords_[static_cast<std::size_t>(k - 1)];
            term.re -= half_sum - k;
            e = e + Rational(m[static_cast<std::size_t>(k - 1)]) * term;
        }
        return e;
    }

  private:
    PrimeContext ctx_;
    std::vector<ComplexRational> coords_;
};

inline std::complex<double> alpha_eval(const SatakeParameter& s, const IntVector& m) {
    ComplexRational e = s.evaluation_exponent(m);
    if (e.is_zero()) return {1.0, 0.0};
    double logp = std::log(static_cast<double>(s.context().p));
    double mag = std::exp(-to_double(e.re) * logp);
    double arg = -to_double(e.im) * logp;
    return {mag * std::cos(arg), mag * std::sin(arg)};
}

namespace detail {

inline bool next_permutation_index(std::vector<int>& perm) {
    return std::next_permutation(perm.begin(), perm.end());
}

inline std::vector<ComplexRational> sorted_coords(const SatakeParameter& s) {
    std::vector<ComplexRational> c = s.coords();
    std::sort(c.begin(), c.end(), [](const ComplexRational& x, const ComplexRational& y) {
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    return c;
}

}  // namespace detail

// First permutation w (lexicographic order) with b = w.a as spherical
// parameters, or nothing.  Both sides are already canonical (sum zero), so a
// constant diagonal shift cannot separate them.  Exactly (tol = 0), rational
// coordinates admit no hidden imaginary periods: q * log(p)/(2*pi) is never a
// nonzero integer, so w.a must literally equal b.  With tol > 0 the imaginary
// parts are compared modulo the period 2*pi/log p coordinate-relatively.
inline std::optional<std::vector<int>> equivalence_witness(const SatakeParameter& a,
                                                           const SatakeParameter& b,
                                                           double tol = 0.0) {
    if (a.context() != b.context()) return std::nullopt;
    const int n = a.context().n;
    const double period = 2.0 * std::numbers::pi / std::log(static_cast<double>(a.context().p));
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k;
    do {
        bool ok = true;
        double re0 = 0.0, im0 = 0.0;
        for (int k = 0; k < n && ok; ++k) {
            const ComplexRational& x = a.coords()[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
            const ComplexRational& y = b.coords()[static_cast<std::size_t>(k)];
            if (tol <= 0.0) {
                ok = x.re == y.re && x.im == y.im;
                continue;
            }
            double dre = to_double(y.re) - to_double(x.re);
            double dim = to_double(y.im) - to_double(x.im);
            if (k == 0) {
                re0 = dre;
                im0 = dim;
                continue;
            }
            double rel = dim - im0;
            double folded = rel - period * std::round(rel / period);
            if (std::abs(dre - re0) > tol || std::abs(folded) > tol) ok = false;
        }
        if (ok) return perm;
    } while (detail::next_permutation_index(perm));
    return std::nullopt;
}

// Same spherical function?  Exact route: canonical coordinate multisets must
// agree.  With tol > 0 the witness search above decides, accepting constant
// shifts and imaginary periods.
inline bool params_equivalent(const SatakeParameter& a, const SatakeParameter& b,
                              double tol = 0.0) {
    if (a.context() != b.context()) return false;
    if (detail::sorted_coords(a) == detail::sorted_coords(b)) return true;
    if (tol <= 0.0) return false;
    return equivalence_witness(a, b, tol).has_value();
}

// Witness w with s = -w.conj(s) when one exists: the sufficient condition for
// omega_s to be a *-spherical function.
inline std::optional<std::vector<int>> is_star_param(const SatakeParameter& s, double tol = 0.0) {
    return equivalence_witness(s.minus_conjugate(), s, tol);
}

}  // namespace sphlab
