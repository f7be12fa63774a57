#pragma once

// Laurent polynomials in n variables with rational coefficients, exponents
// restricted to sum-zero integer vectors.  This is where the coset-counting
// transform lands; symmetry under variable permutations and the product rule
// are both exact map operations.

#include <complex>
#include <map>
#include <vector>

#include "sphlab/satake.hpp"

namespace sphlab {

class LaurentPolynomial {
  public:
    explicit LaurentPolynomial(PrimeContext ctx) : ctx_(ctx) {}

    const PrimeContext& context() const { return ctx_; }
    const std::map<IntVector, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const IntVector& exponent, const Rational& coeff) {
        if (static_cast<int>(exponent.size()) != ctx_.n)
            throw DimensionMismatchError("exponent vector length does not match n");
        if (vector_sum(exponent) != 0)
            throw BadCoweightSumError("exponent vectors must sum to zero");
        auto it = terms_.find(exponent);
        if (it == terms_.end()) {
            if (sgn(coeff) != 0) terms_.emplace(exponent, coeff);
            return;
        }
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const {
        require_same_context(ctx_, o.ctx_, "laurent addition");
        LaurentPolynomial out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    LaurentPolynomial operator*(const LaurentPolynomial& o) const {
        require_same_context(ctx_, o.ctx_, "laurent product");
        LaurentPolynomial out(ctx_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                IntVector e(e1.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
                out.add_term(e, c1 * c2);
            }
        return out;
    }

    LaurentPolynomial scaled(const Rational& s) const {
        LaurentPolynomial out(ctx_);
        if (sgn(s) == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, s * c);
        return out;
    }

    // Pull back along the variable permutation x_k -> x_{perm[k]}.
    LaurentPolynomial permuted_variables(const std::vector<int>& perm) const {
        LaurentPolynomial out(ctx_);
        for (const auto& [e, c] : terms_) {
            IntVector pe(e.size());
            for (std::size_t k = 0; k < e.size(); ++k)
                pe[static_cast<std::size_t>(perm[k])] = e[k];
            out.add_term(pe, c);
        }
        return out;
    }

    bool symmetric_under_all_permutations() const {
        std::vector<int> perm(static_cast<std::size_t>(ctx_.n));
        for (int k = 0; k < ctx_.n; ++k) perm[static_cast<std::size_t>(k)] = k;
        while (std::next_permutation(perm.begin(), perm.end()))
            if (permuted_variables(perm).terms_ != terms_) return false;
        return true;
    }

    // Evaluate at x_k = p^{-s_k}; the monomial x^e contributes
    // p^{-sum_k s_k e_k}.
    std::complex<double> evaluate(const SatakeParameter& s) const {
        require_same_context(ctx_, s.context(), "laurent evaluation");
        const double logp = std::log(static_cast<double>(ctx_.p));
        std::complex<double> total = 0.0;
        for (const auto& [e, c] : terms_) {
            ComplexRational expo;
            for (std::size_t k = 0; k < e.size(); ++k)
                expo = expo + Rational(e[k]) * s.coords()[k];
            double mag = std::exp(-to_double(expo.re) * logp);
            double arg = -to_double(expo.im) * logp;
            total += to_double(c) * mag * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        return total;
    }

    bool operator==(const LaurentPolynomial& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  private:
    PrimeContext ctx_;
    std::map<IntVector, Rational> terms_;
};

}  // namespace sphlab
