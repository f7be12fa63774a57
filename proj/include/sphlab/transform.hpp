#pragma once

// Coset-expansion transform from the Hecke algebra with exact rational
// coefficients into symmetric Laurent polynomials.  For a single indicator
// the image is
//
//   P_{chi_m}(x) = (L(m) / L(m^-)) * sum over representatives v of m^-
//                  of p^{-sum_k k h_k} x^h,   h = Iwasawa valuations of v^{-1}.
//
// Evaluating at x_k = p^{-s_k} reproduces the linear functional tau of the
// spherical function with parameter s; the product rule and symmetry under
// variable permutations are exact consequences checked by the tests.

#include "sphlab/laurent.hpp"
#include "sphlab/spherical.hpp"

namespace sphlab {

inline LaurentPolynomial satake_transform(const ExactHeckeElement& f, const Limits& limits = {}) {
    const PrimeContext& ctx = f.context();
    LaurentPolynomial out(ctx);
    for (const auto& [m, c] : f.terms()) {
        DominantCoweight minv = m.inverse_label();
        auto reps = left_coset_reps(ctx, minv, limits);
        Rational ratio = Rational(static_cast<unsigned long>(coset_count(ctx, m, limits))) /
                         Rational(static_cast<unsigned long>(reps->size()));
        LaurentPolynomial part(ctx);
        for (const auto& [h, count] : reps->inverse_hval_histogram) {
            long weight = 0;
            for (int k = 1; k <= ctx.n; ++k) weight -= k * h[static_cast<std::size_t>(k - 1)];
            part.add_term(h, Rational(static_cast<unsigned long>(count)) *
                                 rational_pow(ctx.p, weight));
        }
        out = out + part.scaled(c * ratio);
    }
    return out;
}

}  // namespace sphlab
