#pragma once

// Iwasawa decomposition g = k * b: k in SL_n(Z_p), b upper triangular.
// Column elimination from the left with valuation-minimal pivots keeps the
// accumulated k-factor integral.  The triangular part is reported as
// diag(unit_k * p^{h_k}) * nmat with nmat unipotent upper triangular, so the
// diagonal valuations h (the data spherical functions consume) are explicit.

#include <utility>
#include <vector>

#include "sphlab/cartan.hpp"

namespace sphlab {

struct IwasawaForm {
    GroupElement k;
    IntVector hval;             // valuations of the triangular diagonal
    std::vector<Rational> hunit;  // unit parts of the triangular diagonal
    RationalMatrix nmat;        // unipotent upper triangular factor

    GroupElement reconstruct() const {
        const PrimeContext& ctx = k.context();
        RationalMatrix b(ctx.n);
        for (int i = 0; i < ctx.n; ++i)
            for (int j = 0; j < ctx.n; ++j)
                b(i, j) = hunit[static_cast<std::size_t>(i)] *
                          rational_pow(ctx.p, hval[static_cast<std::size_t>(i)]) * nmat(i, j);
        return k * GroupElement(ctx, b);
    }
};

inline IwasawaForm iwasawa_decompose(const GroupElement& g) {
    const PrimeContext ctx = g.context();
    const long p = ctx.p;
    const int n = ctx.n;

    // Maintain g = k * b; row operation E applied to b pairs with k <- k*E^{-1}.
    RationalMatrix b = g.entries();
    RationalMatrix k = RationalMatrix::identity(n);

    for (int j = 0; j < n; ++j) {
        // Pivot: valuation-minimal entry of column j at or below the diagonal.
        long best = detail::kValInfinity;
        int bi = -1;
        for (int i = j; i < n; ++i) {
            long v = detail::val_or_inf(b(i, j), p);
            if (v < best) {
                best = v;
                bi = i;
            }
        }
        if (bi < 0) throw InternalError("iwasawa: zero column");
        if (bi != j) {
            for (int c = 0; c < n; ++c) {
                Rational t = b(j, c);
                b(j, c) = b(bi, c);
                b(bi, c) = -t;
            }
            for (int r = 0; r < n; ++r) {
                Rational t = k(r, j);
                k(r, j) = k(r, bi);
                k(r, bi) = -t;
            }
        }
        for (int i = j + 1; i < n; ++i) {
            if (sgn(b(i, j)) == 0) continue;
            Rational c = -b(i, j) / b(j, j);
            for (int q = 0; q < n; ++q) b(i, q) += c * b(j, q);
            for (int r = 0; r < n; ++r) k(r, j) -= c * k(r, i);
        }
    }

    IntVector hval(n);
    std::vector<Rational> hunit(static_cast<std::size_t>(n));
    RationalMatrix nmat = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
        hval[static_cast<std::size_t>(i)] = detail::val_or_inf(b(i, i), p);
        hunit[static_cast<std::size_t>(i)] =
            b(i, i) / rational_pow(p, hval[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) nmat(i, j) = b(i, j) / b(i, i);
    }

    IwasawaForm form{GroupElement(ctx, k), std::move(hval), std::move(hunit), std::move(nmat)};
    if (!form.k.is_integral()) throw InternalError("iwasawa: k-factor not integral");
    if (form.reconstruct() != g) throw InternalError("iwasawa: reconstruction failed");
    return form;
}

// Diagonal valuations of the triangular factor; the only Iwasawa data the
// spherical evaluation needs.
inline IntVector iwasawa_hval(const GroupElement& g) { return iwasawa_decompose(g).hval; }

}  // namespace sphlab
