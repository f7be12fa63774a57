#pragma once

// Cartan decomposition g = u1 * pi^m * u2 over the local ring Z_(p): Smith
// elimination with valuation-minimal pivoting.  All row/column operations are
// integral with integral inverses; signed swaps and paired unit scalings keep
// both accumulated factors in SL_n(Z_p).
//
// cartan_label computes just the coweight m through minor valuations, which
// is much cheaper when the unimodular factors are not needed.

#include <limits>
#include <utility>
#include <vector>

#include "sphlab/group_element.hpp"

namespace sphlab {

struct CartanForm {
    GroupElement u1;
    DominantCoweight m;
    GroupElement u2;

    GroupElement reconstruct() const {
        return u1 * GroupElement::diagonal_power(u1.context(), m.entries()) * u2;
    }
};

namespace detail {

constexpr long kValInfinity = std::numeric_limits<long>::max();

inline long val_or_inf(const Rational& x, long p) {
    auto v = valuation(x, p);
    return v ? *v : kValInfinity;
}

// Determinant of a k x k integer submatrix by fraction-free (Bareiss)
// elimination; k is tiny here, so the quadratic bookkeeping is irrelevant.
inline Integer integer_minor_det(const std::vector<Integer>& flat, int n,
                                 const std::vector<int>& rows, const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    if (k == 1) return flat[static_cast<std::size_t>(rows[0] * n + cols[0])];
    if (k == 2)
        return flat[static_cast<std::size_t>(rows[0] * n + cols[0])] *
                   flat[static_cast<std::size_t>(rows[1] * n + cols[1])] -
               flat[static_cast<std::size_t>(rows[0] * n + cols[1])] *
                   flat[static_cast<std::size_t>(rows[1] * n + cols[0])];
    std::vector<Integer> a(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a[static_cast<std::size_t>(i * k + j)] =
                flat[static_cast<std::size_t>(rows[i] * n + cols[j])];
    Integer prev = 1;
    int sign = 1;
    for (int c = 0; c < k - 1; ++c) {
        if (a[static_cast<std::size_t>(c * k + c)] == 0) {
            int piv = -1;
            for (int r = c + 1; r < k; ++r)
                if (a[static_cast<std::size_t>(r * k + c)] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < k; ++j)
                std::swap(a[static_cast<std::size_t>(c * k + j)],
                          a[static_cast<std::size_t>(piv * k + j)]);
            sign = -sign;
        }
        for (int r = c + 1; r < k; ++r) {
            for (int j = c + 1; j < k; ++j) {
                a[static_cast<std::size_t>(r * k + j)] =
                    (a[static_cast<std::size_t>(c * k + c)] *
                         a[static_cast<std::size_t>(r * k + j)] -
                     a[static_cast<std::size_t>(r * k + c)] *
                         a[static_cast<std::size_t>(c * k + j)]) /
                    prev;
            }
            a[static_cast<std::size_t>(r * k + c)] = 0;
        }
        prev = a[static_cast<std::size_t>(c * k + c)];
    }
    return sign > 0 ? a[static_cast<std::size_t>(k * k - 1)]
                    : Integer(-a[static_cast<std::size_t>(k * k - 1)]);
}

// Minimum valuation over k x k minors of an integral matrix, for k = 1..n-1,
// accumulated into a cumulative vector; entry [n] is left for the caller, who
// knows the determinant valuation.  Minor valuations of an integral matrix
// are nonnegative, so a minimum of zero short-circuits.
inline std::vector<long> cumulative_minor_valuations(const std::vector<Integer>& flat, int n,
                                                     long p) {
    std::vector<long> cumulative(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k < n; ++k) {
        long best = kValInfinity;
        std::vector<int> rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i;
        auto next_combination = [n](std::vector<int>& c) {
            int k2 = static_cast<int>(c.size());
            for (int i = k2 - 1; i >= 0; --i) {
                if (c[static_cast<std::size_t>(i)] < n - k2 + i) {
                    ++c[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < k2; ++j)
                        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
            do {
                Integer det = integer_minor_det(flat, n, rows, cols);
                if (det != 0) {
                    long v = integer_valuation(det, p);
                    if (v < best) best = v;
                    if (best == 0) break;
                }
            } while (next_combination(cols));
            if (best == 0) break;
        } while (next_combination(rows));
        cumulative[static_cast<std::size_t>(k)] = best;
    }
    return cumulative;
}

// Row/column operations on a working matrix `a` with the inverse operation
// mirrored onto an accumulator, maintaining g = u * a * v throughout.
struct FactoredWorkspace {
    RationalMatrix a, u, v;
    int n;

    explicit FactoredWorkspace(const RationalMatrix& g)
        : a(g), u(RationalMatrix::identity(g.size())), v(RationalMatrix::identity(g.size())),
          n(g.size()) {}

    // rows r1 <- r2, r2 <- -r1 of `a`; determinant-preserving swap.
    void row_swap_signed(int r1, int r2) {
        for (int j = 0; j < n; ++j) {
            Rational t = a(r1, j);
            a(r1, j) = a(r2, j);
            a(r2, j) = -t;
        }
        for (int i = 0; i < n; ++i) {
            Rational t = u(i, r1);
            u(i, r1) = u(i, r2);
            u(i, r2) = -t;
        }
    }

    void col_swap_signed(int c1, int c2) {
        for (int i = 0; i < n; ++i) {
            Rational t = a(i, c1);
            a(i, c1) = a(i, c2);
            a(i, c2) = -t;
        }
        for (int j = 0; j < n; ++j) {
            Rational t = v(c1, j);
            v(c1, j) = v(c2, j);
            v(c2, j) = -t;
        }
    }

    void row_addmul(int i, int k, const Rational& c) {
        for (int j = 0; j < n; ++j) a(i, j) += c * a(k, j);
        for (int r = 0; r < n; ++r) u(r, k) -= c * u(r, i);
    }

    void col_addmul(int j, int k, const Rational& c) {
        for (int i = 0; i < n; ++i) a(i, j) += c * a(i, k);
        for (int q = 0; q < n; ++q) v(k, q) -= c * v(j, q);
    }

    void row_scale(int k, const Rational& c) {
        for (int j = 0; j < n; ++j) a(k, j) *= c;
        Rational inv = 1 / c;
        for (int r = 0; r < n; ++r) u(r, k) *= inv;
    }
};

}  // namespace detail

inline CartanForm cartan_decompose(const GroupElement& g) {
    const PrimeContext ctx = g.context();
    const long p = ctx.p;
    const int n = ctx.n;
    detail::FactoredWorkspace w(g.entries());

    for (int k = 0; k < n; ++k) {
        // Valuation-minimal pivot in the trailing block; ties by lowest row,
        // then lowest column index.
        long best = detail::kValInfinity;
        int bi = -1, bj = -1;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                long v = detail::val_or_inf(w.a(i, j), p);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) throw InternalError("cartan: trailing block vanished");
        if (bi != k) w.row_swap_signed(k, bi);
        if (bj != k) w.col_swap_signed(k, bj);

        // Multipliers are in Z_(p) because the pivot valuation is minimal.
        for (int i = k + 1; i < n; ++i)
            if (sgn(w.a(i, k)) != 0) w.row_addmul(i, k, -w.a(i, k) / w.a(k, k));
        for (int j = k + 1; j < n; ++j)
            if (sgn(w.a(k, j)) != 0) w.col_addmul(j, k, -w.a(k, j) / w.a(k, k));
    }

    // Diagonal entries are unit * p^{v_k} with v ascending; strip the units.
    // Their product is 1 (the determinant is 1), so the paired scalings keep
    // the accumulated factor unimodular.
    IntVector vals(n);
    for (int k = 0; k < n; ++k) {
        vals[k] = detail::val_or_inf(w.a(k, k), p);
        Rational unit = w.a(k, k) / rational_pow(p, vals[k]);
        w.row_scale(k, 1 / unit);
    }

    // Conjugate by the order-reversing signed permutation so m is dominant.
    std::vector<int> rev(n);
    for (int k = 0; k < n; ++k) rev[k] = n - 1 - k;
    RationalMatrix r(n);
    for (int k = 0; k < n; ++k) r(k, rev[k]) = 1;
    if (r.det() != 1) r(0, rev[0]) = -1;
    RationalMatrix rinv = r.inverse();

    IntVector m(n);
    for (int k = 0; k < n; ++k) m[k] = vals[rev[k]];
    GroupElement u1(ctx, w.u * rinv);
    GroupElement u2(ctx, r * w.v);

    CartanForm form{std::move(u1), DominantCoweight(std::move(m)), std::move(u2)};
    if (!form.u1.is_integral() || !form.u2.is_integral())
        throw InternalError("cartan: unimodular factor not integral");
    if (form.reconstruct() != g) throw InternalError("cartan: reconstruction failed");
    return form;
}

// Minor-valuation route to the Cartan coweight: the minimum valuation over
// k-by-k minors equals v_1 + ... + v_k for the ascending elementary divisor
// exponents v.  Denominators are cleared first so all minor arithmetic is
// integral; a rational scaling by c shifts the label by val(c) in every slot.
inline DominantCoweight cartan_label(const GroupElement& g) {
    const long p = g.context().p;
    const int n = g.context().n;
    const RationalMatrix& a = g.entries();

    Integer den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).get_den().get_mpz_t());
    const long den_val = integer_valuation(den, p);

    std::vector<Integer> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational scaled = a(i, j) * Rational(den);
            if (scaled.get_den() != 1) throw InternalError("cartan_label: denominator survived");
            flat[static_cast<std::size_t>(i * n + j)] = scaled.get_num();
        }

    auto cumulative = detail::cumulative_minor_valuations(flat, n, p);
    // det(den * g) = den^n since det(g) = 1.
    cumulative[static_cast<std::size_t>(n)] = static_cast<long>(n) * den_val;

    IntVector m(n);
    for (int k = 1; k <= n; ++k)
        m[static_cast<std::size_t>(n - k)] = cumulative[static_cast<std::size_t>(k)] -
                                             cumulative[static_cast<std::size_t>(k - 1)] - den_val;
    return DominantCoweight(std::move(m));
}

}  // namespace sphlab
