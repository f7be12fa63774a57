#pragma once

// Eigensystem of a complex Hermitian matrix via the real symmetric embedding
//
//   [ Re A  -Im A ]
//   [ Im A   Re A ]
//
// whose spectrum doubles that of A: (x; y) is an eigenvector exactly when
// x + i y is one for A, and unit real vectors map to unit complex vectors.
// The real solver is a cyclic Jacobi sweep, chosen for its robustness on the
// small well-conditioned matrices this library produces.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "sphlab/errors.hpp"

namespace sphlab {

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

struct EigenSystem {
    std::vector<double> values;                             // ascending
    std::vector<std::vector<std::complex<double>>> vectors;  // unit, values[k] <-> vectors[k]
};

namespace detail {

// In-place cyclic Jacobi on a symmetric matrix; returns eigenvalues in `a`'s
// diagonal and accumulates rotations into `v`.
inline void jacobi_sweeps(std::vector<std::vector<double>>& a,
                          std::vector<std::vector<double>>& v) {
    const std::size_t n = a.size();
    v.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i][j]));
    if (scale == 0.0) return;
    const double stop = 1e-15 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(a[i][j]));
        if (off <= stop) return;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) <= stop * 1e-2) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }
    throw InternalError("jacobi iteration failed to converge");
}

}  // namespace detail

inline EigenSystem hermitian_eigensystem(const ComplexMatrix& a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DimensionMismatchError("eigensystem needs a square matrix");
    if (n == 0) return {};

    const std::size_t nn = 2 * n;
    std::vector<std::vector<double>> b(nn, std::vector<double>(nn, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            b[i][j] = a[i][j].real();
            b[i][j + n] = -a[i][j].imag();
            b[i + n][j] = a[i][j].imag();
            b[i + n][j + n] = a[i][j].real();
        }

    std::vector<std::vector<double>> v;
    detail::jacobi_sweeps(b, v);

    std::vector<std::size_t> order(nn);
    for (std::size_t k = 0; k < nn; ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return b[x][x] < b[y][y]; });

    // The doubled spectrum pairs up after sorting; keep one column per pair.
    EigenSystem out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t k = 0; k < nn; k += 2) {
        std::size_t col = order[k];
        out.values.push_back(b[col][col]);
        std::vector<std::complex<double>> vec(n);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            vec[i] = {v[i][col], v[i + n][col]};
            norm += std::norm(vec[i]);
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) throw InternalError("eigenvector normalization failed");
        for (std::size_t i = 0; i < n; ++i) vec[i] /= norm;
        out.vectors.push_back(std::move(vec));
    }
    return out;
}

}  // namespace sphlab
