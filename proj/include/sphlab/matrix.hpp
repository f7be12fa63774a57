#pragma once

// Dense square matrices over the exact rationals.  Sizes are tiny (n <= 16),
// so plain Gaussian elimination with exact arithmetic is the right tool.

#include <vector>

#include "sphlab/errors.hpp"
#include "sphlab/rational.hpp"

namespace sphlab {

class RationalMatrix {
public:
    RationalMatrix() : n_(0) {}
    explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {}

    static RationalMatrix identity(int n) {
        RationalMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int size() const { return n_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

    friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const RationalMatrix& x, const RationalMatrix& y) { return !(x == y); }

    friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
        if (x.n_ != y.n_) throw DimensionMismatchError("matrix product: sizes differ");
        RationalMatrix z(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const Rational& xik = x(i, k);
                if (sgn(xik) == 0) continue;
                for (int j = 0; j < x.n_; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }

    friend RationalMatrix operator*(const Rational& c, const RationalMatrix& x) {
        RationalMatrix z(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int j = 0; j < x.n_; ++j) z(i, j) = c * x(i, j);
        return z;
    }

    Rational det() const {
        RationalMatrix w(*this);
        Rational d(1);
        for (int k = 0; k < n_; ++k) {
            int pivot = -1;
            for (int i = k; i < n_; ++i)
                if (sgn(w(i, k)) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Rational(0);
            if (pivot != k) {
                for (int j = k; j < n_; ++j) std::swap(w(pivot, j), w(k, j));
                d = -d;
            }
            d *= w(k, k);
            for (int i = k + 1; i < n_; ++i) {
                if (sgn(w(i, k)) == 0) continue;
                Rational f = w(i, k) / w(k, k);
                for (int j = k; j < n_; ++j) w(i, j) -= f * w(k, j);
            }
        }
        return d;
    }

    RationalMatrix inverse() const {
        RationalMatrix w(*this);
        RationalMatrix inv = identity(n_);
        for (int k = 0; k < n_; ++k) {
            int pivot = -1;
            for (int i = k; i < n_; ++i)
                if (sgn(w(i, k)) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) throw Error("matrix inverse: singular matrix");
            if (pivot != k)
                for (int j = 0; j < n_; ++j) {
                    std::swap(w(pivot, j), w(k, j));
                    std::swap(inv(pivot, j), inv(k, j));
                }
            Rational d = w(k, k);
            for (int j = 0; j < n_; ++j) {
                w(k, j) /= d;
                inv(k, j) /= d;
            }
            for (int i = 0; i < n_; ++i) {
                if (i == k || sgn(w(i, k)) == 0) continue;
                Rational f = w(i, k);
                for (int j = 0; j < n_; ++j) {
                    w(i, j) -= f * w(k, j);
                    inv(i, j) -= f * inv(k, j);
                }
            }
        }
        return inv;
    }

    bool is_p_integral(long p) const {
        for (const Rational& x : a_)
            if (!sphlab::is_p_integral(x, p)) return false;
        return true;
    }

private:
    int n_;
    std::vector<Rational> a_;
};

}  // namespace sphlab
