#pragma once

// Elements of SL_n(Q) carrying their (p, n) context.  Construction checks
// det = 1 exactly, so a GroupElement is unimodular by type.

#include <utility>

#include "sphlab/context.hpp"
#include "sphlab/coweight.hpp"
#include "sphlab/matrix.hpp"

namespace sphlab {

class GroupElement {
public:
    GroupElement(PrimeContext ctx, RationalMatrix entries)
        : ctx_(ctx), a_(std::move(entries)) {
        if (a_.size() != ctx_.n)
            throw DimensionMismatchError("group element: matrix size != n");
        if (a_.det() != 1)
            throw NonUnimodularError("group element: determinant is not 1");
    }

    static GroupElement identity(PrimeContext ctx) {
        return GroupElement(ctx, RationalMatrix::identity(ctx.n));
    }

    // diag(p^{m_1}, ..., p^{m_n}); requires sum(m) = 0 so the result is in SL_n.
    static GroupElement diagonal_power(PrimeContext ctx, const IntVector& m) {
        if (static_cast<int>(m.size()) != ctx.n)
            throw DimensionMismatchError("diagonal power: arity != n");
        if (vector_sum(m) != 0)
            throw BadCoweightSumError("diagonal power: exponents must sum to zero");
        RationalMatrix d(ctx.n);
        for (int k = 0; k < ctx.n; ++k) d(k, k) = rational_pow(ctx.p, m[k]);
        return GroupElement(ctx, std::move(d));
    }

    const PrimeContext& context() const { return ctx_; }
    const RationalMatrix& entries() const { return a_; }
    const Rational& at(int i, int j) const { return a_(i, j); }

    GroupElement inverse() const { return GroupElement(ctx_, a_.inverse()); }

    bool is_integral() const { return a_.is_p_integral(ctx_.p); }

    friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
        require_same_context(x.ctx_, y.ctx_, "group product");
        return GroupElement(x.ctx_, x.a_ * y.a_);
    }

    friend bool operator==(const GroupElement& x, const GroupElement& y) {
        return x.ctx_ == y.ctx_ && x.a_ == y.a_;
    }
    friend bool operator!=(const GroupElement& x, const GroupElement& y) { return !(x == y); }

private:
    PrimeContext ctx_;
    RationalMatrix a_;
};

}  // namespace sphlab
