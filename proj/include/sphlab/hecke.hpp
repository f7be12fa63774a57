#pragma once

// Bi-invariant finitely supported functions on the double coset space,
// i.e. the Hecke algebra of the pair (SL_n(Q_p), SL_n(Z_p)).  Elements are
// coweight -> coefficient maps; the product is convolution, computed through
// exact integer structure constants.

#include <complex>
#include <map>
#include <type_traits>

#include "sphlab/finite_quotient.hpp"

namespace sphlab {

namespace detail {

inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const std::complex<double>& c) {
    return c.real() == 0.0 && c.imag() == 0.0;
}
inline Rational coeff_conj(const Rational& c) { return c; }
inline std::complex<double> coeff_conj(const std::complex<double>& c) { return std::conj(c); }

template <typename Coeff>
Coeff coeff_from_integer(const Integer& z) {
    if constexpr (std::is_same_v<Coeff, Rational>)
        return Rational(z);
    else
        return Coeff(z.get_d());
}

}  // namespace detail

// Structure constants: chi_{m1} * chi_{m2} = sum_m3 N(m1,m2;m3) chi_{m3}.
// Every product w_i v_j of representatives lands in some double coset; the
// histogram of Cartan labels counts each target coset L(m3) times, so the
// counts divide exactly.
inline std::map<DominantCoweight, Integer> structure_constants(const PrimeContext& ctx,
                                                               const DominantCoweight& m1,
                                                               const DominantCoweight& m2,
                                                               const Limits& limits = {}) {
    static std::mutex cache_mutex;
    static std::map<std::string, std::map<DominantCoweight, Integer>> cache;
    const std::string key =
        detail::coset_cache_key(ctx, m1) + "|" + m2.str();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    auto reps1 = left_coset_reps(ctx, m1, limits);
    auto reps2 = left_coset_reps(ctx, m2, limits);
    std::map<DominantCoweight, Integer> histogram;
    for (const GroupElement& w : reps1->reps)
        for (const GroupElement& v : reps2->reps) histogram[cartan_label(w * v)] += 1;

    std::map<DominantCoweight, Integer> constants;
    for (const auto& [m3, count] : histogram) {
        Integer l3(static_cast<unsigned long>(coset_count(ctx, m3, limits)));
        Integer quotient, remainder;
        mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), count.get_mpz_t(),
                    l3.get_mpz_t());
        if (remainder != 0)
            throw InternalError("structure constant histogram for " + m1.str() + ", " + m2.str() +
                                " not divisible at " + m3.str());
        constants.emplace(m3, quotient);
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(constants)).first->second;
}

// Definitional convolution value (chi_{m1} * chi_{m2})(pi^{m3}); used as an
// independent check against the histogram route.
inline Integer convolution_value_at(const PrimeContext& ctx, const DominantCoweight& m1,
                                    const DominantCoweight& m2, const DominantCoweight& m3,
                                    const Limits& limits = {}) {
    auto reps1 = left_coset_reps(ctx, m1, limits);
    GroupElement target = GroupElement::diagonal_power(ctx, m3.entries());
    Integer count = 0;
    for (const GroupElement& w : reps1->reps)
        if (cartan_label(w.inverse() * target) == m2) count += 1;
    return count;
}

// Left coset count ratio L(m) / L(m^-); the modular function of the pair on
// the double coset labeled m.
inline Rational delta_ratio(const PrimeContext& ctx, const DominantCoweight& m,
                            const Limits& limits = {}) {
    return Rational(static_cast<unsigned long>(coset_count(ctx, m, limits))) /
           Rational(static_cast<unsigned long>(coset_count(ctx, m.inverse_label(), limits)));
}

template <typename Coeff>
class HeckeElementT {
  public:
    using CoeffType = Coeff;

    explicit HeckeElementT(PrimeContext ctx) : ctx_(ctx) {}

    static HeckeElementT zero(const PrimeContext& ctx) { return HeckeElementT(ctx); }

    // Indicator of Gamma itself: the unit of the algebra.
    static HeckeElementT unit(const PrimeContext& ctx) {
        return indicator(ctx, DominantCoweight::zero(ctx.n));
    }

    static HeckeElementT indicator(const PrimeContext& ctx, const DominantCoweight& m) {
        if (m.rank() != ctx.n)
            throw DimensionMismatchError("coweight rank does not match context");
        HeckeElementT f(ctx);
        f.terms_.emplace(m, Coeff(1));
        return f;
    }

    const PrimeContext& context() const { return ctx_; }
    const std::map<DominantCoweight, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(const DominantCoweight& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void set_coeff(const DominantCoweight& m, const Coeff& c) {
        if (m.rank() != ctx_.n)
            throw DimensionMismatchError("coweight rank does not match context");
        if (detail::coeff_is_zero(c))
            terms_.erase(m);
        else
            terms_[m] = c;
    }

    void add_term(const DominantCoweight& m, const Coeff& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!detail::coeff_is_zero(c)) terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }

    HeckeElementT operator+(const HeckeElementT& other) const {
        require_same_context(ctx_, other.ctx_, "hecke addition");
        HeckeElementT out = *this;
        for (const auto& [m, c] : other.terms_) out.add_term(m, c);
        return out;
    }

    HeckeElementT operator-(const HeckeElementT& other) const {
        require_same_context(ctx_, other.ctx_, "hecke subtraction");
        HeckeElementT out = *this;
        for (const auto& [m, c] : other.terms_) out.add_term(m, Coeff(-1) * c);
        return out;
    }

    HeckeElementT scaled(const Coeff& s) const {
        HeckeElementT out(ctx_);
        if (detail::coeff_is_zero(s)) return out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, s * c);
        return out;
    }

    bool operator==(const HeckeElementT& other) const {
        return ctx_ == other.ctx_ && terms_ == other.terms_;
    }
    bool operator!=(const HeckeElementT& other) const { return !(*this == other); }

  private:
    PrimeContext ctx_;
    std::map<DominantCoweight, Coeff> terms_;
};

using HeckeElement = HeckeElementT<std::complex<double>>;
using ExactHeckeElement = HeckeElementT<Rational>;

template <typename Coeff>
HeckeElementT<Coeff> convolve(const HeckeElementT<Coeff>& f1, const HeckeElementT<Coeff>& f2,
                              const Limits& limits = {}) {
    require_same_context(f1.context(), f2.context(), "convolution");
    HeckeElementT<Coeff> out(f1.context());
    for (const auto& [m1, c1] : f1.terms())
        for (const auto& [m2, c2] : f2.terms()) {
            auto constants = structure_constants(f1.context(), m1, m2, limits);
            for (const auto& [m3, count] : constants)
                out.add_term(m3, c1 * c2 * detail::coeff_from_integer<Coeff>(count));
        }
    return out;
}

// Involution f^*(g) = conj(f(g^{-1})); the modular ratio is identically 1
// for this pair (checked by tests, not assumed here beyond the formula).
template <typename Coeff>
HeckeElementT<Coeff> involve(const HeckeElementT<Coeff>& f) {
    HeckeElementT<Coeff> out(f.context());
    for (const auto& [m, c] : f.terms()) out.add_term(m.inverse_label(), detail::coeff_conj(c));
    return out;
}

template <typename Coeff>
auto l1_norm(const HeckeElementT<Coeff>& f, const Limits& limits = {}) {
    if constexpr (std::is_same_v<Coeff, Rational>) {
        Rational total = 0;
        for (const auto& [m, c] : f.terms())
            total += abs(c) * Rational(static_cast<unsigned long>(
                                 coset_count(f.context(), m, limits)));
        return total;
    } else {
        double total = 0;
        for (const auto& [m, c] : f.terms())
            total += std::abs(c) * static_cast<double>(coset_count(f.context(), m, limits));
        return total;
    }
}

}  // namespace sphlab
