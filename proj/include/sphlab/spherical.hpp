#pragma once

// Spherical function evaluation.  The value at g is the average, over the
// left coset representatives w of the double coset of g, of alpha at the
// Iwasawa diagonal valuations of w^{-1}.  Values are cached per Cartan label;
// an exact rational route is provided when every exponent is an integer.

#include <complex>
#include <map>
#include <optional>

#include "sphlab/hecke.hpp"
#include "sphlab/iwasawa.hpp"
#include "sphlab/satake.hpp"

namespace sphlab {

class SphericalFunction {
  public:
    explicit SphericalFunction(SatakeParameter param, Limits limits = {})
        : param_(std::move(param)), limits_(limits) {}

    const SatakeParameter& param() const { return param_; }
    const PrimeContext& context() const { return param_.context(); }

    std::complex<double> eval_label(const DominantCoweight& m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        auto reps = left_coset_reps(context(), m, limits_);
        std::complex<double> sum = 0.0;
        for (const auto& [hval, count] : reps->inverse_hval_histogram)
            sum += static_cast<double>(count) * alpha_eval(param_, hval);
        std::complex<double> value = sum / static_cast<double>(reps->size());
        cache_.emplace(m, value);
        return value;
    }

    std::complex<double> eval(const GroupElement& g) { return eval_label(cartan_label(g)); }

    // Exact value when the parameter is real and every coset exponent is an
    // integer, so each alpha value is a rational power of p.
    std::optional<Rational> eval_label_exact(const DominantCoweight& m) {
        auto reps = left_coset_reps(context(), m, limits_);
        Rational sum = 0;
        for (const auto& [hval, count] : reps->inverse_hval_histogram) {
            ComplexRational e = param_.evaluation_exponent(hval);
            if (sgn(e.im) != 0) return std::nullopt;
            if (e.re.get_den() != 1) return std::nullopt;
            sum += Rational(static_cast<unsigned long>(count)) *
                   rational_pow(context().p, -e.re.get_num().get_si());
        }
        return sum / Rational(static_cast<unsigned long>(reps->size()));
    }

  private:
    SatakeParameter param_;
    Limits limits_;
    std::map<DominantCoweight, std::complex<double>> cache_;
};

// Linear functional induced on the algebra: tau(f) = sum_m c(m) L(m)
// omega(pi^{-m}).  Multiplicative on the commutative algebra exactly when
// omega is spherical; tests exploit that as a cross-module check.
template <typename Coeff>
std::complex<double> tau_eval(SphericalFunction& omega, const HeckeElementT<Coeff>& f,
                              const Limits& limits = {}) {
    require_same_context(omega.context(), f.context(), "tau evaluation");
    std::complex<double> total = 0.0;
    for (const auto& [m, c] : f.terms()) {
        std::complex<double> coeff;
        if constexpr (std::is_same_v<Coeff, Rational>)
            coeff = to_double(c);
        else
            coeff = c;
        total += coeff * static_cast<double>(coset_count(omega.context(), m, limits)) *
                 omega.eval_label(m.inverse_label());
    }
    return total;
}

// | average of omega(g1 u g2) over u - omega(g1) omega(g2) |, the average
// running over exact lifts of SL_n(Z/p^N).  The class of u mod p^N already
// determines omega(g1 u g2) once N >= spread(label(g2)), so the finite
// average equals the group integral.
inline double functional_equation_defect(SphericalFunction& omega, const GroupElement& g1,
                                         const GroupElement& g2, const Limits& limits = {}) {
    require_same_context(g1.context(), g2.context(), "functional equation");
    require_same_context(omega.context(), g1.context(), "functional equation");
    long level = std::max<long>(cartan_label(g2).spread(), 1);
    auto lifts = congruence_reps(g1.context(), level, limits);
    std::complex<double> sum = 0.0;
    for (const GroupElement& u : lifts) sum += omega.eval(g1 * u * g2);
    std::complex<double> average = sum / static_cast<double>(lifts.size());
    return std::abs(average - omega.eval(g1) * omega.eval(g2));
}

// Distance data for the perturbation sequence at one index j: the exact
// averaged bound (mean of |alpha - 1| over representatives) dominates the
// observed |omega - 1| on each label.
struct ConvergencePoint {
    long j = 0;
    double omega_gap = 0.0;      // max over labels of |omega_{s(j)} - 1|
    double majorant_gap = 0.0;   // max over labels of mean |alpha - 1|
};

inline ConvergencePoint convergence_point(const PrimeContext& ctx, long j,
                                          const std::vector<DominantCoweight>& labels,
                                          const Limits& limits = {}) {
    SphericalFunction omega(SatakeParameter::sequence(ctx, j), limits);
    ConvergencePoint point;
    point.j = j;
    for (const DominantCoweight& m : labels) {
        auto reps = left_coset_reps(ctx, m, limits);
        double majorant = 0.0;
        for (const auto& [hval, count] : reps->inverse_hval_histogram)
            majorant += static_cast<double>(count) *
                        std::abs(alpha_eval(omega.param(), hval) - 1.0);
        majorant /= static_cast<double>(reps->size());
        point.majorant_gap = std::max(point.majorant_gap, majorant);
        point.omega_gap = std::max(point.omega_gap, std::abs(omega.eval_label(m) - 1.0));
    }
    return point;
}

inline std::vector<ConvergencePoint> convergence_profile(
    const PrimeContext& ctx, const std::vector<long>& js,
    const std::vector<DominantCoweight>& labels, const Limits& limits = {}) {
    std::vector<ConvergencePoint> profile;
    profile.reserve(js.size());
    for (long j : js) profile.push_back(convergence_point(ctx, j, labels, limits));
    return profile;
}

}  // namespace sphlab
