#pragma once

// Exact rational scalars, backed by GMP's mpq_class, plus the p-adic
// valuation.  Every rational is kept in lowest terms with a positive
// denominator (GMP's canonical form), so equality is plain comparison.

#include <gmpxx.h>

#include <optional>
#include <string>

#include "sphlab/errors.hpp"

namespace sphlab {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "num" or "num/den" (arbitrary precision, base 10).
inline Rational parse_rational(const std::string& text) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw SchemaError("not a rational: '" + text + "'");
    if (sgn(q.get_den()) == 0)
        throw SchemaError("zero denominator in rational: '" + text + "'");
    q.canonicalize();
    return q;
}

// Canonical decimal string, "a" or "a/b" with b > 1.
inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

// p^e for any integer exponent e (e may be negative).
inline Rational rational_pow(long p, long e) {
    mpz_class num = 1, den = 1;
    if (e >= 0)
        mpz_pow_ui(num.get_mpz_t(), mpz_class(p).get_mpz_t(), static_cast<unsigned long>(e));
    else
        mpz_pow_ui(den.get_mpz_t(), mpz_class(p).get_mpz_t(), static_cast<unsigned long>(-e));
    return Rational(num, den);
}

inline long integer_valuation(const Integer& z, long p) {
    mpz_class rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

// p-adic valuation; nullopt encodes +infinity (the valuation of zero).
inline std::optional<long> valuation(const Rational& x, long p) {
    if (sgn(x) == 0) return std::nullopt;
    return integer_valuation(x.get_num(), p) - integer_valuation(x.get_den(), p);
}

// Valuation of a value known to be nonzero.
inline long valuation_nonzero(const Rational& x, long p) {
    return integer_valuation(x.get_num(), p) - integer_valuation(x.get_den(), p);
}

// True when val_p(x) >= 0, i.e. x lies in the local ring Z_(p).
inline bool is_p_integral(const Rational& x, long p) {
    auto v = valuation(x, p);
    return !v || *v >= 0;
}

inline double to_double(const Rational& q) {
    return q.get_d();
}

}  // namespace sphlab
