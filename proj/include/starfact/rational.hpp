#pragma once

#include <gmpxx.h>

#include <string>

namespace starfact {

// Exact arithmetic everywhere: GMP rationals for coefficients, GMP
// integers for counts and combinatorial quantities.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer integer_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Canonicalized num/den rational (mpq_class does not reduce on its own).
inline Rational make_rational(const Integer& num, const Integer& den) {
    return Rational(num) / Rational(den);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace starfact
