#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

namespace partalg {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt power(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

/// Natural logarithm of a positive integer of any size.
inline double log_of(const BigInt& x) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

} // namespace partalg
