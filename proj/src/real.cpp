// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

#include <motzkin/real.hpp>

#include <cmath>
#include <limits>
#include <vector>

namespace motzkin {

double Real::log() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    // Split off the binary exponent so the double result keeps full accuracy.
    long e = 0;
    const double f = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    if (mpfr_get_prec(v_) <= 53) return std::log(f) + static_cast<double>(e) * std::log(2.0);
    Real t(*this);
    mpfr_mul_2si(t.get(), t.get(), -e, MPFR_RNDN);
    mpfr_log(t.get(), t.get(), MPFR_RNDN);
    Real ln2(mpfr_get_prec(v_));
    mpfr_const_log2(ln2.get(), MPFR_RNDN);
    mpfr_mul_si(ln2.get(), ln2.get(), e, MPFR_RNDN);
    t += ln2;
    return t.to_double();
}

std::string Real::to_string(int digits) const {
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

Real pow_ui(unsigned long k, unsigned long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_ui_pow_ui(r.get(), k, e, MPFR_RNDN);
    return r;
}

Real log_real(const Real& x) {
    Real r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

mpz_class round_to_integer(const Real& x) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDNA);
    return z;
}

} // namespace motzkin
