// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file real.hpp
 * @brief RAII wrapper over an MPFR binary float with caller-chosen precision.
 *
 * Operations round to the precision of the destination. The exponent range
 * of MPFR covers counts far beyond 2^(10^6), so values are stored directly
 * rather than as logarithms.
 */

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace motzkin {

class Real {
public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(const mpz_class& z, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    /// Assign keeping this object's precision.
    void assign(const Real& o) { mpfr_set(v_, o.v_, MPFR_RNDN); }
    void assign(unsigned long x) { mpfr_set_ui(v_, x, MPFR_RNDN); }
    void assign_si(long x) { mpfr_set_si(v_, x, MPFR_RNDN); }
    void assign(const mpz_class& z) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    void set_zero() { mpfr_set_zero(v_, 1); }

    [[nodiscard]] mpfr_ptr get() noexcept { return v_; }
    [[nodiscard]] mpfr_srcptr get() const noexcept { return v_; }
    [[nodiscard]] mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

    [[nodiscard]] bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    [[nodiscard]] int sign() const noexcept { return mpfr_sgn(v_); }
    [[nodiscard]] double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Natural log as a double; -inf for zero.
    [[nodiscard]] double log() const;
    /// Binary exponent e with value = f * 2^e, 0.5 <= |f| < 1.
    [[nodiscard]] long exponent() const noexcept { return is_zero() ? 0 : mpfr_get_exp(v_); }
    [[nodiscard]] std::string to_string(int digits = 17) const;

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(unsigned long k) { mpfr_mul_ui(v_, v_, k, MPFR_RNDN); return *this; }
    Real& operator/=(unsigned long k) { mpfr_div_ui(v_, v_, k, MPFR_RNDN); return *this; }
    Real& mul_si(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    Real& mul_2si(long e) { mpfr_mul_2si(v_, v_, e, MPFR_RNDN); return *this; }
    Real& neg() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }

    /// this += a * b, with a single rounding.
    Real& fma_add(const Real& a, const Real& b) {
        mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN);
        return *this;
    }

private:
    mpfr_t v_;
};

inline Real operator+(Real a, const Real& b) { return a += b; }
inline Real operator-(Real a, const Real& b) { return a -= b; }
inline Real operator*(Real a, const Real& b) { return a *= b; }
inline Real operator/(Real a, const Real& b) { return a /= b; }
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }

/// k^e at the given precision (exact for moderate exponents).
[[nodiscard]] Real pow_ui(unsigned long k, unsigned long e, mpfr_prec_t prec);
/// Natural log evaluated in MPFR, rounded to the argument's precision.
[[nodiscard]] Real log_real(const Real& x);
/// Round to nearest integer (ties away), exact when |x| < 2^prec.
[[nodiscard]] mpz_class round_to_integer(const Real& x);

} // namespace motzkin
