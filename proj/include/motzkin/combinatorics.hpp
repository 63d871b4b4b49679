// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file combinatorics.hpp
 * @brief Counting s-colored Motzkin walks, Dyck paths and trinomials in
 *        exact-integer or high-precision float arithmetic.
 *
 * M_{n,m} counts length-n walks from height 0 to height m with a fixed
 * coloring of the m unmatched up steps; matched pairs are summed over
 * colors. Callers apply the s^m coloring degeneracy explicitly.
 */

#pragma once

#include <motzkin/real.hpp>

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace motzkin {

struct ArithmeticMode {
    enum class Kind { exact, log_float };

    Kind kind = Kind::exact;
    int precision_bits = 0;

    [[nodiscard]] static ArithmeticMode exact() { return {Kind::exact, 0}; }
    [[nodiscard]] static ArithmeticMode log_float(int bits = 128) { return {Kind::log_float, bits}; }
    [[nodiscard]] bool is_exact() const noexcept { return kind == Kind::exact; }
    void validate() const;
    [[nodiscard]] std::string describe() const;
};

/// Largest n accepted in exact-integer mode (default 4000).
[[nodiscard]] int exact_length_cap();
void set_exact_length_cap(int n);

/// sigma = sqrt(s) / (2 sqrt(s) + 1).
[[nodiscard]] double sigma_of(int s);

struct MotzkinParams {
    int s = 1;
    int n = 0;
    int m = 0;

    [[nodiscard]] double sigma() const { return sigma_of(s); }
    /// Throws ParameterError for s < 1, n < 0 or m < 0. m > n is allowed (empty).
    void validate() const;
};

/**
 * @brief Nonnegative count in either arithmetic mode.
 *
 * Float mode keeps an MPFR value; zero is an explicit marker rather than a
 * -inf logarithm.
 */
class WalkCount {
public:
    WalkCount() = default;
    [[nodiscard]] static WalkCount from_exact(mpz_class v);
    [[nodiscard]] static WalkCount from_real(Real v);
    /// Zero count for an index set that admits no walks (e.g. m > n).
    [[nodiscard]] static WalkCount structurally_empty(const ArithmeticMode& mode);

    [[nodiscard]] const ArithmeticMode& mode() const noexcept { return mode_; }
    [[nodiscard]] bool is_zero() const noexcept { return zero_; }
    [[nodiscard]] bool is_structurally_empty() const noexcept { return empty_; }

    /// Natural log; -inf for zero.
    [[nodiscard]] double log() const;
    [[nodiscard]] double log2() const;
    /// Throws if not exact mode.
    [[nodiscard]] const mpz_class& exact() const;
    /// Value as an MPFR float at the requested precision.
    [[nodiscard]] Real to_real(int prec) const;
    [[nodiscard]] double to_double() const;
    /// Exact decimal digits, or 17 significant digits in float mode.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const WalkCount& a, const WalkCount& b);

private:
    ArithmeticMode mode_{};
    mpz_class exact_{0};
    Real real_{53};
    bool zero_ = true;
    bool empty_ = false;
};

[[nodiscard]] WalkCount motzkin_count(const MotzkinParams& p, const ArithmeticMode& mode);
/// Trinomial-sum closed form, exact-integer mode.
[[nodiscard]] WalkCount motzkin_count_closed_form(const MotzkinParams& p);
/// Ballot-theorem count of nonnegative up/down walks from height m1 to m2.
[[nodiscard]] WalkCount dyck_count(int L, int m1, int m2);
/// Natural log of the Gaussian asymptotic for M_{n,m}; requires n, m >= 1.
[[nodiscard]] double motzkin_asymptotic(const MotzkinParams& p);
/// M_n = M_{n,0}.
[[nodiscard]] WalkCount total_motzkin(int n, int s, const ArithmeticMode& mode);
/// Sum_m s^m M_{n/2,m}^2 for even n; equals M_n.
[[nodiscard]] mpz_class half_split_total(int n, int s);
/// N! / (a! b! c!); throws unless a+b+c == N.
[[nodiscard]] WalkCount trinomial(int N, int a, int b, int c);
/// Natural log of the saddle-point Gaussian approximation to the trinomial.
[[nodiscard]] double trinomial_gaussian_log(int N, int a, int b, int c);

// ---------------------------------------------------------------------------
// Rows of M_{k,m} for fixed k, used by the spectrum and correlator engines.
// ---------------------------------------------------------------------------

/// Exact row M_{n,0..n}.
[[nodiscard]] std::vector<mpz_class> exact_row(int n, int s);

using RealRow = std::vector<Real>;
using RealRowPtr = std::shared_ptr<const RealRow>;

/// Height cap beyond which row entries are below 2^-(prec+64) of the row
/// maximum for all lengths up to max_length.
[[nodiscard]] int truncation_cap(int max_length, int s, int prec);

/**
 * @brief Float rows for a set of lengths from one DP sweep.
 *
 * cap < 0 keeps every height; otherwise rows hold heights 0..cap and paths
 * through higher heights are dropped. Rows are cached by (s, prec, cap, k);
 * the cache allows concurrent readers.
 */
[[nodiscard]] std::map<int, RealRowPtr> real_rows(const std::vector<int>& lengths, int s, int prec,
                                                  int cap = -1);
[[nodiscard]] RealRowPtr real_row(int n, int s, int prec);
void clear_row_cache();

/// M_{n,m} by the closed-form series in float arithmetic, O(n).
[[nodiscard]] Real motzkin_real(int n, int m, int s, int prec);

} // namespace motzkin
