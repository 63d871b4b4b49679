// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file correlations.hpp
 * @brief One- and two-point spin correlators of the Motzkin ground state.
 *
 * Sites are 1-indexed. Two-point functions act on sites b and b+L, so the
 * inner segment b+1..b+L-1 has L-1 sites.
 */

#pragma once

#include <motzkin/combinatorics.hpp>

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace motzkin {

enum class SpinKind { Sx, Sy, Sz, Splus, Sminus };

/// Spin-s matrices in the basis |-s>, ..., |s> (row index = value + s).
struct SpinOperator {
    SpinKind kind = SpinKind::Sz;
    int s = 1;
    Eigen::MatrixXcd matrix;

    [[nodiscard]] static SpinOperator make(SpinKind kind, int s);
};

[[nodiscard]] const char* to_string(SpinKind k);

struct CorrelatorReport {
    double exact = 0.0;
    std::optional<double> asymptotic;
    std::vector<std::pair<std::string, double>> terms; ///< named finite-size terms and diagnostics
    int precision_bits = 0;                            ///< 0 for exact-integer evaluation
    double error_bound = 0.0;
    bool reliable = true;

    [[nodiscard]] double term(const std::string& name) const;
};

/// Correlator default: 128-bit floats up to n = 10^4, 256 bits beyond.
[[nodiscard]] ArithmeticMode default_correlator_mode(int n);

/**
 * @brief Weights s^{m+q} M_{b,m} M_{L,p+q} M_{b',m+q-p} over (m, p, q),
 *        p <= m, for the segments [0,b) [b,b+L) [b+L,n).
 */
class TripartiteDistribution {
public:
    TripartiteDistribution(int n, int s, int b, int L, const ArithmeticMode& mode);

    [[nodiscard]] Real weight(int m, int p, int q) const;
    [[nodiscard]] double probability(int m, int p, int q) const;
    /// M_n, which equals the sum of all weights.
    [[nodiscard]] const Real& normalization() const noexcept { return z_; }
    /// Direct triple sum of the weights.
    [[nodiscard]] Real weight_sum() const;
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int left() const noexcept { return b_; }
    [[nodiscard]] int segment() const noexcept { return L_; }
    [[nodiscard]] int right() const noexcept { return n_ - b_ - L_; }

private:
    int n_, s_, b_, L_, prec_;
    std::vector<Real> A_, B_, C_;
    Real z_;
};

/// Conditional E[H_i H_j | m, p, q] under the uniform walk measure.
[[nodiscard]] double conditional_hh(int m, int p, int q, int s);

[[nodiscard]] CorrelatorReport sz_expectation_exact(int n, int b, int s,
                                                    std::optional<ArithmeticMode> mode = std::nullopt);
[[nodiscard]] double sz_expectation_asymptotic(int n, double b, int s);

/// <Sz_i Sz_j> by the second difference of four E[H H] sums; `connected`
/// subtracts <Sz_i><Sz_j>.
[[nodiscard]] CorrelatorReport szsz_exact(int n, int i, int j, int s,
                                          std::optional<ArithmeticMode> mode = std::nullopt,
                                          bool connected = false);
/// -(1/24) sqrt(sigma/pi) (s^2 - 1) L^{-3/2}; exactly 0 for s = 1.
[[nodiscard]] double szsz_asymptotic(double L, int s);

/// Joint law of (w_b, w_{b+L}) for s = 1; prob[w_b + 1][w_{b+L} + 1].
struct StepPairDistribution {
    int n = 0;
    int b = 0;
    int L = 0;
    int s = 1;
    std::array<std::array<double, 3>, 3> prob{};
    double error_bound = 0.0;

    [[nodiscard]] double at(int wb, int wbl) const { return prob[wb + 1][wbl + 1]; }
    /// Mean probability of the entries with |w_b + w_{b+L}| == g.
    [[nodiscard]] double group_mean(int g) const;
};

[[nodiscard]] StepPairDistribution step_pair_distribution(int n, int b, int L,
                                                          std::optional<ArithmeticMode> mode = std::nullopt);

/// Probability of (w_b in {0,1}, w_{b+L} in {-1,0}, min height over
/// steps b..b+L-1 equal to 0), by enumeration.
[[nodiscard]] double event_e_probability(int n, int b, int L);

/// s = 1 <Sx_b Sx_{b+L}>. Without the event term its probability ceiling is
/// reported as term "omitted_E_bound".
[[nodiscard]] CorrelatorReport sxsx_colorless(int n, int b, int L, bool include_event_e,
                                              std::optional<ArithmeticMode> mode = std::nullopt);

/// Centered left site for a two-point function of span L.
[[nodiscard]] int centered_site(int n, int L);

/// Colorful <Sx_b Sx_{b+L}> dominant term (s(s+1)(s+2)/3) P_L with
/// P_L = M_{L-2} M_{n-L} / M_n, plus the asymptotic and cascade terms.
/// Term "dominant_sites" uses M_{L-1} M_{n-L-1} / M_n instead.
[[nodiscard]] CorrelatorReport sxsx_colorful(int n, int L, int s, int precision_bits = 128);

/// <psi| O_1 O_2 ... O_k |psi> over the enumerated ground state.
[[nodiscard]] std::complex<double> bruteforce_correlator(int n, int s,
                                                         const std::vector<std::pair<int, SpinOperator>>& ops);

} // namespace motzkin
