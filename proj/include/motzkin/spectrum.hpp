// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectrum.hpp
 * @brief Schmidt spectra and entanglement entropies for cuts and bulk blocks.
 *
 * Spectra are stored as classes carrying an analytic degeneracy s^e; the
 * s^e identical eigenvalues are never materialized. Entropies are in bits.
 */

#pragma once

#include <motzkin/combinatorics.hpp>

#include <gmpxx.h>

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace motzkin {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/**
 * @brief Chain layout. For a cut, sites [0, b) | [b, n). For a block,
 *        [0, b) | [b, b+L) | [b+L, n).
 */
struct ChainGeometry {
    int n = 0;
    int s = 1;
    int b = 0;
    std::optional<int> L;

    [[nodiscard]] static ChainGeometry cut(int n, int s, int b) { return {n, s, b, std::nullopt}; }
    [[nodiscard]] static ChainGeometry block(int n, int s, int b, int L) { return {n, s, b, L}; }
    /// b = floor((n - L) / 2).
    [[nodiscard]] static ChainGeometry centered_block(int n, int s, int L) { return {n, s, (n - L) / 2, L}; }

    void validate_cut() const;
    void validate_block() const;
    [[nodiscard]] int right() const { return n - b - L.value_or(0); }
    [[nodiscard]] bool centered() const;
};

enum class SpectrumKind { cut, block };

struct SchmidtClass {
    int m = 0;     ///< cut height m, or block eta = p + q
    int delta = 0; ///< block only: q - p
    int degeneracy_exponent = 0; ///< class holds s^e equal eigenvalues
    double log_eigenvalue = 0.0; ///< natural log of one eigenvalue
    double probability = 0.0;    ///< class mass s^e * eigenvalue
};

struct SchmidtSpectrum {
    SpectrumKind kind = SpectrumKind::cut;
    ChainGeometry geometry;
    ArithmeticMode mode;
    std::vector<SchmidtClass> classes; ///< positive-weight classes only
    double log_normalization = 0.0;    ///< natural log of Z

    [[nodiscard]] double eigenvalue(const SchmidtClass& c) const;
    /// Eigenvalues expanded by degeneracy, sorted descending. Guarded by `limit`.
    [[nodiscard]] std::vector<double> expanded(std::size_t limit = 1u << 20) const;
};

using CutSpectrum = SchmidtSpectrum;
using BlockSpectrum = SchmidtSpectrum;

/// Exact counts when mode is exact; otherwise MPFR rows at mode precision.
[[nodiscard]] SchmidtSpectrum cut_spectrum(const ChainGeometry& g,
                                           const ArithmeticMode& mode = ArithmeticMode::log_float(128));
[[nodiscard]] SchmidtSpectrum block_spectrum(const ChainGeometry& g,
                                             const ArithmeticMode& mode = ArithmeticMode::log_float(128));

/// alpha^2(p, q) = sum_{m=p}^{b} s^{m-p} M_{b,m} M_{b',m+q-p}, exact.
[[nodiscard]] mpz_class alpha_squared(int b, int b_right, int p, int q, int s);

struct EntropyReport {
    double S0 = 0.0;
    double S1 = 0.0;
    std::map<double, double> renyi; ///< kappa -> bits; includes 0, 1 and +inf when requested
    double sigma = 0.0;
    double euler_gamma = kEulerGamma;

    [[nodiscard]] double at(double kappa) const;
};

/// kappa = 1 is von Neumann, 0 the log rank, +inf the min-entropy.
[[nodiscard]] EntropyReport entropies(const SchmidtSpectrum& spec, const std::vector<double>& kappas);

struct AsymptoticEntropy {
    double bits = 0.0;
    bool constant_omitted = false; ///< s = 1 branch: additive constant not available
    bool off_center = false;
};

/// Closed-form cut entropy; beta = b (1 - b/n).
[[nodiscard]] AsymptoticEntropy cut_entropy_asymptotic(const ChainGeometry& g, double kappa);
/// Closed-form block entropy of a length-L bulk block.
[[nodiscard]] AsymptoticEntropy block_entropy_asymptotic(const ChainGeometry& g, double kappa);

struct SchmidtRankReport {
    mpz_class direct;                    ///< support count of the class spectrum
    std::optional<mpz_class> closed_form; ///< product formula, when defined
    bool match = false;
};

[[nodiscard]] SchmidtRankReport schmidt_rank(const SchmidtSpectrum& spec);

/// Reduced density matrix eigenvalues of the enumerated ground state on the
/// 0-indexed `sites`, sorted descending, length (2s+1)^|sites|.
[[nodiscard]] std::vector<double> rdm_oracle(int n, int s, const std::vector<int>& sites);

} // namespace motzkin
