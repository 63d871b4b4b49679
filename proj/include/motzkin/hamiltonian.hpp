// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hamiltonian.hpp
 * @brief Small-n Motzkin Hamiltonian: projector terms, matrix-free
 *        application, Lanczos eigensolver, symmetry checks, field sweeps.
 *
 * The product basis is mixed radix with site 1 most significant and local
 * digit value + s, matching basis_index() in walks.hpp. Sites are 1-indexed.
 */

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace motzkin {

/// Largest dense state vector accepted by the Hamiltonian tools.
inline constexpr std::uint64_t kDimensionGuard = 2'000'000;

enum class TermKind { bulk_pair, cross, boundary_left, boundary_right };

[[nodiscard]] const char* to_string(TermKind k);

/**
 * @brief One projector on one bond or boundary site.
 *
 * bulk_pair(k) = |D^k><D^k| + |U^k><U^k| + |phi^k><phi^k|; cross(k, i) =
 * |u^k d^i><u^k d^i|; boundary terms are |d^k><d^k| on site 1 and
 * |u^k><u^k| on site n.
 */
struct ProjectorTerm {
    TermKind kind = TermKind::bulk_pair;
    int site = 1;   ///< first site of the bond, or the boundary site
    int color = 1;  ///< k
    int color2 = 0; ///< i for cross terms
    Eigen::MatrixXd local;       ///< real part, (2s+1)^2 or (2s+1) square
    double imaginary_norm = 0.0; ///< max |Im| of the matrix built from complex kets

    [[nodiscard]] int width() const { return kind == TermKind::bulk_pair || kind == TermKind::cross ? 2 : 1; }
    [[nodiscard]] std::string label() const;
};

class SpinChainOperator {
public:
    SpinChainOperator(int n, int s, bool boundary, double field_h);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int s() const noexcept { return s_; }
    [[nodiscard]] bool boundary() const noexcept { return boundary_; }
    [[nodiscard]] double field() const noexcept { return h_; }
    [[nodiscard]] std::uint64_t dimension() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<ProjectorTerm>& terms() const noexcept { return terms_; }

    /// y = H x.
    void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
    /// y = P x for one term.
    void apply_term(const ProjectorTerm& t, const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
    /// y = sum_i Sx_i x.
    void apply_sx_total(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
    /// Nonzero entries (row, value) of column `col` of H.
    [[nodiscard]] std::vector<std::pair<std::uint64_t, double>> column(std::uint64_t col) const;
    [[nodiscard]] Eigen::MatrixXd dense() const;

    [[nodiscard]] int digit(std::uint64_t x, int site) const;
    [[nodiscard]] std::uint64_t place(int site) const { return place_[static_cast<size_t>(site - 1)]; }

private:
    int n_, s_;
    bool boundary_;
    double h_;
    std::uint64_t dim_;
    std::vector<std::uint64_t> place_;
    std::vector<ProjectorTerm> terms_;
    Eigen::MatrixXd bond_;  ///< sum of all bond terms on one bond
    Eigen::VectorXd left_;  ///< boundary diagonal on site 1
    Eigen::VectorXd right_; ///< boundary diagonal on site n
    Eigen::MatrixXd sx_;
};

[[nodiscard]] SpinChainOperator build_hamiltonian(int n, int s, bool boundary = true, double field_h = 0.0);

struct EdOptions {
    int max_krylov = 160;
    int max_restarts = 200;
    double tolerance = 1e-10;
    std::uint64_t seed = 20260101;
    std::uint64_t dense_threshold = 2000;
};

struct EdResult {
    std::vector<double> values;
    std::vector<Eigen::VectorXd> vectors;
    std::vector<double> residuals;
    bool converged = true;
    bool dense = false;
    int matvecs = 0;

    /// Groups of eigenvalues closer than `tol`; returns group sizes in order.
    [[nodiscard]] std::vector<int> degeneracy_groups(double tol = 1e-8) const;
};

/// Lowest k eigenpairs (k <= 10).
[[nodiscard]] EdResult ground_state_ed(const SpinChainOperator& op, int k = 1, const EdOptions& opt = {});

/// Normalized uniform superposition of all walks as a dense vector.
[[nodiscard]] Eigen::VectorXd motzkin_state(int n, int s);

struct TermResidual {
    std::string label;
    double residual = 0.0;   ///< ||P psi||
    double idempotence = 0.0; ///< max |P^2 - P|
};

struct FrustrationReport {
    std::vector<TermResidual> terms;
    double max_residual = 0.0;
    double max_idempotence = 0.0;
    double max_imaginary = 0.0;
    double energy = 0.0; ///< <psi|H|psi>
    bool pass = false;
};

[[nodiscard]] FrustrationReport verify_frustration_free(int n, int s);
/// Same checks against an arbitrary normalized state.
[[nodiscard]] FrustrationReport verify_frustration_free(const SpinChainOperator& op, const Eigen::VectorXd& psi);
/// Ground state plus one invalid product state, renormalized.
[[nodiscard]] Eigen::VectorXd corrupted_motzkin_state(int n, int s);

struct SymmetryReport {
    std::vector<std::pair<std::string, double>> residuals;
    double max_residual = 0.0;
    bool pass = false;
};

[[nodiscard]] SymmetryReport verify_symmetries(int n, int s, double tol = 1e-12);

struct SsbPoint {
    double h = 0.0;
    double magnetization = 0.0; ///< (1/n) sum_i <Sx_i>
    double energy = 0.0;
    double residual = 0.0;
};

/// Symmetric log grid +-[1e-4, 1e-1] (two points per decade) plus 0.
[[nodiscard]] std::vector<double> default_h_grid();

[[nodiscard]] std::vector<SsbPoint> ssb_sweep(int n, const std::vector<double>& h_grid, int s = 1,
                                              const EdOptions& opt = {});

} // namespace motzkin
