// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hamiltonian.cpp
 * @brief Motzkin Hamiltonian on dense state vectors and its checks.
 */

#include <motzkin/errors.hpp>
#include <motzkin/hamiltonian.hpp>
#include <motzkin/numerics.hpp>
#include <motzkin/walks.hpp>

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>

namespace motzkin {

namespace {

using cd = std::complex<double>;

/// Local basis index of value v in -s..s.
int lidx(int v, int s) { return v + s; }

Eigen::VectorXcd ket2(int a, int b, int s) {
    const int r = 2 * s + 1;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(r * r);
    v(lidx(a, s) * r + lidx(b, s)) = 1.0;
    return v;
}

Eigen::VectorXcd ket1(int a, int s) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * s + 1);
    v(lidx(a, s)) = 1.0;
    return v;
}

ProjectorTerm make_term(TermKind kind, int site, int color, int color2, const std::vector<Eigen::VectorXcd>& kets) {
    const auto d = kets.front().size();
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& k : kets) p += k * k.adjoint();
    ProjectorTerm t;
    t.kind = kind;
    t.site = site;
    t.color = color;
    t.color2 = color2;
    t.local = p.real();
    t.imaginary_norm = p.imag().cwiseAbs().maxCoeff();
    return t;
}

/// Row-wise nonzeros of a small matrix.
std::vector<std::vector<std::pair<int, double>>> row_nonzeros(const Eigen::MatrixXd& m) {
    std::vector<std::vector<std::pair<int, double>>> rows(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0.0) rows[static_cast<size_t>(i)].emplace_back(j, m(i, j));
    return rows;
}

/// y[x] += sum over l' of M(l, l') x[x with sites (j, j+w-1) set to l'].
void gather_local(const Eigen::MatrixXd& m, int site, int width, int r, const std::vector<std::uint64_t>& place,
                  const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    const auto rows = row_nonzeros(m);
    const std::uint64_t p1 = place[static_cast<size_t>(site - 1)];
    const std::uint64_t p2 = width == 2 ? place[static_cast<size_t>(site)] : 0;
    const auto ur = static_cast<std::uint64_t>(r);
    const auto dim = static_cast<std::uint64_t>(x.size());
    for (std::uint64_t i = 0; i < dim; ++i) {
        const auto d1 = static_cast<int>((i / p1) % ur);
        const int d2 = width == 2 ? static_cast<int>((i / p2) % ur) : 0;
        const int l = width == 2 ? d1 * r + d2 : d1;
        const auto& row = rows[static_cast<size_t>(l)];
        if (row.empty()) continue;
        const std::uint64_t base = i - static_cast<std::uint64_t>(d1) * p1 - static_cast<std::uint64_t>(d2) * p2;
        double acc = 0.0;
        for (const auto& [lp, v] : row) {
            const int e1 = width == 2 ? lp / r : lp;
            const int e2 = width == 2 ? lp % r : 0;
            acc += v * x(static_cast<Eigen::Index>(base + static_cast<std::uint64_t>(e1) * p1 +
                                                   static_cast<std::uint64_t>(e2) * p2));
        }
        y(static_cast<Eigen::Index>(i)) += acc;
    }
}

Eigen::MatrixXd sx_matrix(int s) {
    const int d = 2 * s + 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    const double ss = static_cast<double>(s) * (s + 1);
    for (int v = -s; v < s; ++v) {
        const double e = 0.5 * std::sqrt(ss - static_cast<double>(v) * (v + 1));
        m(lidx(v + 1, s), lidx(v, s)) = e;
        m(lidx(v, s), lidx(v + 1, s)) = e;
    }
    return m;
}

} // namespace

const char* to_string(TermKind k) {
    switch (k) {
    case TermKind::bulk_pair: return "bulk";
    case TermKind::cross: return "cross";
    case TermKind::boundary_left: return "boundary-left";
    case TermKind::boundary_right: return "boundary-right";
    }
    return "?";
}

std::string ProjectorTerm::label() const {
    std::string out = std::string(to_string(kind)) + "@" + std::to_string(site) + ":k=" + std::to_string(color);
    if (kind == TermKind::cross) out += ",i=" + std::to_string(color2);
    return out;
}

SpinChainOperator::SpinChainOperator(int n, int s, bool boundary, double field_h)
    : n_(n), s_(s), boundary_(boundary), h_(field_h), dim_(1) {
    require(n >= 2, "Hamiltonian needs n >= 2");
    require(s >= 1, "Hamiltonian needs s >= 1");
    require(std::isfinite(field_h), "field must be finite");
    const auto r = static_cast<std::uint64_t>(2 * s + 1);
    for (int i = 0; i < n; ++i) {
        if (dim_ > kDimensionGuard / r)
            throw GuardError("Hamiltonian dimension (2s+1)^n exceeds the dense-vector guard of " +
                             std::to_string(kDimensionGuard));
        dim_ *= r;
    }
    place_.assign(static_cast<size_t>(n), 1);
    for (int p = n - 2; p >= 0; --p) place_[static_cast<size_t>(p)] = place_[static_cast<size_t>(p + 1)] * r;

    const double h = 1.0 / std::sqrt(2.0);
    const int rr = static_cast<int>(r);
    bond_ = Eigen::MatrixXd::Zero(rr * rr, rr * rr);
    for (int j = 1; j < n; ++j) {
        for (int k = 1; k <= s; ++k) {
            const Eigen::VectorXcd D = h * (ket2(0, -k, s) - ket2(-k, 0, s));
            const Eigen::VectorXcd U = h * (ket2(0, k, s) - ket2(k, 0, s));
            const Eigen::VectorXcd phi = h * (ket2(0, 0, s) - ket2(k, -k, s));
            terms_.push_back(make_term(TermKind::bulk_pair, j, k, 0, {D, U, phi}));
            if (j == 1) bond_ += terms_.back().local;
        }
        for (int k = 1; k <= s; ++k)
            for (int i = 1; i <= s; ++i) {
                if (i == k) continue;
                terms_.push_back(make_term(TermKind::cross, j, k, i, {ket2(k, -i, s)}));
                if (j == 1) bond_ += terms_.back().local;
            }
    }
    left_ = Eigen::VectorXd::Zero(rr);
    right_ = Eigen::VectorXd::Zero(rr);
    if (boundary) {
        for (int k = 1; k <= s; ++k) {
            terms_.push_back(make_term(TermKind::boundary_left, 1, k, 0, {ket1(-k, s)}));
            left_ += terms_.back().local.diagonal();
            terms_.push_back(make_term(TermKind::boundary_right, n, k, 0, {ket1(k, s)}));
            right_ += terms_.back().local.diagonal();
        }
    }
    sx_ = sx_matrix(s);
}

int SpinChainOperator::digit(std::uint64_t x, int site) const {
    return static_cast<int>((x / place(site)) % static_cast<std::uint64_t>(2 * s_ + 1));
}

void SpinChainOperator::apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    y = Eigen::VectorXd::Zero(x.size());
    const int r = 2 * s_ + 1;
    for (int j = 1; j < n_; ++j) gather_local(bond_, j, 2, r, place_, x, y);
    if (boundary_) {
        const auto ur = static_cast<std::uint64_t>(r);
        const std::uint64_t p1 = place_.front(), pn = place_.back();
        for (std::uint64_t i = 0; i < dim_; ++i) {
            const double d = left_(static_cast<Eigen::Index>((i / p1) % ur)) +
                             right_(static_cast<Eigen::Index>((i / pn) % ur));
            if (d != 0.0) y(static_cast<Eigen::Index>(i)) += d * x(static_cast<Eigen::Index>(i));
        }
    }
    if (h_ != 0.0) {
        Eigen::VectorXd f;
        apply_sx_total(x, f);
        y += h_ * f;
    }
}

void SpinChainOperator::apply_term(const ProjectorTerm& t, const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    y = Eigen::VectorXd::Zero(x.size());
    gather_local(t.local, t.site, t.width(), 2 * s_ + 1, place_, x, y);
}

void SpinChainOperator::apply_sx_total(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    y = Eigen::VectorXd::Zero(x.size());
    for (int j = 1; j <= n_; ++j) gather_local(sx_, j, 1, 2 * s_ + 1, place_, x, y);
}

std::vector<std::pair<std::uint64_t, double>> SpinChainOperator::column(std::uint64_t col) const {
    require(col < dim_, "column index out of range");
    const int r = 2 * s_ + 1;
    std::map<std::uint64_t, double> acc;
    for (int j = 1; j < n_; ++j) {
        const int d1 = digit(col, j), d2 = digit(col, j + 1);
        const int l = d1 * r + d2;
        const std::uint64_t base = col - static_cast<std::uint64_t>(d1) * place(j) - static_cast<std::uint64_t>(d2) * place(j + 1);
        for (int lp = 0; lp < r * r; ++lp) {
            const double v = bond_(lp, l);
            if (v == 0.0) continue;
            acc[base + static_cast<std::uint64_t>(lp / r) * place(j) + static_cast<std::uint64_t>(lp % r) * place(j + 1)] += v;
        }
    }
    if (boundary_) acc[col] += left_(digit(col, 1)) + right_(digit(col, n_));
    if (h_ != 0.0) {
        for (int j = 1; j <= n_; ++j) {
            const int d = digit(col, j);
            const std::uint64_t base = col - static_cast<std::uint64_t>(d) * place(j);
            for (int e = 0; e < r; ++e)
                if (sx_(e, d) != 0.0) acc[base + static_cast<std::uint64_t>(e) * place(j)] += h_ * sx_(e, d);
        }
    }
    std::vector<std::pair<std::uint64_t, double>> out;
    for (const auto& [row, v] : acc)
        if (v != 0.0) out.emplace_back(row, v);
    return out;
}

Eigen::MatrixXd SpinChainOperator::dense() const {
    require(dim_ <= 20000, "dense() is limited to dimension 20000");
    const auto d = static_cast<Eigen::Index>(dim_);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (std::uint64_t c = 0; c < dim_; ++c)
        for (const auto& [row, v] : column(c)) m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)) = v;
    return m;
}

SpinChainOperator build_hamiltonian(int n, int s, bool boundary, double field_h) {
    return SpinChainOperator(n, s, boundary, field_h);
}

// ---------------------------------------------------------------------------

std::vector<int> EdResult::degeneracy_groups(double tol) const {
    std::vector<int> groups;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0 && std::abs(values[i] - values[i - 1]) <= tol) ++groups.back();
        else groups.push_back(1);
    }
    return groups;
}

namespace {

void orthogonalize(Eigen::VectorXd& w, const std::vector<Eigen::VectorXd>& basis) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) w -= b.dot(w) * b;
}

struct LanczosState {
    const SpinChainOperator& op;
    const EdOptions& opt;
    const std::vector<Eigen::VectorXd>& found;
    int matvecs = 0;

    double residual(const Eigen::VectorXd& v, double& theta) {
        Eigen::VectorXd hv;
        op.apply(v, hv);
        ++matvecs;
        theta = v.dot(hv);
        return (hv - theta * v).norm();
    }

    /// Lowest eigenpair of H restricted to the complement of `found`.
    bool run(Eigen::VectorXd v, double& theta, Eigen::VectorXd& vec, double& res) {
        orthogonalize(v, found);
        v.normalize();
        const int maxk = std::max(4, std::min<int>(opt.max_krylov, static_cast<int>(op.dimension())));
        std::vector<Eigen::VectorXd> V;
        std::vector<double> alpha, beta;
        Eigen::VectorXd w;
        for (int restart = 0; restart <= opt.max_restarts; ++restart) {
            V.assign(1, v);
            alpha.clear();
            beta.clear();
            for (int j = 0; j < maxk; ++j) {
                op.apply(V[static_cast<size_t>(j)], w);
                ++matvecs;
                if (j > 0) w -= beta.back() * V[static_cast<size_t>(j - 1)];
                const double a = V[static_cast<size_t>(j)].dot(w);
                alpha.push_back(a);
                w -= a * V[static_cast<size_t>(j)];
                orthogonalize(w, found);
                orthogonalize(w, V);
                const double b = w.norm();
                const bool last = j + 1 == maxk || b < 1e-12;
                if (last || j % 4 == 3) {
                    const int m = j + 1;
                    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
                    Eigen::VectorXd sub = m > 1 ? Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1) : Eigen::VectorXd();
                    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
                    es.computeFromTridiagonal(diag, sub);
                    const Eigen::VectorXd y = es.eigenvectors().col(0);
                    const double est = std::abs(b * y(m - 1));
                    if (last || est <= opt.tolerance * std::max(1.0, std::abs(es.eigenvalues()(0)))) {
                        vec = Eigen::VectorXd::Zero(v.size());
                        for (int i = 0; i < m; ++i) vec += y(i) * V[static_cast<size_t>(i)];
                        orthogonalize(vec, found);
                        vec.normalize();
                        res = residual(vec, theta);
                        if (res <= opt.tolerance * std::max(1.0, std::abs(theta))) return true;
                        v = vec;
                        break;
                    }
                }
                beta.push_back(b);
                V.push_back(w / b);
            }
        }
        return false;
    }
};

} // namespace

EdResult ground_state_ed(const SpinChainOperator& op, int k, const EdOptions& opt) {
    require(k >= 1 && k <= 10, "ground_state_ed computes 1..10 eigenpairs");
    require(static_cast<std::uint64_t>(k) <= op.dimension(), "more eigenpairs than the dimension");
    EdResult out;
    if (op.dimension() <= opt.dense_threshold) {
        out.dense = true;
        const Eigen::MatrixXd h = op.dense();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        for (int i = 0; i < k; ++i) {
            out.values.push_back(es.eigenvalues()(i));
            Eigen::VectorXd v = es.eigenvectors().col(i);
            out.residuals.push_back((h * v - es.eigenvalues()(i) * v).norm());
            out.vectors.push_back(std::move(v));
        }
        return out;
    }
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    LanczosState st{op, opt, out.vectors};
    for (int i = 0; i < k; ++i) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(op.dimension()));
        for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = gauss(rng);
        double theta = 0.0, res = 0.0;
        Eigen::VectorXd vec;
        const bool ok = st.run(std::move(v), theta, vec, res);
        out.converged = out.converged && ok;
        out.values.push_back(theta);
        out.residuals.push_back(res);
        out.vectors.push_back(std::move(vec));
    }
    out.matvecs = st.matvecs;
    // Deflation returns pairs in discovery order; sort ascending.
    std::vector<size_t> order(out.values.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return out.values[a] < out.values[b]; });
    EdResult sorted = out;
    for (size_t i = 0; i < order.size(); ++i) {
        sorted.values[i] = out.values[order[i]];
        sorted.residuals[i] = out.residuals[order[i]];
        sorted.vectors[i] = out.vectors[order[i]];
    }
    return sorted;
}

// ---------------------------------------------------------------------------

Eigen::VectorXd motzkin_state(int n, int s) {
    const SpinChainOperator shape(n, s, false, 0.0);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(shape.dimension()));
    std::uint64_t count = 0;
    for_each_walk(n, s, [&](const Walk& w) {
        v(static_cast<Eigen::Index>(basis_index(w))) = 1.0;
        ++count;
    });
    return v / std::sqrt(static_cast<double>(count));
}

Eigen::VectorXd corrupted_motzkin_state(int n, int s) {
    Eigen::VectorXd v = motzkin_state(n, s);
    // All-up product state: unmatched at the end, so not a Motzkin walk.
    Walk bad{s, std::vector<Step>(static_cast<size_t>(n), static_cast<Step>(1))};
    v(static_cast<Eigen::Index>(basis_index(bad))) += 1.0 / std::sqrt(static_cast<double>(n));
    return v.normalized();
}

FrustrationReport verify_frustration_free(const SpinChainOperator& op, const Eigen::VectorXd& psi) {
    require(static_cast<std::uint64_t>(psi.size()) == op.dimension(), "state dimension mismatch");
    FrustrationReport rep;
    Eigen::VectorXd y;
    for (const auto& t : op.terms()) {
        op.apply_term(t, psi, y);
        TermResidual tr{t.label(), y.norm(), (t.local * t.local - t.local).cwiseAbs().maxCoeff()};
        rep.max_residual = std::max(rep.max_residual, tr.residual);
        rep.max_idempotence = std::max(rep.max_idempotence, tr.idempotence);
        rep.max_imaginary = std::max(rep.max_imaginary, t.imaginary_norm);
        rep.terms.push_back(std::move(tr));
    }
    op.apply(psi, y);
    rep.energy = psi.dot(y);
    rep.pass = rep.max_residual <= 1e-12 && rep.max_idempotence <= 1e-12 && rep.max_imaginary <= 1e-12;
    return rep;
}

FrustrationReport verify_frustration_free(int n, int s) {
    const SpinChainOperator op(n, s, true, 0.0);
    return verify_frustration_free(op, motzkin_state(n, s));
}

// ---------------------------------------------------------------------------

namespace {

/// Applies a site-wise digit map, optionally reversing the chain.
std::uint64_t map_state(const SpinChainOperator& op, std::uint64_t x, bool reverse, const std::vector<int>& digit_map) {
    const int n = op.n();
    std::uint64_t y = 0;
    for (int j = 1; j <= n; ++j) {
        const int src = reverse ? n + 1 - j : j;
        y += static_cast<std::uint64_t>(digit_map[static_cast<size_t>(op.digit(x, src))]) * op.place(j);
    }
    return y;
}

std::vector<int> charges(const SpinChainOperator& op, std::uint64_t x) {
    const int s = op.s();
    std::vector<int> q(static_cast<size_t>(s) + 1, 0);
    for (int j = 1; j <= op.n(); ++j) {
        const int v = op.digit(x, j) - s;
        if (v > 0) ++q[static_cast<size_t>(v)];
        else if (v < 0) --q[static_cast<size_t>(-v)];
    }
    return q;
}

double phase_arg(const std::vector<int>& q, const std::vector<double>& theta) {
    double a = 0.0;
    for (size_t k = 1; k < q.size(); ++k) a += theta[k] * q[k];
    return a;
}

} // namespace

SymmetryReport verify_symmetries(int n, int s, double tol) {
    const SpinChainOperator op(n, s, true, 0.0);
    const std::uint64_t dim = op.dimension();
    const int r = 2 * s + 1;

    std::vector<Eigen::Triplet<double>> trip;
    for (std::uint64_t c = 0; c < dim; ++c)
        for (const auto& [row, v] : op.column(c))
            trip.emplace_back(static_cast<int>(row), static_cast<int>(c), v);
    Eigen::SparseMatrix<double> H(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    H.setFromTriplets(trip.begin(), trip.end());
    H.makeCompressed();

    std::vector<int> identity(static_cast<size_t>(r)), flip(static_cast<size_t>(r));
    for (int d = 0; d < r; ++d) {
        identity[static_cast<size_t>(d)] = d;
        flip[static_cast<size_t>(d)] = 2 * s - d;
    }
    // Color permutations as digit maps: transposition (1 2) and cycle (1 ... s).
    auto color_map = [&](const std::vector<int>& pi) {
        std::vector<int> m(static_cast<size_t>(r));
        m[static_cast<size_t>(s)] = s;
        for (int k = 1; k <= s; ++k) {
            m[static_cast<size_t>(s + k)] = s + pi[static_cast<size_t>(k)];
            m[static_cast<size_t>(s - k)] = s - pi[static_cast<size_t>(k)];
        }
        return m;
    };
    std::vector<std::vector<int>> perms;
    if (s >= 2) {
        std::vector<int> tr(static_cast<size_t>(s) + 1), cyc(static_cast<size_t>(s) + 1);
        for (int k = 0; k <= s; ++k) tr[static_cast<size_t>(k)] = cyc[static_cast<size_t>(k)] = k;
        std::swap(tr[1], tr[2]);
        for (int k = 1; k <= s; ++k) cyc[static_cast<size_t>(k)] = k % s + 1;
        perms = {tr, cyc};
    }

    double herm = 0.0, rf = 0.0, wpi = 0.0;
    std::vector<double> qcomm(static_cast<size_t>(s) + 1, 0.0);
    for (int c = 0; c < H.outerSize(); ++c) {
        const auto x = static_cast<std::uint64_t>(c);
        const auto qx = charges(op, x);
        const std::uint64_t rx = map_state(op, x, true, flip);
        for (Eigen::SparseMatrix<double>::InnerIterator it(H, c); it; ++it) {
            const auto y = static_cast<std::uint64_t>(it.row());
            const double v = it.value();
            const auto qy = charges(op, y);
            for (int k = 1; k <= s; ++k)
                qcomm[static_cast<size_t>(k)] =
                    std::max(qcomm[static_cast<size_t>(k)], std::abs((qy[static_cast<size_t>(k)] - qx[static_cast<size_t>(k)]) * v));
            herm = std::max(herm, std::abs(H.coeff(c, it.row()) - v));
            const std::uint64_t ry = map_state(op, y, true, flip);
            rf = std::max(rf, std::abs(H.coeff(static_cast<Eigen::Index>(ry), static_cast<Eigen::Index>(rx)) - v));
            for (const auto& pi : perms) {
                const auto m = color_map(pi);
                const std::uint64_t px = map_state(op, x, false, m), py = map_state(op, y, false, m);
                wpi = std::max(wpi, std::abs(H.coeff(static_cast<Eigen::Index>(py), static_cast<Eigen::Index>(px)) - v));
            }
        }
    }
    double imag = 0.0;
    for (const auto& t : op.terms()) imag = std::max(imag, t.imaginary_norm);

    // Semidirect relations on every basis vector for sampled angles.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double rf_rel = 0.0, k_rel = 0.0, pt_rel = 0.0, w_rel = 0.0;
    for (int sample = 0; sample < 3; ++sample) {
        std::vector<double> theta(static_cast<size_t>(s) + 1, 0.0);
        for (int k = 1; k <= s; ++k) theta[static_cast<size_t>(k)] = angle(rng);
        for (std::uint64_t x = 0; x < dim; ++x) {
            const auto qx = charges(op, x);
            const double ax = phase_arg(qx, theta);
            const cd u_minus = std::polar(1.0, -ax), u_plus = std::polar(1.0, ax);
            // (RF) U (RF)^-1 e_x = U(RF x) e_x since RF is an involution.
            const cd rfu = std::polar(1.0, -phase_arg(charges(op, map_state(op, x, true, flip)), theta));
            rf_rel = std::max(rf_rel, std::abs(rfu - u_plus));
            k_rel = std::max(k_rel, std::abs(std::conj(u_minus) - u_plus));
            pt_rel = std::max(pt_rel, std::abs(std::conj(rfu) - u_minus));
            for (const auto& pi : perms) {
                std::vector<int> inv(pi.size());
                for (size_t k = 0; k < pi.size(); ++k) inv[static_cast<size_t>(pi[k])] = static_cast<int>(k);
                const cd lhs = std::polar(1.0, -phase_arg(charges(op, map_state(op, x, false, color_map(inv))), theta));
                double a = 0.0;
                for (int k = 1; k <= s; ++k)
                    a += theta[static_cast<size_t>(k)] * qx[static_cast<size_t>(pi[static_cast<size_t>(k)])];
                w_rel = std::max(w_rel, std::abs(lhs - std::polar(1.0, -a)));
            }
        }
    }

    SymmetryReport rep;
    for (int k = 1; k <= s; ++k) rep.residuals.emplace_back("[H,Q^" + std::to_string(k) + "]", qcomm[static_cast<size_t>(k)]);
    rep.residuals.emplace_back("hermitian", herm);
    rep.residuals.emplace_back("real (K)", imag);
    rep.residuals.emplace_back("RF H RF^-1 = H", rf);
    rep.residuals.emplace_back("W_pi H W_pi^-1 = H", wpi);
    rep.residuals.emplace_back("RF U(theta) RF^-1 = U(-theta)", rf_rel);
    rep.residuals.emplace_back("K U(theta) K^-1 = U(-theta)", k_rel);
    rep.residuals.emplace_back("RFK U(theta) (RFK)^-1 = U(theta)", pt_rel);
    rep.residuals.emplace_back("W_pi U(theta) W_pi^-1 = U(pi theta)", w_rel);
    for (const auto& [name, v] : rep.residuals) rep.max_residual = std::max(rep.max_residual, v);
    rep.pass = rep.max_residual <= tol;
    return rep;
}

// ---------------------------------------------------------------------------

std::vector<double> default_h_grid() {
    std::vector<double> pos;
    for (int e = -8; e <= -2; ++e) pos.push_back(std::pow(10.0, e / 2.0));
    std::vector<double> grid;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) grid.push_back(-*it);
    grid.push_back(0.0);
    grid.insert(grid.end(), pos.begin(), pos.end());
    return grid;
}

std::vector<SsbPoint> ssb_sweep(int n, const std::vector<double>& h_grid, int s, const EdOptions& opt) {
    require(s == 1, "ssb_sweep is defined for s = 1");
    require(n >= 2 && n <= 10, "ssb_sweep needs 2 <= n <= 10");
    std::vector<SsbPoint> out(h_grid.size());
    for (size_t i = 0; i < h_grid.size(); ++i) {
        const SpinChainOperator op(n, s, true, h_grid[i]);
        const EdResult ed = ground_state_ed(op, 1, opt);
        if (!ed.converged)
            throw GuardError("eigensolver did not converge at h = " + std::to_string(h_grid[i]) +
                             " (residual " + std::to_string(ed.residuals.front()) + ")");
        Eigen::VectorXd sx;
        op.apply_sx_total(ed.vectors.front(), sx);
        out[i] = {h_grid[i], ed.vectors.front().dot(sx) / n, ed.values.front(), ed.residuals.front()};
    }
    return out;
}

} // namespace motzkin
