// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectrum.cpp
 * @brief Cut and block Schmidt spectra, entropies, closed forms, RDM oracle.
 */

#include <motzkin/errors.hpp>
#include <motzkin/numerics.hpp>
#include <motzkin/spectrum.hpp>
#include <motzkin/walks.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

namespace motzkin {

namespace {

constexpr double kLn2 = std::numbers::ln2;

/// Row source that hides the arithmetic mode: entries as Real at `prec`.
struct Rows {
    int prec = 192;
    std::map<int, std::vector<Real>> rows;

    Rows(const std::vector<int>& lengths, int s, const ArithmeticMode& mode) {
        if (mode.is_exact()) {
            // Enough mantissa that products and s^m-weighted sums stay exact.
            std::map<int, std::vector<mpz_class>> ex;
            size_t bits = 1;
            int total = 0;
            for (int k : lengths) {
                if (ex.count(k)) continue;
                ex.emplace(k, exact_row(k, s));
                for (const auto& v : ex[k]) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
                total += k;
            }
            prec = static_cast<int>(3 * bits) + total * static_cast<int>(std::ceil(std::log2(s + 1.0))) + 64;
            for (const auto& [k, row] : ex) {
                std::vector<Real> r;
                r.reserve(row.size());
                for (const auto& v : row) r.emplace_back(v, prec);
                rows.emplace(k, std::move(r));
            }
        } else {
            prec = mode.precision_bits;
            for (const auto& [k, ptr] : real_rows(lengths, s, prec)) rows.emplace(k, *ptr);
        }
    }
    const std::vector<Real>& operator[](int k) const { return rows.at(k); }
};

/// Raw classes: unnormalized single-eigenvalue weight plus degeneracy exponent.
struct RawClass {
    int m;
    int delta;
    int exponent;
    Real weight;
};

SchmidtSpectrum finish(SpectrumKind kind, const ChainGeometry& g, const ArithmeticMode& mode,
                       std::vector<RawClass>& raw, int prec) {
    const int wp = prec + 32;
    Real z(wp), term(wp), spow(wp);
    for (const auto& c : raw) {
        spow = pow_ui(static_cast<unsigned long>(g.s), static_cast<unsigned long>(c.exponent), wp);
        term.assign(c.weight);
        term *= spow;
        z += term;
    }
    SchmidtSpectrum out;
    out.kind = kind;
    out.geometry = g;
    out.mode = mode;
    out.log_normalization = z.log();
    Real lam(wp);
    for (const auto& c : raw) {
        if (c.weight.is_zero()) continue;
        lam.assign(c.weight);
        lam /= z;
        SchmidtClass sc;
        sc.m = c.m;
        sc.delta = c.delta;
        sc.degeneracy_exponent = c.exponent;
        sc.log_eigenvalue = lam.log();
        spow = pow_ui(static_cast<unsigned long>(g.s), static_cast<unsigned long>(c.exponent), wp);
        lam *= spow;
        sc.probability = lam.to_double();
        out.classes.push_back(sc);
    }
    return out;
}

double log2_mpz(const mpz_class& v) {
    long e = 0;
    const double f = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log2(f) + static_cast<double>(e);
}

mpz_class mpz_pow(int s, int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(e));
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Geometry
// ---------------------------------------------------------------------------

void ChainGeometry::validate_cut() const {
    require(s >= 1, "color count s must be >= 1");
    require(0 < b && b < n, "cut position must satisfy 0 < b < n");
}

void ChainGeometry::validate_block() const {
    require(s >= 1, "color count s must be >= 1");
    require(L.has_value() && *L >= 1, "block length L must be >= 1");
    require(b >= 0 && b + *L <= n, "block must satisfy b >= 0 and b + L <= n");
}

bool ChainGeometry::centered() const {
    if (!L) return true;
    return b == (n - *L) / 2;
}

double SchmidtSpectrum::eigenvalue(const SchmidtClass& c) const { return std::exp(c.log_eigenvalue); }

std::vector<double> SchmidtSpectrum::expanded(std::size_t limit) const {
    std::vector<double> out;
    for (const auto& c : classes) {
        const double count = std::pow(static_cast<double>(geometry.s), c.degeneracy_exponent);
        if (count + static_cast<double>(out.size()) > static_cast<double>(limit))
            throw GuardError("expanded spectrum exceeds " + std::to_string(limit) + " eigenvalues");
        out.insert(out.end(), static_cast<std::size_t>(count), eigenvalue(c));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

SchmidtSpectrum cut_spectrum(const ChainGeometry& g, const ArithmeticMode& mode) {
    g.validate_cut();
    mode.validate();
    const int left = g.b, right = g.n - g.b;
    const Rows rows({left, right}, g.s, mode);
    const int mmax = std::min(left, right);
    std::vector<RawClass> raw;
    raw.reserve(static_cast<size_t>(mmax) + 1);
    for (int m = 0; m <= mmax; ++m) {
        Real w = rows[left][static_cast<size_t>(m)];
        w *= rows[right][static_cast<size_t>(m)];
        raw.push_back({m, 0, m, std::move(w)});
    }
    return finish(SpectrumKind::cut, g, mode, raw, rows.prec);
}

SchmidtSpectrum block_spectrum(const ChainGeometry& g, const ArithmeticMode& mode) {
    g.validate_block();
    mode.validate();
    const int L = *g.L, b = g.b, br = g.right();
    const Rows rows({b, br, L}, g.s, mode);
    const int prec = rows.prec;
    const int wp = prec + 32;
    const auto& A = rows[b];
    const auto& C = rows[br];
    const auto& B = rows[L];

    std::vector<RawClass> raw;
    Real t(wp), spow(wp);
    for (int delta = -L; delta <= L; ++delta) {
        // suffix[p] = sum_{m >= p} s^m M_{b,m} M_{b',m+delta}
        const int mlo = std::max(0, -delta);
        const int mhi = std::min(b, br - delta);
        std::vector<Real> suffix;
        if (mhi >= mlo) {
            suffix.assign(static_cast<size_t>(mhi) + 2, Real(wp));
            for (int m = mhi; m >= 0; --m) {
                suffix[static_cast<size_t>(m)].assign(suffix[static_cast<size_t>(m) + 1]);
                if (m < mlo) continue;
                spow = pow_ui(static_cast<unsigned long>(g.s), static_cast<unsigned long>(m), wp);
                t.assign(A[static_cast<size_t>(m)]);
                t *= C[static_cast<size_t>(m + delta)];
                t *= spow;
                suffix[static_cast<size_t>(m)] += t;
            }
        }
        for (int eta = std::abs(delta); eta <= L; eta += 2) {
            const int p = (eta - delta) / 2;
            Real w(wp);
            if (mhi >= mlo && p <= mhi) {
                w.assign(suffix[static_cast<size_t>(p)]);
                spow = pow_ui(static_cast<unsigned long>(g.s), static_cast<unsigned long>(p), wp);
                w /= spow;
                w *= B[static_cast<size_t>(eta)];
            }
            raw.push_back({eta, delta, eta, std::move(w)});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const RawClass& x, const RawClass& y) {
        return x.m != y.m ? x.m < y.m : x.delta < y.delta;
    });
    return finish(SpectrumKind::block, g, mode, raw, prec);
}

mpz_class alpha_squared(int b, int b_right, int p, int q, int s) {
    require(b >= 0 && b_right >= 0 && p >= 0 && q >= 0 && s >= 1, "alpha_squared needs nonnegative arguments");
    const auto A = exact_row(b, s);
    const auto C = exact_row(b_right, s);
    const int delta = q - p;
    mpz_class sum = 0, spow = 1;
    for (int m = p; m <= b; ++m) {
        const int mc = m + delta;
        if (mc >= 0 && mc <= b_right) sum += spow * A[static_cast<size_t>(m)] * C[static_cast<size_t>(mc)];
        spow *= s;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Entropies
// ---------------------------------------------------------------------------

double EntropyReport::at(double kappa) const {
    auto it = renyi.find(kappa);
    if (it == renyi.end()) throw ParameterError("entropy for kappa " + std::to_string(kappa) + " not computed");
    return it->second;
}

EntropyReport entropies(const SchmidtSpectrum& spec, const std::vector<double>& kappas) {
    require(!spec.classes.empty(), "entropies need a nonempty spectrum");
    const double ln_s = std::log(static_cast<double>(spec.geometry.s));
    EntropyReport rep;
    rep.sigma = sigma_of(spec.geometry.s);

    LogSumExp rank;
    NeumaierSum s1;
    double max_log = -kInfinity;
    for (const auto& c : spec.classes) {
        rank.add(c.degeneracy_exponent * ln_s);
        s1.add(-c.probability * c.log_eigenvalue);
        max_log = std::max(max_log, c.log_eigenvalue);
    }
    rep.S0 = rank.value() / kLn2;
    rep.S1 = s1.value() / kLn2;

    for (double k : kappas) {
        require(k >= 0.0, "kappa must be >= 0");
        double v;
        if (k == 0.0) {
            v = rep.S0;
        } else if (k == 1.0) {
            v = rep.S1;
        } else if (std::isinf(k)) {
            v = -max_log / kLn2;
        } else {
            // log sum_c s^e lambda_c^k = log sum_c exp(e ln s + k ln lambda_c)
            LogSumExp acc;
            for (const auto& c : spec.classes) acc.add(c.degeneracy_exponent * ln_s + k * c.log_eigenvalue);
            v = acc.value() / ((1.0 - k) * kLn2);
        }
        rep.renyi[k] = v;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

namespace {

double log2_cut_rank_formula(int s, int b) {
    if (s == 1) return std::log2(b + 1.0);
    // log2((s^(b+1) - 1) / (s - 1))
    const double e = (b + 1) * std::log2(static_cast<double>(s));
    return e + std::log2(-std::expm1(-e * kLn2)) - std::log2(s - 1.0);
}

mpz_class block_rank_formula(int s, int L) {
    if (s == 1) return 2 * L + 1;
    const mpz_class sl = mpz_pow(s, L);
    const mpz_class num = sl * (L * (s - 1) - 1) + 1;
    const mpz_class den = mpz_class(s - 1) * (s - 1);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

void check_kappa(double kappa) {
    require(kappa >= 0.0, "kappa must be >= 0");
    require(kappa == 0.0 || kappa >= 1.0, "closed forms are defined for kappa = 0 and kappa >= 1");
}

} // namespace

AsymptoticEntropy cut_entropy_asymptotic(const ChainGeometry& g, double kappa) {
    g.validate_cut();
    check_kappa(kappa);
    const double s = g.s, b = g.b, n = g.n;
    const double beta = b * (1.0 - b / n);
    const int b_near = std::min(g.b, g.n - g.b);
    AsymptoticEntropy out;
    if (kappa == 0.0) {
        out.bits = log2_cut_rank_formula(g.s, b_near);
        return out;
    }
    if (g.s == 1) {
        out.bits = 0.5 * std::log2(beta);
        out.constant_omitted = true;
        return out;
    }
    const double sg = sigma_of(g.s);
    const double ls = std::log2(s);
    const double base = std::log2(2.0 * std::sqrt(std::numbers::pi) * std::pow(sg, 1.5));
    if (kappa == 1.0) {
        out.bits = 4.0 * ls * std::sqrt(sg * beta / std::numbers::pi) + 0.5 * std::log2(beta) +
                   (kEulerGamma - 0.5) * std::numbers::log2e + std::log2(2.0 * std::sqrt(sg * std::numbers::pi));
    } else if (std::isinf(kappa)) {
        out.bits = 1.5 * std::log2(beta) + base + 2.0 * std::log2(std::numbers::e * ls / 2.0);
    } else {
        const double k = kappa;
        const double log2_fact = std::lgamma(2.0 * k + 1.0) / kLn2;
        out.bits = 3.0 / (2.0 * (1.0 - 1.0 / k)) * std::log2(beta) +
                   (k * base - log2_fact + (2.0 * k + 1.0) * std::log2((k - 1.0) * ls)) / (k - 1.0);
    }
    return out;
}

AsymptoticEntropy block_entropy_asymptotic(const ChainGeometry& g, double kappa) {
    g.validate_block();
    check_kappa(kappa);
    const double s = g.s, L = *g.L;
    AsymptoticEntropy out;
    out.off_center = !g.centered();
    if (kappa == 0.0) {
        out.bits = log2_mpz(block_rank_formula(g.s, *g.L));
        return out;
    }
    if (g.s == 1) {
        out.bits = 0.5 * std::log2(L);
        out.constant_omitted = true;
        return out;
    }
    const double sg = sigma_of(g.s);
    const double ls = std::log2(s);
    const double base = std::log2(2.0 * std::sqrt(std::numbers::pi) * std::pow(sg, 1.5));
    if (kappa == 1.0) {
        out.bits = 4.0 * ls * std::sqrt(sg * L / std::numbers::pi) + std::log2(L) +
                   0.5 * (kEulerGamma + 1.0) * std::numbers::log2e + std::log2(2.0 * std::sqrt(std::numbers::pi * sg));
    } else if (std::isinf(kappa)) {
        out.bits = 1.5 * std::log2(L) +
                   std::log2(2.0 * std::numbers::e * std::sqrt(std::numbers::pi) * std::pow(sg, 1.5) * ls);
    } else {
        const double k = kappa;
        const double log2_fact = std::lgamma(k + 2.0) / kLn2;
        out.bits = 3.0 / (2.0 * (1.0 - 1.0 / k)) * std::log2(L) +
                   (k * base - log2_fact + (k + 2.0) * std::log2((k - 1.0) * ls)) / (k - 1.0);
    }
    return out;
}

SchmidtRankReport schmidt_rank(const SchmidtSpectrum& spec) {
    SchmidtRankReport rep;
    rep.direct = 0;
    for (const auto& c : spec.classes) rep.direct += mpz_pow(spec.geometry.s, c.degeneracy_exponent);
    const auto& g = spec.geometry;
    if (spec.kind == SpectrumKind::cut) {
        const int b_near = std::min(g.b, g.n - g.b);
        if (g.s == 1) {
            rep.closed_form = mpz_class(b_near + 1);
        } else {
            mpz_class v = mpz_pow(g.s, b_near + 1) - 1;
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(g.s - 1));
            rep.closed_form = v;
        }
    } else {
        rep.closed_form = block_rank_formula(g.s, *g.L);
    }
    rep.match = rep.closed_form && *rep.closed_form == rep.direct;
    return rep;
}

// ---------------------------------------------------------------------------
// RDM oracle
// ---------------------------------------------------------------------------

std::vector<double> rdm_oracle(int n, int s, const std::vector<int>& sites) {
    require(n >= 1 && s >= 1, "rdm_oracle needs n >= 1, s >= 1");
    std::vector<char> in_a(static_cast<size_t>(n), 0);
    for (int i : sites) {
        require(0 <= i && i < n, "subsystem site out of range");
        require(!in_a[static_cast<size_t>(i)], "subsystem sites must be distinct");
        in_a[static_cast<size_t>(i)] = 1;
    }
    const std::uint64_t d = 2 * static_cast<std::uint64_t>(s) + 1;
    std::uint64_t dim_a = 1;
    for (size_t k = 0; k < sites.size(); ++k) {
        dim_a *= d;
        if (dim_a > 4096) throw GuardError("rdm_oracle refused: (2s+1)^|A| exceeds 4096");
    }
    check_walk_guard(n, s, 10'000'000);

    std::vector<int> sorted = sites;
    std::sort(sorted.begin(), sorted.end());
    // Group subsystem configurations by their environment configuration.
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> groups;
    std::uint64_t total = 0;
    for_each_walk(n, s, [&](const Walk& w) {
        std::uint64_t a = 0, env = 0;
        for (int i = 0; i < n; ++i) {
            const std::uint64_t digit = static_cast<std::uint64_t>(w.steps[static_cast<size_t>(i)] + s);
            if (in_a[static_cast<size_t>(i)]) a = a * d + digit;
            else env = env * d + digit;
        }
        groups[env].push_back(static_cast<std::uint32_t>(a));
        ++total;
    });

    // Charge vector of a subsystem configuration; rho_A is block diagonal in it.
    auto charge = [&](std::uint32_t a) {
        std::vector<int> q(static_cast<size_t>(s), 0);
        for (size_t k = 0; k < sorted.size(); ++k) {
            const int v = static_cast<int>(a % d) - s;
            a /= static_cast<std::uint32_t>(d);
            if (v > 0) ++q[static_cast<size_t>(v - 1)];
            else if (v < 0) --q[static_cast<size_t>(-v - 1)];
        }
        return q;
    };
    std::map<std::vector<int>, std::vector<std::uint32_t>> sectors;
    std::unordered_map<std::uint32_t, int> where;
    for (const auto& [env, members] : groups) {
        const auto q0 = charge(members.front());
        for (auto a : members) {
            if (charge(a) != q0) throw std::logic_error("rdm_oracle: environment group mixes charge sectors");
            if (!where.count(a)) {
                auto& vec = sectors[q0];
                vec.push_back(a);
                where[a] = static_cast<int>(vec.size()) - 1;
            }
        }
    }
    std::map<std::vector<int>, Eigen::MatrixXd> blocks;
    for (const auto& [q, members] : sectors)
        blocks[q] = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(members.size()),
                                          static_cast<Eigen::Index>(members.size()));
    const double inv = 1.0 / static_cast<double>(total);
    for (const auto& [env, members] : groups) {
        auto& blk = blocks[charge(members.front())];
        for (auto a : members)
            for (auto c : members) blk(where[a], where[c]) += inv;
    }
    std::vector<double> eig;
    eig.reserve(dim_a);
    for (auto& [q, blk] : blocks) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(blk, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) eig.push_back(es.eigenvalues()[i]);
    }
    eig.resize(dim_a, 0.0);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

} // namespace motzkin
