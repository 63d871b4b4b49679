// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file correlations.cpp
 * @brief Distribution sums for spin correlators plus a walk-level oracle.
 */

#include <motzkin/correlations.hpp>
#include <motzkin/errors.hpp>
#include <motzkin/numerics.hpp>
#include <motzkin/walks.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <unordered_map>
#include <unordered_set>

namespace motzkin {

namespace {

using RowPtr = std::shared_ptr<const RealRow>;

/// Rows M_{k,.} as Real, either promoted exact integers or cached float rows.
struct RowBank {
    int prec = 128;
    bool exact = false;
    bool truncated = false;
    std::map<int, RowPtr> rows;

    [[nodiscard]] const RealRow& row(int k) const { return *rows.at(k); }
};

[[nodiscard]] const Real* entry(const RealRow& r, int m) {
    return (m >= 0 && m < static_cast<int>(r.size())) ? &r[static_cast<size_t>(m)] : nullptr;
}

/// cap_length >= 0 truncates float rows at the height cap for that chain length.
RowBank make_rows(std::vector<int> lengths, int s, const ArithmeticMode& mode, int cap_length) {
    mode.validate();
    RowBank bank;
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    const int kmax = lengths.empty() ? 0 : lengths.back();
    if (mode.is_exact()) {
        if (kmax > exact_length_cap())
            throw GuardError("exact-integer mode is capped at n = " + std::to_string(exact_length_cap()));
        std::map<int, std::vector<mpz_class>> ex;
        size_t bits = 1;
        for (int k : lengths) {
            ex.emplace(k, exact_row(k, s));
            for (const auto& v : ex[k]) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
        }
        // Products of three rows, s-powers and small integer coefficients stay exact.
        const int total = 2 * kmax;
        bank.prec = static_cast<int>(3 * bits) + total * static_cast<int>(std::ceil(std::log2(s + 1.0))) + 128;
        bank.exact = true;
        for (const auto& [k, row] : ex) {
            auto r = std::make_shared<RealRow>();
            r->reserve(row.size());
            for (const auto& v : row) r->emplace_back(v, bank.prec);
            bank.rows.emplace(k, std::move(r));
        }
        return bank;
    }
    bank.prec = mode.precision_bits;
    int cap = -1;
    if (cap_length >= 0) {
        cap = truncation_cap(std::max(kmax, cap_length), s, bank.prec);
        if (cap >= kmax) cap = -1;
    }
    bank.truncated = cap >= 0;
    bank.rows = real_rows(lengths, s, bank.prec, cap);
    return bank;
}

/// Relative error budget of a sum of nonnegative row products.
double relative_budget(const RowBank& bank, int n) {
    if (bank.exact) return 0.0;
    double rel = (3.0 * n + 32.0) * std::ldexp(1.0, -bank.prec);
    if (bank.truncated) rel += (n + 1.0) * std::ldexp(1.0, -(bank.prec + 48));
    return rel;
}

Real spow_real(int s, int e, int prec) { return pow_ui(static_cast<unsigned long>(s), static_cast<unsigned long>(e), prec); }

struct TermSum {
    Real value;
    Real magnitude;
};

/**
 * 48 * sum over (m, p, q) of s^{m+q} M_{a,m} M_{seg,p+q} M_{c,m+q-p} times
 * E[H H | m, p, q], using prefix sums over eta = p + q per fixed delta = q - p.
 */
TermSum hh_sum(const RowBank& R, int a, int seg, int c, int s, int wp) {
    const RealRow& A = R.row(a);
    const RealRow& B = R.row(seg);
    const RealRow& C = R.row(c);
    const auto us = static_cast<unsigned long>(s);
    const unsigned long kA = 12UL * (us + 1) * (us + 1);
    const unsigned long cB = 4UL * (us * us - 1);

    std::vector<Real> spow;
    spow.reserve(static_cast<size_t>(seg) + 1);
    spow.emplace_back(1.0, wp);
    for (int q = 1; q <= seg; ++q) {
        spow.push_back(spow.back());
        spow.back() *= us;
    }

    const int nd = 2 * seg + 1;
    std::vector<std::vector<Real>> F0(static_cast<size_t>(nd)), Fp(static_cast<size_t>(nd));
    {
        Real acc0(wp), accp(wp), t(wp);
        for (int d = -seg; d <= seg; ++d) {
            auto& f0 = F0[static_cast<size_t>(d + seg)];
            auto& fp = Fp[static_cast<size_t>(d + seg)];
            acc0.set_zero();
            accp.set_zero();
            for (int eta = std::abs(d); eta <= seg; eta += 2) {
                const Real* b = entry(B, eta);
                if (b) {
                    const int p = (eta - d) / 2, q = (eta + d) / 2;
                    t.assign(*b);
                    t *= spow[static_cast<size_t>(q)];
                    acc0 += t;
                    t *= static_cast<unsigned long>(p);
                    accp += t;
                }
                f0.push_back(acc0);
                fp.push_back(accp);
            }
        }
    }

    TermSum out{Real(wp), Real(64)};
    Real sm(1.0, wp), wA(wp), w(wp), g0(wp), gp(wp), t(wp);
    Real mag(64);
    const int mtop = std::min(a, static_cast<int>(A.size()) - 1);
    for (int m = 0; m <= mtop; ++m) {
        if (m > 0) sm *= us;
        const Real& am = A[static_cast<size_t>(m)];
        if (am.is_zero()) continue;
        wA.assign(sm);
        wA *= am;
        for (int d = std::max(-seg, -m); d <= seg; ++d) {
            const int mc = m + d;
            if (mc > c) break;
            const Real* cm = entry(C, mc);
            if (!cm || cm->is_zero()) continue;
            int eta_max = std::min(seg, 2 * m + d);
            if ((eta_max - d) & 1) --eta_max;
            if (eta_max < std::abs(d)) continue;
            const auto& f0 = F0[static_cast<size_t>(d + seg)];
            const auto& fp = Fp[static_cast<size_t>(d + seg)];
            const size_t idx = std::min(static_cast<size_t>((eta_max - std::abs(d)) / 2), f0.size() - 1);
            const auto um = static_cast<unsigned long>(m);
            const unsigned long cA = kA * um * static_cast<unsigned long>(mc) + cB * um;
            g0.assign(f0[idx]);
            g0 *= cA;
            gp.assign(fp[idx]);
            gp *= cB;
            w.assign(wA);
            w *= *cm;
            t.assign(g0);
            t += gp;
            mpfr_mul(mag.get(), w.get(), t.get(), MPFR_RNDU);
            out.magnitude += mag;
            g0 -= gp;
            out.value.fma_add(w, g0);
        }
    }
    return out;
}

/// S(b) = sum_m s^m m M_{b,m} M_{n-b,m}.
Real height_moment(const RowBank& R, int b, int n, int s, int wp) {
    Real acc(wp), sm(1.0, wp), t(wp);
    const RealRow& A = R.row(b);
    const RealRow& C = R.row(n - b);
    const int top = std::min({b, n - b, static_cast<int>(A.size()) - 1, static_cast<int>(C.size()) - 1});
    for (int m = 1; m <= top; ++m) {
        sm *= static_cast<unsigned long>(s);
        t.assign(sm);
        t *= A[static_cast<size_t>(m)];
        t *= C[static_cast<size_t>(m)];
        t *= static_cast<unsigned long>(m);
        acc += t;
    }
    return acc;
}

Real total_real(int n, int s, const RowBank& R, int wp) {
    if (R.exact) {
        Real z(exact_row(n, s).front(), wp);
        return z;
    }
    Real z = motzkin_real(n, 0, s, wp);
    return z;
}

void finalize(CorrelatorReport& r) {
    r.reliable = std::isfinite(r.exact) && r.error_bound < std::abs(r.exact) / 10.0;
    if (r.error_bound == 0.0 && std::isfinite(r.exact)) r.reliable = true;
}

} // namespace

// ---------------------------------------------------------------------------

SpinOperator SpinOperator::make(SpinKind kind, int s) {
    require(s >= 1, "spin operators need s >= 1");
    const int d = 2 * s + 1;
    Eigen::MatrixXcd plus = Eigen::MatrixXcd::Zero(d, d), minus = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
    const double ss = static_cast<double>(s) * (s + 1);
    for (int v = -s; v <= s; ++v) {
        z(v + s, v + s) = static_cast<double>(v);
        if (v < s) plus(v + 1 + s, v + s) = std::sqrt(ss - static_cast<double>(v) * (v + 1));
        if (v > -s) minus(v - 1 + s, v + s) = std::sqrt(ss - static_cast<double>(v) * (v - 1));
    }
    SpinOperator op{kind, s, {}};
    switch (kind) {
    case SpinKind::Sz: op.matrix = z; break;
    case SpinKind::Splus: op.matrix = plus; break;
    case SpinKind::Sminus: op.matrix = minus; break;
    case SpinKind::Sx: op.matrix = 0.5 * (plus + minus); break;
    case SpinKind::Sy: op.matrix = std::complex<double>(0.0, -0.5) * (plus - minus); break;
    }
    return op;
}

const char* to_string(SpinKind k) {
    switch (k) {
    case SpinKind::Sx: return "Sx";
    case SpinKind::Sy: return "Sy";
    case SpinKind::Sz: return "Sz";
    case SpinKind::Splus: return "S+";
    case SpinKind::Sminus: return "S-";
    }
    return "?";
}

double CorrelatorReport::term(const std::string& name) const {
    for (const auto& [k, v] : terms)
        if (k == name) return v;
    throw ParameterError("no correlator term named '" + name + "'");
}

ArithmeticMode default_correlator_mode(int n) {
    return ArithmeticMode::log_float(n <= 10000 ? 128 : 256);
}

// ---------------------------------------------------------------------------

TripartiteDistribution::TripartiteDistribution(int n, int s, int b, int L, const ArithmeticMode& mode)
    : n_(n), s_(s), b_(b), L_(L), prec_(0), z_(53) {
    require(s >= 1, "s must be >= 1");
    require(b >= 0 && L >= 0 && b + L <= n, "tripartite geometry needs 0 <= b, 0 <= L, b + L <= n");
    RowBank R = make_rows({b, L, n - b - L, n}, s, mode, -1);
    prec_ = R.prec;
    A_ = R.row(b);
    B_ = R.row(L);
    C_ = R.row(n - b - L);
    z_ = R.row(n).front();
}

Real TripartiteDistribution::weight(int m, int p, int q) const {
    Real w(prec_ + 32);
    if (m < 0 || p < 0 || q < 0 || p > m) return w;
    const Real* a = entry(A_, m);
    const Real* bq = entry(B_, p + q);
    const Real* c = entry(C_, m + q - p);
    if (!a || !bq || !c) return w;
    w = spow_real(s_, m + q, prec_ + 32);
    w *= *a;
    w *= *bq;
    w *= *c;
    return w;
}

double TripartiteDistribution::probability(int m, int p, int q) const {
    Real w = weight(m, p, q);
    w /= z_;
    return w.to_double();
}

Real TripartiteDistribution::weight_sum() const {
    Real acc(prec_ + 32);
    for (int m = 0; m <= b_; ++m)
        for (int p = 0; p <= std::min(m, L_); ++p)
            for (int q = 0; p + q <= L_; ++q) acc += weight(m, p, q);
    return acc;
}

double conditional_hh(int m, int p, int q, int s) {
    const double mu = (s + 1) / 2.0;
    const double v = (static_cast<double>(s) * s - 1.0) / 12.0;
    return mu * mu * (static_cast<double>(m) * m - static_cast<double>(m) * p + static_cast<double>(m) * q) +
           (m - p) * v;
}

// ---------------------------------------------------------------------------

CorrelatorReport sz_expectation_exact(int n, int b, int s, std::optional<ArithmeticMode> mode) {
    require(s >= 1, "s must be >= 1");
    require(n >= 1 && b >= 1 && b <= n, "sz_expectation needs 1 <= b <= n");
    const ArithmeticMode md = mode.value_or(default_correlator_mode(n));
    RowBank R = make_rows({b, n - b, b - 1, n - b + 1}, s, md, n);
    const int wp = R.prec + 32;
    Real hi = height_moment(R, b, n, s, wp);
    Real lo = height_moment(R, b - 1, n, s, wp);
    Real z = total_real(n, s, R, wp);

    CorrelatorReport r;
    r.precision_bits = md.is_exact() ? 0 : md.precision_bits;
    Real diff = hi - lo;
    diff *= static_cast<unsigned long>(s + 1);
    diff /= 2UL;
    diff /= z;
    r.exact = diff.to_double();
    Real eh = hi, ehm = lo;
    eh *= static_cast<unsigned long>(s + 1);
    eh /= 2UL;
    eh /= z;
    ehm *= static_cast<unsigned long>(s + 1);
    ehm /= 2UL;
    ehm /= z;
    r.terms = {{"E_H_b", eh.to_double()}, {"E_H_b_minus_1", ehm.to_double()}};
    r.error_bound = relative_budget(R, n) * (eh.to_double() + ehm.to_double());
    if (b >= 1 && b < n) r.asymptotic = sz_expectation_asymptotic(n, b, s);
    finalize(r);
    if (r.exact == 0.0 && r.error_bound == 0.0) r.reliable = true;
    return r;
}

double sz_expectation_asymptotic(int n, double b, int s) {
    require(n >= 1 && b > 0 && b < n, "sz_expectation_asymptotic needs 0 < b < n");
    const double sigma = sigma_of(s);
    const double x = 1.0 - 2.0 * b / n;
    return (s + 1) * std::sqrt(sigma / std::numbers::pi) * x / std::sqrt(b * (1.0 - b / n));
}

CorrelatorReport szsz_exact(int n, int i, int j, int s, std::optional<ArithmeticMode> mode, bool connected) {
    require(s >= 1, "s must be >= 1");
    require(1 <= i && i < j && j <= n, "szsz_exact needs 1 <= i < j <= n");
    const ArithmeticMode md = mode.value_or(default_correlator_mode(n));

    struct Geo {
        int a, seg, c, sign;
        const char* name;
    };
    const std::array<Geo, 4> geos{{{i, j - i, n - j, +1, "E_HiHj"},
                                   {i - 1, j - i + 1, n - j, -1, "E_Him1Hj"},
                                   {i, j - i - 1, n - j + 1, -1, "E_HiHjm1"},
                                   {i - 1, j - i, n - j + 1, +1, "E_Him1Hjm1"}}};
    std::vector<int> lengths;
    for (const auto& g : geos) {
        lengths.push_back(g.a);
        lengths.push_back(g.seg);
        lengths.push_back(g.c);
    }
    RowBank R = make_rows(lengths, s, md, n);
    const int wp = R.prec + 32;

    std::vector<TermSum> sums(4, TermSum{Real(wp), Real(64)});
    parallel_for(4, default_threads(), [&](std::size_t k) {
        const auto& g = geos[k];
        sums[k] = hh_sum(R, g.a, g.seg, g.c, s, wp);
    });

    Real z = total_real(n, s, R, wp);
    Real norm = z;
    norm *= 48UL;
    Real acc(wp), mag(64);
    CorrelatorReport r;
    for (size_t k = 0; k < 4; ++k) {
        if (geos[k].sign > 0) acc += sums[k].value;
        else acc -= sums[k].value;
        mag += sums[k].magnitude;
        Real e = sums[k].value;
        e /= norm;
        r.terms.emplace_back(geos[k].name, e.to_double());
    }
    acc /= norm;
    mag /= norm;
    r.exact = acc.to_double();
    r.precision_bits = md.is_exact() ? 0 : md.precision_bits;
    r.error_bound = relative_budget(R, n) * mag.to_double();
    if (connected) {
        const CorrelatorReport zi = sz_expectation_exact(n, i, s, md);
        const CorrelatorReport zj = sz_expectation_exact(n, j, s, md);
        r.terms.emplace_back("raw", r.exact);
        r.terms.emplace_back("Sz_i", zi.exact);
        r.terms.emplace_back("Sz_j", zj.exact);
        r.exact -= zi.exact * zj.exact;
        r.error_bound += std::abs(zi.exact) * zj.error_bound + std::abs(zj.exact) * zi.error_bound;
    }
    r.asymptotic = szsz_asymptotic(j - i, s);
    finalize(r);
    return r;
}

double szsz_asymptotic(double L, int s) {
    require(s >= 1 && L >= 1, "szsz_asymptotic needs s >= 1 and L >= 1");
    if (s == 1) return 0.0;
    const double sigma = sigma_of(s);
    return -(1.0 / 24.0) * std::sqrt(sigma / std::numbers::pi) * (static_cast<double>(s) * s - 1.0) *
           std::pow(L, -1.5);
}

// ---------------------------------------------------------------------------

double StepPairDistribution::group_mean(int g) const {
    double sum = 0.0;
    int count = 0;
    for (int a = -1; a <= 1; ++a)
        for (int c = -1; c <= 1; ++c)
            if (std::abs(a + c) == g) {
                sum += at(a, c);
                ++count;
            }
    return count ? sum / count : 0.0;
}

StepPairDistribution step_pair_distribution(int n, int b, int L, std::optional<ArithmeticMode> mode) {
    require(L >= 2 && b >= 1 && b + L <= n, "step_pair_distribution needs L >= 2, b >= 1, b + L <= n");
    const int s = 1;
    const ArithmeticMode md = mode.value_or(default_correlator_mode(n));
    const int pre = b - 1, inner = L - 1, post = n - b - L;
    RowBank R = make_rows({pre, inner, post}, s, md, n);
    const int wp = R.prec + 32;
    const RealRow& A = R.row(pre);
    const RealRow& B = R.row(inner);
    const RealRow& C = R.row(post);

    // Per delta = q - p: prefix sums of M_{inner, eta} over eta = |delta|, |delta|+2, ...
    const int nd = 2 * inner + 1;
    std::vector<std::vector<Real>> F(static_cast<size_t>(nd));
    for (int d = -inner; d <= inner; ++d) {
        Real acc(wp);
        auto& f = F[static_cast<size_t>(d + inner)];
        for (int eta = std::abs(d); eta <= inner; eta += 2) {
            if (const Real* v = entry(B, eta)) acc += *v;
            f.push_back(acc);
        }
    }

    Real z = total_real(n, s, R, wp);
    StepPairDistribution out;
    out.n = n;
    out.b = b;
    out.L = L;
    out.s = s;
    Real t(wp);
    for (int w1 = -1; w1 <= 1; ++w1) {
        for (int w2 = -1; w2 <= 1; ++w2) {
            Real acc(wp);
            const int mtop = std::min(pre, static_cast<int>(A.size()) - 1);
            for (int m = 0; m <= mtop; ++m) {
                const int h = m + w1;
                if (h < 0) continue;
                for (int d = std::max(-inner, -h); d <= inner; ++d) {
                    const int hb = h + d + w2;
                    if (hb < 0) continue;
                    if (hb > post) break;
                    const Real* c = entry(C, hb);
                    if (!c) continue;
                    int eta_max = std::min(inner, 2 * h + d);
                    if ((eta_max - d) & 1) --eta_max;
                    if (eta_max < std::abs(d)) continue;
                    const auto& f = F[static_cast<size_t>(d + inner)];
                    const size_t idx = std::min(static_cast<size_t>((eta_max - std::abs(d)) / 2), f.size() - 1);
                    t.assign(A[static_cast<size_t>(m)]);
                    t *= *c;
                    t *= f[idx];
                    acc += t;
                }
            }
            acc /= z;
            out.prob[static_cast<size_t>(w1 + 1)][static_cast<size_t>(w2 + 1)] = acc.to_double();
        }
    }
    out.error_bound = relative_budget(R, n);
    return out;
}

double event_e_probability(int n, int b, int L) {
    require(L >= 1 && b >= 1 && b + L <= n, "event E needs b >= 1, L >= 1, b + L <= n");
    check_walk_guard(n, 1);
    std::uint64_t hits = 0, total = 0;
    for_each_walk(n, 1, [&](const Walk& w) {
        ++total;
        const int wb = w.steps[static_cast<size_t>(b - 1)];
        const int wl = w.steps[static_cast<size_t>(b + L - 1)];
        if (wb < 0 || wl > 0) return;
        int h = 0, lowest = n + 1;
        for (int k = 1; k <= b + L - 1; ++k) {
            h += (w.steps[static_cast<size_t>(k - 1)] > 0) - (w.steps[static_cast<size_t>(k - 1)] < 0);
            if (k >= b) lowest = std::min(lowest, h);
        }
        if (lowest == 0) ++hits;
    });
    return static_cast<double>(hits) / static_cast<double>(total);
}

CorrelatorReport sxsx_colorless(int n, int b, int L, bool include_event_e, std::optional<ArithmeticMode> mode) {
    const StepPairDistribution pr = step_pair_distribution(n, b, L, mode);
    NeumaierSum off;
    for (int a = -1; a <= 1; ++a)
        for (int c = -1; c <= 1; ++c)
            if (a != c) off.add(pr.at(a, c));
    const double p00 = pr.at(0, 0);
    const double sigma = sigma_of(1);
    const double bound = 4.0 * L * std::sqrt(sigma / std::numbers::pi) /
                         (std::sqrt(static_cast<double>(b)) * std::sqrt(static_cast<double>(n) * (b + L)));

    CorrelatorReport r;
    r.precision_bits = mode && mode->is_exact() ? 0 : mode.value_or(default_correlator_mode(n)).precision_bits;
    double event = 0.0;
    if (include_event_e) event = event_e_probability(n, b, L);
    r.exact = 0.5 * (off.value() + 2.0 * p00 - event);
    r.error_bound = 6.0 * pr.error_bound + 4.0 * std::numeric_limits<double>::epsilon();
    r.terms = {{"off_diagonal", off.value()}, {"P00", p00}, {"omitted_E_bound", bound}};
    if (include_event_e) r.terms.emplace_back("event_E", event);
    r.asymptotic = 4.0 / 9.0 + 7.0 / (18.0 * n);
    finalize(r);
    return r;
}

int centered_site(int n, int L) {
    require(L >= 1 && L < n, "centered_site needs 1 <= L < n");
    return std::max(1, (n - L + 1) / 2);
}

CorrelatorReport sxsx_colorful(int n, int L, int s, int precision_bits) {
    require(s >= 2, "sxsx_colorful needs s >= 2");
    require(L >= 2 && L + 1 < n, "sxsx_colorful needs 2 <= L < n - 1");
    require(precision_bits >= 64, "precision must be >= 64 bits");
    const int wp = precision_bits + 32;
    const double sigma = sigma_of(s);

    const Real mn = motzkin_real(n, 0, s, wp);
    Real pl = motzkin_real(L - 2, 0, s, wp);
    pl *= motzkin_real(n - L, 0, s, wp);
    pl /= mn;
    // Same event with the inner segment b+1..b+L-1 and both operator sites removed.
    Real pl_sites = motzkin_real(L - 1, 0, s, wp);
    pl_sites *= motzkin_real(n - L - 1, 0, s, wp);
    pl_sites /= mn;
    const double P_L = pl.to_double();
    const double ds = s;
    const double weight = ds * (ds + 1) * (ds + 2) / 3.0;
    const double dominant = weight * P_L;

    CorrelatorReport r;
    r.exact = dominant;
    r.precision_bits = precision_bits;
    r.asymptotic = (ds + 1) * (ds + 2) * sigma * sigma / 6.0 * std::sqrt(sigma / std::numbers::pi) *
                   std::pow(static_cast<double>(L), -1.5);
    r.terms = {{"P_L", P_L}, {"dominant", dominant}, {"P_L_sites", pl_sites.to_double()},
               {"dominant_sites", weight * pl_sites.to_double()}};

    const double cascade_closed = 8.0 / (std::sqrt(std::numbers::pi) * std::pow(sigma, 1.5) *
                                         std::pow(std::log2(ds), 3)) *
                                  std::pow(static_cast<double>(n), -1.5);
    r.terms.emplace_back("cascade_fraction_asymptotic", cascade_closed);
    double cascade = cascade_closed;
    if (n <= 20000) {
        const int half = n / 2;
        const int cap = truncation_cap(half, s, precision_bits);
        const RealRow& row = *real_rows({half}, s, precision_bits, cap >= half ? -1 : cap).at(half);
        Real acc(wp), t(wp);
        for (const auto& v : row) {
            t.assign(v);
            t *= v;
            acc += t;
        }
        acc /= mn;
        cascade = acc.to_double();
        r.terms.emplace_back("cascade_fraction_exact", cascade);
    }
    r.terms.emplace_back("cascade_ceiling", ds * (ds + 1) / 2.0 * cascade);
    r.error_bound = (3.0 * n + 32.0) * std::ldexp(1.0, -precision_bits) * dominant;
    finalize(r);
    return r;
}

// ---------------------------------------------------------------------------

std::complex<double> bruteforce_correlator(int n, int s, const std::vector<std::pair<int, SpinOperator>>& ops) {
    require(s >= 1 && n >= 1, "bruteforce_correlator needs n, s >= 1");
    for (const auto& [site, op] : ops) {
        require(site >= 1 && site <= n, "operator site out of range 1..n");
        require(op.s == s && op.matrix.rows() == 2 * s + 1, "operator dimension does not match s");
    }
    const std::vector<Walk> walks = enumerate_walks(n, s);
    const auto radix = static_cast<std::uint64_t>(2 * s + 1);
    std::vector<std::uint64_t> place(static_cast<size_t>(n));
    std::uint64_t pw = 1;
    for (int p = n - 1; p >= 0; --p) {
        place[static_cast<size_t>(p)] = pw;
        pw *= radix;
    }
    std::unordered_set<std::uint64_t> valid;
    valid.reserve(walks.size() * 2);
    for (const auto& w : walks) valid.insert(basis_index(w));

    std::complex<double> total = 0.0;
    std::unordered_map<std::uint64_t, std::complex<double>> cur, nxt;
    for (const auto& w : walks) {
        cur.clear();
        cur[basis_index(w)] = 1.0;
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            const auto& mat = it->second.matrix;
            const std::uint64_t pv = place[static_cast<size_t>(it->first - 1)];
            nxt.clear();
            for (const auto& [idx, amp] : cur) {
                const auto d = static_cast<int>((idx / pv) % radix);
                for (int r = 0; r < static_cast<int>(radix); ++r) {
                    const std::complex<double> e = mat(r, d);
                    if (e == 0.0) continue;
                    const std::uint64_t to = idx - static_cast<std::uint64_t>(d) * pv + static_cast<std::uint64_t>(r) * pv;
                    nxt[to] += e * amp;
                }
            }
            std::swap(cur, nxt);
        }
        for (const auto& [idx, amp] : cur)
            if (valid.count(idx)) total += amp;
    }
    return total / static_cast<double>(walks.size());
}

} // namespace motzkin
