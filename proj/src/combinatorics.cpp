// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file combinatorics.cpp
 * @brief Motzkin counting: banded DP, trinomial closed form, ballot theorem.
 */

#include <motzkin/combinatorics.hpp>
#include <motzkin/errors.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <tuple>
#include <utility>

namespace motzkin {

namespace {

std::atomic<int> g_exact_cap{4000};

/// Binomial C(n, k) with zero outside 0 <= k <= n.
mpz_class binom(long n, long k) {
    mpz_class r;
    if (k < 0 || n < 0 || k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void check_exact_size(int n) {
    if (n > exact_length_cap())
        throw GuardError("exact-integer mode is capped at n = " + std::to_string(exact_length_cap()) +
                         " (requested n = " + std::to_string(n) + ")");
}

/// Banded exact DP: only heights that can still return to the target m are kept.
mpz_class exact_dp(int n, int m, int s) {
    std::vector<mpz_class> cur(static_cast<size_t>(n) + 2), nxt(static_cast<size_t>(n) + 2);
    cur[0] = 1;
    mpz_class tmp;
    for (int k = 1; k <= n; ++k) {
        const int hi = std::min(k, m + (n - k));
        for (int h = 0; h <= hi; ++h) {
            mpz_class& out = nxt[static_cast<size_t>(h)];
            out = cur[static_cast<size_t>(h)];
            if (h >= 1) out += cur[static_cast<size_t>(h - 1)];
            if (h + 1 <= k - 1) {
                mpz_mul_ui(tmp.get_mpz_t(), cur[static_cast<size_t>(h + 1)].get_mpz_t(),
                           static_cast<unsigned long>(s));
                out += tmp;
            }
        }
        for (int h = hi + 1; h <= std::min(k, n); ++h) nxt[static_cast<size_t>(h)] = 0;
        std::swap(cur, nxt);
    }
    return cur[static_cast<size_t>(m)];
}

/// One DP step on float rows. `width` is the number of stored heights.
void real_step(const RealRow& cur, RealRow& nxt, int k, int s, int width, Real& tmp) {
    const int hi = std::min(k, width - 1);
    for (int h = 0; h <= hi; ++h) {
        Real& out = nxt[static_cast<size_t>(h)];
        if (h <= k - 1) out.assign(cur[static_cast<size_t>(h)]);
        else out.set_zero();
        if (h >= 1) out += cur[static_cast<size_t>(h - 1)];
        if (h + 1 <= std::min(k - 1, width - 1)) {
            if (s == 1) {
                out += cur[static_cast<size_t>(h + 1)];
            } else {
                mpfr_mul_ui(tmp.get(), cur[static_cast<size_t>(h + 1)].get(),
                            static_cast<unsigned long>(s), MPFR_RNDN);
                out += tmp;
            }
        }
    }
}

struct RowKey {
    int s, prec, cap, n;
    bool operator<(const RowKey& o) const {
        return std::tie(s, prec, cap, n) < std::tie(o.s, o.prec, o.cap, o.n);
    }
};

class RowCache {
public:
    RealRowPtr find(const RowKey& k) const {
        std::shared_lock lock(mu_);
        auto it = rows_.find(k);
        return it == rows_.end() ? nullptr : it->second;
    }
    /// Cached DP state with the largest length <= n that is valid for `cap`.
    std::pair<int, RealRowPtr> floor(int s, int prec, int cap, int n) const {
        std::shared_lock lock(mu_);
        std::pair<int, RealRowPtr> best{-1, nullptr};
        auto scan = [&](int c, int hi) {
            auto it = rows_.upper_bound({s, prec, c, hi});
            if (it == rows_.begin()) return;
            --it;
            if (it->first.s == s && it->first.prec == prec && it->first.cap == c && it->first.n > best.first)
                best = {it->first.n, it->second};
        };
        scan(cap, n);
        scan(-1, cap < 0 ? n : std::min(n, cap));
        return best;
    }
    void insert(const RowKey& k, RealRowPtr row) {
        std::unique_lock lock(mu_);
        rows_.emplace(k, std::move(row));
    }
    void clear() {
        std::unique_lock lock(mu_);
        rows_.clear();
    }

private:
    mutable std::shared_mutex mu_;
    std::map<RowKey, RealRowPtr> rows_;
};

RowCache& row_cache() {
    static RowCache cache;
    return cache;
}

} // namespace

// ---------------------------------------------------------------------------
// ArithmeticMode / params
// ---------------------------------------------------------------------------

void ArithmeticMode::validate() const {
    if (kind == Kind::log_float && precision_bits < 53)
        throw ParameterError("log-float mode needs precision_bits >= 53");
}

std::string ArithmeticMode::describe() const {
    return is_exact() ? "exact" : "log-float(" + std::to_string(precision_bits) + ")";
}

int exact_length_cap() { return g_exact_cap.load(); }

void set_exact_length_cap(int n) {
    require(n >= 0, "exact length cap must be nonnegative");
    g_exact_cap.store(n);
}

double sigma_of(int s) {
    const double r = std::sqrt(static_cast<double>(s));
    return r / (2.0 * r + 1.0);
}

void MotzkinParams::validate() const {
    require(s >= 1, "color count s must be >= 1");
    require(n >= 0, "length n must be >= 0");
    require(m >= 0, "height m must be >= 0");
}

// ---------------------------------------------------------------------------
// WalkCount
// ---------------------------------------------------------------------------

WalkCount WalkCount::from_exact(mpz_class v) {
    WalkCount c;
    c.mode_ = ArithmeticMode::exact();
    c.zero_ = (v == 0);
    c.exact_ = std::move(v);
    return c;
}

WalkCount WalkCount::from_real(Real v) {
    WalkCount c;
    c.mode_ = ArithmeticMode::log_float(static_cast<int>(v.precision()));
    c.zero_ = v.is_zero();
    c.real_ = std::move(v);
    return c;
}

WalkCount WalkCount::structurally_empty(const ArithmeticMode& mode) {
    WalkCount c;
    c.mode_ = mode;
    if (!mode.is_exact()) c.real_ = Real(mode.precision_bits);
    c.empty_ = true;
    return c;
}

double WalkCount::log() const {
    if (zero_) return -std::numeric_limits<double>::infinity();
    if (mode_.is_exact()) {
        long e = 0;
        const double f = mpz_get_d_2exp(&e, exact_.get_mpz_t());
        return std::log(f) + static_cast<double>(e) * std::numbers::ln2;
    }
    return real_.log();
}

double WalkCount::log2() const { return log() / std::numbers::ln2; }

const mpz_class& WalkCount::exact() const {
    if (!mode_.is_exact()) throw ParameterError("count is not in exact-integer mode");
    return exact_;
}

Real WalkCount::to_real(int prec) const {
    if (mode_.is_exact()) return Real(exact_, prec);
    Real r(prec);
    r.assign(real_);
    return r;
}

double WalkCount::to_double() const {
    return mode_.is_exact() ? exact_.get_d() : real_.to_double();
}

std::string WalkCount::to_string() const {
    if (mode_.is_exact()) return exact_.get_str();
    return real_.to_string(17);
}

bool operator==(const WalkCount& a, const WalkCount& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    if (a.mode_.is_exact() && b.mode_.is_exact()) return a.exact_ == b.exact_;
    const int prec = std::max(a.mode_.precision_bits, b.mode_.precision_bits) + 64;
    return mpfr_equal_p(a.to_real(prec).get(), b.to_real(prec).get()) != 0;
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

WalkCount motzkin_count(const MotzkinParams& p, const ArithmeticMode& mode) {
    p.validate();
    mode.validate();
    if (p.m > p.n) return WalkCount::structurally_empty(mode);
    if (mode.is_exact()) {
        check_exact_size(p.n);
        return WalkCount::from_exact(exact_dp(p.n, p.m, p.s));
    }
    if (p.n <= 4096) {
        auto row = real_row(p.n, p.s, mode.precision_bits);
        return WalkCount::from_real((*row)[static_cast<size_t>(p.m)]);
    }
    return WalkCount::from_real(motzkin_real(p.n, p.m, p.s, mode.precision_bits));
}

WalkCount motzkin_count_closed_form(const MotzkinParams& p) {
    p.validate();
    if (p.m > p.n) return WalkCount::structurally_empty(ArithmeticMode::exact());
    check_exact_size(p.n);
    const long n = p.n, m = p.m;
    mpz_class sum = 0, spow = 1;
    for (long i = 0; 2 * i + m <= n; ++i) {
        // (n+1)! / ((i+m+1)! i! (n-2i-m)!) = C(n+1, i) * C(n+1-i, i+m+1)
        sum += spow * binom(n + 1, i) * binom(n + 1 - i, i + m + 1);
        spow *= p.s;
    }
    sum *= (m + 1);
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return WalkCount::from_exact(q);
}

WalkCount dyck_count(int L, int m1, int m2) {
    require(L >= 0 && m1 >= 0 && m2 >= 0, "dyck_count needs L, m1, m2 >= 0");
    const int d = std::abs(m2 - m1);
    if (d > L || (L - (m2 - m1)) % 2 != 0) return WalkCount::from_exact(0);
    mpz_class v = binom(L, (L + d) / 2) - binom(L, (L + m2 + m1) / 2 + 1);
    return WalkCount::from_exact(v);
}

double motzkin_asymptotic(const MotzkinParams& p) {
    p.validate();
    require(p.n >= 1, "asymptotic count needs n >= 1");
    require(p.m >= 1, "asymptotic count is degenerate at m = 0; use the exact count");
    const double s = p.s, n = p.n, m = p.m, sg = p.sigma();
    return std::log(m) - 0.5 * m * std::log(s) - std::log(2.0 * std::sqrt(sg * std::numbers::pi)) -
           1.5 * std::log(n) + n * std::log(std::sqrt(s) / sg) - m * m / (4.0 * sg * n);
}

WalkCount total_motzkin(int n, int s, const ArithmeticMode& mode) {
    return motzkin_count(MotzkinParams{s, n, 0}, mode);
}

mpz_class half_split_total(int n, int s) {
    require(n >= 0 && n % 2 == 0, "half-split identity needs even n");
    require(s >= 1, "color count s must be >= 1");
    check_exact_size(n);
    const auto row = exact_row(n / 2, s);
    mpz_class sum = 0, spow = 1;
    for (const auto& v : row) {
        sum += spow * v * v;
        spow *= s;
    }
    return sum;
}

WalkCount trinomial(int N, int a, int b, int c) {
    require(a >= 0 && b >= 0 && c >= 0, "trinomial parts must be nonnegative");
    require(a + b + c == N, "trinomial parts must sum to N");
    return WalkCount::from_exact(binom(N, a) * binom(N - a, b));
}

double trinomial_gaussian_log(int N, int a, int b, int c) {
    require(a + b + c == N && N > 0, "trinomial parts must sum to N > 0");
    const double third = N / 3.0;
    const double x = a - third, y = b - third, z = c - third;
    return (N + 1) * std::log(3.0) + 0.5 * std::log(3.0) - std::log(2.0 * std::numbers::pi * N) -
           1.5 * (x * x + y * y + z * z) / N;
}

// ---------------------------------------------------------------------------
// Rows
// ---------------------------------------------------------------------------

std::vector<mpz_class> exact_row(int n, int s) {
    require(n >= 0 && s >= 1, "exact_row needs n >= 0, s >= 1");
    check_exact_size(n);
    std::vector<mpz_class> cur(static_cast<size_t>(n) + 2), nxt(static_cast<size_t>(n) + 2);
    cur[0] = 1;
    mpz_class tmp;
    for (int k = 1; k <= n; ++k) {
        for (int h = 0; h <= k; ++h) {
            mpz_class& out = nxt[static_cast<size_t>(h)];
            out = (h <= k - 1) ? cur[static_cast<size_t>(h)] : mpz_class(0);
            if (h >= 1) out += cur[static_cast<size_t>(h - 1)];
            if (h + 1 <= k - 1) {
                mpz_mul_ui(tmp.get_mpz_t(), cur[static_cast<size_t>(h + 1)].get_mpz_t(),
                           static_cast<unsigned long>(s));
                out += tmp;
            }
        }
        std::swap(cur, nxt);
    }
    cur.resize(static_cast<size_t>(n) + 1);
    return cur;
}

int truncation_cap(int max_length, int s, int prec) {
    const double v = 4.0 * sigma_of(s) * max_length * (prec + 64) * std::numbers::ln2;
    return static_cast<int>(std::ceil(std::sqrt(v))) + 16;
}

std::map<int, RealRowPtr> real_rows(const std::vector<int>& lengths, int s, int prec, int cap) {
    require(s >= 1, "color count s must be >= 1");
    require(prec >= 53, "precision must be >= 53 bits");
    std::map<int, RealRowPtr> out;
    std::vector<int> missing;
    for (int k : lengths) {
        require(k >= 0, "row length must be nonnegative");
        const int c = (cap < 0 || cap >= k) ? -1 : cap;
        if (auto hit = row_cache().find({s, prec, c, k})) out[k] = hit;
        else missing.push_back(k);
    }
    if (missing.empty()) return out;
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());

    const int kmax = missing.back();
    const int width = (cap < 0) ? kmax + 1 : std::min(cap, kmax) + 1;
    RealRow cur, nxt;
    cur.reserve(static_cast<size_t>(width));
    nxt.reserve(static_cast<size_t>(width));
    for (int h = 0; h < width; ++h) {
        cur.emplace_back(prec);
        nxt.emplace_back(prec);
    }
    cur[0].assign(1UL);
    int start = 0;
    if (auto [k0, row0] = row_cache().floor(s, prec, cap, missing.front()); row0) {
        start = k0;
        for (size_t h = 0; h < row0->size() && h < cur.size(); ++h) cur[h].assign((*row0)[h]);
    }
    Real tmp(prec);
    size_t next = 0;
    auto emit = [&](int k) {
        const int stored = std::min(k, width - 1) + 1;
        auto row = std::make_shared<RealRow>(cur.begin(), cur.begin() + stored);
        const int c = (cap < 0 || cap >= k) ? -1 : cap;
        row_cache().insert({s, prec, c, k}, row);
        out[k] = row;
    };
    while (next < missing.size() && missing[next] == start) emit(missing[next++]);
    for (int k = start + 1; k <= kmax && next < missing.size(); ++k) {
        real_step(cur, nxt, k, s, width, tmp);
        std::swap(cur, nxt);
        while (next < missing.size() && missing[next] == k) emit(missing[next++]);
    }
    return out;
}

RealRowPtr real_row(int n, int s, int prec) { return real_rows({n}, s, prec).at(n); }

void clear_row_cache() { row_cache().clear(); }

Real motzkin_real(int n, int m, int s, int prec) {
    require(n >= 0 && m >= 0 && s >= 1, "motzkin_real needs n, m >= 0 and s >= 1");
    Real sum(prec);
    if (m > n) return sum;
    const int wp = prec + 32;
    // T_0 = C(n+1, m+1); T_i / T_{i-1} = s (n-2i-m+2)(n-2i-m+1) / ((i+m+1) i).
    Real term(binom(n + 1, m + 1), wp), acc(wp);
    acc += term;
    for (long i = 1; 2 * i + m <= n; ++i) {
        term *= static_cast<unsigned long>(n - 2 * i - m + 2);
        term *= static_cast<unsigned long>(n - 2 * i - m + 1);
        term *= static_cast<unsigned long>(s);
        term /= static_cast<unsigned long>(i + m + 1);
        term /= static_cast<unsigned long>(i);
        acc += term;
    }
    acc *= static_cast<unsigned long>(m + 1);
    acc /= static_cast<unsigned long>(n + 1);
    sum.assign(acc);
    return sum;
}

} // namespace motzkin
