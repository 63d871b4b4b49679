// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file numerics.hpp
 * @brief Compensated summation, log-sum-exp, least-squares fits and a
 *        deterministic parallel-for.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <span>
#include <thread>
#include <vector>

namespace motzkin {

/// Neumaier-compensated double accumulator.
class NeumaierSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
        else comp_ += (x - t) + sum_;
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// log(sum exp(x_i)) with a running max shift and compensated mantissa sum.
class LogSumExp {
public:
    void add(double x) noexcept {
        if (x == -std::numeric_limits<double>::infinity()) return;
        if (x > shift_) {
            if (shift_ != -std::numeric_limits<double>::infinity()) {
                const double scale = std::exp(shift_ - x);
                NeumaierSum rescaled;
                rescaled.add(acc_.value() * scale);
                acc_ = rescaled;
            }
            shift_ = x;
        }
        acc_.add(std::exp(x - shift_));
    }
    [[nodiscard]] double value() const noexcept {
        if (shift_ == -std::numeric_limits<double>::infinity()) return shift_;
        return shift_ + std::log(acc_.value());
    }

private:
    double shift_ = -std::numeric_limits<double>::infinity();
    NeumaierSum acc_;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

/// Ordinary least squares y = intercept + slope * x.
[[nodiscard]] inline LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

/// Fit log|y| = c + slope log x.
[[nodiscard]] inline LinearFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    std::vector<double> lx(x.size()), ly(y.size());
    for (size_t i = 0; i < x.size(); ++i) {
        lx[i] = std::log(x[i]);
        ly[i] = std::log(std::abs(y[i]));
    }
    return fit_line(lx, ly);
}

/// Default worker count for sweeps.
[[nodiscard]] inline int default_threads() {
    return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * @brief Run body(i) for i in [0, count) on up to `threads` workers.
 *
 * Work is split into a fixed interleaving, so callers that write results to
 * slot i get output independent of the thread count. Exceptions from
 * workers are rethrown on the caller's thread (first one wins).
 */
template <class Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace motzkin
