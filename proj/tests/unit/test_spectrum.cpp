// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file test_spectrum.cpp
 * @brief Schmidt spectra, entropies, ranks and the RDM oracle.
 */

#include <motzkin/combinatorics.hpp>
#include <motzkin/errors.hpp>
#include <motzkin/spectrum.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace motzkin;

namespace {

double max_gap(const SchmidtSpectrum& spec, const std::vector<int>& sites) {
    const auto rdm = rdm_oracle(spec.geometry.n, spec.geometry.s, sites);
    auto ana = spec.expanded();
    REQUIRE(ana.size() <= rdm.size());
    ana.resize(rdm.size(), 0.0);
    double gap = 0.0;
    for (size_t i = 0; i < rdm.size(); ++i) gap = std::max(gap, std::abs(ana[i] - rdm[i]));
    return gap;
}

std::vector<int> range(int a, int b) {
    std::vector<int> v;
    for (int k = a; k < b; ++k) v.push_back(k);
    return v;
}

} // namespace

TEST_CASE("small cut entropies") {
    const auto ex = ArithmeticMode::exact();
    CHECK(entropies(cut_spectrum(ChainGeometry::cut(2, 1, 1), ex), {1}).S1 == doctest::Approx(1.0));
    const double expect = -2 * (4.0 / 9) * std::log2(4.0 / 9) - (1.0 / 9) * std::log2(1.0 / 9);
    CHECK(entropies(cut_spectrum(ChainGeometry::cut(4, 1, 2), ex), {1}).S1 == doctest::Approx(expect).epsilon(1e-12));
    CHECK(expect == doctest::Approx(1.392).epsilon(1e-3));
    const auto rep = entropies(cut_spectrum(ChainGeometry::cut(10, 2, 3), ex), {0});
    CHECK(rep.at(0) == doctest::Approx(std::log2(15.0)));
}

TEST_CASE("float and exact spectra agree") {
    const auto g = ChainGeometry::cut(200, 3, 70);
    const auto a = entropies(cut_spectrum(g, ArithmeticMode::exact()), {1, 2, kInfinity});
    const auto b = entropies(cut_spectrum(g, ArithmeticMode::log_float(128)), {1, 2, kInfinity});
    for (double k : {1.0, 2.0, kInfinity}) CHECK(a.at(k) == doctest::Approx(b.at(k)).epsilon(1e-13));
}

TEST_CASE("cut spectra equal RDM eigenvalues") {
    for (int s = 1; s <= 2; ++s)
        for (int n = 2; n <= 7; ++n)
            for (int b = 1; b < n && b <= 4; ++b)
                CHECK(max_gap(cut_spectrum(ChainGeometry::cut(n, s, b), ArithmeticMode::exact()), range(0, b)) < 1e-12);
}

TEST_CASE("single-site blocks equal RDM eigenvalues") {
    for (int s = 1; s <= 2; ++s)
        for (int n = 3; n <= 8; ++n)
            for (int b = 1; b + 1 < n; ++b)
                CHECK(max_gap(block_spectrum(ChainGeometry::block(n, s, b, 1), ArithmeticMode::exact()), {b}) < 1e-12);
}

TEST_CASE("class spectrum of a two-site block is the dephased RDM") {
    // n = 4, s = 1, block {1,2}: classes {4/9, 2/9, 2/9, 1/9}; the true
    // eigenvalues mix the eta = 0 and eta = 2 classes.
    const auto spec = block_spectrum(ChainGeometry::block(4, 1, 1, 2), ArithmeticMode::exact());
    auto ev = spec.expanded();
    REQUIRE(ev.size() == 4);
    CHECK(ev[0] == doctest::Approx(4.0 / 9));
    CHECK(ev[3] == doctest::Approx(1.0 / 9));
    const auto rdm = rdm_oracle(4, 1, {1, 2});
    CHECK(rdm[0] == doctest::Approx(0.5068).epsilon(1e-3));
}

TEST_CASE("schmidt ranks") {
    const auto c = schmidt_rank(cut_spectrum(ChainGeometry::cut(8, 2, 3), ArithmeticMode::exact()));
    CHECK(c.direct == 15);
    CHECK(c.closed_form == mpz_class(15));
    CHECK(c.match);
    CHECK(schmidt_rank(cut_spectrum(ChainGeometry::cut(16, 1, 7), ArithmeticMode::exact())).direct == 8);
    const auto blk = schmidt_rank(block_spectrum(ChainGeometry::block(10, 2, 4, 2), ArithmeticMode::exact()));
    CHECK(blk.direct == 17);
    CHECK(blk.closed_form == mpz_class(5));
    CHECK_FALSE(blk.match);
}

TEST_CASE("rdm oracle single site") {
    const auto ev = rdm_oracle(2, 1, {0});
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == doctest::Approx(0.5));
    CHECK(ev[1] == doctest::Approx(0.5));
    CHECK(ev[2] == doctest::Approx(0.0));
}

TEST_CASE("closed-form entropies") {
    const double sg = sigma_of(2);
    const double log2e = std::numbers::log2e;
    const double n = 1e4;
    const double half = 2 * std::sqrt(sg * n / std::numbers::pi) + 0.5 * std::log2(n) +
                        (kEulerGamma - 0.5) * log2e + std::log2(2 * std::sqrt(sg * std::numbers::pi));
    // beta = n/4 gives log2(beta)/2 = log2(n)/2 - 1.
    CHECK(cut_entropy_asymptotic(ChainGeometry::cut(10000, 2, 5000), 1).bits == doctest::Approx(half - 1.0));
    const double L = 1e3;
    const double blk = 4 * std::sqrt(sg * L / std::numbers::pi) + std::log2(L) + (kEulerGamma + 1) / 2 * log2e +
                       std::log2(2 * std::sqrt(std::numbers::pi * sg));
    CHECK(block_entropy_asymptotic(ChainGeometry::block(1000000, 2, 499500, 1000), 1).bits == doctest::Approx(blk));
    const double inf = 1.5 * std::log2(L) + std::log2(2 * std::numbers::e * std::sqrt(std::numbers::pi) * std::pow(sg, 1.5));
    CHECK(block_entropy_asymptotic(ChainGeometry::block(1000000, 2, 499500, 1000), kInfinity).bits ==
          doctest::Approx(inf));
    CHECK_THROWS_AS((void)cut_entropy_asymptotic(ChainGeometry::cut(100, 2, 50), 0.5), ParameterError);
}

TEST_CASE("geometry validation") {
    CHECK_THROWS_AS(ChainGeometry::cut(10, 1, 0).validate_cut(), ParameterError);
    CHECK_THROWS_AS(ChainGeometry::cut(10, 1, 10).validate_cut(), ParameterError);
    CHECK_THROWS_AS(ChainGeometry::block(10, 1, 5, 6).validate_block(), ParameterError);
}
