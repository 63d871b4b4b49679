// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file test_combinatorics.cpp
 * @brief Walk counts in both arithmetic modes and their cross-checks.
 */

#include <motzkin/combinatorics.hpp>
#include <motzkin/errors.hpp>

#include <doctest.h>

#include <cmath>

using namespace motzkin;

namespace {

mpz_class exact_count(int s, int n, int m) { return motzkin_count({s, n, m}, ArithmeticMode::exact()).exact(); }

} // namespace

TEST_CASE("motzkin_count small values") {
    CHECK(exact_count(1, 4, 0) == 9);
    CHECK(exact_count(2, 3, 0) == 7);
    CHECK(exact_count(3, 5, 5) == 1);
    CHECK(exact_count(2, 2, 1) == 2);
    CHECK(exact_count(1, 6, 0) == 51);
    CHECK(exact_count(1, 3, 4) == 0);
    CHECK(motzkin_count({1, 3, 4}, ArithmeticMode::exact()).is_structurally_empty());
}

TEST_CASE("closed form agrees with the DP") {
    CHECK(motzkin_count_closed_form({1, 3, 1}).exact() == 5);
    CHECK(motzkin_count_closed_form({2, 2, 2}).exact() == 1);
    for (int s = 1; s <= 3; ++s)
        for (int n = 0; n <= 12; ++n)
            for (int m = 0; m <= n; ++m) CHECK(motzkin_count_closed_form({s, n, m}).exact() == exact_count(s, n, m));
}

TEST_CASE("dyck and trinomial counts") {
    CHECK(dyck_count(2, 0, 0).exact() == 1);
    CHECK(dyck_count(1, 0, 1).exact() == 1);
    CHECK(dyck_count(4, 0, 0).exact() == 2);
    CHECK(dyck_count(3, 0, 0).exact() == 0);
    CHECK(trinomial(3, 1, 1, 1).exact() == 6);
    CHECK(trinomial(4, 2, 2, 0).exact() == 6);
    CHECK(trinomial(6, 3, 2, 1).exact() == 60);
    CHECK_THROWS_AS((void)trinomial(5, 1, 1, 1), ParameterError);
}

TEST_CASE("total count and half-split identity") {
    CHECK(total_motzkin(2, 2, ArithmeticMode::exact()).exact() == 3);
    CHECK(total_motzkin(0, 5, ArithmeticMode::exact()).exact() == 1);
    for (int s = 1; s <= 3; ++s)
        for (int n = 0; n <= 40; n += 2) CHECK(half_split_total(n, s) == exact_count(s, n, 0));
}

TEST_CASE("log-float mode tracks exact counts") {
    for (int s : {1, 2, 5}) {
        const auto ex = motzkin_count({s, 600, 17}, ArithmeticMode::exact());
        const auto fl = motzkin_count({s, 600, 17}, ArithmeticMode::log_float(128));
        CHECK(std::abs(ex.log() - fl.log()) < 1e-12);
        const Real series = motzkin_real(600, 17, s, 128);
        CHECK(std::abs(series.log() - ex.log()) < 1e-12);
    }
}

TEST_CASE("float rows match exact rows") {
    const auto ex = exact_row(300, 2);
    const auto rows = real_rows({300}, 2, 160);
    const auto& fl = *rows.at(300);
    for (int m : {0, 1, 30, 299, 300}) {
        const Real e(ex[static_cast<size_t>(m)], 160);
        CHECK(std::abs(fl[static_cast<size_t>(m)].log() - e.log()) < 1e-20);
    }
}

TEST_CASE("asymptotic count contract") {
    CHECK_THROWS_AS((void)motzkin_asymptotic({2, 100, 0}), ParameterError);
    // The stated form undercounts by the factor sigma; the ratio tends to 1/sigma.
    const double sg = sigma_of(2);
    const double ratio =
        std::exp(motzkin_count({2, 4000, 40}, ArithmeticMode::exact()).log() - motzkin_asymptotic({2, 4000, 40}));
    CHECK(ratio * sg == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("parameter validation and guards") {
    CHECK_THROWS_AS((void)motzkin_count({0, 3, 0}, ArithmeticMode::exact()), ParameterError);
    CHECK_THROWS_AS((void)motzkin_count({1, -1, 0}, ArithmeticMode::exact()), ParameterError);
    CHECK_THROWS_AS((void)motzkin_count({1, exact_length_cap() + 1, 0}, ArithmeticMode::exact()), GuardError);
    CHECK(sigma_of(1) == doctest::Approx(1.0 / 3.0));
}
