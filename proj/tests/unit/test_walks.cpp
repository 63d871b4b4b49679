// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file test_walks.cpp
 * @brief Walk validity, enumeration and segment profiles.
 */

#include <motzkin/combinatorics.hpp>
#include <motzkin/walks.hpp>

#include <doctest.h>

#include <sstream>

using namespace motzkin;

TEST_CASE("validity rules") {
    CHECK(validate(Walk{1, {1, 0, -1}}).valid);
    const auto mismatch = validate(Walk{2, {1, -2}});
    CHECK_FALSE(mismatch.valid);
    CHECK(mismatch.kind == Violation::color_mismatch);
    CHECK(mismatch.first_violation == 1);
    const auto below = validate(Walk{1, {-1, 1}});
    CHECK(below.kind == Violation::below_axis);
    CHECK(below.first_violation == 0);
    CHECK(validate(Walk{1, {1, 0}}).kind == Violation::unmatched_at_end);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_walks(2, 1).size() == 2);
    CHECK(enumerate_walks(2, 2).size() == 3);
    CHECK(enumerate_walks(1, 3).size() == 1);
    for (int s = 1; s <= 3; ++s)
        for (int n = 0; n <= 8; ++n) {
            std::uint64_t k = 0;
            for_each_walk(n, s, [&](const Walk& w) {
                CHECK(validate(w).valid);
                ++k;
            });
            CHECK(mpz_class(static_cast<unsigned long>(k)) ==
                  motzkin_count({s, n, 0}, ArithmeticMode::exact()).exact());
        }
}

TEST_CASE("match profile of a prefix of ups") {
    const Walk w{1, {1, 1, 0, -1, -1}};
    const auto p = match_profile(w, 0, 2);
    CHECK(p.p == 0);
    CHECK(p.q == 2);
    CHECK(p.up_colors == std::vector<int>{1, 1});
}

TEST_CASE("cut histogram reproduces the half-split identity") {
    const auto hist = profile_histogram(8, 2, 4, 4);
    std::uint64_t total = 0;
    for (const auto& [cls, count] : hist) {
        CHECK(cls.p == 0);
        CHECK(cls.q == 0);
        total += count;
    }
    CHECK(total == motzkin_count({2, 8, 0}, ArithmeticMode::exact()).exact().get_ui());
}

TEST_CASE("text round trip and basis index") {
    const auto walks = enumerate_walks(4, 2);
    std::stringstream ss;
    write_walks(ss, walks);
    CHECK(read_walks(ss, 2) == walks);
    CHECK(parse_walk(format_walk(walks.back()), 2) == walks.back());
    CHECK(basis_index(Walk{1, {0, 0}}) == 4);
    CHECK(basis_index(Walk{1, {1, -1}}) == 6);
}
