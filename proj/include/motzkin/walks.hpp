// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file walks.hpp
 * @brief Explicit s-colored Motzkin walks: validation, enumeration, profiles.
 *
 * A step value v in [-s, s]: 0 is flat, +k an up step of color k, -k a down
 * step of color k. Walk positions are 0-indexed.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace motzkin {

using Step = std::int8_t;

struct Walk {
    int s = 1;
    std::vector<Step> steps;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(steps.size()); }
    friend bool operator==(const Walk&, const Walk&) = default;
};

enum class Violation { none, below_axis, color_mismatch, unmatched_at_end, bad_step };

struct ValidityReport {
    bool valid = true;
    std::optional<int> first_violation;
    Violation kind = Violation::none;
};

[[nodiscard]] ValidityReport validate(const Walk& walk);
[[nodiscard]] const char* to_string(Violation v);

/// Default enumeration guard on M_n.
inline constexpr std::uint64_t kWalkGuard = 100'000'000;

/// Throws GuardError when M_n exceeds `guard`.
void check_walk_guard(int n, int s, std::uint64_t guard = kWalkGuard);

/**
 * @brief Visit every valid walk of length n in lexicographic step order
 *        (-s < ... < 0 < ... < s). The visited walk is reused between calls.
 */
void for_each_walk(int n, int s, const std::function<void(const Walk&)>& visit,
                   std::uint64_t guard = kWalkGuard);
[[nodiscard]] std::vector<Walk> enumerate_walks(int n, int s, std::uint64_t guard = kWalkGuard);

/**
 * @brief Unmatched structure of a walk around the segment [cut_start, cut_end).
 *
 * prefix_up_colors lists the m unmatched ups of the prefix (bottom to top);
 * down_colors the p segment downs closing them (in walk order); up_colors the
 * q segment ups left open (bottom to top).
 */
struct MatchProfile {
    int m = 0;
    int p = 0;
    int q = 0;
    std::vector<int> prefix_up_colors;
    std::vector<int> up_colors;
    std::vector<int> down_colors;
};

[[nodiscard]] MatchProfile match_profile(const Walk& walk, int cut_start, int cut_end);

struct ProfileClass {
    int m = 0;
    int p = 0;
    int q = 0;
    auto operator<=>(const ProfileClass&) const = default;
};

/// Exact walk counts per (m, p, q) class for the segment [cut_start, cut_end).
/// A single cut at b is the segment [b, b): every class has p = q = 0.
[[nodiscard]] std::map<ProfileClass, std::uint64_t> profile_histogram(int n, int s, int cut_start,
                                                                     int cut_end,
                                                                     std::uint64_t guard = kWalkGuard);

/// "1,0,-1" per walk.
[[nodiscard]] std::string format_walk(const Walk& walk);
[[nodiscard]] Walk parse_walk(std::string_view line, int s);
void write_walks(std::ostream& os, const std::vector<Walk>& walks);
[[nodiscard]] std::vector<Walk> read_walks(std::istream& is, int s);

/// Mixed-radix index of a walk in the (2s+1)^n product basis; site 0 is the
/// most significant digit, digit = step + s.
[[nodiscard]] std::uint64_t basis_index(const Walk& walk);

} // namespace motzkin
