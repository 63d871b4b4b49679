// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief Sweep ranges and tabular CSV/JSON output.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace motzkin {

/// "a:b:step", "a:b" (step 1) and comma lists of either, in input order.
[[nodiscard]] std::vector<long long> parse_int_range(std::string_view text);
[[nodiscard]] std::vector<double> parse_double_range(std::string_view text);

/// Shortest decimal that round-trips to the same double.
[[nodiscard]] std::string format_number(double x);

using Cell = std::variant<long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

/// Header line then one line per row, LF-terminated; strings unquoted.
void write_csv(std::ostream& os, const Table& t);
/// Array of row objects keyed by column name.
void write_json(std::ostream& os, const Table& t);

} // namespace motzkin
