// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.cpp
 * @brief Range parsing and table writers.
 */

#include <motzkin/errors.hpp>
#include <motzkin/io.hpp>

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>

namespace motzkin {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <class T>
T parse_scalar(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParameterError("cannot parse number '" + std::string(s) + "'");
    return v;
}

template <class T>
std::vector<T> parse_range(std::string_view text) {
    std::vector<T> out;
    for (auto item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            out.push_back(parse_scalar<T>(parts[0]));
            continue;
        }
        if (parts.size() > 3) throw ParameterError("range '" + std::string(item) + "' has too many ':'");
        const T a = parse_scalar<T>(parts[0]);
        const T b = parse_scalar<T>(parts[1]);
        const T step = parts.size() == 3 ? parse_scalar<T>(parts[2]) : T(1);
        if (!(step > T(0))) throw ParameterError("range step must be positive in '" + std::string(item) + "'");
        if (b < a) throw ParameterError("range end precedes start in '" + std::string(item) + "'");
        const auto count = static_cast<long long>(std::floor(static_cast<double>(b - a) / static_cast<double>(step) + 1e-9));
        if (count > 10'000'000) throw ParameterError("range '" + std::string(item) + "' is too long");
        for (long long i = 0; i <= count; ++i) out.push_back(static_cast<T>(a + static_cast<T>(i) * step));
    }
    if (out.empty()) throw ParameterError("empty range");
    return out;
}

nlohmann::json to_json(const Cell& c) {
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    if (const auto* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d)) return *d;
        return format_number(*d);
    }
    return std::get<std::string>(c);
}

} // namespace

std::vector<long long> parse_int_range(std::string_view text) { return parse_range<long long>(text); }

std::vector<double> parse_double_range(std::string_view text) { return parse_range<double>(text); }

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void Table::add(std::vector<Cell> row) {
    require(row.size() == columns.size(), "table row width does not match the header");
    rows.push_back(std::move(row));
}

void write_csv(std::ostream& os, const Table& t) {
    for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>) os << format_number(v);
                    else os << v;
                },
                row[i]);
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = to_json(row[i]);
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
}

} // namespace motzkin
