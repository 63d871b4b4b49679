// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file walks.cpp
 * @brief Stack-based walk validation and depth-first enumeration.
 */

#include <motzkin/combinatorics.hpp>
#include <motzkin/errors.hpp>
#include <motzkin/walks.hpp>

#include <charconv>
#include <istream>
#include <ostream>

namespace motzkin {

ValidityReport validate(const Walk& walk) {
    std::vector<int> stack;
    stack.reserve(walk.steps.size());
    for (int i = 0; i < walk.size(); ++i) {
        const int v = walk.steps[static_cast<size_t>(i)];
        if (v < -walk.s || v > walk.s) return {false, i, Violation::bad_step};
        if (v > 0) {
            stack.push_back(v);
        } else if (v < 0) {
            if (stack.empty()) return {false, i, Violation::below_axis};
            if (stack.back() != -v) return {false, i, Violation::color_mismatch};
            stack.pop_back();
        }
    }
    if (!stack.empty()) return {false, walk.size(), Violation::unmatched_at_end};
    return {};
}

const char* to_string(Violation v) {
    switch (v) {
    case Violation::none: return "none";
    case Violation::below_axis: return "below-axis";
    case Violation::color_mismatch: return "color-mismatch";
    case Violation::unmatched_at_end: return "unmatched-at-end";
    case Violation::bad_step: return "bad-step";
    }
    return "unknown";
}

void check_walk_guard(int n, int s, std::uint64_t guard) {
    require(n >= 0 && s >= 1, "walk enumeration needs n >= 0, s >= 1");
    // M_n >= 2^(n/2) for every s, so long chains are refused without counting.
    if (n > 128) throw GuardError("walk enumeration refused: n = " + std::to_string(n) + " is too long");
    const mpz_class total = total_motzkin(n, s, ArithmeticMode::exact()).exact();
    if (total > mpz_class(std::to_string(guard)))
        throw GuardError("walk enumeration refused: M_n = " + total.get_str() + " exceeds guard " +
                         std::to_string(guard));
}

namespace {

struct Enumerator {
    int n;
    int s;
    const std::function<void(const Walk&)>& visit;
    Walk walk;
    std::vector<int> stack;

    void recurse(int pos) {
        if (pos == n) {
            visit(walk);
            return;
        }
        const int height = static_cast<int>(stack.size());
        const int remaining = n - pos;
        auto& slot = walk.steps[static_cast<size_t>(pos)];
        if (height >= 1) {
            const int c = stack.back();
            slot = static_cast<Step>(-c);
            stack.pop_back();
            recurse(pos + 1);
            stack.push_back(c);
        }
        if (height <= remaining - 1) {
            slot = 0;
            recurse(pos + 1);
        }
        if (height + 1 <= remaining - 1) {
            for (int c = 1; c <= s; ++c) {
                slot = static_cast<Step>(c);
                stack.push_back(c);
                recurse(pos + 1);
                stack.pop_back();
            }
        }
    }
};

} // namespace

void for_each_walk(int n, int s, const std::function<void(const Walk&)>& visit, std::uint64_t guard) {
    check_walk_guard(n, s, guard);
    Enumerator e{n, s, visit, Walk{s, std::vector<Step>(static_cast<size_t>(n), 0)}, {}};
    e.stack.reserve(static_cast<size_t>(n));
    e.recurse(0);
}

std::vector<Walk> enumerate_walks(int n, int s, std::uint64_t guard) {
    std::vector<Walk> out;
    for_each_walk(n, s, [&](const Walk& w) { out.push_back(w); }, guard);
    return out;
}

MatchProfile match_profile(const Walk& walk, int cut_start, int cut_end) {
    require(0 <= cut_start && cut_start <= cut_end && cut_end <= walk.size(),
            "match_profile needs 0 <= cut_start <= cut_end <= n");
    require(validate(walk).valid, "match_profile needs a valid walk");
    MatchProfile prof;
    std::vector<int> prefix;
    for (int i = 0; i < cut_start; ++i) {
        const int v = walk.steps[static_cast<size_t>(i)];
        if (v > 0) prefix.push_back(v);
        else if (v < 0) prefix.pop_back();
    }
    prof.m = static_cast<int>(prefix.size());
    prof.prefix_up_colors = prefix;
    std::vector<int> open;
    for (int i = cut_start; i < cut_end; ++i) {
        const int v = walk.steps[static_cast<size_t>(i)];
        if (v > 0) {
            open.push_back(v);
        } else if (v < 0) {
            if (!open.empty()) {
                open.pop_back();
            } else {
                prof.down_colors.push_back(-v);
                prefix.pop_back();
            }
        }
    }
    prof.p = static_cast<int>(prof.down_colors.size());
    prof.q = static_cast<int>(open.size());
    prof.up_colors = open;
    return prof;
}

std::map<ProfileClass, std::uint64_t> profile_histogram(int n, int s, int cut_start, int cut_end,
                                                       std::uint64_t guard) {
    require(0 <= cut_start && cut_start <= cut_end && cut_end <= n,
            "profile_histogram needs 0 <= cut_start <= cut_end <= n");
    std::map<ProfileClass, std::uint64_t> hist;
    for_each_walk(
        n, s,
        [&](const Walk& w) {
            // Inline profile without the validity re-check.
            int m = 0, p = 0, open = 0;
            for (int i = 0; i < cut_start; ++i) {
                const int v = w.steps[static_cast<size_t>(i)];
                m += (v > 0) - (v < 0);
            }
            for (int i = cut_start; i < cut_end; ++i) {
                const int v = w.steps[static_cast<size_t>(i)];
                if (v > 0) ++open;
                else if (v < 0) (open > 0 ? --open : ++p);
            }
            ++hist[ProfileClass{m, p, open}];
        },
        guard);
    return hist;
}

std::string format_walk(const Walk& walk) {
    std::string out;
    for (size_t i = 0; i < walk.steps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(static_cast<int>(walk.steps[i]));
    }
    return out;
}

Walk parse_walk(std::string_view line, int s) {
    Walk w{s, {}};
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) return w;
    size_t pos = 0;
    while (pos <= line.size()) {
        const size_t comma = line.find(',', pos);
        const auto tok = line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos);
        int v = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || v < -s || v > s)
            throw ParameterError("malformed walk step '" + std::string(tok) + "'");
        w.steps.push_back(static_cast<Step>(v));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return w;
}

void write_walks(std::ostream& os, const std::vector<Walk>& walks) {
    for (const auto& w : walks) os << format_walk(w) << '\n';
}

std::vector<Walk> read_walks(std::istream& is, int s) {
    std::vector<Walk> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.push_back(parse_walk(line, s));
    }
    return out;
}

std::uint64_t basis_index(const Walk& walk) {
    const std::uint64_t d = 2 * static_cast<std::uint64_t>(walk.s) + 1;
    std::uint64_t idx = 0;
    for (Step v : walk.steps) idx = idx * d + static_cast<std::uint64_t>(v + walk.s);
    return idx;
}

} // namespace motzkin
