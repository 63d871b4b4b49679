// Copyright 2026 The Motzkin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file errors.hpp
 * @brief Exception types shared by all modules.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace motzkin {

/// Invalid argument or geometry. Maps to CLI exit code 2.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Tractability guard refused the request. Maps to CLI exit code 3.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw ParameterError(what);
}

} // namespace motzkin
