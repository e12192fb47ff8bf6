// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace partsusy {

/// Input that violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Valid input that an operation has no method for (e.g. tabulated tails).
class Unsupported : public std::runtime_error {
public:
    explicit Unsupported(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical procedure failed to meet its own convergence criterion.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace partsusy
