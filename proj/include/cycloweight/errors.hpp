/*
 * Copyright 2026 The cycloweight authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cycloweight {

/// Rejected (p, m, k) or a malformed request. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
  public:
    enum class Kind {
        p_not_odd_prime,
        m_even,
        m_too_small,
        k_not_positive,
        gcd_not_one,
        field_too_large,
    };

    ValidationError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

/// A sweep or enumeration was asked to visit more states than the configured
/// budget allows. Carries the budget that would be required.
class BudgetError : public std::runtime_error {
  public:
    BudgetError(std::int64_t required, std::int64_t budget, const std::string& what)
        : std::runtime_error(what), required_(required), budget_(budget) {}
    std::int64_t required() const { return required_; }
    std::int64_t budget() const { return budget_; }

  private:
    std::int64_t required_;
    std::int64_t budget_;
};

/// A value produced by the implementation violates a proven structural fact
/// (a sum failed to classify, a moment came out irrational, a division that
/// must be exact was not). Always a bug or a genuine mismatch with the
/// closed forms, never a user error.
class InvariantError : public std::logic_error {
  public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cycloweight
