#pragma once

#include <stdexcept>
#include <string>

namespace bohrlab {

/// Argument outside the mathematical domain of an operation (|z| >= 1, a >= 1, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Caller broke a structural contract (modulus violations, bad vanish order,
/// increasing weights where non-increasing are required).
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

/// Inside the domain but outside the range where a closed form is known.
class UnsupportedRange : public std::out_of_range {
 public:
  explicit UnsupportedRange(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace bohrlab
