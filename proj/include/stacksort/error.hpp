#pragma once

#include <stdexcept>
#include <string>

namespace stacksort {

// Malformed or structurally invalid input (bad word syntax, nesting
// violation, invalid tuple, lambda that does not fit r, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A formula evaluated outside the region where it is defined.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Broken internal invariant, e.g. a counting formula whose prefactor did not
// divide exactly.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace stacksort
