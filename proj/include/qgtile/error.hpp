#pragma once

#include <stdexcept>
#include <string>

namespace qgtile {

// Malformed or out-of-domain input (non-finite energies, bad tables, unknown names).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Operation requested for a tiling that has no attachment table or no closed form.
class UnsupportedTiling : public std::domain_error {
 public:
  explicit UnsupportedTiling(const std::string& what) : std::domain_error(what) {}
};

// A documented precondition of an operation does not hold (e.g. potential not even).
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qgtile
