#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace centlab {

enum class ErrorKind {
  NotAssociative,
  OrderIncompatible,
  MalformedTable,
  NotMember,
  NotSubgroup,
  NotPairwiseNoncommuting,
  BadParameter,
  OrderTooLarge,
  CeilingExceeded,
  UnknownTheoremId,
  SyntaxError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library. `witness()` carries the indices
// that triggered the failure, e.g. the (i, j, k) generator triple for
// NotAssociative, or the 1-based (line, column) for SyntaxError.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what,
        std::vector<std::size_t> witness = {})
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::vector<std::size_t> const& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace centlab
