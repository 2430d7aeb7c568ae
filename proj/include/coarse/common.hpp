#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coarse {

/// Malformed or precondition-violating input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t partial_count)
      : std::runtime_error(what + " (cap exceeded after " + std::to_string(partial_count) + ")"),
        partial_count_(partial_count) {}
  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

/// One violated axiom instance; `witness` holds indices whose meaning depends on the axiom.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

}  // namespace coarse
