// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graycat {

/// Raised when an enumeration or construction exceeds its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a presheaf cannot be read back as a strict 2-category.
class RecognitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConfluence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedBoundary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when constructed data violates a structural axiom.
class AxiomViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::size_t search_nodes = 200'000'000;
  std::size_t cells = 400'000;
};

}  // namespace graycat
