// SPDX-License-Identifier: Apache-2.0
//
// Finite many-sorted structures with total unary and partial binary
// operations, and a backtracking search for structure-preserving maps.
// Strict 2-functors, double functors and natural transformations of
// set-valued presheaves are all homomorphisms of such structures.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graycat/error.hpp"

namespace graycat {

struct FiniteStructure {
  struct Unary {
    int from = 0;
    int to = 0;
    std::vector<int> table;  // table[x] = image, every entry defined
  };
  struct Binary {
    int lhs = 0;
    int rhs = 0;
    int to = 0;
    std::vector<std::array<int, 3>> entries;  // (a, b) -> c
  };

  std::vector<int> sizes;
  std::vector<Unary> unary;
  std::vector<Binary> binary;

  int add_sort(int size) {
    sizes.push_back(size);
    return static_cast<int>(sizes.size()) - 1;
  }
  int add_unary(int from, int to, std::vector<int> table) {
    unary.push_back({from, to, std::move(table)});
    return static_cast<int>(unary.size()) - 1;
  }
  int add_binary(int lhs, int rhs, int to,
                 std::vector<std::array<int, 3>> entries) {
    binary.push_back({lhs, rhs, to, std::move(entries)});
    return static_cast<int>(binary.size()) - 1;
  }

  /// Throws std::invalid_argument if `other` has a different signature.
  void require_same_signature(const FiniteStructure& other) const;
};

/// Per-sort element maps.
using Assignment = std::vector<std::vector<int>>;

struct SearchOptions {
  bool injective = false;
  /// Sort processing order; empty means 0, 1, 2, ...
  std::vector<int> sort_order;
  /// Optional partial assignment; -1 entries are free.
  const Assignment* pinned = nullptr;
  std::size_t node_budget = Budget{}.search_nodes;
};

/// Enumerates all homomorphisms src -> tgt. The visitor returns false to stop.
/// Returns the number of homomorphisms visited.
std::size_t search_homomorphisms(
    const FiniteStructure& src, const FiniteStructure& tgt,
    const SearchOptions& options,
    const std::function<bool(const Assignment&)>& visit);

std::vector<Assignment> all_homomorphisms(const FiniteStructure& src,
                                          const FiniteStructure& tgt,
                                          const SearchOptions& options = {});

std::size_t count_homomorphisms(const FiniteStructure& src,
                                const FiniteStructure& tgt,
                                const SearchOptions& options = {});

/// Checks that `h` is a homomorphism (all operations preserved).
bool is_homomorphism(const FiniteStructure& src, const FiniteStructure& tgt,
                     const Assignment& h);

/// A bijective homomorphism whose inverse is again a homomorphism.
std::optional<Assignment> find_isomorphism(const FiniteStructure& a,
                                           const FiniteStructure& b,
                                           std::size_t node_budget =
                                               Budget{}.search_nodes);

/// Flattens an assignment to a single vector (used as a hash key).
std::vector<int> flatten(const Assignment& h);

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace graycat
