// SPDX-License-Identifier: Apache-2.0
//
// Finite strict double categories.
//
// A square has a top and bottom horizontal arrow and a left and right
// vertical arrow. Vertical composition stacks squares, horizontal
// composition places them side by side. In squares(C) a square with top F,
// left f, right g and bottom G is a 2-cell g.F => G.f of C.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "graycat/gray.hpp"
#include "graycat/twocat.hpp"

namespace graycat {

struct SquareCell {
  int top = 0;
  int bottom = 0;
  int left = 0;
  int right = 0;
  bool operator==(const SquareCell&) const = default;
};

/// Raw data. Composition triples are (second, first, result): for vertical
/// composition "first" is the upper one, for horizontal the left one.
struct DoubleCatTables {
  int objects = 0;
  std::vector<std::array<int, 2>> vert;   // (src, tgt)
  std::vector<std::array<int, 2>> horiz;  // (src, tgt)
  std::vector<SquareCell> squares;
  std::vector<int> vid;     // per object
  std::vector<int> hid;     // per object
  std::vector<int> sq_vid;  // per horizontal: identity square F => F
  std::vector<int> sq_hid;  // per vertical: identity square f | f
  std::vector<std::array<int, 3>> vcomp_v;
  std::vector<std::array<int, 3>> hcomp_h;
  std::vector<std::array<int, 3>> vcomp_s;
  std::vector<std::array<int, 3>> hcomp_s;
  std::vector<std::string> obj_names;
  std::vector<std::string> vert_names;
  std::vector<std::string> horiz_names;
};

class DoubleCat {
 public:
  /// Throws AxiomViolation if `check` and an axiom fails.
  static DoubleCat from_tables(DoubleCatTables t, bool check = true);

  const DoubleCatTables& tables() const { return t_; }
  int num_objects() const { return t_.objects; }
  int num_vert() const { return static_cast<int>(t_.vert.size()); }
  int num_horiz() const { return static_cast<int>(t_.horiz.size()); }
  int num_squares() const { return static_cast<int>(t_.squares.size()); }
  const SquareCell& square(int s) const { return t_.squares[s]; }

  /// -1 when not composable. "a then b" in each case.
  int vcomp_v(int b, int a) const { return lookup(vv_, b, a); }
  int hcomp_h(int b, int a) const { return lookup(hh_, b, a); }
  int vcomp_s(int b, int a) const { return lookup(vs_, b, a); }
  int hcomp_s(int b, int a) const { return lookup(hs_, b, a); }

  bool is_vid(int f) const { return t_.vid[t_.vert[f][0]] == f; }
  bool is_hid(int f) const { return t_.hid[t_.horiz[f][0]] == f; }
  /// The vertical identity of a horizontal arrow or the horizontal identity
  /// of a vertical arrow.
  bool is_identity_square(int s) const;

  /// Sorts (objects, verticals, horizontals, squares).
  const FiniteStructure& structure() const { return *structure_; }

  /// Exhaustive check of units, associativity, boundaries and interchange.
  void validate() const;

  /// |P_{n,m}|: n x m grids of composable squares (n horizontal), counted by
  /// iterated fiber products.
  std::size_t level_count(int n, int m) const;

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  static int lookup(const std::unordered_map<std::uint64_t, int>& m, int a,
                    int b) {
    auto it = m.find(key(a, b));
    return it == m.end() ? -1 : it->second;
  }

  DoubleCatTables t_;
  std::unordered_map<std::uint64_t, int> vv_, hh_, vs_, hs_;
  std::shared_ptr<const FiniteStructure> structure_;
};

/// A double functor as a per-sort assignment (objects, verticals,
/// horizontals, squares).
using DoubleFunctor = Assignment;

bool is_double_functor(const DoubleCat& p, const DoubleCat& q,
                       const DoubleFunctor& f);
DoubleFunctor identity_double_functor(const DoubleCat& p);
/// "f then g".
DoubleFunctor compose(const DoubleFunctor& g, const DoubleFunctor& f);

/// Squares (lax commuting squares) of a 2-category.
DoubleCat squares(const TwoCat& c);

enum class Direction { h, v };
/// C_h or C_v.
DoubleCat inclusion(const TwoCat& c, Direction kind);
/// The double functor induced by a 2-functor between inclusions.
DoubleFunctor inclusion_map(const TwoCat& a, const TwoCat& b,
                            const TwoFunctor& f, Direction kind);
/// C_v -> squares(C) or C_h -> squares(C).
DoubleFunctor inclusion_into_squares(const TwoCat& c, Direction kind);

/// Directed Cech nerve of f : C -> D, where C has only identity 2-cells,
/// built level-wise from maps out of lattice-path tensors.
DoubleCat cech_nerve(const TwoCat& c, const TwoCat& d, const TwoFunctor& f);

enum class DoubleDual { hop, vop, t };
DoubleCat dualize(const DoubleCat& p, DoubleDual kind);

/// Componentwise; element (x, y) has id x * size_q + y in each sort.
DoubleCat product(const DoubleCat& p, const DoubleCat& q);
DoubleFunctor product_map(const DoubleCat& p, const DoubleCat& q,
                          const DoubleCat& p2, const DoubleCat& q2,
                          const DoubleFunctor& f, const DoubleFunctor& g);
DoubleCat terminal_double();
/// <n, m> = [n]_h x [m]_v.
DoubleCat grid(int n, int m);

std::vector<DoubleFunctor> enumerate_double_functors(
    const DoubleCat& p, const DoubleCat& q,
    std::size_t node_budget = Budget{}.search_nodes);
std::size_t count_double_functors(
    const DoubleCat& p, const DoubleCat& q,
    std::size_t node_budget = Budget{}.search_nodes);
bool isomorphic(const DoubleCat& p, const DoubleCat& q);

enum class Completeness { locally, fully };
bool is_complete(const DoubleCat& p, Completeness kind);

struct AdjunctionCounts {
  std::size_t double_side = 0;  // |Hom(C_h x D_v, squares(E))|
  std::size_t tensor_side = 0;  // |Hom(C (x) D, E)|
  bool pass() const { return double_side == tensor_side; }
};

AdjunctionCounts verify_adjunction_counts(const TwoCat& c, const TwoCat& d,
                                          const TwoCat& e);

struct NamedDouble {
  std::string name;
  DoubleCat cat;
};

/// squares(E), E_v and E_h for E in {[0], [1], [2], [1;1]}.
std::vector<NamedDouble> default_double_battery();

struct DoubleSpan {
  const DoubleCat* a;
  const DoubleCat* c;
  const DoubleCat* d;
  DoubleFunctor f;
  DoubleFunctor g;
};

struct DoubleCocone {
  const DoubleCat* p;
  DoubleFunctor i;
  DoubleFunctor j;
};

BatteryResult verify_double_pushout(const DoubleSpan& span,
                                    const DoubleCocone& cocone,
                                    const std::vector<NamedDouble>& battery);

/// tau0[n]_h x [m]_v x tau1[k;l]_v -> <n,m> x [k;l]_v over
/// tau0[n]_h x tau1[k;l]_v, with candidate [n;m]_h x [k;l]_v.
BatteryResult verify_step3(int n, int m, int k, int l,
                           const std::vector<NamedDouble>& battery);

}  // namespace graycat
