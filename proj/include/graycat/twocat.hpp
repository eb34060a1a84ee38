// SPDX-License-Identifier: Apache-2.0
//
// Extensional finite strict 2-categories and strict 2-functors.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graycat/structure.hpp"

namespace graycat {

struct Cell1 {
  int src = 0;
  int tgt = 0;
};

/// A 2-cell between two parallel 1-cells.
struct Cell2 {
  int src = 0;
  int tgt = 0;
};

/// Raw cell and composition data. Composition triples are (lhs, rhs, result)
/// in the argument order of TwoCat::comp1 / vcomp / hcomp.
struct TwoCatTables {
  std::vector<Cell1> c1;
  std::vector<Cell2> c2;
  std::vector<int> id1;
  std::vector<int> id2;
  std::vector<std::array<int, 3>> comp1;
  std::vector<std::array<int, 3>> vcomp;
  std::vector<std::array<int, 3>> hcomp;
  std::vector<std::string> obj_names;
  std::vector<std::string> c1_names;
  std::vector<std::string> c2_names;
};

class TwoCatBuilder;

/// A finite strict 2-category stored as explicit tables.
///
/// comp1(g, f) is "f then g", vcomp(b, a) is "a then b" and hcomp(b, a)
/// takes a : f => f' in Hom(x, y) and b : g => g' in Hom(y, z). All three
/// return -1 when the arguments are not composable.
class TwoCat {
 public:
  int num_objects() const { return static_cast<int>(id1_.size()); }
  int num_cells1() const { return static_cast<int>(c1_.size()); }
  int num_cells2() const { return static_cast<int>(c2_.size()); }

  const Cell1& cell1(int f) const { return c1_[f]; }
  const Cell2& cell2(int a) const { return c2_[a]; }
  int id1(int x) const { return id1_[x]; }
  int id2(int f) const { return id2_[f]; }
  bool is_id1(int f) const { return id1_[c1_[f].src] == f; }
  bool is_id2(int a) const { return id2_[c2_[a].src] == a; }

  int comp1(int g, int f) const { return lookup(comp1_, g, f); }
  int vcomp(int b, int a) const { return lookup(vcomp_, b, a); }
  int hcomp(int b, int a) const { return lookup(hcomp_, b, a); }

  /// 1-cells x -> y, in id order.
  const std::vector<int>& hom(int x, int y) const {
    return hom_[static_cast<std::size_t>(x) * id1_.size() + y];
  }
  /// 2-cells f => g, in id order.
  const std::vector<int>& hom2(int f, int g) const;

  int non_identity_cells1() const { return num_cells1() - num_objects(); }
  int non_identity_cells2() const { return num_cells2() - num_cells1(); }

  const std::string& object_name(int x) const { return obj_names_[x]; }
  const std::string& cell1_name(int f) const { return c1_names_[f]; }
  const std::string& cell2_name(int a) const { return c2_names_[a]; }

  /// Sorts (objects, 1-cells, 2-cells); unary src1, tgt1, src2, tgt2, id1,
  /// id2; binary comp1, vcomp and whiskering. Preserving whiskering and
  /// vertical composition implies preserving hcomp via interchange.
  const FiniteStructure& structure() const { return *structure_; }

  /// Exhaustively checks units, associativity, interchange and boundaries.
  /// Throws AxiomViolation.
  void validate() const;

  /// Adds composites with identities, then validates if `check`.
  static TwoCat from_tables(TwoCatTables t, bool check = true);
  TwoCatTables tables() const;

 private:
  friend class TwoCatBuilder;
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  static int lookup(const std::unordered_map<std::uint64_t, int>& t, int a,
                    int b) {
    auto it = t.find(key(a, b));
    return it == t.end() ? -1 : it->second;
  }

  std::vector<Cell1> c1_;
  std::vector<Cell2> c2_;
  std::vector<int> id1_;
  std::vector<int> id2_;
  std::unordered_map<std::uint64_t, int> comp1_;
  std::unordered_map<std::uint64_t, int> vcomp_;
  std::unordered_map<std::uint64_t, int> hcomp_;
  std::vector<std::vector<int>> hom_;
  std::unordered_map<std::uint64_t, std::vector<int>> hom2_;
  std::vector<std::string> obj_names_;
  std::vector<std::string> c1_names_;
  std::vector<std::string> c2_names_;
  std::shared_ptr<const FiniteStructure> structure_;
};

/// Accumulates cells and composition tables. Identity cells and every
/// composite with an identity are filled in automatically.
class TwoCatBuilder {
 public:
  int add_object(std::string name = {});
  int add_cell1(int src, int tgt, std::string name = {});
  int add_cell2(int src, int tgt, std::string name = {});
  int id1(int x) const { return t_.id1[x]; }
  int id2(int f) const { return t_.id2[f]; }
  const Cell1& cell1(int f) const { return t_.c1[f]; }
  const Cell2& cell2(int a) const { return t_.c2[a]; }
  int num_objects() const { return static_cast<int>(t_.id1.size()); }
  int num_cells1() const { return static_cast<int>(t_.c1.size()); }
  int num_cells2() const { return static_cast<int>(t_.c2.size()); }

  void set_comp1(int g, int f, int gf);
  void set_vcomp(int b, int a, int ba);
  void set_hcomp(int b, int a, int ba);

  /// Finishes the tables and, if `check`, runs TwoCat::validate().
  TwoCat build(bool check = true);

 private:
  TwoCatTables t_;
};

/// A strict 2-functor given by its action on objects, 1-cells and 2-cells.
struct TwoFunctor {
  std::vector<int> obj;
  std::vector<int> cell1;
  std::vector<int> cell2;

  bool operator==(const TwoFunctor&) const = default;

  Assignment as_assignment() const { return {obj, cell1, cell2}; }
  static TwoFunctor from_assignment(const Assignment& h) {
    return {h[0], h[1], h[2]};
  }
};

bool is_functor(const TwoCat& a, const TwoCat& b, const TwoFunctor& f);
/// Throws AxiomViolation if f is not a 2-functor a -> b.
void require_functor(const TwoCat& a, const TwoCat& b, const TwoFunctor& f);
TwoFunctor identity_functor(const TwoCat& a);
/// "f then g".
TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f);

/// Backtracking enumeration of all 2-functors a -> b.
std::vector<TwoFunctor> enumerate_functors(
    const TwoCat& a, const TwoCat& b,
    std::size_t node_budget = Budget{}.search_nodes);
std::size_t count_functors(const TwoCat& a, const TwoCat& b,
                           std::size_t node_budget = Budget{}.search_nodes);
std::optional<TwoFunctor> find_isomorphism(
    const TwoCat& a, const TwoCat& b,
    std::size_t node_budget = Budget{}.search_nodes);
inline bool isomorphic(const TwoCat& a, const TwoCat& b) {
  return find_isomorphism(a, b).has_value();
}

bool is_gaunt(const TwoCat& c);

/// op reverses 1-cells, co reverses 2-cells. Cell ids are unchanged.
TwoCat dual_op(const TwoCat& c);
TwoCat dual_co(const TwoCat& c);

TwoCat terminal();
/// The ordinal [n] as a 2-category with identity 2-cells.
TwoCat ordinal(int n);
TwoCat cartesian_product(const TwoCat& a, const TwoCat& b);
/// Cell ids of the product: (a, b) -> a * size_b + b.
TwoFunctor product_projection(const TwoCat& a, const TwoCat& b, int which);
TwoFunctor product_map(const TwoCat& a, const TwoCat& b, const TwoCat& a2,
                       const TwoCat& b2, const TwoFunctor& f,
                       const TwoFunctor& g);
TwoCat coproduct(const TwoCat& a, const TwoCat& b);
/// Inclusion of a (which = 0) or b (which = 1) into coproduct(a, b).
TwoFunctor coproduct_inclusion(const TwoCat& a, const TwoCat& b, int which);

enum class Truncation { tau1, tau1i, tau0, tau0i };

struct Truncated {
  TwoCat cat;
  /// tau1: the inclusion cat -> C. tau1i, tau0i: the quotient C -> cat.
  /// tau0: the inclusion of the discrete object set.
  TwoFunctor map;
};

Truncated truncate(const TwoCat& c, Truncation kind);

struct BatteryEntry {
  std::string name;
  std::size_t candidate_maps = 0;  // |Hom(P, E)|
  std::size_t cone_maps = 0;       // |Hom(C, E) x_{Hom(A, E)} Hom(D, E)|
  bool injective = false;
  bool pass() const { return injective && candidate_maps == cone_maps; }
};

struct BatteryResult {
  std::vector<BatteryEntry> entries;
  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass()) return false;
    return true;
  }
};

struct Span {
  const TwoCat* a;  // apex
  const TwoCat* c;
  const TwoCat* d;
  TwoFunctor f;  // a -> c
  TwoFunctor g;  // a -> d
};

struct Cocone {
  const TwoCat* p;
  TwoFunctor i;  // c -> p
  TwoFunctor j;  // d -> p
};

struct NamedCat {
  std::string name;
  TwoCat cat;
};

/// Checks Hom(P, E) -> Hom(C, E) x_{Hom(A, E)} Hom(D, E) is a bijection for
/// each E. Throws std::invalid_argument if the cocone does not commute.
BatteryResult verify_pushout_by_battery(const Span& span, const Cocone& cocone,
                                        const std::vector<NamedCat>& battery);

}  // namespace graycat
