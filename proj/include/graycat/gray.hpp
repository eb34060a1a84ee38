// SPDX-License-Identifier: Apache-2.0
//
// The oplax Gray tensor product of finite gaunt 2-categories.
//
// Orientation: in A (x) B the first factor is horizontal. The generating
// 2-cell f (x) g of two 1-cells goes from "f first, then g" to "g first,
// then f".
#pragma once

#include <string>
#include <vector>

#include "graycat/computad.hpp"
#include "graycat/presheaf.hpp"
#include "graycat/shapes.hpp"
#include "graycat/twocat.hpp"

namespace graycat {

/// [n] (x) [m] built directly from lattice paths.
struct SimplexTensor {
  struct Path {
    int i = 0;  // start column
    int j = 0;  // start row
    std::string steps;  // over {H, V}
  };

  int n = 0;
  int m = 0;
  TwoCat cat;
  std::vector<Path> paths;  // one per 1-cell
  int object(int i, int j) const { return i * (m + 1) + j; }
};

/// Objects (i, j) -> i * (m + 1) + j. Throws BudgetExceeded.
SimplexTensor tensor_simplices(int n, int m, const Budget& budget = {});

/// The functor [n'] (x) [m'] -> [n] (x) [m] induced by monotone maps
/// alpha : [n'] -> [n] and beta : [m'] -> [m].
TwoFunctor simplex_tensor_map(const SimplexTensor& src,
                              const SimplexTensor& tgt,
                              const std::vector<int>& alpha,
                              const std::vector<int>& beta);

/// True iff p can be turned into q by exchanging HV corners for VH, i.e.
/// every prefix of p has at least as many H steps as the same prefix of q.
bool path_dominates(const std::string& p, const std::string& q);

/// A Gray tensor of two presented 2-categories, with its generator tables.
struct GrayTensor {
  Presented left;
  Presented right;
  Presented result;

  int object(int a, int b) const {
    return a * static_cast<int>(right.pres.objects.size()) + b;
  }
  int gen_h(int f, int b) const { return h1_[f][b]; }   // f (x) b
  int gen_v(int a, int g) const { return v1_[a][g]; }   // a (x) g
  int gen2_h(int al, int b) const { return h2_[al][b]; }  // alpha (x) b
  int gen2_v(int a, int be) const { return v2_[a][be]; }  // a (x) beta
  int gen_sq(int f, int g) const { return sq_[f][g]; }    // f (x) g

  Word word_h(const Word& u, int b) const;
  Word word_v(int a, const Word& w) const;
  /// u (x) w for words u from a and w from b, as a pasting from
  /// (u (x) b)(a' (x) w) to (a (x) w)(u (x) b').
  Pasting grid(int a, const Word& u, int b, const Word& w) const;
  Pasting pasting_h(const Pasting& p, int b) const;
  Pasting pasting_v(int a, const Pasting& p) const;

  friend GrayTensor gray_tensor(const Presented&, const Presented&,
                                const NormalizeOptions&);

 private:
  std::vector<std::vector<int>> h1_, v1_, h2_, v2_, sq_;
};

/// Presentation of A (x) B from presentations of A and B, then normalized.
GrayTensor gray_tensor(const Presented& a, const Presented& b,
                       const NormalizeOptions& opt = {});

/// normalize(present(g)).
Presented present_globular(const GlobularSum& g);
/// The isomorphism build_globular_sum(g) -> present_globular(g).cat.
TwoFunctor globular_comparison(const GlobularSum& g, const Presented& p);

GrayTensor tensor(const GlobularSum& a, const GlobularSum& b);
/// ([n1] (x) [n2]) (x) [n3], with the confluence check enabled.
GrayTensor tensor_triple(int n1, int n2, int n3);
/// [n1] (x) ([n2] (x) [n3]).
GrayTensor tensor_triple_right(int n1, int n2, int n3);

/// ([n1] (x) [n2]) (x) [n3] and [n1] (x) ([n2] (x) [n3]) are isomorphic by a
/// map fixing objects.
bool verify_associativity(int n1, int n2, int n3, const Budget& budget = {});

/// u (x) v for 2-functors u : src.left -> tgt.left, v : src.right ->
/// tgt.right (on the normalized categories).
TwoFunctor tensor_map(const GrayTensor& src, const GrayTensor& tgt,
                      const TwoFunctor& u, const TwoFunctor& v);
/// A (x) B -> A (which = 0) or A (x) B -> B (which = 1).
TwoFunctor tensor_projection(const GrayTensor& t, int which);
/// The inclusion of {a} (x) B (which = 1) or A (x) {b} (which = 0).
TwoFunctor tensor_slice(const GrayTensor& t, int which, int obj);

struct Collapse {
  GrayTensor source;
  Presented target;
  TwoFunctor map;
};

/// psi : [n] (x) [m] -> [n; m], (i, j) -> i.
Collapse collapse_to_globular(int n, int m);
/// [m]^op (x) [n] -> [n; m], (i, k) -> k.
Collapse collapse_to_globular_dual(int n, int m);

struct FunnyCollapse {
  GrayTensor source;  // [n] (x) ([m] x [k])
  GrayTensor target;  // [n; m] (x) [k]
  TwoFunctor map;
  /// Number of factorizations of psi (x) [k] through the source.
  std::size_t factorizations = 0;
};

/// Throws HypothesisViolation if no factorization exists.
FunnyCollapse funny_collapse(int n, int m, int k);

/// {[0], [1], [2], [1;1], [1;2], [2;(1,0)], [1] (x) [1]}.
std::vector<NamedCat> default_battery();

/// The two pushout squares exhibiting [n; m] as a quotient of a Gray tensor.
/// `right` selects the square with [m]^op (x) [n].
BatteryResult verify_quotient_square(int n, int m, bool right,
                                     const std::vector<NamedCat>& battery);
/// tau0[n] x ([m] x [k]) -> [n] (x) ([m] x [k]) over tau0[n] x [k].
BatteryResult verify_funny_square(int n, int m, int k,
                                  const std::vector<NamedCat>& battery);
/// tau1[n;m] (x) [k] -> [n;m] (x) [k] over tau1[n;m] -> [n;m].
BatteryResult verify_crush_product(int n, int m, int k,
                                   const std::vector<NamedCat>& battery);

struct Step2Report {
  /// tau0[n] x [m] glued to [n] (x) ([k] x [m]), against [n;k] (x) [m].
  BatteryResult left;
  /// tau0[n] x [m] glued to [k]^op (x) [n] (x) [m], against the same.
  BatteryResult right;
  bool pass() const { return left.pass() && right.pass(); }
};

Step2Report verify_step2(int n, int m, int k,
                         const std::vector<NamedCat>& battery);

struct DualityReport {
  bool op = false;
  bool co = false;
  bool pass() const { return op && co; }
};

DualityReport verify_duality(const GlobularSum& a, const GlobularSum& b);

/// Number of families of endomorphisms of A (x) B natural in both variables
/// over the full subcategory of Theta_2 on `subsite`.
std::size_t verify_rigidity(const std::vector<GlobularSum>& subsite,
                            const Budget& budget = {});

/// Outcome of computing [n; m] (x) [k] as a pointwise pushout of nerves.
struct PresheafRoute {
  enum class Status { agree, disagree, inconclusive };
  Status status = Status::inconclusive;
  std::string reason;
  /// Battery check of the same pushout on 2-categories, run when the
  /// presheaf pushout is not Segal.
  BatteryResult fallback;
};

PresheafRoute compare_presheaf_route(int n, int m, int k, const Site& site,
                                     const std::vector<NamedCat>& battery);

}  // namespace graycat
