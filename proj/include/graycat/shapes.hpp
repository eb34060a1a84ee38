// SPDX-License-Identifier: Apache-2.0
//
// Globular sums [n; m_0, ..., m_{n-1}] and finite truncations of the sites
// Theta_2 and Delta x Delta.
#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "graycat/computad.hpp"
#include "graycat/twocat.hpp"

namespace graycat {

struct GlobularSum {
  int n = 0;
  std::vector<int> widths;

  GlobularSum() = default;
  GlobularSum(int n_, std::vector<int> w) : n(n_), widths(std::move(w)) {}
  static GlobularSum simplex(int n) { return {n, std::vector<int>(n, 0)}; }
  static GlobularSum constant(int n, int m) {
    return {n, std::vector<int>(n, m)};
  }

  auto operator<=>(const GlobularSum&) const = default;

  /// "[2]", "[1;1]", "[2;(1,0)]".
  std::string name() const;
  /// Throws std::invalid_argument.
  void check() const;
};

/// Accepts the forms produced by GlobularSum::name(), plus "n;m".
GlobularSum parse_globular_sum(const std::string& text);

/// Cell ids of build_globular_sum(g): objects are 0..n; a 1-cell i -> j is a
/// tuple (t_i, ..., t_{j-1}) with t_k <= m_k; a 2-cell is a pair s <= t.
class GlobularIndex {
 public:
  explicit GlobularIndex(const GlobularSum& g);
  int cell1(int i, int j, const std::vector<int>& t) const;
  int cell2(int i, int j, const std::vector<int>& s,
            const std::vector<int>& t) const;
  const GlobularSum& shape() const { return g_; }

  struct C1 {
    int i, j;
    std::vector<int> t;
  };
  struct C2 {
    int i, j;
    std::vector<int> s, t;
  };
  const std::vector<C1>& cells1() const { return c1_; }
  const std::vector<C2>& cells2() const { return c2_; }

 private:
  GlobularSum g_;
  std::vector<C1> c1_;
  std::vector<C2> c2_;
  std::map<std::vector<int>, int> id1_;
  std::map<std::vector<int>, int> id2_;
};

TwoCat build_globular_sum(const GlobularSum& g);

/// The free computad with generators f_{k,a} : k -> k+1 (a <= m_k) and
/// 2-generators f_{k,a} => f_{k,a+1}.
Presentation present(const GlobularSum& g);

enum class Dual { op, co };
GlobularSum dual(const GlobularSum& g, Dual kind);

enum class SiteFamily { theta2, delta_square };

/// A finite full subcategory of Theta_2 (all 2-functors between
/// realizations) or of Delta x Delta (pairs of monotone maps).
class Site {
 public:
  struct Morphism {
    int src = 0;
    int tgt = 0;
    std::vector<int> data;  // flattened 2-functor, or concatenated maps
  };

  SiteFamily family() const { return family_; }
  int num_objects() const { return static_cast<int>(names_.size()); }
  const std::string& object_name(int a) const { return names_[a]; }
  /// theta2 only.
  const GlobularSum& globular(int a) const { return shapes_[a]; }
  const TwoCat& realization(int a) const { return real_[a]; }
  /// delta_square only.
  std::pair<int, int> bisimplex(int a) const { return bisimplices_[a]; }

  int find(const GlobularSum& g) const;
  int find(int n, int m) const;

  std::size_t num_morphisms() const { return mor_.size(); }
  const Morphism& morphism(int f) const { return mor_[f]; }
  const std::vector<int>& hom(int a, int b) const {
    return hom_[static_cast<std::size_t>(a) * num_objects() + b];
  }
  int identity(int a) const { return identity_[a]; }
  /// "f then g"; both must be morphisms of this site.
  int compose(int g, int f) const;
  int lookup(int src, int tgt, const std::vector<int>& data) const;

  /// theta2 only: the morphism as a 2-functor between realizations.
  TwoFunctor functor(int f) const;

  friend Site truncated_site(SiteFamily, int, int, const Budget&);
  friend Site site_from_shapes(const std::vector<GlobularSum>&, const Budget&);

 private:
  void add_morphism(int a, int b, std::vector<int> data);
  void finish();

  SiteFamily family_ = SiteFamily::theta2;
  std::vector<std::string> names_;
  std::vector<GlobularSum> shapes_;
  std::vector<TwoCat> real_;
  std::vector<std::pair<int, int>> bisimplices_;
  std::vector<Morphism> mor_;
  std::vector<std::vector<int>> hom_;
  std::vector<int> identity_;
  std::unordered_map<std::vector<int>, int, VectorHash> lookup_;
};

/// theta2: every [n; m] with n <= max_n and widths <= max_w.
/// delta_square: every (n, m) with n, m <= max_n (max_w is ignored).
Site truncated_site(SiteFamily family, int max_n, int max_w,
                    const Budget& budget = {});
/// The full subcategory of Theta_2 on the given shapes.
Site site_from_shapes(const std::vector<GlobularSum>& shapes,
                      const Budget& budget = {});

}  // namespace graycat
