// SPDX-License-Identifier: Apache-2.0
//
// Set-valued presheaves on finite truncated sites.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graycat/shapes.hpp"

namespace graycat {

class SetPresheaf {
 public:
  explicit SetPresheaf(std::shared_ptr<const Site> site);

  const Site& site() const { return *site_; }
  const std::shared_ptr<const Site>& site_ptr() const { return site_; }

  int size(int obj) const { return sizes_[obj]; }
  const std::vector<int>& sizes() const { return sizes_; }
  /// X(f) : X(tgt f) -> X(src f).
  int act(int f, int x) const { return actions_[f][x]; }
  const std::vector<int>& action(int f) const { return actions_[f]; }

  void set_size(int obj, int n) { sizes_[obj] = n; }
  void set_action(int f, std::vector<int> table) {
    actions_[f] = std::move(table);
    structure_.reset();
  }

  /// Exhaustive functoriality check; throws AxiomViolation.
  void validate() const;

  /// One sort per site object, one unary operation per site morphism.
  const FiniteStructure& structure() const;

 private:
  std::shared_ptr<const Site> site_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> actions_;
  mutable std::shared_ptr<FiniteStructure> structure_;
};

/// A natural transformation, one component per site object.
struct PresheafMap {
  std::vector<std::vector<int>> components;
};

bool is_natural(const SetPresheaf& x, const SetPresheaf& y,
                const PresheafMap& m);

struct Diagram {
  struct Edge {
    int from = 0;
    int to = 0;
    PresheafMap map;
  };
  std::vector<const SetPresheaf*> nodes;
  std::vector<Edge> edges;
};

struct Colimit {
  SetPresheaf object;
  std::vector<PresheafMap> injections;
};

/// Pointwise colimit: per object, the disjoint union of node values modulo
/// the relation generated by the edges, represented by least elements in
/// (node, element) order. Throws std::invalid_argument on non-natural edges.
Colimit finite_colimit(const Diagram& d);

/// Checks the cocone property of `c` against `y`: restriction from
/// Hom(colim, y) to compatible families is a bijection.
bool check_colimit_universal(const Diagram& d, const Colimit& c,
                             const SetPresheaf& y);

/// Returns false and a reason if the Segal maps fail to be bijections.
bool is_segal_theta2(const SetPresheaf& x, std::string* reason = nullptr);

enum class CompletenessLevel { objects, horizontal };
bool is_complete(const SetPresheaf& x, CompletenessLevel level);

std::optional<PresheafMap> find_isomorphism(const SetPresheaf& x,
                                            const SetPresheaf& y);
inline bool are_isomorphic(const SetPresheaf& x, const SetPresheaf& y) {
  return find_isomorphism(x, y).has_value();
}

/// The nerve g -> Fun(g, C), with elements retained.
struct Nerve {
  SetPresheaf presheaf;
  std::vector<std::vector<TwoFunctor>> elements;
  std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> index;
  int find(int obj, const TwoFunctor& f) const;
};

Nerve nerve(const TwoCat& c, std::shared_ptr<const Site> site);

/// Postcomposition with f : A -> B.
PresheafMap nerve_map(const Nerve& a, const Nerve& b, const TwoFunctor& f);

/// Reads a 2-category off levels [0], [1], [1;1], [2], [1;2], [2;1].
/// Throws RecognitionError if X is not the nerve of a 2-category.
TwoCat presheaf_to_twocat(const SetPresheaf& x);

/// The unique site morphism a -> b whose functor satisfies `pred`.
int find_site_morphism(const Site& s, int a, int b,
                       const std::function<bool(const TwoFunctor&)>& pred);

}  // namespace graycat
