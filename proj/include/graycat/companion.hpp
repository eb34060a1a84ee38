// SPDX-License-Identifier: Apache-2.0
//
// Companion pairs in finite double categories.
//
// A horizontal F is a companion of a vertical f : x -> y when there are
// squares eta (top id, left id, right f, bottom F) and eps (top F, left f,
// right id, bottom id) whose vertical pasting is the identity on f and whose
// horizontal pasting is the identity on F.
#pragma once

#include <vector>

#include "graycat/double.hpp"

namespace graycat {

struct CompanionWitness {
  int f = 0;  // vertical
  int F = 0;  // horizontal
  int eta = 0;
  int eps = 0;
  bool operator==(const CompanionWitness&) const = default;
};

/// Throws MalformedBoundary if the boundaries of eta or eps do not fit.
bool is_companion_pair(const DoubleCat& q, const CompanionWitness& w);

/// All witnesses for the vertical f, ordered by (F, eta, eps).
std::vector<CompanionWitness> find_companions(const DoubleCat& q, int f);

/// Per vertical: does it admit a companion.
std::vector<bool> verticals_with_companions(const DoubleCat& q);
/// Per horizontal: is it a companion of some vertical.
std::vector<bool> companion_horizontals(const DoubleCat& q);

/// A vertically invertible square with identity sides from F to G.
bool companions_isomorphic(const DoubleCat& q, int F, int G);

enum class CompKind { vcomp, hcomp };

/// The sub double category on squares whose vertical sides admit companions
/// (vcomp) or whose horizontal sides are companions (hcomp).
DoubleCat comp_subobject(const DoubleCat& q, CompKind kind);
/// Both conditions at once.
DoubleCat comp_core(const DoubleCat& q);

enum class Side { vertical, horizontal };

struct UniversalPropertyReport {
  std::size_t source_maps = 0;    // |Hom(squares(C), Q)|
  std::size_t restricted = 0;     // distinct restrictions
  std::size_t expected_image = 0; // maps out of the inclusion hitting companions
  bool injective = false;
  bool image_matches = false;
  bool pass() const { return injective && image_matches; }
};

/// Restriction along C_v -> squares(C) or C_h -> squares(C). Throws
/// HypothesisViolation for the horizontal side if Q is not locally complete.
UniversalPropertyReport verify_universal_property(const TwoCat& c,
                                                  const DoubleCat& q,
                                                  Side side);

}  // namespace graycat
