// SPDX-License-Identifier: Apache-2.0
//
// 2-computads with relations, and their normalization to finite 2-categories.
//
// A word is a sequence of 1-generators in traversal order. A pasting is a
// vertical sequence of atoms, each atom a 2-generator whiskered by a word on
// either side.
#pragma once

#include <string>
#include <vector>

#include "graycat/twocat.hpp"

namespace graycat {

using Word = std::vector<int>;

struct Atom {
  Word pre;
  int gen = 0;
  Word post;
  bool operator==(const Atom&) const = default;
};

struct Pasting {
  int obj = 0;  // source object of the start word
  Word start;
  std::vector<Atom> atoms;
};

struct Presentation {
  struct Gen1 {
    int src = 0;
    int tgt = 0;
    std::string name;
  };
  struct Gen2 {
    int src_obj = 0;
    int tgt_obj = 0;
    Word src;
    Word tgt;
    std::string name;
  };
  struct Rel1 {
    int obj = 0;
    Word lhs;
    Word rhs;
  };

  std::vector<std::string> objects;
  std::vector<Gen1> gens1;
  std::vector<Gen2> gens2;
  std::vector<Rel1> rel1;
  std::vector<std::pair<Pasting, Pasting>> rel2;

  int add_object(std::string name);
  int add_gen1(int src, int tgt, std::string name);
  int add_gen2(int src_obj, int tgt_obj, Word src, Word tgt, std::string name);

  /// Target object of a word starting at `obj`; throws MalformedBoundary.
  int word_target(int obj, const Word& w) const;
};

/// A presentation together with its normalized 2-category.
struct Presented {
  Presentation pres;
  TwoCat cat;
  std::vector<int> gen1_cell;
  std::vector<int> gen2_cell;
  std::vector<int> obj_of;  // presentation object -> cat object (identity)
  std::vector<std::pair<int, Word>> rep1;  // per 1-cell: (source, word)
  std::vector<Pasting> rep2;               // per 2-cell
  std::size_t completion_rules = 0;  // added by the confluence check

  int word_cell(int obj, const Word& w) const;
  /// Whiskers and composes in `cat`; throws MalformedBoundary.
  int pasting_cell(const Pasting& p) const;
};

struct NormalizeOptions {
  /// Orients every relation towards shortlex-smaller atom sequences and
  /// completes the system until each 2-cell has one irreducible pasting.
  bool check_confluence = false;
  std::size_t max_completion_rules = 100'000;
  bool validate = true;
  std::size_t max_cells = Budget{}.cells;
};

/// Throws MalformedBoundary, BudgetExceeded, NonConfluence.
Presented normalize(const Presentation& p, const NormalizeOptions& opt = {});

/// The 2-functor determined by images of objects and generators, checked
/// against every relation.
TwoFunctor functor_from_generators(const Presented& src, const TwoCat& tgt,
                                   const std::vector<int>& obj_image,
                                   const std::vector<int>& gen1_image,
                                   const std::vector<int>& gen2_image);

/// Presentation of a finite 2-category by its indecomposable cells, with one
/// relation per (cell, generator) extension. normalize() of the result is
/// isomorphic to `c`, with matching object ids.
Presentation present_twocat(const TwoCat& c);

}  // namespace graycat
