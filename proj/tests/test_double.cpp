// SPDX-License-Identifier: Apache-2.0
#include <set>

#include "doctest.h"
#include "graycat/double.hpp"

using namespace graycat;

namespace {

std::vector<GlobularSum> small_shapes() {
  return {GlobularSum::simplex(0), GlobularSum::simplex(1),
          GlobularSum::simplex(2), GlobularSum::constant(1, 1)};
}

// Brute-force level count: double functors out of the free n x m grid.
std::size_t grid_count(const DoubleCat& p, int n, int m) {
  return count_double_functors(grid(n, m), p);
}

// One object, one non-identity square s with s.s = id in both directions.
DoubleCat invertible_square() {
  DoubleCatTables t;
  t.objects = 1;
  t.vert = {{0, 0}};
  t.horiz = {{0, 0}};
  t.vid = {0};
  t.hid = {0};
  t.squares = {{0, 0, 0, 0}, {0, 0, 0, 0}};
  t.sq_vid = {0};
  t.sq_hid = {0};
  t.vcomp_s = {{1, 1, 0}};
  t.hcomp_s = {{1, 1, 0}};
  return DoubleCat::from_tables(t);
}

// Two objects joined by a horizontal isomorphism, nothing else.
DoubleCat horizontal_iso() {
  DoubleCatTables t;
  t.objects = 2;
  t.vert = {{0, 0}, {1, 1}};
  t.vid = {0, 1};
  t.horiz = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  t.hid = {0, 1};
  t.hcomp_h = {{3, 2, 0}, {2, 3, 1}};
  for (int h = 0; h < 4; ++h) {
    const auto& e = t.horiz[h];
    t.squares.push_back({h, h, e[0], e[1]});
    t.sq_vid.push_back(h);
  }
  t.sq_hid = {0, 1};
  return DoubleCat::from_tables(t);
}

}  // namespace

TEST_CASE("squares of small 2-categories") {
  CHECK(isomorphic(squares(terminal()), terminal_double()));
  const DoubleCat s1 = squares(ordinal(1));
  CHECK(s1.level_count(1, 1) == 6);
  for (const auto& g : small_shapes()) {
    const TwoCat e = build_globular_sum(g);
    const DoubleCat s = squares(e);
    CHECK_NOTHROW(s.validate());
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m) {
        CAPTURE(g.name());
        CAPTURE(n);
        CAPTURE(m);
        CHECK(s.level_count(n, m) ==
              count_functors(tensor_simplices(n, m).cat, e));
      }
  }
}

TEST_CASE("level counts agree with maps out of grids") {
  for (const auto& g : small_shapes()) {
    const TwoCat e = build_globular_sum(g);
    for (const DoubleCat& p : {squares(e), inclusion(e, Direction::v),
                               inclusion(e, Direction::h)})
      for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m) {
          CAPTURE(g.name());
          CHECK(p.level_count(n, m) == grid_count(p, n, m));
        }
  }
  const DoubleCat s = squares(ordinal(1));
  CHECK(s.level_count(3, 1) == grid_count(s, 3, 1));
  CHECK(s.level_count(1, 3) == grid_count(s, 1, 3));
}

TEST_CASE("squares of [1;1] has one square with a non-identity 2-cell "
          "between non-parallel boundaries") {
  const TwoCat e = build_globular_sum(GlobularSum::constant(1, 1));
  const DoubleCat s = squares(e);
  int found = 0;
  for (int q = 0; q < s.num_squares(); ++q) {
    const auto& c = s.square(q);
    if (!s.is_vid(c.left) && !s.is_vid(c.right) && !s.is_hid(c.top) &&
        !s.is_hid(c.bottom))
      ++found;
  }
  // Both boundaries are the two arrows 0 -> 1 with identity sides on the
  // other axis, so no square has all four sides non-identity.
  CHECK(found == 0);
  int twisted = 0;
  for (int q = 0; q < s.num_squares(); ++q) {
    const auto& c = s.square(q);
    if (s.is_vid(c.left) && s.is_vid(c.right) && c.top != c.bottom) ++twisted;
  }
  CHECK(twisted == 1);
}

TEST_CASE("vertical and horizontal inclusions") {
  const DoubleCat v1 = inclusion(ordinal(1), Direction::v);
  CHECK(v1.num_vert() == 3);
  for (int h = 0; h < v1.num_horiz(); ++h) CHECK(v1.is_hid(h));
  for (int q = 0; q < v1.num_squares(); ++q) CHECK(v1.is_identity_square(q));

  const TwoCat e = build_globular_sum(GlobularSum::constant(1, 1));
  const DoubleCat v = inclusion(e, Direction::v);
  int non_id = 0;
  for (int q = 0; q < v.num_squares(); ++q) {
    if (v.is_identity_square(q)) continue;
    ++non_id;
    CHECK(v.is_hid(v.square(q).top));
    CHECK(v.is_hid(v.square(q).bottom));
  }
  CHECK(non_id == 1);

  for (const auto& g : small_shapes()) {
    const TwoCat c = build_globular_sum(g);
    const DoubleCat h = inclusion(c, Direction::h);
    const DoubleCat tv = dualize(inclusion(c, Direction::v), DoubleDual::t);
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        CHECK(h.level_count(n, m) == tv.level_count(n, m));
    for (auto kind : {Direction::v, Direction::h})
      CHECK(is_double_functor(inclusion(c, kind), squares(c),
                              inclusion_into_squares(c, kind)));
  }
}

TEST_CASE("dualities are involutions") {
  const DoubleCat s1 = squares(ordinal(1));
  CHECK(isomorphic(dualize(s1, DoubleDual::t), s1));
  for (const auto& g : small_shapes()) {
    const TwoCat c = build_globular_sum(g);
    for (const DoubleCat& p : {squares(c), inclusion(c, Direction::v)})
      for (auto kind : {DoubleDual::hop, DoubleDual::vop, DoubleDual::t}) {
        const DoubleCat d = dualize(p, kind);
        CHECK_NOTHROW(d.validate());
        CHECK(isomorphic(dualize(d, kind), p));
      }
  }
}

TEST_CASE("double functor counts") {
  const DoubleCat v1 = inclusion(ordinal(1), Direction::v);
  const DoubleCat s1 = squares(ordinal(1));
  CHECK(count_double_functors(v1, v1) == 3);
  CHECK(count_double_functors(
            product(inclusion(ordinal(1), Direction::h), v1), s1) == 6);
  CHECK(count_double_functors(s1, v1) == 2);

  // Composites of enumerated functors are enumerated functors.
  const DoubleCat s2 = squares(ordinal(2));
  const auto fs = enumerate_double_functors(s1, s2);
  const auto gs = enumerate_double_functors(s2, s1);
  std::set<std::vector<int>> endo;
  for (const auto& h : enumerate_double_functors(s1, s1))
    endo.insert(flatten(h));
  for (const auto& f : fs)
    for (const auto& g : gs) CHECK(endo.count(flatten(compose(g, f))) == 1);
}

TEST_CASE("products") {
  const DoubleCat s1 = squares(ordinal(1));
  CHECK(isomorphic(product(s1, terminal_double()), s1));
  const DoubleCat g = grid(1, 1);
  CHECK(g.num_objects() == 4);
  int v = 0, h = 0, q = 0;
  for (int f = 0; f < g.num_vert(); ++f) v += !g.is_vid(f);
  for (int f = 0; f < g.num_horiz(); ++f) h += !g.is_hid(f);
  for (int s = 0; s < g.num_squares(); ++s) q += !g.is_identity_square(s);
  // Generators: one of each, plus their whiskers along the other factor.
  CHECK(v == 2);
  CHECK(h == 2);
  CHECK(q == 1);
  const DoubleCat a = squares(build_globular_sum(GlobularSum::constant(1, 1)));
  const DoubleCat p = product(s1, a);
  for (int n = 0; n <= 1; ++n)
    for (int m = 0; m <= 1; ++m)
      CHECK(p.level_count(n, m) == s1.level_count(n, m) * a.level_count(n, m));
}

TEST_CASE("completeness proxies") {
  for (const auto& g : small_shapes()) {
    const TwoCat c = build_globular_sum(g);
    CHECK(is_complete(squares(c), Completeness::fully));
    CHECK(is_complete(inclusion(c, Direction::v), Completeness::fully));
  }
  const DoubleCat bad = invertible_square();
  CHECK_FALSE(is_complete(bad, Completeness::locally));
  const DoubleCat iso = horizontal_iso();
  CHECK(is_complete(iso, Completeness::locally));
  CHECK_FALSE(is_complete(iso, Completeness::fully));
}

TEST_CASE("adjunction counts") {
  for (int c : {0, 1})
    for (int d : {0, 1})
      for (const auto& g :
           {GlobularSum::simplex(1), GlobularSum::simplex(2),
            GlobularSum::constant(1, 1)}) {
        const auto r =
            verify_adjunction_counts(ordinal(c), ordinal(d), build_globular_sum(g));
        CAPTURE(g.name());
        CHECK(r.pass());
        if (c == 0) CHECK(r.tensor_side == count_functors(ordinal(d), build_globular_sum(g)));
      }
  const auto r = verify_adjunction_counts(ordinal(1), ordinal(1), ordinal(1));
  CHECK(r.double_side == 6);
  CHECK(r.tensor_side == 6);
  CHECK(verify_adjunction_counts(ordinal(1), ordinal(1),
                                 tensor_simplices(1, 1).cat)
            .pass());
}

TEST_CASE("Cech nerve of the 1-core is the squares double category") {
  for (const auto& g : small_shapes()) {
    const TwoCat e = build_globular_sum(g);
    const Truncated tr = truncate(e, Truncation::tau1);
    const DoubleCat n = cech_nerve(tr.cat, e, tr.map);
    const DoubleCat s = squares(e);
    CAPTURE(g.name());
    CHECK(isomorphic(n, s));
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) CHECK(n.level_count(i, j) == s.level_count(i, j));
  }
  const TwoCat one = ordinal(1);
  CHECK(isomorphic(cech_nerve(one, one, identity_functor(one)), squares(one)));
}

TEST_CASE("Cech nerve of a point in [1]") {
  const TwoCat one = ordinal(1);
  const TwoFunctor f{{0}, {one.id1(0)}, {one.id2(one.id1(0))}};
  const DoubleCat n = cech_nerve(terminal(), one, f);
  CHECK(n.num_objects() == 1);
  CHECK(n.num_squares() == 1);
  CHECK(n.level_count(1, 1) == 1);
  CHECK_THROWS_AS(cech_nerve(build_globular_sum(GlobularSum::constant(1, 1)),
                             build_globular_sum(GlobularSum::constant(1, 1)),
                             identity_functor(build_globular_sum(
                                 GlobularSum::constant(1, 1)))),
                  HypothesisViolation);
}

TEST_CASE("step 3 pushout of double categories") {
  const auto battery = default_double_battery();
  CHECK(verify_step3(1, 1, 1, 0, battery).pass());
  CHECK(verify_step3(1, 0, 1, 0, battery).pass());
  CHECK(verify_step3(1, 1, 1, 1, battery).pass());
}

TEST_CASE("double pushout verifier rejects a non-pushout") {
  // The pushout of id, id : V -> V is V, not V x V.
  const DoubleCat v = inclusion(ordinal(1), Direction::v);
  const DoubleCat vv = product(v, v);
  const DoubleFunctor id = identity_double_functor(v);
  DoubleFunctor diag(4);
  for (int s = 0; s < 4; ++s) {
    const int k = v.structure().sizes[s];
    for (int x = 0; x < k; ++x) diag[s].push_back(x * k + x);
  }
  const auto r = verify_double_pushout({&v, &v, &v, id, id}, {&vv, diag, diag},
                                       default_double_battery());
  CHECK_FALSE(r.pass());
}
