// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "graycat/twocat.hpp"

using namespace graycat;

namespace {

// Number of monotone maps [n] -> [k].
std::size_t monotone(int n, int k) {
  std::size_t count = 0;
  std::vector<int> h(n + 1, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && h[i] <= h[i + 1];
    count += ok;
    int i = 0;
    while (i <= n && ++h[i] == k + 1) h[i++] = 0;
    if (i > n) break;
  }
  return count;
}

// The walking 2-cell [1;1].
TwoCat walking_2cell() {
  TwoCatBuilder b;
  b.add_object();
  b.add_object();
  const int f = b.add_cell1(0, 1, "f");
  const int g = b.add_cell1(0, 1, "g");
  b.add_cell2(f, g, "alpha");
  return b.build();
}

}  // namespace

TEST_CASE("functors between ordinals are monotone maps") {
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k)
      CHECK(count_functors(ordinal(n), ordinal(k)) == monotone(n, k));
  CHECK(count_functors(ordinal(1), ordinal(1)) == 3);
}

TEST_CASE("terminal source counts objects") {
  auto c = walking_2cell();
  CHECK(count_functors(terminal(), c) == 2);
  CHECK(count_functors(terminal(), ordinal(4)) == 5);
}

TEST_CASE("product of arrows is the commutative square") {
  auto sq = cartesian_product(ordinal(1), ordinal(1));
  sq.validate();
  CHECK(sq.num_objects() == 4);
  CHECK(sq.non_identity_cells1() == 5);
  CHECK(sq.non_identity_cells2() == 0);
  CHECK(isomorphic(cartesian_product(walking_2cell(), terminal()),
                   walking_2cell()));
  CHECK(is_functor(sq, ordinal(1), product_projection(ordinal(1), ordinal(1), 0)));
}

TEST_CASE("gauntness") {
  CHECK(is_gaunt(walking_2cell()));
  TwoCatBuilder b;
  b.add_object();
  const int g = b.add_cell1(0, 0, "g");
  b.set_comp1(g, g, b.id1(0));
  b.set_hcomp(b.id2(g), b.id2(g), b.id2(b.id1(0)));
  CHECK_FALSE(is_gaunt(b.build()));
}

TEST_CASE("invalid tables are rejected") {
  TwoCatBuilder b;
  b.add_object();
  b.add_object();
  b.add_object();
  b.add_cell1(0, 1);
  b.add_cell1(1, 2);
  CHECK_THROWS_AS(b.build(), AxiomViolation);
}

TEST_CASE("truncations of the walking 2-cell") {
  auto c = walking_2cell();
  auto t1 = truncate(c, Truncation::tau1);
  CHECK(t1.cat.non_identity_cells1() == 2);
  CHECK(t1.cat.non_identity_cells2() == 0);
  CHECK(is_functor(t1.cat, c, t1.map));
  auto t1i = truncate(c, Truncation::tau1i);
  CHECK(isomorphic(t1i.cat, ordinal(1)));
  CHECK(is_functor(c, t1i.cat, t1i.map));
  CHECK(truncate(ordinal(3), Truncation::tau0).cat.num_objects() == 4);
  auto t0i = truncate(coproduct(ordinal(2), ordinal(1)), Truncation::tau0i);
  CHECK(t0i.cat.num_objects() == 2);
}

TEST_CASE("duals") {
  auto c = walking_2cell();
  CHECK(isomorphic(dual_op(ordinal(2)), ordinal(2)));
  CHECK(isomorphic(dual_co(c), c));
  CHECK(count_functors(dual_op(c), dual_op(ordinal(2))) ==
        count_functors(c, ordinal(2)));
}

TEST_CASE("identity pushout passes the battery") {
  auto a = walking_2cell();
  auto id = identity_functor(a);
  std::vector<NamedCat> battery{{"[1]", ordinal(1)}, {"[2]", ordinal(2)},
                                {"w", walking_2cell()}};
  Span span{&a, &a, &a, id, id};
  Cocone cocone{&a, id, id};
  CHECK(verify_pushout_by_battery(span, cocone, battery).pass());
}

TEST_CASE("coproduct as a pushout over the empty category") {
  TwoCat empty = TwoCatBuilder().build();
  auto a = ordinal(1);
  auto b = ordinal(2);
  auto p = coproduct(a, b);
  TwoFunctor none;
  Span span{&empty, &a, &b, none, none};
  Cocone cocone{&p, coproduct_inclusion(a, b, 0), coproduct_inclusion(a, b, 1)};
  std::vector<NamedCat> battery{{"[1]", ordinal(1)}, {"[2]", ordinal(2)}};
  CHECK(verify_pushout_by_battery(span, cocone, battery).pass());
  // The wrong candidate: [1] alone.
  Cocone bad{&b, TwoFunctor{{0, 1}, {0, 1, 3}, {0, 1, 3}},
             identity_functor(b)};
  CHECK_FALSE(verify_pushout_by_battery(span, bad, battery).pass());
}
