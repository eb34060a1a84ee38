// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "graycat/computad.hpp"

using namespace graycat;

namespace {

Presentation globe(int n, int m) {
  Presentation p;
  for (int i = 0; i <= n; ++i) p.add_object(std::to_string(i));
  std::vector<std::vector<int>> f(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      f[i].push_back(p.add_gen1(i, i + 1, "f" + std::to_string(i) + std::to_string(j)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      p.add_gen2(i, i + 1, {f[i][j]}, {f[i][j + 1]}, "a");
  return p;
}

}  // namespace

TEST_CASE("free computads on globular generators") {
  NormalizeOptions opt;
  opt.check_confluence = true;
  auto w = normalize(globe(1, 1), opt);
  CHECK(w.cat.num_objects() == 2);
  CHECK(w.cat.non_identity_cells1() == 2);
  CHECK(w.cat.non_identity_cells2() == 1);

  auto g = normalize(globe(2, 1), opt);
  CHECK(g.cat.hom(0, 2).size() == 4);
  CHECK(g.cat.non_identity_cells2() == 7);
  CHECK(is_gaunt(g.cat));

  auto h = normalize(globe(1, 2), opt);
  CHECK(h.cat.non_identity_cells2() == 3);
}

TEST_CASE("1-relations identify words") {
  Presentation p;
  for (int i = 0; i < 4; ++i) p.add_object(std::to_string(i));
  const int a = p.add_gen1(0, 1, "a");
  const int b = p.add_gen1(1, 3, "b");
  const int c = p.add_gen1(0, 2, "c");
  const int d = p.add_gen1(2, 3, "d");
  p.rel1.push_back({0, {a, b}, {c, d}});
  auto sq = normalize(p);
  CHECK(isomorphic(sq.cat, cartesian_product(ordinal(1), ordinal(1))));
  CHECK(sq.word_cell(0, {a, b}) == sq.word_cell(0, {c, d}));
}

TEST_CASE("presenting a finite 2-category round-trips") {
  NormalizeOptions opt;
  opt.check_confluence = false;
  std::vector<TwoCat> cats{ordinal(0), ordinal(3),
                           cartesian_product(ordinal(1), ordinal(2)),
                           normalize(globe(2, 2)).cat,
                           cartesian_product(normalize(globe(1, 1)).cat,
                                             ordinal(1))};
  for (const auto& c : cats) {
    auto back = normalize(present_twocat(c), opt);
    auto iso = find_isomorphism(back.cat, c);
    REQUIRE(iso);
    for (int x = 0; x < c.num_objects(); ++x) CHECK(iso->obj[x] == x);
  }
}

TEST_CASE("malformed presentations are rejected") {
  Presentation p;
  p.add_object("0");
  p.add_gen1(0, 0, "loop");
  CHECK_THROWS_AS(normalize(p), MalformedBoundary);
  Presentation q = globe(1, 1);
  CHECK_THROWS_AS(q.add_gen2(0, 1, {0}, {}, "bad"), MalformedBoundary);
}

TEST_CASE("functors from generator images") {
  auto w = normalize(globe(1, 1));
  auto id = functor_from_generators(w, w.cat, {0, 1}, {w.gen1_cell[0], w.gen1_cell[1]},
                                    {w.gen2_cell[0]});
  CHECK(id == identity_functor(w.cat));
  auto arrow = ordinal(1);
  auto crush = functor_from_generators(w, arrow, {0, 1}, {2, 2}, {arrow.id2(2)});
  CHECK(is_functor(w.cat, arrow, crush));
  CHECK_THROWS(functor_from_generators(w, w.cat, {0, 1},
                                       {w.gen1_cell[1], w.gen1_cell[0]},
                                       {w.gen2_cell[0]}));
}
