// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "graycat/companion.hpp"

using namespace graycat;

namespace {

int non_identity_vertical(const DoubleCat& q, int src, int tgt) {
  for (int f = 0; f < q.num_vert(); ++f)
    if (!q.is_vid(f) && q.tables().vert[f] == std::array<int, 2>{src, tgt})
      return f;
  return -1;
}

std::vector<NamedDouble> companion_battery() {
  std::vector<NamedDouble> out = default_double_battery();
  const TwoCat e = build_globular_sum(GlobularSum::constant(1, 2));
  out.push_back({"Sq[1;2]", squares(e)});
  return out;
}

}  // namespace

TEST_CASE("companions in squares of [1]") {
  const DoubleCat q = squares(ordinal(1));
  const int f = non_identity_vertical(q, 0, 1);
  REQUIRE(f >= 0);
  const auto ws = find_companions(q, f);
  REQUIRE(ws.size() == 1);
  CHECK(is_companion_pair(q, ws.front()));
  CHECK_FALSE(q.is_hid(ws.front().F));

  // Identities are companions of identities.
  const auto& t = q.tables();
  for (int x = 0; x < q.num_objects(); ++x) {
    const int s = t.sq_vid[t.hid[x]];
    CHECK(is_companion_pair(q, {t.vid[x], t.hid[x], s, s}));
  }
  CHECK_THROWS_AS(is_companion_pair(q, {f, t.hid[0], ws[0].eta, ws[0].eps}),
                  MalformedBoundary);
}

TEST_CASE("no companions in a vertical inclusion") {
  const DoubleCat q = inclusion(ordinal(1), Direction::v);
  CHECK(find_companions(q, non_identity_vertical(q, 0, 1)).empty());
  const DoubleCat sub = comp_subobject(q, CompKind::vcomp);
  for (int f = 0; f < sub.num_vert(); ++f) CHECK(sub.is_vid(f));
}

TEST_CASE("composites of companions are companions") {
  const DoubleCat q = squares(ordinal(2));
  const int f = non_identity_vertical(q, 0, 1);
  const int g = non_identity_vertical(q, 1, 2);
  const auto wf = find_companions(q, f);
  const auto wg = find_companions(q, g);
  REQUIRE(wf.size() == 1);
  REQUIRE(wg.size() == 1);
  const int gf = q.vcomp_v(g, f);
  const int GF = q.hcomp_h(wg[0].F, wf[0].F);
  bool found = false;
  for (const auto& w : find_companions(q, gf)) found = found || w.F == GF;
  CHECK(found);

  for (const auto& [name, p] : companion_battery()) {
    CAPTURE(name);
    const auto cv = verticals_with_companions(p);
    const auto ch = companion_horizontals(p);
    for (const auto& e : p.structure().binary[0].entries)
      if (cv[e[0]] && cv[e[1]]) CHECK(cv[e[2]]);
    for (const auto& e : p.structure().binary[1].entries)
      if (ch[e[0]] && ch[e[1]]) CHECK(ch[e[2]]);
  }
}

TEST_CASE("companions are unique up to invertible squares") {
  for (const auto& [name, p] : companion_battery())
    for (int f = 0; f < p.num_vert(); ++f) {
      const auto ws = find_companions(p, f);
      for (const auto& a : ws)
        for (const auto& b : ws) {
          CAPTURE(name);
          CHECK(companions_isomorphic(p, a.F, b.F));
        }
    }
}

TEST_CASE("companion subobjects") {
  for (const auto& g : {GlobularSum::simplex(1), GlobularSum::simplex(2),
                        GlobularSum::constant(1, 1)}) {
    const DoubleCat s = squares(build_globular_sum(g));
    CHECK(isomorphic(comp_subobject(s, CompKind::vcomp), s));
    CHECK(isomorphic(comp_subobject(s, CompKind::hcomp), s));
  }
  for (const auto& [name, p] : companion_battery()) {
    CAPTURE(name);
    CHECK_NOTHROW(comp_subobject(p, CompKind::vcomp).validate());
    CHECK_NOTHROW(comp_subobject(p, CompKind::hcomp).validate());
    if (is_complete(p, Completeness::locally))
      CHECK(is_complete(comp_core(p), Completeness::fully));
  }
  const DoubleCat core =
      comp_core(squares(build_globular_sum(GlobularSum::constant(1, 1))));
  CHECK(is_complete(core, Completeness::fully));
}

TEST_CASE("vertical universal property of squares") {
  const auto r = verify_universal_property(
      ordinal(1), inclusion(ordinal(1), Direction::v), Side::vertical);
  CHECK(r.pass());
  CHECK(r.expected_image == 2);
  CHECK(r.source_maps == 2);
  CHECK(verify_universal_property(
            ordinal(1),
            squares(build_globular_sum(GlobularSum::constant(1, 1))),
            Side::vertical)
            .pass());
  for (const auto& g : {GlobularSum::simplex(1), GlobularSum::simplex(2),
                        GlobularSum::constant(1, 1)})
    for (const auto& [name, q] : default_double_battery()) {
      CAPTURE(g.name());
      CAPTURE(name);
      CHECK(verify_universal_property(build_globular_sum(g), q, Side::vertical)
                .pass());
    }
}

TEST_CASE("horizontal universal property of squares") {
  CHECK(verify_universal_property(ordinal(1), squares(ordinal(1)),
                                  Side::horizontal)
            .pass());
  for (const auto& g : {GlobularSum::simplex(1), GlobularSum::simplex(2),
                        GlobularSum::constant(1, 1)})
    for (const auto& [name, q] : default_double_battery()) {
      CAPTURE(g.name());
      CAPTURE(name);
      CHECK(verify_universal_property(build_globular_sum(g), q,
                                      Side::horizontal)
                .pass());
    }
  // A square with an inverse over identity sides breaks local completeness.
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
  CHECK_THROWS_AS(verify_universal_property(ordinal(1),
                                            DoubleCat::from_tables(t),
                                            Side::horizontal),
                  HypothesisViolation);
}
