// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include <algorithm>
#include <numeric>

#include "graycat/presheaf.hpp"

using namespace graycat;

namespace {

std::shared_ptr<const Site> site22() {
  static auto s = std::make_shared<const Site>(
      truncated_site(SiteFamily::theta2, 2, 2));
  return s;
}

TwoCat shape(const char* name) {
  return build_globular_sum(parse_globular_sum(name));
}

// The lax square presented directly: H then V => V then H.
TwoCat lax_square() {
  Presentation p;
  for (const char* o : {"00", "10", "01", "11"}) p.add_object(o);
  const int h0 = p.add_gen1(0, 1, "h0");
  const int v1 = p.add_gen1(1, 3, "v1");
  const int v0 = p.add_gen1(0, 2, "v0");
  const int h1 = p.add_gen1(2, 3, "h1");
  p.add_gen2(0, 3, {h0, v1}, {v0, h1}, "sq");
  return normalize(p).cat;
}

TwoCat walking_iso() {
  TwoCatBuilder b;
  b.add_object();
  b.add_object();
  const int f = b.add_cell1(0, 1, "f");
  const int g = b.add_cell1(1, 0, "g");
  b.set_comp1(g, f, b.id1(0));
  b.set_comp1(f, g, b.id1(1));
  b.set_hcomp(b.id2(g), b.id2(f), b.id2(b.id1(0)));
  b.set_hcomp(b.id2(f), b.id2(g), b.id2(b.id1(1)));
  return b.build();
}

bool injective_on_cells(const TwoFunctor& f) {
  for (const auto* v : {&f.obj, &f.cell1, &f.cell2}) {
    std::vector<int> s = *v;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("nerve levels") {
  auto s = site22();
  auto n1 = nerve(ordinal(1), s);
  CHECK(n1.presheaf.size(s->find(GlobularSum::simplex(1))) == 3);
  CHECK(n1.presheaf.size(s->find(GlobularSum::constant(1, 1))) == 3);
  auto n0 = nerve(ordinal(0), s);
  for (int o = 0; o < s->num_objects(); ++o) CHECK(n0.presheaf.size(o) == 1);
  auto nw = nerve(shape("[1;1]"), s);
  const int cell = s->find(GlobularSum::constant(1, 1));
  int nondegenerate = 0;
  for (const auto& e : nw.elements[cell]) nondegenerate += injective_on_cells(e);
  CHECK(nondegenerate == 1);
}

TEST_CASE("nerves are functorial and Segal") {
  auto s = std::make_shared<const Site>(truncated_site(SiteFamily::theta2, 2, 1));
  for (const auto& c : {ordinal(2), shape("[1;1]"), lax_square()}) {
    auto n = nerve(c, s);
    n.presheaf.validate();
    CHECK(is_segal_theta2(n.presheaf));
  }
}

TEST_CASE("recognition round-trips") {
  auto s = site22();
  for (const auto& c : {shape("[2;(1,0)]"), shape("[1;2]"), lax_square(),
                        cartesian_product(ordinal(1), ordinal(1))}) {
    auto n = nerve(c, s);
    auto back = presheaf_to_twocat(n.presheaf);
    CHECK(isomorphic(back, c));
    CHECK(are_isomorphic(nerve(back, s).presheaf, n.presheaf));
  }
}

TEST_CASE("coequalizer of the endpoints leaves the Segal locus") {
  auto s = site22();
  auto pt = nerve(ordinal(0), s);
  auto arrow = nerve(ordinal(1), s);
  Diagram d;
  d.nodes = {&pt.presheaf, &arrow.presheaf};
  auto a = ordinal(1);
  d.edges.push_back({0, 1, nerve_map(pt, arrow, TwoFunctor{{0}, {0}, {0}})});
  d.edges.push_back({0, 1, nerve_map(pt, arrow, TwoFunctor{{1}, {1}, {1}})});
  auto c = finite_colimit(d);
  CHECK(c.object.size(s->find(GlobularSum::simplex(0))) == 1);
  // Level [1]: the three maps [1] -> [1] with both constants identified.
  CHECK(c.object.size(s->find(GlobularSum::simplex(1))) == 2);
  std::string reason;
  CHECK_FALSE(is_segal_theta2(c.object, &reason));
  CHECK_FALSE(reason.empty());
  CHECK_THROWS_AS(presheaf_to_twocat(c.object), RecognitionError);
}

TEST_CASE("identity pushout") {
  auto s = site22();
  auto x = nerve(shape("[1;1]"), s);
  PresheafMap id;
  for (int o = 0; o < s->num_objects(); ++o) {
    id.components.emplace_back(x.presheaf.size(o));
    std::iota(id.components.back().begin(), id.components.back().end(), 0);
  }
  Diagram d;
  d.nodes = {&x.presheaf, &x.presheaf, &x.presheaf};
  d.edges = {{0, 1, id}, {0, 2, id}};
  auto c = finite_colimit(d);
  CHECK(are_isomorphic(c.object, x.presheaf));
}

TEST_CASE("square as a colimit of nerves") {
  auto s = site22();
  auto tri = nerve(ordinal(2), s);
  auto arrow = nerve(ordinal(1), s);
  auto cell = nerve(shape("[1;1]"), s);
  const TwoCat t2 = ordinal(2);
  const TwoCat w = shape("[1;1]");
  GlobularIndex iw(parse_globular_sum("[1;1]"));
  // [1] -> [2] as the long edge; [1] -> [1;1] as the lower or upper 1-cell.
  const TwoFunctor long_edge{{0, 2}, {0, 2, t2.hom(0, 2)[0]},
                             {0, 2, t2.id2(t2.hom(0, 2)[0])}};
  auto boundary = [&](int k) {
    const int f = iw.cell1(0, 1, {k});
    return TwoFunctor{{0, 1}, {0, 1, f}, {0, 1, w.id2(f)}};
  };
  Diagram d;
  d.nodes = {&tri.presheaf, &arrow.presheaf, &cell.presheaf, &arrow.presheaf,
             &tri.presheaf};
  d.edges = {{1, 0, nerve_map(arrow, tri, long_edge)},
             {1, 2, nerve_map(arrow, cell, boundary(0))},
             {3, 2, nerve_map(arrow, cell, boundary(1))},
             {3, 4, nerve_map(arrow, tri, long_edge)}};
  auto c = finite_colimit(d);
  auto target = nerve(lax_square(), s);
  CHECK(are_isomorphic(c.object, target.presheaf));
  CHECK(is_segal_theta2(c.object));
  CHECK(isomorphic(presheaf_to_twocat(c.object), lax_square()));
  CHECK(c.object.size(s->find(GlobularSum::simplex(1))) == 10);
  CHECK(c.object.size(s->find(GlobularSum::constant(1, 1))) == 11);
  CHECK(check_colimit_universal(d, c, nerve(ordinal(1), s).presheaf));
  CHECK(check_colimit_universal(d, c, cell.presheaf));
}

TEST_CASE("completeness proxies") {
  auto s = site22();
  CHECK(is_complete(nerve(shape("[1;1]"), s).presheaf, CompletenessLevel::objects));
  CHECK(is_complete(nerve(shape("[1;1]"), s).presheaf, CompletenessLevel::horizontal));
  CHECK(is_complete(nerve(ordinal(2), s).presheaf, CompletenessLevel::objects));
  auto iso = walking_iso();
  CHECK_FALSE(is_gaunt(iso));
  CHECK_FALSE(is_complete(nerve(iso, s).presheaf, CompletenessLevel::objects));
  // Mapping out of the walking isomorphism detects the same thing.
  CHECK(count_functors(iso, shape("[1;1]")) == 2);
  CHECK(count_functors(iso, iso) > 2);
}

TEST_CASE("isomorphism detects different nerves") {
  auto s = site22();
  CHECK_FALSE(are_isomorphic(nerve(cartesian_product(ordinal(1), ordinal(1)), s).presheaf,
                             nerve(lax_square(), s).presheaf));
}
