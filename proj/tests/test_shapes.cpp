// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "graycat/shapes.hpp"

using namespace graycat;

namespace {

std::vector<GlobularSum> all_shapes(int max_n, int max_w) {
  std::vector<GlobularSum> out;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<int> w(n, 0);
    while (true) {
      out.push_back({n, w});
      int k = n - 1;
      while (k >= 0 && w[k] == max_w) w[k--] = 0;
      if (k < 0) break;
      ++w[k];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("small globular sums") {
  auto t = build_globular_sum(GlobularSum::simplex(0));
  CHECK(t.num_objects() == 1);
  CHECK(t.num_cells1() == 1);
  CHECK(t.num_cells2() == 1);

  GlobularSum g{2, {1, 0}};
  auto c = build_globular_sum(g);
  CHECK(c.hom(0, 1).size() == 2);
  CHECK(c.hom(1, 2).size() == 1);
  CHECK(c.hom(0, 2).size() == 2);
  CHECK(c.non_identity_cells2() == 2);  // one in Hom(0,1), one in Hom(0,2)

  auto w = build_globular_sum(GlobularSum::constant(1, 2));
  CHECK(w.hom(0, 1).size() == 3);
  CHECK(w.non_identity_cells2() == 3);
}

TEST_CASE("hom formula, gauntness and presentations agree") {
  for (const auto& g : all_shapes(3, 2)) {
    CAPTURE(g.name());
    auto c = build_globular_sum(g);
    CHECK(is_gaunt(c));
    for (int i = 0; i <= g.n; ++i)
      for (int j = 0; j <= g.n; ++j) {
        std::size_t cells = i <= j ? 1 : 0;
        std::size_t pairs = cells;
        for (int k = i; k < j; ++k) {
          cells *= g.widths[k] + 1;
          pairs *= (g.widths[k] + 1) * (g.widths[k] + 2) / 2;
        }
        CHECK(c.hom(i, j).size() == cells);
        std::size_t twocells = 0;
        for (int f : c.hom(i, j))
          for (int h : c.hom(i, j)) twocells += c.hom2(f, h).size();
        CHECK(twocells == pairs);
      }
    if (g.n <= 2) CHECK(isomorphic(normalize(present(g)).cat, c));
  }
}

TEST_CASE("duals of globular sums") {
  GlobularSum g{2, {1, 0}};
  CHECK(dual(g, Dual::op) == GlobularSum{2, {0, 1}});
  CHECK(dual(g, Dual::co) == g);
  for (const auto& h : all_shapes(3, 2)) {
    CHECK(dual(dual(h, Dual::op), Dual::op) == h);
    CHECK(dual(dual(h, Dual::co), Dual::co) == h);
    if (h.n <= 2) {
      auto c = build_globular_sum(h);
      CHECK(isomorphic(dual_op(c), build_globular_sum(dual(h, Dual::op))));
      CHECK(isomorphic(dual_co(c), c));
    }
  }
}

TEST_CASE("names round-trip through the parser") {
  for (const auto& g : all_shapes(3, 2)) CHECK(parse_globular_sum(g.name()) == g);
  CHECK(parse_globular_sum("2;1,0") == GlobularSum{2, {1, 0}});
  CHECK(parse_globular_sum("[1;1]") == GlobularSum{1, {1}});
  CHECK_THROWS(parse_globular_sum("[2;(1)x]"));
  CHECK_THROWS(parse_globular_sum("[2;(1,0,1)]"));
}

TEST_CASE("truncated sites") {
  auto s = truncated_site(SiteFamily::theta2, 1, 0);
  CHECK(s.num_objects() == 2);
  const int one = s.find(GlobularSum::simplex(1));
  CHECK(s.hom(one, one).size() == 3);

  auto t = truncated_site(SiteFamily::theta2, 0, 0);
  CHECK(t.num_objects() == 1);
  CHECK(t.num_morphisms() == 1);

  auto d = truncated_site(SiteFamily::delta_square, 1, 0);
  CHECK(d.num_objects() == 4);
  const int b = d.find(1, 1);
  CHECK(d.hom(b, b).size() == 9);
}

TEST_CASE("site composition is associative and unital") {
  for (auto site : {truncated_site(SiteFamily::theta2, 2, 1),
                    truncated_site(SiteFamily::delta_square, 2, 0)}) {
    const int n = site.num_objects();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int f : site.hom(a, b)) {
          CHECK(site.compose(f, site.identity(a)) == f);
          CHECK(site.compose(site.identity(b), f) == f);
          if (site.family() == SiteFamily::theta2)
            CHECK(is_functor(site.realization(a), site.realization(b),
                             site.functor(f)));
        }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; c += 2)
          for (int f : site.hom(a, b))
            for (int g : site.hom(b, c))
              for (int h : site.hom(c, (c + 1) % n))
                REQUIRE(site.compose(h, site.compose(g, f)) ==
                        site.compose(site.compose(h, g), f));
  }
}
