// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "graycat/structure.hpp"

using namespace graycat;

namespace {

// Directed graph: sort 0 = vertices, sort 1 = edges, ops src/tgt.
FiniteStructure graph(int v, const std::vector<std::pair<int, int>>& edges) {
  FiniteStructure g;
  g.add_sort(v);
  g.add_sort(static_cast<int>(edges.size()));
  std::vector<int> s, t;
  for (auto [a, b] : edges) {
    s.push_back(a);
    t.push_back(b);
  }
  g.add_unary(1, 0, s);
  g.add_unary(1, 0, t);
  return g;
}

// Brute-force count of graph homomorphisms.
std::size_t brute(const std::vector<std::pair<int, int>>& src_edges, int sv,
                  const std::vector<std::pair<int, int>>& tgt_edges, int tv) {
  std::size_t count = 0;
  std::vector<int> h(sv, 0);
  while (true) {
    std::size_t ways = 1;
    for (auto [a, b] : src_edges) {
      std::size_t k = 0;
      for (auto [c, d] : tgt_edges)
        if (c == h[a] && d == h[b]) ++k;
      ways *= k;
    }
    count += ways;
    int i = 0;
    while (i < sv && ++h[i] == tv) h[i++] = 0;
    if (i == sv) break;
  }
  return count;
}

}  // namespace

TEST_CASE("graph homomorphism counts match brute force") {
  const std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}};
  const std::vector<std::pair<int, int>> cyc{{0, 1}, {1, 0}, {1, 1}, {0, 1}};
  auto a = graph(3, path);
  auto b = graph(2, cyc);
  CHECK(count_homomorphisms(a, b) == brute(path, 3, cyc, 2));
  CHECK(count_homomorphisms(b, b) == brute(cyc, 2, cyc, 2));
}

TEST_CASE("isomorphism search and pinning") {
  auto a = graph(3, {{0, 1}, {1, 2}});
  auto b = graph(3, {{2, 0}, {1, 2}});
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso);
  CHECK(is_homomorphism(a, b, *iso));
  CHECK((*iso)[0] == std::vector<int>{1, 2, 0});
  auto c = graph(3, {{0, 1}, {0, 2}});
  CHECK_FALSE(find_isomorphism(a, c));

  Assignment pin{{-1, -1, 0}, {-1, -1}};
  SearchOptions opt;
  opt.pinned = &pin;
  // Paths of length 2 in the complete graph with loops on two vertices,
  // ending at vertex 0.
  auto k2 = graph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(count_homomorphisms(a, k2, opt) == 4);
}

TEST_CASE("node budget is enforced") {
  auto k2 = graph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  auto big = graph(12, {});
  SearchOptions opt;
  opt.node_budget = 100;
  CHECK_THROWS_AS(count_homomorphisms(big, k2, opt), BudgetExceeded);
}
