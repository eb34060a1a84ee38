// SPDX-License-Identifier: Apache-2.0
//
// Prints one line per acceptance criterion and exits non-zero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "graycat/checks.hpp"
#include "graycat/double.hpp"
#include "graycat/gray.hpp"

using namespace graycat;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

bool check_passes(const std::string& id,
                  const std::map<std::string, std::string>& params = {}) {
  return run_check(id, params).verdict == Verdict::pass;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Objects, non-identity 1-cells (monotone paths between distinct points) and
// non-identity 2-cells (pairs p != q of paths with the same ends, p above q).
std::array<long, 3> path_oracle(int n, int m) {
  long objects = (n + 1L) * (m + 1L), cells1 = 0, cells2 = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= m; ++b)
      for (int c = a; c <= n; ++c)
        for (int d = b; d <= m; ++d) {
          const int h = c - a, v = d - b;
          if (h + v == 0) continue;
          cells1 += binom(h + v, h);
          // Enumerate strings with h ones among h + v positions.
          std::vector<std::string> ps;
          for (unsigned mask = 0; mask < (1u << (h + v)); ++mask) {
            if (__builtin_popcount(mask) != h) continue;
            std::string s;
            for (int i = 0; i < h + v; ++i) s += (mask >> i) & 1 ? 'H' : 'V';
            ps.push_back(s);
          }
          for (const auto& p : ps)
            for (const auto& q : ps) {
              if (p == q) continue;
              int hp = 0, hq = 0;
              bool dom = true;
              for (int i = 0; i < h + v && dom; ++i) {
                hp += p[i] == 'H';
                hq += q[i] == 'H';
                dom = hp >= hq;
              }
              cells2 += dom;
            }
        }
  return {objects, cells1, cells2};
}

Outcome cell_counts() {
  bool ok = true;
  std::string note;
  const std::array<long, 3> expected[2] = {{4, 6, 1}, {6, 16, 5}};
  const int dims[2][2] = {{1, 1}, {2, 1}};
  for (int i = 0; i < 2; ++i) {
    const SimplexTensor t = tensor_simplices(dims[i][0], dims[i][1]);
    const std::array<long, 3> got{t.cat.num_objects(), t.cat.non_identity_cells1(),
                                  t.cat.non_identity_cells2()};
    const auto oracle = path_oracle(dims[i][0], dims[i][1]);
    ok = ok && got == expected[i] && oracle == expected[i];
    note += (i ? ", " : "") + std::string("(") + std::to_string(got[0]) + "," +
            std::to_string(got[1]) + "," + std::to_string(got[2]) + ")";
  }
  return {ok, note};
}

Outcome adjunction() {
  const auto r = verify_adjunction_counts(ordinal(1), ordinal(1), ordinal(1));
  const bool six = r.double_side == 6 && r.tensor_side == 6;
  return {six && check_passes("adjunction-counts"),
          "([1],[1],[1]) counts " + std::to_string(r.double_side) + "/" +
              std::to_string(r.tensor_side)};
}

Outcome pushout_chain() {
  const bool ok =
      check_passes("funny-equation", {{"n", "1"}, {"m", "1"}, {"k", "1"}}) &&
      check_passes("crush-product", {{"n", "1"}, {"m", "1"}, {"k", "1"}}) &&
      check_passes("crush-product", {{"n", "2"}, {"m", "1"}, {"k", "1"}}) &&
      check_passes("step2", {{"n", "1"}, {"m", "1"}, {"k", "1"}}) &&
      check_passes("step3", {{"n", "1"}, {"m", "1"}, {"k", "1"}, {"l", "0"}});
  return {ok, ""};
}

Outcome suite() {
  const PropertySuiteReport r = run_property_suite();
  return {r.pass() && r.instances >= 50,
          std::to_string(r.instances) + " instances, " +
              std::to_string(r.violations) + " violations"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "square as a colimit of nerves", 1,
       [] { return Outcome{check_passes("square-colimit"), ""}; }},
      {2, "globular sums as quotients of tensors", 10,
       [] { return Outcome{check_passes("quotient-prop"), ""}; }},
      {3, "iterated tensors are gaunt", 30,
       [] { return Outcome{check_passes("triple-gaunt"), ""}; }},
      {4, "cell counts of [1](x)[1] and [2](x)[1]", 0, cell_counts},
      {5, "op and co dualities", 10,
       [] { return Outcome{check_passes("duality"), ""}; }},
      {6, "rigidity of the tensor", 60,
       [] { return Outcome{check_passes("rigidity"), ""}; }},
      {7, "Cech nerve of the 1-core is Sq", 0,
       [] { return Outcome{check_passes("cech-equals-sq"), ""}; }},
      {8, "universal properties of Sq", 60,
       [] {
         return Outcome{check_passes("uni-prop-vertical") &&
                            check_passes("uni-prop-horizontal"),
                        ""};
       }},
      {9, "adjunction counts", 300, adjunction},
      {10, "pushout gluing chain", 300, pushout_chain},
      {11, "property suites", 0, suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("over time limit");
    }
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL")
              << "  " << c.name << " [" << time << "]"
              << (o.note.empty() ? "" : "  " + o.note) << "\n";
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
