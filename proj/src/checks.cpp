// SPDX-License-Identifier: Apache-2.0
#include "graycat/checks.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "graycat/companion.hpp"
#include "graycat/double.hpp"
#include "graycat/gray.hpp"
#include "graycat/presheaf.hpp"
#include "json.hpp"

namespace graycat {

using nlohmann::json;
using nlohmann::ordered_json;

Config Config::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: not an object");
  Config c;
  for (const auto& [key, value] : j.items()) {
    if (key == "version") {
      c.version = value.get<int>();
      if (c.version != 1)
        throw std::invalid_argument("config: unsupported version");
    } else if (key == "site") {
      for (const auto& [k, v] : value.items()) {
        if (k == "max_n")
          c.site_max_n = v.get<int>();
        else if (k == "max_w")
          c.site_max_w = v.get<int>();
        else
          throw std::invalid_argument("config: unknown key site." + k);
      }
    } else if (key == "budget") {
      for (const auto& [k, v] : value.items()) {
        if (k == "search_nodes")
          c.budget.search_nodes = v.get<std::size_t>();
        else if (k == "cells")
          c.budget.cells = v.get<std::size_t>();
        else
          throw std::invalid_argument("config: unknown key budget." + k);
      }
    } else {
      throw std::invalid_argument("config: unknown key " + key);
    }
  }
  if (c.site_max_n < 2 || c.site_max_w < 2)
    throw std::invalid_argument("config: the site must contain [2] and [1;2]");
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string Config::to_json_text() const {
  json j;
  j["version"] = version;
  j["site"] = {{"max_n", site_max_n}, {"max_w", site_max_w}};
  j["budget"] = {{"search_nodes", budget.search_nodes},
                 {"cells", budget.cells}};
  return j.dump(2);
}

std::uint64_t Config::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : to_json_text()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

int exit_code(Verdict v) {
  return v == Verdict::pass ? 0 : v == Verdict::fail ? 1 : 2;
}

namespace {

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string report_json(const CheckReport& r, bool timings) {
  ordered_json j;
  j["id"] = r.id;
  j["statement"] = r.statement;
  j["verdict"] = verdict_name(r.verdict);
  j["params"] = r.params;
  ordered_json d = ordered_json::array();
  for (const auto& [k, v] : r.details) d.push_back({k, v});
  j["details"] = d;
  j["config_hash"] = hex(r.config_hash);
  if (timings) j["seconds"] = r.seconds;
  return j.dump(2);
}

std::string report_text(const CheckReport& r, bool timings) {
  std::ostringstream out;
  out << r.id << ": " << verdict_name(r.verdict) << "\n  " << r.statement
      << "\n";
  for (const auto& [k, v] : r.params) out << "  param " << k << "=" << v << "\n";
  for (const auto& [k, v] : r.details) out << "  " << k << ": " << v << "\n";
  out << "  config " << hex(r.config_hash) << "\n";
  if (timings) out << "  seconds " << r.seconds << "\n";
  return out.str();
}

namespace {

using Params = std::map<std::string, std::string>;

int get_int(const Params& p, const std::string& key, int fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != it->second.size() || v < 0 || v > 6)
    throw std::invalid_argument("parameter " + key + " must be in 0..6");
  return v;
}

GlobularSum get_shape(const Params& p, const std::string& key,
                      const GlobularSum& fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  GlobularSum g = parse_globular_sum(it->second);
  g.check();
  return g;
}

struct Context {
  const Params& params;
  const RunOptions& opt;
  CheckReport& report;

  void add(const std::string& k, const std::string& v) {
    report.details.emplace_back(k, v);
  }
  void add(const std::string& k, std::size_t v) { add(k, std::to_string(v)); }
  void add_bool(const std::string& k, bool v) { add(k, v ? "yes" : "no"); }
  bool add_battery(const std::string& prefix, const BatteryResult& r) {
    for (const auto& e : r.entries)
      add(prefix + " " + e.name,
          "candidate " + std::to_string(e.candidate_maps) + ", cone " +
              std::to_string(e.cone_maps) +
              (e.injective ? ", injective" : ", not injective"));
    return r.pass();
  }
};

std::vector<std::array<int, 2>> pairs_or(const Params& p,
                                         std::vector<std::array<int, 2>> d) {
  if (p.count("n") || p.count("m"))
    return {{get_int(p, "n", 1), get_int(p, "m", 1)}};
  return d;
}

std::shared_ptr<const Site> config_site(const Config& c) {
  return std::make_shared<const Site>(truncated_site(
      SiteFamily::theta2, c.site_max_n, c.site_max_w, c.budget));
}

Verdict square_colimit(Context& cx) {
  auto s = config_site(cx.opt.config);
  const TwoCat t2 = ordinal(2);
  const GlobularSum w{1, {1}};
  const TwoCat cell = build_globular_sum(w);
  const GlobularIndex iw(w);
  auto tri = nerve(t2, s);
  auto arrow = nerve(ordinal(1), s);
  auto cn = nerve(cell, s);
  const int long_edge_cell = t2.hom(0, 2)[0];
  const TwoFunctor long_edge{{0, 2},
                             {t2.id1(0), t2.id1(2), long_edge_cell},
                             {t2.id2(t2.id1(0)), t2.id2(t2.id1(2)),
                              t2.id2(long_edge_cell)}};
  auto boundary = [&](int k) {
    const int f = iw.cell1(0, 1, {k});
    return TwoFunctor{{0, 1},
                      {cell.id1(0), cell.id1(1), f},
                      {cell.id2(cell.id1(0)), cell.id2(cell.id1(1)),
                       cell.id2(f)}};
  };
  const TwoCat one = ordinal(1);
  for (const auto& f : {long_edge}) require_functor(one, t2, f);
  require_functor(one, cell, boundary(0));
  require_functor(one, cell, boundary(1));
  Diagram d;
  d.nodes = {&tri.presheaf, &arrow.presheaf, &cn.presheaf, &arrow.presheaf,
             &tri.presheaf};
  d.edges = {{1, 0, nerve_map(arrow, tri, long_edge)},
             {1, 2, nerve_map(arrow, cn, boundary(0))},
             {3, 2, nerve_map(arrow, cn, boundary(1))},
             {3, 4, nerve_map(arrow, tri, long_edge)}};
  const Colimit c = finite_colimit(d);
  const TwoCat target = cx.opt.falsify
                            ? cartesian_product(ordinal(1), ordinal(1))
                            : tensor_simplices(1, 1).cat;
  const bool iso = are_isomorphic(c.object, nerve(target, s).presheaf);
  cx.add("site objects", static_cast<std::size_t>(s->num_objects()));
  std::string sizes;
  for (int a = 0; a < s->num_objects(); ++a)
    sizes += (a ? " " : "") + s->object_name(a) + ":" +
             std::to_string(c.object.size(a));
  cx.add("colimit sizes", sizes);
  cx.add_bool("isomorphic to the nerve of the lax square", iso);
  return iso ? Verdict::pass : Verdict::fail;
}

Verdict quotient_prop(Context& cx) {
  const auto battery = default_battery();
  bool ok = true;
  for (auto [n, m] : pairs_or(cx.params, {{1, 1}, {2, 1}, {1, 2}}))
    for (bool right : {false, true}) {
      const std::string tag = "(" + std::to_string(n) + "," +
                              std::to_string(m) + (right ? ") right" : ") left");
      ok = cx.add_battery(tag, verify_quotient_square(n, m, right, battery)) &&
           ok;
    }
  return ok ? Verdict::pass : Verdict::fail;
}

Verdict funny_equation(Context& cx) {
  const int n = get_int(cx.params, "n", 1), m = get_int(cx.params, "m", 1),
            k = get_int(cx.params, "k", 1);
  const FunnyCollapse fc = funny_collapse(n, m, k);
  cx.add("factorizations", fc.factorizations);
  const bool ok =
      cx.add_battery("pushout", verify_funny_square(n, m, k, default_battery()));
  return ok && fc.factorizations == 1 ? Verdict::pass : Verdict::fail;
}

Verdict crush_product(Context& cx) {
  std::vector<std::array<int, 3>> cases{{1, 1, 1}, {2, 1, 1}};
  if (cx.params.count("n") || cx.params.count("m") || cx.params.count("k"))
    cases = {{get_int(cx.params, "n", 1), get_int(cx.params, "m", 1),
              get_int(cx.params, "k", 1)}};
  bool ok = true;
  for (auto [n, m, k] : cases)
    ok = cx.add_battery("(" + std::to_string(n) + "," + std::to_string(m) +
                            "," + std::to_string(k) + ")",
                        verify_crush_product(n, m, k, default_battery())) &&
         ok;
  return ok ? Verdict::pass : Verdict::fail;
}

Verdict step2(Context& cx) {
  const Step2Report r =
      verify_step2(get_int(cx.params, "n", 1), get_int(cx.params, "m", 1),
                   get_int(cx.params, "k", 1), default_battery());
  const bool a = cx.add_battery("left", r.left);
  const bool b = cx.add_battery("right", r.right);
  return a && b ? Verdict::pass : Verdict::fail;
}

Verdict step3(Context& cx) {
  const BatteryResult r = verify_step3(
      get_int(cx.params, "n", 1), get_int(cx.params, "m", 1),
      get_int(cx.params, "k", 1), get_int(cx.params, "l", 0),
      default_double_battery());
  return cx.add_battery("pushout", r) ? Verdict::pass : Verdict::fail;
}

Verdict duality(Context& cx) {
  std::vector<std::pair<GlobularSum, GlobularSum>> cases{
      {GlobularSum::simplex(1), GlobularSum::simplex(1)},
      {GlobularSum::simplex(2), GlobularSum::simplex(1)},
      {GlobularSum::constant(1, 1), GlobularSum::simplex(1)}};
  if (cx.params.count("A") || cx.params.count("B"))
    cases = {{get_shape(cx.params, "A", GlobularSum::simplex(1)),
              get_shape(cx.params, "B", GlobularSum::simplex(1))}};
  bool ok = true;
  for (const auto& [a, b] : cases) {
    const DualityReport r = verify_duality(a, b);
    cx.add(a.name() + " (x) " + b.name(),
           std::string("op ") + (r.op ? "yes" : "no") + ", co " +
               (r.co ? "yes" : "no"));
    ok = ok && r.pass();
  }
  return ok ? Verdict::pass : Verdict::fail;
}

Verdict rigidity(Context& cx) {
  const std::size_t count = verify_rigidity(
      {GlobularSum::simplex(0), GlobularSum::simplex(1),
       GlobularSum::constant(1, 1)},
      cx.opt.config.budget);
  cx.add("natural endomorphisms", count);
  return count == 1 ? Verdict::pass : Verdict::fail;
}

Verdict triple_gaunt(Context& cx) {
  bool ok = true;
  const int top = get_int(cx.params, "max", 3);
  for (int n = 0; n <= top; ++n)
    for (int m = 0; m <= top; ++m) {
      const bool g = is_gaunt(tensor_simplices(n, m, cx.opt.config.budget).cat);
      if (!g) cx.add("not gaunt", std::to_string(n) + "," + std::to_string(m));
      ok = ok && g;
    }
  cx.add("tensors of two simplices checked",
         static_cast<std::size_t>((top + 1) * (top + 1)));
  const GrayTensor t = tensor_triple(1, 1, 1);
  const bool g3 = is_gaunt(t.result.cat);
  cx.add_bool("[1] (x) [1] (x) [1] gaunt", g3);
  cx.add("[1] (x) [1] (x) [1] cells",
         std::to_string(t.result.cat.num_objects()) + ", " +
             std::to_string(t.result.cat.non_identity_cells1()) + ", " +
             std::to_string(t.result.cat.non_identity_cells2()));
  const bool assoc = verify_associativity(1, 1, 1, cx.opt.config.budget);
  cx.add_bool("both bracketings isomorphic", assoc);
  return ok && g3 && assoc ? Verdict::pass : Verdict::fail;
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

Verdict adjunction_counts(Context& cx) {
  std::vector<TwoCat> cs{ordinal(0), ordinal(1)}, ds = cs;
  std::vector<std::pair<std::string, TwoCat>> es{
      {"[1]", ordinal(1)},
      {"[2]", ordinal(2)},
      {"[1;1]", build_globular_sum(GlobularSum::constant(1, 1))},
      {"[1](x)[1]", tensor_simplices(1, 1).cat}};
  if (cx.params.count("C"))
    cs = {build_globular_sum(get_shape(cx.params, "C", {}))};
  if (cx.params.count("D"))
    ds = {build_globular_sum(get_shape(cx.params, "D", {}))};
  if (cx.params.count("E")) {
    const GlobularSum e = get_shape(cx.params, "E", {});
    es = {{e.name(), build_globular_sum(e)}};
  }
  bool ok = true;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < ds.size(); ++j)
      for (const auto& [name, e] : es) {
        AdjunctionCounts r;
        if (cx.opt.falsify) {
          r.double_side = count_double_functors(
              product(inclusion(cs[i], Direction::h),
                      inclusion(ds[j], Direction::v)),
              squares(e));
          r.tensor_side = count_functors(cartesian_product(cs[i], ds[j]), e);
        } else {
          r = verify_adjunction_counts(cs[i], ds[j], e);
        }
        cx.add("C" + std::to_string(i) + " D" + std::to_string(j) + " E " +
                   name,
               std::to_string(r.double_side) + " / " +
                   std::to_string(r.tensor_side));
        ok = ok && r.pass();
      }
  return ok ? Verdict::pass : Verdict::fail;
}

Verdict uni_prop(Context& cx, Side side) {
  std::vector<std::pair<std::string, DoubleCat>> qs;
  if (side == Side::vertical) {
    qs.push_back({"[1]_v", inclusion(ordinal(1), Direction::v)});
    qs.push_back({"Sq[1]", squares(ordinal(1))});
    qs.push_back(
        {"Sq[1;1]", squares(build_globular_sum(GlobularSum::constant(1, 1)))});
  } else {
    qs.push_back({"Sq[1]", squares(ordinal(1))});
  }
  const TwoCat c = build_globular_sum(get_shape(cx.params, "C", GlobularSum::simplex(1)));
  bool ok = true;
  for (const auto& [name, q] : qs) {
    const UniversalPropertyReport r = verify_universal_property(c, q, side);
    cx.add(name, "maps " + std::to_string(r.source_maps) + ", restricted " +
                     std::to_string(r.restricted) + ", expected image " +
                     std::to_string(r.expected_image) +
                     (r.image_matches ? ", image matches" : ", image differs"));
    ok = ok && r.pass();
  }
  return ok ? Verdict::pass : Verdict::fail;
}

Verdict comp_core_complete(Context& cx) {
  std::vector<NamedDouble> qs = default_double_battery();
  const TwoCat iso = walking_iso();
  qs.push_back({"J_h", inclusion(iso, Direction::h)});
  qs.push_back({"J_v", inclusion(iso, Direction::v)});
  qs.push_back({"<1,1>", grid(1, 1)});
  qs.push_back({"Sq([1](x)[1])", squares(tensor_simplices(1, 1).cat)});
  std::size_t tested = 0;
  bool ok = true;
  for (const auto& [name, q] : qs) {
    if (!is_complete(q, Completeness::locally)) continue;
    ++tested;
    const DoubleCat core = comp_core(q);
    const bool full = is_complete(core, Completeness::fully);
    cx.add(name, std::string(is_complete(q, Completeness::fully)
                                 ? "complete"
                                 : "not complete") +
                     ", core " + (full ? "complete" : "not complete"));
    ok = ok && full;
  }
  cx.add("locally complete inputs", tested);
  return ok ? Verdict::pass : Verdict::fail;
}

Verdict cech_equals_sq(Context& cx) {
  std::vector<GlobularSum> shapes{GlobularSum::simplex(1),
                                  GlobularSum::simplex(2),
                                  GlobularSum::constant(1, 1)};
  if (cx.params.count("C")) shapes = {get_shape(cx.params, "C", {})};
  bool ok = true;
  for (const auto& g : shapes) {
    const TwoCat e = build_globular_sum(g);
    const Truncated tr = truncate(e, Truncation::tau1);
    const DoubleCat n = cech_nerve(tr.cat, e, tr.map);
    const DoubleCat s =
        cx.opt.falsify ? inclusion(e, Direction::v) : squares(e);
    bool levels = true;
    std::string counts;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) {
        const std::size_t a = n.level_count(i, j), b = s.level_count(i, j);
        levels = levels && a == b;
        counts += (counts.empty() ? "" : " ") + std::to_string(a);
      }
    const bool iso = isomorphic(n, s);
    cx.add(g.name() + " levels", counts);
    cx.add_bool(g.name() + " isomorphic", iso && levels);
    ok = ok && iso && levels;
  }
  return ok ? Verdict::pass : Verdict::fail;
}

using CheckFn = std::function<Verdict(Context&)>;

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {{"square-colimit",
        "The lax square is the colimit of two triangles glued to a 2-cell "
        "along their long edges, computed on nerves.",
        {},
        true},
       square_colimit},
      {{"quotient-prop",
        "[n;m] is the quotient of [n] (x) [m] and of [m]^op (x) [n] "
        "collapsing the slices to points.",
        {"n", "m"},
        false},
       quotient_prop},
      {{"funny-equation",
        "tau0[n] x [k] glued to [n] (x) ([m] x [k]) is [n;m] (x) [k].",
        {"n", "m", "k"},
        false},
       funny_equation},
      {{"crush-product",
        "tau1[n;m] (x) [k] -> [n;m] (x) [k] over tau1[n;m] -> [n;m] is a "
        "pushout.",
        {"n", "m", "k"},
        false},
       crush_product},
      {{"step2",
        "Both gluings of tau0[n] x [m] compute [n;k] (x) [m].",
        {"n", "m", "k"},
        false},
       step2},
      {{"step3",
        "[n;m]_h x [k;l]_v is the pushout of <n,m> x [k;l]_v and "
        "tau0[n]_h x tau1[k;l]_v.",
        {"n", "m", "k", "l"},
        false},
       step3},
      {{"duality",
        "(A (x) B)^op = B^op (x) A^op and (A (x) B)^co = B^co (x) A^co.",
        {"A", "B"},
        false},
       duality},
      {{"rigidity",
        "The tensor functor has no natural endomorphism besides the "
        "identity.",
        {},
        false},
       rigidity},
      {{"triple-gaunt",
        "Tensors of simplices and of three arrows are gaunt, and both "
        "bracketings agree.",
        {"max"},
        false},
       triple_gaunt},
      {{"adjunction-counts",
        "Double functors C_h x D_v -> Sq(E) match 2-functors C (x) D -> E.",
        {"C", "D", "E"},
        true},
       adjunction_counts},
      {{"uni-prop-vertical",
        "Restriction along C_v -> Sq(C) is injective with image the maps "
        "hitting verticals that admit companions.",
        {"C"},
        false},
       [](Context& cx) { return uni_prop(cx, Side::vertical); }},
      {{"uni-prop-horizontal",
        "Restriction along C_h -> Sq(C) is injective with image the maps "
        "hitting companions, for locally complete targets.",
        {"C"},
        false},
       [](Context& cx) { return uni_prop(cx, Side::horizontal); }},
      {{"comp-core-complete",
        "The companion core of a locally complete double category is "
        "complete.",
        {},
        false},
       comp_core_complete},
      {{"cech-equals-sq",
        "The Cech nerve of tau1 C -> C is Sq(C).",
        {"C"},
        true},
       cech_equals_sq},
  };
  return e;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> r = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return r;
}

CheckReport run_check(const std::string& id, const Params& params,
                      const RunOptions& opt) {
  const Entry* entry = nullptr;
  for (const auto& e : entries())
    if (e.info.id == id) entry = &e;
  if (!entry) throw std::invalid_argument("unknown check: " + id);
  for (const auto& [k, v] : params) {
    const auto& ok = entry->info.params;
    if (std::find(ok.begin(), ok.end(), k) == ok.end())
      throw std::invalid_argument("check " + id + " takes no parameter " + k);
  }
  if (opt.falsify && !entry->info.can_falsify)
    throw std::invalid_argument("check " + id + " has no falsified candidate");

  CheckReport r;
  r.id = id;
  r.statement = entry->info.statement;
  r.params = params;
  r.config_hash = opt.config.hash();
  if (opt.falsify) r.details.emplace_back("mode", "falsified candidate");
  Context cx{params, opt, r};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.verdict = entry->fn(cx);
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::inconclusive;
    r.details.emplace_back("budget exceeded", e.what());
  } catch (const NonConfluence& e) {
    r.verdict = Verdict::inconclusive;
    r.details.emplace_back("rewriting did not converge", e.what());
  } catch (const HypothesisViolation& e) {
    r.verdict = Verdict::fail;
    r.details.emplace_back("hypothesis violated", e.what());
  } catch (const AxiomViolation& e) {
    r.verdict = Verdict::fail;
    r.details.emplace_back("axiom violated", e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

Verdict Summary::verdict() const {
  Verdict v = Verdict::pass;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::fail) return Verdict::fail;
    if (r.verdict == Verdict::inconclusive) v = Verdict::inconclusive;
  }
  return v;
}

Summary run_all(const RunOptions& opt, int workers,
                const std::string& falsify_id) {
  const auto& reg = check_registry();
  if (!falsify_id.empty()) {
    bool known = false;
    for (const auto& c : reg) known = known || c.id == falsify_id;
    if (!known) throw std::invalid_argument("unknown check: " + falsify_id);
  }
  Summary s;
  s.reports.resize(reg.size());
  auto run_one = [&](std::size_t i) {
    RunOptions o = opt;
    o.falsify = reg[i].id == falsify_id;
    s.reports[i] = run_check(reg[i].id, {}, o);
  };
  if (workers <= 1) {
    for (std::size_t i = 0; i < reg.size(); ++i) run_one(i);
    return s;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next++) < reg.size();) run_one(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return s;
}

int workers_from_env() {
  const char* v = std::getenv("GRAYCAT_WORKERS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > 256)
    throw std::invalid_argument("GRAYCAT_WORKERS must be a positive integer");
  return static_cast<int>(n);
}

namespace {

struct Suite {
  PropertySuiteReport r;

  template <class F>
  void expect(const std::string& what, F&& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception& e) {
      r.failures.push_back(what + ": " + e.what());
      ++r.violations;
      return;
    }
    if (!ok) {
      r.failures.push_back(what);
      ++r.violations;
    }
  }

  void double_cat(const std::string& name, const DoubleCat& p) {
    ++r.instances;
    expect(name + " axioms", [&] {
      p.validate();
      return true;
    });
    expect(name + " levels", [&] {
      for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
          if (p.level_count(n, m) != count_double_functors(grid(n, m), p))
            return false;
      return true;
    });
    expect(name + " companions", [&] {
      const auto cv = verticals_with_companions(p);
      const auto ch = companion_horizontals(p);
      for (const auto& e : p.structure().binary[0].entries)
        if (cv[e[0]] && cv[e[1]] && !cv[e[2]]) return false;
      for (const auto& e : p.structure().binary[1].entries)
        if (ch[e[0]] && ch[e[1]] && !ch[e[2]]) return false;
      for (int f = 0; f < p.num_vert(); ++f) {
        const auto ws = find_companions(p, f);
        for (const auto& a : ws)
          for (const auto& b : ws)
            if (!companions_isomorphic(p, a.F, b.F)) return false;
      }
      return true;
    });
  }
};

}  // namespace

PropertySuiteReport run_property_suite() {
  Suite s;
  const auto battery = default_battery();
  for (const auto& [name, e] : battery) {
    s.double_cat("Sq" + name, squares(e));
    s.double_cat(name + "_v", inclusion(e, Direction::v));
    s.double_cat(name + "_h", inclusion(e, Direction::h));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const DoubleCat q = squares(battery[i].cat);
    s.double_cat("Sq" + battery[i].name + " hop", dualize(q, DoubleDual::hop));
    s.double_cat("Sq" + battery[i].name + " vop", dualize(q, DoubleDual::vop));
    s.double_cat("Sq" + battery[i].name + " t", dualize(q, DoubleDual::t));
  }
  for (std::size_t i = 0; i < 6; ++i) {
    const Truncated tr = truncate(battery[i].cat, Truncation::tau1);
    s.double_cat("cech " + battery[i].name,
                 cech_nerve(tr.cat, battery[i].cat, tr.map));
  }
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      s.double_cat("<" + std::to_string(n) + "," + std::to_string(m) + ">",
                   grid(n, m));
  const DoubleCat s11 = squares(battery[3].cat);
  s.double_cat("Sq[1] x Sq[1;1]", product(squares(battery[1].cat), s11));
  s.double_cat("vcomp Sq[1;1]", comp_subobject(s11, CompKind::vcomp));
  s.double_cat("hcomp Sq[1;1]", comp_subobject(s11, CompKind::hcomp));
  s.double_cat("vcomp [2]_v",
               comp_subobject(inclusion(battery[2].cat, Direction::v),
                              CompKind::vcomp));

  // Pointwise colimits of nerves, checked against nerves of battery objects.
  auto site = std::make_shared<const Site>(
      truncated_site(SiteFamily::theta2, 2, 2));
  const TwoCat pt = terminal(), one = ordinal(1);
  const Nerve np = nerve(pt, site), n1 = nerve(one, site);
  auto point_at = [&](int x) {
    return TwoFunctor{{x}, {one.id1(x)}, {one.id2(one.id1(x))}};
  };
  Diagram glue;  // two arrows glued head to tail
  glue.nodes = {&n1.presheaf, &np.presheaf, &n1.presheaf};
  glue.edges = {{1, 0, nerve_map(np, n1, point_at(1))},
                {1, 2, nerve_map(np, n1, point_at(0))}};
  Diagram coeq;  // both ends of an arrow identified
  coeq.nodes = {&np.presheaf, &n1.presheaf};
  coeq.edges = {{0, 1, nerve_map(np, n1, point_at(0))},
                {0, 1, nerve_map(np, n1, point_at(1))}};
  for (const Diagram* d : {&glue, &coeq}) {
    const Colimit c = finite_colimit(*d);
    for (std::size_t i = 0; i < 4; ++i) {
      ++s.r.instances;
      const Nerve y = nerve(battery[i].cat, site);
      s.expect("colimit against " + battery[i].name,
               [&] { return check_colimit_universal(*d, c, y.presheaf); });
    }
  }
  return s.r;
}

}  // namespace graycat
