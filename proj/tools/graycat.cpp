// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graycat/checks.hpp"
#include "graycat/companion.hpp"
#include "graycat/double.hpp"
#include "graycat/export.hpp"
#include "graycat/gray.hpp"
#include "graycat/presheaf.hpp"

using namespace graycat;
using nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 64;

struct Output {
  bool json = false;
  std::string dot_path;

  void emit(const ordered_json& j, const std::string& text) const {
    if (json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text;
  }
  void dot(const std::string& graph) const {
    if (dot_path.empty()) return;
    std::ofstream out(dot_path);
    if (!out) throw std::runtime_error("cannot write " + dot_path);
    out << graph;
  }
};

GlobularSum shape_arg(const std::string& s) {
  GlobularSum g = parse_globular_sum(s);
  g.check();
  return g;
}

std::string counts_line(const TwoCat& c) {
  return std::to_string(c.num_objects()) + " objects, " +
         std::to_string(c.non_identity_cells1()) + " non-identity 1-cells, " +
         std::to_string(c.non_identity_cells2()) + " non-identity 2-cells\n";
}

ordered_json counts_json(const TwoCat& c) {
  return {{"objects", c.num_objects()},
          {"cells1", c.non_identity_cells1()},
          {"cells2", c.non_identity_cells2()}};
}

// sq:S, v:S, h:S, cech:S, grid:n,m, and the prefixes hop:, vop:, t:,
// vcomp:, hcomp:, core: applied to another expression.
DoubleCat parse_double(const std::string& expr) {
  const auto colon = expr.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("double expression needs a prefix: " + expr);
  const std::string head = expr.substr(0, colon), rest = expr.substr(colon + 1);
  if (head == "sq") return squares(build_globular_sum(shape_arg(rest)));
  if (head == "v") return inclusion(build_globular_sum(shape_arg(rest)), Direction::v);
  if (head == "h") return inclusion(build_globular_sum(shape_arg(rest)), Direction::h);
  if (head == "cech") {
    const TwoCat e = build_globular_sum(shape_arg(rest));
    const Truncated tr = truncate(e, Truncation::tau1);
    return cech_nerve(tr.cat, e, tr.map);
  }
  if (head == "grid") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("grid:n,m");
    return grid(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
  }
  if (head == "hop") return dualize(parse_double(rest), DoubleDual::hop);
  if (head == "vop") return dualize(parse_double(rest), DoubleDual::vop);
  if (head == "t") return dualize(parse_double(rest), DoubleDual::t);
  if (head == "vcomp") return comp_subobject(parse_double(rest), CompKind::vcomp);
  if (head == "hcomp") return comp_subobject(parse_double(rest), CompKind::hcomp);
  if (head == "core") return comp_core(parse_double(rest));
  throw std::invalid_argument("unknown double expression: " + head);
}

ordered_json double_summary(const DoubleCat& p) {
  ordered_json levels = ordered_json::array();
  for (int n = 0; n <= 2; ++n) {
    ordered_json row = ordered_json::array();
    for (int m = 0; m <= 2; ++m) row.push_back(p.level_count(n, m));
    levels.push_back(row);
  }
  return {{"objects", p.num_objects()},
          {"vertical", p.num_vert()},
          {"horizontal", p.num_horiz()},
          {"squares", p.num_squares()},
          {"levels", levels},
          {"locally_complete", is_complete(p, Completeness::locally)},
          {"complete", is_complete(p, Completeness::fully)}};
}

std::string double_text(const ordered_json& s) {
  std::string out = std::to_string(s["objects"].get<int>()) + " objects, " +
                    std::to_string(s["vertical"].get<int>()) + " vertical, " +
                    std::to_string(s["horizontal"].get<int>()) +
                    " horizontal, " + std::to_string(s["squares"].get<int>()) +
                    " squares\nlevels (n horizontal, m vertical, n,m <= 2):\n";
  for (const auto& row : s["levels"]) {
    out += " ";
    for (const auto& x : row) out += " " + std::to_string(x.get<std::size_t>());
    out += "\n";
  }
  out += std::string("locally complete: ") +
         (s["locally_complete"].get<bool>() ? "yes" : "no") +
         ", complete: " + (s["complete"].get<bool>() ? "yes" : "no") + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite gaunt 2-categories, Gray tensors and double categories."};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::string config_path;
  bool timings = false;
  app.add_flag("--json", out.json, "Machine-readable output");
  app.add_option("--dot", out.dot_path, "Write a Graphviz diagram to this path");
  app.add_option("--config", config_path, "Budget and site configuration (JSON)")
      ->check(CLI::ExistingFile);
  app.add_flag("--timings", timings, "Include timings in verification reports");

  // shapes
  auto* shapes = app.add_subcommand("shapes", "Globular sums and truncated sites");
  std::string shape_name;
  int site_n = 2, site_w = 2;
  std::string family = "theta2";
  shapes->add_option("shape", shape_name, "A globular sum such as [2;(1,0)]");
  shapes->add_option("--site-n", site_n, "Largest n in the site listing");
  shapes->add_option("--site-w", site_w, "Largest width in the site listing");
  shapes->add_option("--family", family, "theta2 or delta")
      ->check(CLI::IsMember({"theta2", "delta"}));

  // twocat
  auto* twocat = app.add_subcommand("twocat", "Build a 2-category from a shape");
  std::string tc_shape, tc_trunc, tc_target;
  bool tc_op = false, tc_co = false;
  twocat->add_option("shape", tc_shape)->required();
  twocat->add_flag("--op", tc_op, "Reverse 1-cells");
  twocat->add_flag("--co", tc_co, "Reverse 2-cells");
  twocat->add_option("--truncate", tc_trunc, "tau1, tau1i, tau0 or tau0i")
      ->check(CLI::IsMember({"tau1", "tau1i", "tau0", "tau0i"}));
  twocat->add_option("--functors-to", tc_target, "Count 2-functors into this shape");

  // presheaf
  auto* presheaf = app.add_subcommand("presheaf", "Nerve of a shape over the truncated site");
  std::string ps_shape;
  presheaf->add_option("shape", ps_shape)->required();

  // gray
  auto* gray = app.add_subcommand("gray", "Gray tensor product of two shapes");
  std::string g_a, g_b;
  bool g_collapse = false;
  gray->add_option("A", g_a)->required();
  gray->add_option("B", g_b)->required();
  gray->add_flag("--collapse", g_collapse,
                 "For simplices [n], [m]: count maps onto [n;m] fixing the columns");

  // double
  auto* dbl = app.add_subcommand("double", "Double categories");
  std::string d_what;
  std::string d_first, d_second;
  std::string d_dir = "v", d_kind = "t";
  dbl->add_option("what", d_what, "sq, incl, cech, dual, show or functors")
      ->required()
      ->check(CLI::IsMember({"sq", "incl", "cech", "dual", "show", "functors"}));
  dbl->add_option("first", d_first, "A shape, or an expression like sq:[1], v:[1;1], grid:1,1");
  dbl->add_option("second", d_second, "Target expression (functors)");
  dbl->add_option("--dir", d_dir, "v or h (incl)")->check(CLI::IsMember({"v", "h"}));
  dbl->add_option("--kind", d_kind, "hop, vop or t (dual)")
      ->check(CLI::IsMember({"hop", "vop", "t"}));

  // companion
  auto* comp = app.add_subcommand("companion", "Companion pairs");
  std::string c_what, c_side = "vertical", c_kind = "core";
  std::string c_target;
  std::vector<std::string> c_args;
  comp->add_option("what", c_what, "find, check, subobject or verify")
      ->required()
      ->check(CLI::IsMember({"find", "check", "subobject", "verify"}));
  comp->add_option("target", c_target, "A double expression (verify: a shape)")
      ->required();
  comp->add_option("args", c_args, "check: f F eta eps; verify: a double expression");
  comp->add_option("--side", c_side)->check(CLI::IsMember({"vertical", "horizontal"}));
  comp->add_option("--kind", c_kind)->check(CLI::IsMember({"vcomp", "hcomp", "core"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run one named check");
  std::string v_id;
  std::vector<std::string> v_params;
  bool v_falsify = false, v_list = false;
  verify->add_option("id", v_id);
  verify->add_option("--param", v_params, "Override as key=value");
  verify->add_flag("--falsify", v_falsify, "Use a deliberately wrong candidate");
  verify->add_flag("--list", v_list, "List the registry");

  // verify-all
  auto* verify_all = app.add_subcommand("verify-all", "Run every check");
  std::string va_falsify;
  bool va_suite = false;
  verify_all->add_option("--falsify", va_falsify, "Run this check with a wrong candidate");
  verify_all->add_flag("--suite", va_suite, "Also run the property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    RunOptions opt;
    if (!config_path.empty()) opt.config = Config::load(config_path);

    if (*shapes) {
      if (!shape_name.empty()) {
        const GlobularSum g = shape_arg(shape_name);
        const TwoCat c = build_globular_sum(g);
        ordered_json j{{"shape", g.name()}, {"counts", counts_json(c)},
                       {"category", to_json(c)}};
        out.emit(j, g.name() + ": " + counts_line(c));
        out.dot(to_dot(c, g.name()));
        return 0;
      }
      const Site s = truncated_site(
          family == "theta2" ? SiteFamily::theta2 : SiteFamily::delta_square,
          site_n, site_w, opt.config.budget);
      ordered_json j = ordered_json::array();
      std::string text;
      for (int a = 0; a < s.num_objects(); ++a) {
        std::size_t endo = s.hom(a, a).size();
        j.push_back({{"name", s.object_name(a)}, {"endomorphisms", endo}});
        text += s.object_name(a) + "  endomorphisms " + std::to_string(endo) + "\n";
      }
      text += std::to_string(s.num_objects()) + " objects, " +
              std::to_string(s.num_morphisms()) + " morphisms\n";
      out.emit({{"objects", j}, {"morphisms", s.num_morphisms()}}, text);
      return 0;
    }

    if (*twocat) {
      TwoCat c = build_globular_sum(shape_arg(tc_shape));
      if (tc_op) c = dual_op(c);
      if (tc_co) c = dual_co(c);
      if (!tc_trunc.empty()) {
        const Truncation k = tc_trunc == "tau1"    ? Truncation::tau1
                             : tc_trunc == "tau1i" ? Truncation::tau1i
                             : tc_trunc == "tau0"  ? Truncation::tau0
                                                   : Truncation::tau0i;
        c = truncate(c, k).cat;
      }
      ordered_json j{{"counts", counts_json(c)}, {"gaunt", is_gaunt(c)},
                     {"category", to_json(c)}};
      std::string text = counts_line(c) + "gaunt: " + (is_gaunt(c) ? "yes" : "no") + "\n";
      if (!tc_target.empty()) {
        const std::size_t n =
            count_functors(c, build_globular_sum(shape_arg(tc_target)),
                           opt.config.budget.search_nodes);
        j["functors"] = n;
        text += "2-functors into " + tc_target + ": " + std::to_string(n) + "\n";
      }
      out.emit(j, text);
      out.dot(to_dot(c, tc_shape));
      return 0;
    }

    if (*presheaf) {
      auto site = std::make_shared<const Site>(truncated_site(
          SiteFamily::theta2, opt.config.site_max_n, opt.config.site_max_w,
          opt.config.budget));
      const Nerve n = nerve(build_globular_sum(shape_arg(ps_shape)), site);
      std::string reason;
      const bool segal = is_segal_theta2(n.presheaf, &reason);
      ordered_json j{{"sizes", to_json(n.presheaf)}, {"segal", segal}};
      std::string text;
      for (int a = 0; a < site->num_objects(); ++a)
        text += site->object_name(a) + ": " + std::to_string(n.presheaf.size(a)) + "\n";
      text += std::string("segal: ") + (segal ? "yes" : "no (" + reason + ")") + "\n";
      out.emit(j, text);
      return 0;
    }

    if (*gray) {
      const GlobularSum a = shape_arg(g_a), b = shape_arg(g_b);
      const GrayTensor t = tensor(a, b);
      const TwoCat& c = t.result.cat;
      ordered_json j{{"counts", counts_json(c)}, {"gaunt", is_gaunt(c)},
                     {"category", to_json(c)}};
      std::string text = a.name() + " (x) " + b.name() + ": " + counts_line(c) +
                         "gaunt: " + (is_gaunt(c) ? "yes" : "no") + "\n";
      if (g_collapse) {
        const bool simplices =
            std::all_of(a.widths.begin(), a.widths.end(), [](int w) { return w == 0; }) &&
            std::all_of(b.widths.begin(), b.widths.end(), [](int w) { return w == 0; });
        if (!simplices) throw std::invalid_argument("--collapse needs two simplices");
        const Collapse col = collapse_to_globular(a.n, b.n);
        j["collapse"] = to_json(col.map);
        text += "collapse onto [" + std::to_string(a.n) + ";" + std::to_string(b.n) +
                "] built\n";
      }
      out.emit(j, text);
      out.dot(to_dot(c, a.name() + " (x) " + b.name()));
      return 0;
    }

    if (*dbl) {
      auto need = [&](std::size_t k) {
        const std::size_t have = !d_first.empty() + !d_second.empty();
        if (have != k)
          throw std::invalid_argument("double " + d_what + " takes " +
                                      std::to_string(k) + " argument(s)");
      };
      if (d_what == "functors") {
        need(2);
        const DoubleCat p = parse_double(d_first), q = parse_double(d_second);
        const std::size_t n = count_double_functors(p, q, opt.config.budget.search_nodes);
        out.emit({{"functors", n}}, std::to_string(n) + " double functors\n");
        return 0;
      }
      need(1);
      std::string expr;
      const std::string shape =
          d_what == "show" ? std::string() : shape_arg(d_first).name();
      if (d_what == "sq") expr = "sq:" + shape;
      else if (d_what == "incl") expr = d_dir + ":" + shape;
      else if (d_what == "cech") expr = "cech:" + shape;
      else if (d_what == "dual") expr = d_kind + ":sq:" + shape;
      else expr = d_first;
      const DoubleCat p = parse_double(expr);
      const ordered_json s = double_summary(p);
      ordered_json j{{"expression", expr}, {"summary", s}, {"double", to_json(p)}};
      out.emit(j, expr + ": " + double_text(s));
      out.dot(to_dot(p, expr));
      return 0;
    }

    if (*comp) {
      if (c_what == "find") {
        if (!c_args.empty()) throw std::invalid_argument("companion find <double>");
        const DoubleCat q = parse_double(c_target);
        ordered_json j = ordered_json::array();
        std::string text;
        for (int f = 0; f < q.num_vert(); ++f) {
          if (q.is_vid(f)) continue;
          const auto ws = find_companions(q, f);
          ordered_json wj = ordered_json::array();
          for (const auto& w : ws)
            wj.push_back({{"F", w.F}, {"eta", w.eta}, {"eps", w.eps}});
          j.push_back({{"vertical", f}, {"witnesses", wj}});
          text += "v" + std::to_string(f) + ": " + std::to_string(ws.size()) + " witness(es)";
          for (const auto& w : ws)
            text += " [F=h" + std::to_string(w.F) + " eta=s" + std::to_string(w.eta) +
                    " eps=s" + std::to_string(w.eps) + "]";
          text += "\n";
        }
        out.emit(j, text);
        return 0;
      }
      if (c_what == "check") {
        if (c_args.size() != 4)
          throw std::invalid_argument("companion check <double> f F eta eps");
        const DoubleCat q = parse_double(c_target);
        const CompanionWitness w{std::stoi(c_args[0]), std::stoi(c_args[1]),
                                 std::stoi(c_args[2]), std::stoi(c_args[3])};
        const bool ok = is_companion_pair(q, w);
        out.emit({{"companion", ok}}, ok ? "companion pair\n" : "not a companion pair\n");
        return ok ? 0 : 1;
      }
      if (c_what == "subobject") {
        if (!c_args.empty()) throw std::invalid_argument("companion subobject <double>");
        const DoubleCat q = parse_double(c_target);
        const DoubleCat s = c_kind == "vcomp"   ? comp_subobject(q, CompKind::vcomp)
                            : c_kind == "hcomp" ? comp_subobject(q, CompKind::hcomp)
                                                : comp_core(q);
        const ordered_json sj = double_summary(s);
        out.emit({{"summary", sj}, {"double", to_json(s)}}, double_text(sj));
        out.dot(to_dot(s, c_kind));
        return 0;
      }
      if (c_args.size() != 1)
        throw std::invalid_argument("companion verify <shape> <double>");
      const auto r = verify_universal_property(
          build_globular_sum(shape_arg(c_target)), parse_double(c_args[0]),
          c_side == "vertical" ? Side::vertical : Side::horizontal);
      ordered_json j{{"source_maps", r.source_maps},
                     {"restricted", r.restricted},
                     {"expected_image", r.expected_image},
                     {"injective", r.injective},
                     {"image_matches", r.image_matches},
                     {"verdict", r.pass() ? "pass" : "fail"}};
      out.emit(j, std::string(r.pass() ? "pass" : "fail") + ": " +
                      std::to_string(r.source_maps) + " maps, " +
                      std::to_string(r.restricted) + " restrictions, expected image " +
                      std::to_string(r.expected_image) + "\n");
      return r.pass() ? 0 : 1;
    }

    if (*verify) {
      if (v_list) {
        ordered_json j = ordered_json::array();
        std::string text;
        for (const auto& c : check_registry()) {
          j.push_back({{"id", c.id}, {"statement", c.statement}, {"params", c.params}});
          text += c.id + "  " + c.statement + "\n";
        }
        out.emit(j, text);
        return 0;
      }
      if (v_id.empty()) throw std::invalid_argument("verify needs a check id");
      std::map<std::string, std::string> params;
      for (const auto& kv : v_params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--param expects key=value");
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      opt.falsify = v_falsify;
      const CheckReport r = run_check(v_id, params, opt);
      if (out.json)
        std::cout << report_json(r, timings) << "\n";
      else
        std::cout << report_text(r, timings);
      return exit_code(r.verdict);
    }

    if (*verify_all) {
      const Summary s = run_all(opt, workers_from_env(), va_falsify);
      Verdict v = s.verdict();
      ordered_json j;
      ordered_json reports = ordered_json::array();
      std::string text;
      for (const auto& r : s.reports) {
        reports.push_back(ordered_json::parse(report_json(r, timings)));
        text += std::string(verdict_name(r.verdict)) + "  " + r.id;
        if (timings) text += "  (" + std::to_string(r.seconds) + " s)";
        text += "\n";
      }
      j["reports"] = reports;
      if (va_suite) {
        const PropertySuiteReport p = run_property_suite();
        j["property_suite"] = {{"instances", p.instances},
                               {"violations", p.violations},
                               {"failures", p.failures}};
        text += std::string(p.pass() ? "pass" : "fail") + "  property suite (" +
                std::to_string(p.instances) + " instances, " +
                std::to_string(p.violations) + " violations)\n";
        if (!p.pass()) v = Verdict::fail;
      }
      std::size_t passed = 0;
      for (const auto& r : s.reports) passed += r.verdict == Verdict::pass;
      text += std::to_string(passed) + "/" + std::to_string(s.reports.size()) +
              " checks pass\n";
      j["verdict"] = verdict_name(v);
      out.emit(j, text);
      return exit_code(v);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
