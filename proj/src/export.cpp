// SPDX-License-Identifier: Apache-2.0
#include "graycat/export.hpp"

#include <sstream>

namespace graycat {

using nlohmann::ordered_json;

namespace {

ordered_json triples(const std::vector<std::array<int, 3>>& t) {
  ordered_json a = ordered_json::array();
  for (const auto& e : t) a.push_back({e[0], e[1], e[2]});
  return a;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ordered_json to_json(const TwoCat& c) {
  const TwoCatTables t = c.tables();
  ordered_json j;
  j["objects"] = t.obj_names;
  ordered_json c1 = ordered_json::array(), c2 = ordered_json::array();
  for (int f = 0; f < c.num_cells1(); ++f)
    c1.push_back({{"name", c.cell1_name(f)},
                  {"src", c.cell1(f).src},
                  {"tgt", c.cell1(f).tgt},
                  {"identity", c.is_id1(f)}});
  for (int a = 0; a < c.num_cells2(); ++a)
    c2.push_back({{"name", c.cell2_name(a)},
                  {"src", c.cell2(a).src},
                  {"tgt", c.cell2(a).tgt},
                  {"identity", c.is_id2(a)}});
  j["cells1"] = c1;
  j["cells2"] = c2;
  j["comp1"] = triples(t.comp1);
  j["vcomp"] = triples(t.vcomp);
  j["hcomp"] = triples(t.hcomp);
  return j;
}

ordered_json to_json(const DoubleCat& p) {
  const auto& t = p.tables();
  const auto& bin = p.structure().binary;
  ordered_json j;
  j["objects"] = t.obj_names;
  ordered_json v = ordered_json::array(), h = ordered_json::array(),
               s = ordered_json::array();
  for (const auto& e : t.vert) v.push_back({{"src", e[0]}, {"tgt", e[1]}});
  for (const auto& e : t.horiz) h.push_back({{"src", e[0]}, {"tgt", e[1]}});
  for (const auto& q : t.squares)
    s.push_back({{"top", q.top},
                 {"bottom", q.bottom},
                 {"left", q.left},
                 {"right", q.right}});
  j["vertical"] = v;
  j["horizontal"] = h;
  j["squares"] = s;
  j["vid"] = t.vid;
  j["hid"] = t.hid;
  j["sq_vid"] = t.sq_vid;
  j["sq_hid"] = t.sq_hid;
  j["vcomp_v"] = triples(bin[0].entries);
  j["hcomp_h"] = triples(bin[1].entries);
  j["vcomp_s"] = triples(bin[2].entries);
  j["hcomp_s"] = triples(bin[3].entries);
  return j;
}

ordered_json to_json(const SetPresheaf& x) {
  ordered_json j = ordered_json::object();
  for (int a = 0; a < x.site().num_objects(); ++a)
    j[x.site().object_name(a)] = x.size(a);
  return j;
}

ordered_json to_json(const TwoFunctor& f) {
  ordered_json j;
  j["objects"] = f.obj;
  j["cells1"] = f.cell1;
  j["cells2"] = f.cell2;
  return j;
}

std::string to_dot(const TwoCat& c, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=LR;\n";
  for (int x = 0; x < c.num_objects(); ++x)
    out << "  o" << x << " [label=" << quote(c.object_name(x)) << "];\n";
  for (int f = 0; f < c.num_cells1(); ++f) {
    if (c.is_id1(f)) continue;
    out << "  m" << f << " [shape=point];\n";
    out << "  o" << c.cell1(f).src << " -> m" << f << " [arrowhead=none, label="
        << quote(c.cell1_name(f)) << "];\n";
    out << "  m" << f << " -> o" << c.cell1(f).tgt << ";\n";
  }
  for (int a = 0; a < c.num_cells2(); ++a) {
    if (c.is_id2(a)) continue;
    const int s = c.cell2(a).src, t = c.cell2(a).tgt;
    if (c.is_id1(s) || c.is_id1(t)) continue;
    out << "  m" << s << " -> m" << t << " [style=dashed, color=gray40];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const DoubleCat& p, const std::string& name) {
  const auto& t = p.tables();
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  for (int x = 0; x < p.num_objects(); ++x)
    out << "  o" << x << " [label=" << quote(t.obj_names[x]) << "];\n";
  for (int f = 0; f < p.num_vert(); ++f)
    if (!p.is_vid(f))
      out << "  o" << t.vert[f][0] << " -> o" << t.vert[f][1]
          << " [label=\"v" << f << "\"];\n";
  for (int f = 0; f < p.num_horiz(); ++f)
    if (!p.is_hid(f))
      out << "  o" << t.horiz[f][0] << " -> o" << t.horiz[f][1]
          << " [label=\"h" << f << "\", color=blue, constraint=false];\n";
  for (int s = 0; s < p.num_squares(); ++s) {
    if (p.is_identity_square(s)) continue;
    const auto& q = p.square(s);
    out << "  s" << s << " [shape=box, label=\"s" << s << "\"];\n";
    out << "  s" << s << " -> o" << t.horiz[q.top][0]
        << " [style=dotted, arrowhead=none];\n";
    out << "  s" << s << " -> o" << t.horiz[q.bottom][1]
        << " [style=dotted, arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace graycat
