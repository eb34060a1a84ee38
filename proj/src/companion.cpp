// SPDX-License-Identifier: Apache-2.0
#include "graycat/companion.hpp"

#include <set>

#include "graycat/error.hpp"

namespace graycat {

namespace {

bool fits_eta(const DoubleCat& q, int f, int F, int s) {
  const auto& c = q.square(s);
  const auto& t = q.tables();
  const int x = t.vert[f][0];
  return c.top == t.hid[x] && c.left == t.vid[x] && c.right == f &&
         c.bottom == F;
}

bool fits_eps(const DoubleCat& q, int f, int F, int s) {
  const auto& c = q.square(s);
  const auto& t = q.tables();
  const int y = t.vert[f][1];
  return c.top == F && c.left == f && c.right == t.vid[y] &&
         c.bottom == t.hid[y];
}

}  // namespace

bool is_companion_pair(const DoubleCat& q, const CompanionWitness& w) {
  const auto& t = q.tables();
  if (w.f < 0 || w.f >= q.num_vert() || w.F < 0 || w.F >= q.num_horiz() ||
      w.eta < 0 || w.eta >= q.num_squares() || w.eps < 0 ||
      w.eps >= q.num_squares())
    throw MalformedBoundary("companion witness out of range");
  if (t.vert[w.f] != t.horiz[w.F])
    throw MalformedBoundary("f and F have different endpoints");
  if (!fits_eta(q, w.f, w.F, w.eta))
    throw MalformedBoundary("unit has the wrong boundary");
  if (!fits_eps(q, w.f, w.F, w.eps))
    throw MalformedBoundary("counit has the wrong boundary");
  return q.vcomp_s(w.eps, w.eta) == t.sq_hid[w.f] &&
         q.hcomp_s(w.eps, w.eta) == t.sq_vid[w.F];
}

std::vector<CompanionWitness> find_companions(const DoubleCat& q, int f) {
  const auto& t = q.tables();
  std::vector<CompanionWitness> out;
  for (int F = 0; F < q.num_horiz(); ++F) {
    if (t.horiz[F] != t.vert[f]) continue;
    std::vector<int> etas, epss;
    for (int s = 0; s < q.num_squares(); ++s) {
      if (fits_eta(q, f, F, s)) etas.push_back(s);
      if (fits_eps(q, f, F, s)) epss.push_back(s);
    }
    for (int a : etas)
      for (int b : epss)
        if (is_companion_pair(q, {f, F, a, b})) out.push_back({f, F, a, b});
  }
  return out;
}

std::vector<bool> verticals_with_companions(const DoubleCat& q) {
  std::vector<bool> out(q.num_vert());
  for (int f = 0; f < q.num_vert(); ++f)
    out[f] = !find_companions(q, f).empty();
  return out;
}

std::vector<bool> companion_horizontals(const DoubleCat& q) {
  std::vector<bool> out(q.num_horiz(), false);
  for (int f = 0; f < q.num_vert(); ++f)
    for (const auto& w : find_companions(q, f)) out[w.F] = true;
  return out;
}

bool companions_isomorphic(const DoubleCat& q, int F, int G) {
  const auto& t = q.tables();
  if (t.horiz[F] != t.horiz[G]) return false;
  const int x = t.horiz[F][0], y = t.horiz[F][1];
  auto globular = [&](int s, int top, int bottom) {
    const auto& c = q.square(s);
    return c.top == top && c.bottom == bottom && c.left == t.vid[x] &&
           c.right == t.vid[y];
  };
  for (int s = 0; s < q.num_squares(); ++s) {
    if (!globular(s, F, G)) continue;
    for (int r = 0; r < q.num_squares(); ++r)
      if (globular(r, G, F) && q.vcomp_s(r, s) == t.sq_vid[F] &&
          q.vcomp_s(s, r) == t.sq_vid[G])
        return true;
  }
  return false;
}

namespace {

// The sub double category on the kept verticals and horizontals, with every
// square whose four sides are kept.
DoubleCat restrict_to(const DoubleCat& q, const std::vector<bool>& keep_v,
                      const std::vector<bool>& keep_h) {
  const auto& t = q.tables();
  std::vector<int> nv(q.num_vert(), -1), nh(q.num_horiz(), -1),
      ns(q.num_squares(), -1);
  DoubleCatTables out;
  out.objects = t.objects;
  out.obj_names = t.obj_names;
  for (int f = 0; f < q.num_vert(); ++f)
    if (keep_v[f]) {
      nv[f] = static_cast<int>(out.vert.size());
      out.vert.push_back(t.vert[f]);
      out.vert_names.push_back(f < static_cast<int>(t.vert_names.size())
                                   ? t.vert_names[f]
                                   : std::string());
    }
  for (int f = 0; f < q.num_horiz(); ++f)
    if (keep_h[f]) {
      nh[f] = static_cast<int>(out.horiz.size());
      out.horiz.push_back(t.horiz[f]);
      out.horiz_names.push_back(f < static_cast<int>(t.horiz_names.size())
                                    ? t.horiz_names[f]
                                    : std::string());
    }
  for (int s = 0; s < q.num_squares(); ++s) {
    const auto& c = q.square(s);
    if (!keep_h[c.top] || !keep_h[c.bottom] || !keep_v[c.left] ||
        !keep_v[c.right])
      continue;
    ns[s] = static_cast<int>(out.squares.size());
    out.squares.push_back({nh[c.top], nh[c.bottom], nv[c.left], nv[c.right]});
  }
  for (int x = 0; x < t.objects; ++x) {
    if (nv[t.vid[x]] < 0 || nh[t.hid[x]] < 0)
      throw AxiomViolation("subobject drops an identity");
    out.vid.push_back(nv[t.vid[x]]);
    out.hid.push_back(nh[t.hid[x]]);
  }
  for (int f = 0; f < q.num_horiz(); ++f)
    if (keep_h[f]) out.sq_vid.push_back(ns[t.sq_vid[f]]);
  for (int f = 0; f < q.num_vert(); ++f)
    if (keep_v[f]) out.sq_hid.push_back(ns[t.sq_hid[f]]);
  auto copy = [](const FiniteStructure::Binary& b, const std::vector<int>& id,
                 std::vector<std::array<int, 3>>& dst) {
    for (const auto& e : b.entries) {
      if (id[e[0]] < 0 || id[e[1]] < 0) continue;
      if (id[e[2]] < 0) throw AxiomViolation("subobject not closed");
      dst.push_back({id[e[0]], id[e[1]], id[e[2]]});
    }
  };
  const auto& bin = q.structure().binary;
  copy(bin[0], nv, out.vcomp_v);
  copy(bin[1], nh, out.hcomp_h);
  copy(bin[2], ns, out.vcomp_s);
  copy(bin[3], ns, out.hcomp_s);
  return DoubleCat::from_tables(std::move(out));
}

}  // namespace

DoubleCat comp_subobject(const DoubleCat& q, CompKind kind) {
  if (kind == CompKind::vcomp)
    return restrict_to(q, verticals_with_companions(q),
                       std::vector<bool>(q.num_horiz(), true));
  return restrict_to(q, std::vector<bool>(q.num_vert(), true),
                     companion_horizontals(q));
}

DoubleCat comp_core(const DoubleCat& q) {
  return restrict_to(q, verticals_with_companions(q), companion_horizontals(q));
}

UniversalPropertyReport verify_universal_property(const TwoCat& c,
                                                  const DoubleCat& q,
                                                  Side side) {
  if (side == Side::horizontal && !is_complete(q, Completeness::locally))
    throw HypothesisViolation("target is not locally complete");
  const Direction dir =
      side == Side::vertical ? Direction::v : Direction::h;
  const DoubleCat sq = squares(c);
  const DoubleCat incl = inclusion(c, dir);
  const DoubleFunctor unit = inclusion_into_squares(c, dir);

  UniversalPropertyReport r;
  std::set<std::vector<int>> image;
  const auto maps = enumerate_double_functors(sq, q);
  r.source_maps = maps.size();
  for (const auto& h : maps) image.insert(flatten(compose(h, unit)));
  r.restricted = image.size();
  r.injective = r.restricted == r.source_maps;

  // Sort 1 holds verticals, sort 2 horizontals.
  const int sort = side == Side::vertical ? 1 : 2;
  const std::vector<bool> good = side == Side::vertical
                                     ? verticals_with_companions(q)
                                     : companion_horizontals(q);
  std::set<std::vector<int>> expected;
  for (const auto& g : enumerate_double_functors(incl, q)) {
    bool ok = true;
    for (int a : g[sort]) ok = ok && good[a];
    if (ok) expected.insert(flatten(g));
  }
  r.expected_image = expected.size();
  r.image_matches = image == expected;
  return r;
}

}  // namespace graycat
