// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "graycat/twocat.hpp"

namespace graycat {

bool is_functor(const TwoCat& a, const TwoCat& b, const TwoFunctor& f) {
  return is_homomorphism(a.structure(), b.structure(), f.as_assignment());
}

void require_functor(const TwoCat& a, const TwoCat& b, const TwoFunctor& f) {
  if (!is_functor(a, b, f)) throw AxiomViolation("map is not a 2-functor");
}

TwoFunctor identity_functor(const TwoCat& a) {
  TwoFunctor f;
  f.obj.resize(a.num_objects());
  f.cell1.resize(a.num_cells1());
  f.cell2.resize(a.num_cells2());
  std::iota(f.obj.begin(), f.obj.end(), 0);
  std::iota(f.cell1.begin(), f.cell1.end(), 0);
  std::iota(f.cell2.begin(), f.cell2.end(), 0);
  return f;
}

TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f) {
  TwoFunctor h;
  for (int x : f.obj) h.obj.push_back(g.obj[x]);
  for (int x : f.cell1) h.cell1.push_back(g.cell1[x]);
  for (int x : f.cell2) h.cell2.push_back(g.cell2[x]);
  return h;
}

std::vector<TwoFunctor> enumerate_functors(const TwoCat& a, const TwoCat& b,
                                           std::size_t node_budget) {
  SearchOptions opt;
  opt.node_budget = node_budget;
  std::vector<TwoFunctor> out;
  search_homomorphisms(a.structure(), b.structure(), opt,
                       [&](const Assignment& h) {
                         out.push_back(TwoFunctor::from_assignment(h));
                         return true;
                       });
  return out;
}

std::size_t count_functors(const TwoCat& a, const TwoCat& b,
                           std::size_t node_budget) {
  SearchOptions opt;
  opt.node_budget = node_budget;
  return count_homomorphisms(a.structure(), b.structure(), opt);
}

std::optional<TwoFunctor> find_isomorphism(const TwoCat& a, const TwoCat& b,
                                           std::size_t node_budget) {
  auto h = find_isomorphism(a.structure(), b.structure(), node_budget);
  if (!h) return std::nullopt;
  return TwoFunctor::from_assignment(*h);
}

bool is_gaunt(const TwoCat& c) {
  for (int f = 0; f < c.num_cells1(); ++f) {
    if (c.is_id1(f)) continue;
    const auto [x, y] = c.cell1(f);
    for (int g : c.hom(y, x))
      if (c.comp1(g, f) == c.id1(x) && c.comp1(f, g) == c.id1(y))
        return false;
  }
  for (int a = 0; a < c.num_cells2(); ++a) {
    if (c.is_id2(a)) continue;
    const auto [f, g] = c.cell2(a);
    for (int b : c.hom2(g, f))
      if (c.vcomp(b, a) == c.id2(f) && c.vcomp(a, b) == c.id2(g)) return false;
  }
  return true;
}

namespace {

void swap_args(std::vector<std::array<int, 3>>& entries) {
  for (auto& e : entries) std::swap(e[0], e[1]);
}

TwoCat discrete(const std::vector<std::string>& names) {
  TwoCatBuilder b;
  for (const auto& n : names) b.add_object(n);
  return b.build();
}

}  // namespace

TwoCat dual_op(const TwoCat& c) {
  auto t = c.tables();
  for (auto& f : t.c1) std::swap(f.src, f.tgt);
  swap_args(t.comp1);
  swap_args(t.hcomp);
  return TwoCat::from_tables(std::move(t));
}

TwoCat dual_co(const TwoCat& c) {
  auto t = c.tables();
  for (auto& a : t.c2) std::swap(a.src, a.tgt);
  swap_args(t.vcomp);
  return TwoCat::from_tables(std::move(t));
}

TwoCat terminal() { return ordinal(0); }

TwoCat ordinal(int n) {
  TwoCatBuilder b;
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<int>> arrow(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i) {
    arrow[i][i] = b.id1(i);
    for (int j = i + 1; j <= n; ++j)
      arrow[i][j] = b.add_cell1(i, j, std::to_string(i) + std::to_string(j));
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        b.set_comp1(arrow[j][k], arrow[i][j], arrow[i][k]);
        b.set_hcomp(b.id2(arrow[j][k]), b.id2(arrow[i][j]),
                    b.id2(arrow[i][k]));
      }
  return b.build();
}

TwoCat cartesian_product(const TwoCat& a, const TwoCat& b) {
  const auto ta = a.tables();
  const auto tb = b.tables();
  const int n0 = b.num_objects(), n1 = b.num_cells1(), n2 = b.num_cells2();
  TwoCatTables t;
  for (int x = 0; x < a.num_objects(); ++x)
    for (int y = 0; y < n0; ++y) {
      t.id1.push_back(ta.id1[x] * n1 + tb.id1[y]);
      t.obj_names.push_back("(" + a.object_name(x) + "," + b.object_name(y) +
                            ")");
    }
  for (int f = 0; f < a.num_cells1(); ++f)
    for (int g = 0; g < n1; ++g) {
      t.c1.push_back({ta.c1[f].src * n0 + tb.c1[g].src,
                      ta.c1[f].tgt * n0 + tb.c1[g].tgt});
      t.id2.push_back(ta.id2[f] * n2 + tb.id2[g]);
      t.c1_names.push_back("(" + a.cell1_name(f) + "," + b.cell1_name(g) +
                           ")");
    }
  for (int p = 0; p < a.num_cells2(); ++p)
    for (int q = 0; q < n2; ++q) {
      t.c2.push_back({ta.c2[p].src * n1 + tb.c2[q].src,
                      ta.c2[p].tgt * n1 + tb.c2[q].tgt});
      t.c2_names.push_back("(" + a.cell2_name(p) + "," + b.cell2_name(q) +
                           ")");
    }
  auto cross = [](const std::vector<std::array<int, 3>>& x,
                  const std::vector<std::array<int, 3>>& y, int size) {
    std::vector<std::array<int, 3>> out;
    out.reserve(x.size() * y.size());
    for (const auto& e : x)
      for (const auto& g : y)
        out.push_back(
            {e[0] * size + g[0], e[1] * size + g[1], e[2] * size + g[2]});
    return out;
  };
  t.comp1 = cross(ta.comp1, tb.comp1, n1);
  t.vcomp = cross(ta.vcomp, tb.vcomp, n2);
  t.hcomp = cross(ta.hcomp, tb.hcomp, n2);
  return TwoCat::from_tables(std::move(t), false);
}

TwoFunctor product_projection(const TwoCat& a, const TwoCat& b, int which) {
  TwoFunctor p;
  const int sizes_a[3] = {a.num_objects(), a.num_cells1(), a.num_cells2()};
  const int sizes_b[3] = {b.num_objects(), b.num_cells1(), b.num_cells2()};
  std::vector<int>* out[3] = {&p.obj, &p.cell1, &p.cell2};
  for (int d = 0; d < 3; ++d)
    for (int x = 0; x < sizes_a[d]; ++x)
      for (int y = 0; y < sizes_b[d]; ++y) out[d]->push_back(which == 0 ? x : y);
  return p;
}

TwoFunctor product_map(const TwoCat& a, const TwoCat& b, const TwoCat& a2,
                       const TwoCat& b2, const TwoFunctor& f,
                       const TwoFunctor& g) {
  TwoFunctor p;
  const int sizes_a[3] = {a.num_objects(), a.num_cells1(), a.num_cells2()};
  const int sizes_b[3] = {b.num_objects(), b.num_cells1(), b.num_cells2()};
  const int sizes_b2[3] = {b2.num_objects(), b2.num_cells1(), b2.num_cells2()};
  const std::vector<int>* fa[3] = {&f.obj, &f.cell1, &f.cell2};
  const std::vector<int>* gb[3] = {&g.obj, &g.cell1, &g.cell2};
  std::vector<int>* out[3] = {&p.obj, &p.cell1, &p.cell2};
  (void)a2;
  for (int d = 0; d < 3; ++d)
    for (int x = 0; x < sizes_a[d]; ++x)
      for (int y = 0; y < sizes_b[d]; ++y)
        out[d]->push_back((*fa[d])[x] * sizes_b2[d] + (*gb[d])[y]);
  return p;
}

TwoCat coproduct(const TwoCat& a, const TwoCat& b) {
  auto t = a.tables();
  const auto tb = b.tables();
  const int o0 = a.num_objects(), o1 = a.num_cells1(), o2 = a.num_cells2();
  for (int x : tb.id1) t.id1.push_back(x + o1);
  for (int f : tb.id2) t.id2.push_back(f + o2);
  for (auto c : tb.c1) t.c1.push_back({c.src + o0, c.tgt + o0});
  for (auto c : tb.c2) t.c2.push_back({c.src + o1, c.tgt + o1});
  for (auto e : tb.comp1) t.comp1.push_back({e[0] + o1, e[1] + o1, e[2] + o1});
  for (auto e : tb.vcomp) t.vcomp.push_back({e[0] + o2, e[1] + o2, e[2] + o2});
  for (auto e : tb.hcomp) t.hcomp.push_back({e[0] + o2, e[1] + o2, e[2] + o2});
  auto append = [](std::vector<std::string>& x,
                   const std::vector<std::string>& y) {
    for (const auto& s : y) x.push_back(s + "'");
  };
  append(t.obj_names, tb.obj_names);
  append(t.c1_names, tb.c1_names);
  append(t.c2_names, tb.c2_names);
  return TwoCat::from_tables(std::move(t), false);
}

TwoFunctor coproduct_inclusion(const TwoCat& a, const TwoCat& b, int which) {
  const TwoCat& src = which == 0 ? a : b;
  TwoFunctor f = identity_functor(src);
  if (which == 1) {
    for (int& x : f.obj) x += a.num_objects();
    for (int& x : f.cell1) x += a.num_cells1();
    for (int& x : f.cell2) x += a.num_cells2();
  }
  return f;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller index as root.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

Truncated truncate(const TwoCat& c, Truncation kind) {
  Truncated out;
  switch (kind) {
    case Truncation::tau1: {
      TwoCatBuilder b;
      for (int x = 0; x < c.num_objects(); ++x) b.add_object(c.object_name(x));
      std::vector<int> to_new(c.num_cells1());
      for (int f = 0; f < c.num_cells1(); ++f)
        to_new[f] = c.is_id1(f) ? b.id1(c.cell1(f).src)
                                : b.add_cell1(c.cell1(f).src, c.cell1(f).tgt,
                                              c.cell1_name(f));
      for (int f = 0; f < c.num_cells1(); ++f)
        for (int g = 0; g < c.num_cells1(); ++g) {
          const int gf = c.comp1(g, f);
          if (gf < 0) continue;
          b.set_comp1(to_new[g], to_new[f], to_new[gf]);
          b.set_hcomp(b.id2(to_new[g]), b.id2(to_new[f]), b.id2(to_new[gf]));
        }
      out.cat = b.build();
      // Inclusion back into c.
      out.map.obj.resize(c.num_objects());
      std::iota(out.map.obj.begin(), out.map.obj.end(), 0);
      out.map.cell1.assign(out.cat.num_cells1(), -1);
      for (int f = 0; f < c.num_cells1(); ++f) out.map.cell1[to_new[f]] = f;
      for (int f = 0; f < out.cat.num_cells1(); ++f)
        out.map.cell2.push_back(c.id2(out.map.cell1[f]));
      break;
    }
    case Truncation::tau1i: {
      UnionFind uf(c.num_cells1());
      for (int a = 0; a < c.num_cells2(); ++a)
        uf.unite(c.cell2(a).src, c.cell2(a).tgt);
      TwoCatBuilder b;
      for (int x = 0; x < c.num_objects(); ++x) b.add_object(c.object_name(x));
      std::vector<int> cls(c.num_cells1(), -1);
      for (int x = 0; x < c.num_objects(); ++x)
        cls[uf.find(c.id1(x))] = b.id1(x);
      for (int f = 0; f < c.num_cells1(); ++f) {
        const int r = uf.find(f);
        if (cls[r] < 0)
          cls[r] = b.add_cell1(c.cell1(r).src, c.cell1(r).tgt,
                               "[" + c.cell1_name(r) + "]");
        cls[f] = cls[r];
      }
      std::set<std::array<int, 3>> seen;
      for (int f = 0; f < c.num_cells1(); ++f)
        for (int y = 0; y < c.num_objects(); ++y)
          for (int g : c.hom(c.cell1(f).tgt, y)) {
            std::array<int, 3> e{cls[g], cls[f], cls[c.comp1(g, f)]};
            if (!seen.insert(e).second) continue;
            b.set_comp1(e[0], e[1], e[2]);
            b.set_hcomp(b.id2(e[0]), b.id2(e[1]), b.id2(e[2]));
          }
      out.cat = b.build();
      out.map.obj.resize(c.num_objects());
      std::iota(out.map.obj.begin(), out.map.obj.end(), 0);
      out.map.cell1 = cls;
      for (int a = 0; a < c.num_cells2(); ++a)
        out.map.cell2.push_back(out.cat.id2(cls[c.cell2(a).src]));
      break;
    }
    case Truncation::tau0: {
      std::vector<std::string> names;
      for (int x = 0; x < c.num_objects(); ++x)
        names.push_back(c.object_name(x));
      out.cat = discrete(names);
      out.map.obj.resize(c.num_objects());
      std::iota(out.map.obj.begin(), out.map.obj.end(), 0);
      for (int x = 0; x < c.num_objects(); ++x) {
        out.map.cell1.push_back(c.id1(x));
        out.map.cell2.push_back(c.id2(c.id1(x)));
      }
      break;
    }
    case Truncation::tau0i: {
      UnionFind uf(c.num_objects());
      for (int f = 0; f < c.num_cells1(); ++f)
        uf.unite(c.cell1(f).src, c.cell1(f).tgt);
      std::vector<int> cls(c.num_objects(), -1);
      std::vector<std::string> names;
      for (int x = 0; x < c.num_objects(); ++x) {
        const int r = uf.find(x);
        if (cls[r] < 0) {
          cls[r] = static_cast<int>(names.size());
          names.push_back("[" + c.object_name(r) + "]");
        }
        cls[x] = cls[r];
      }
      out.cat = discrete(names);
      out.map.obj = cls;
      for (int f = 0; f < c.num_cells1(); ++f)
        out.map.cell1.push_back(out.cat.id1(cls[c.cell1(f).src]));
      for (int a = 0; a < c.num_cells2(); ++a)
        out.map.cell2.push_back(
            out.cat.id2(out.cat.id1(cls[c.cell1(c.cell2(a).src).src])));
      break;
    }
  }
  return out;
}

BatteryResult verify_pushout_by_battery(const Span& span, const Cocone& cocone,
                                        const std::vector<NamedCat>& battery) {
  require_functor(*span.a, *span.c, span.f);
  require_functor(*span.a, *span.d, span.g);
  require_functor(*span.c, *cocone.p, cocone.i);
  require_functor(*span.d, *cocone.p, cocone.j);
  if (compose(cocone.i, span.f) != compose(cocone.j, span.g))
    throw std::invalid_argument("cocone does not commute");

  BatteryResult result;
  for (const auto& [name, e] : battery) {
    BatteryEntry entry;
    entry.name = name;
    std::map<std::vector<int>, std::size_t> from_c, from_d;
    for (const auto& h : enumerate_functors(*span.c, e))
      ++from_c[flatten(compose(h, span.f).as_assignment())];
    for (const auto& h : enumerate_functors(*span.d, e))
      ++from_d[flatten(compose(h, span.g).as_assignment())];
    for (const auto& [k, n] : from_c) {
      auto it = from_d.find(k);
      if (it != from_d.end()) entry.cone_maps += n * it->second;
    }
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    const auto maps = enumerate_functors(*cocone.p, e);
    entry.candidate_maps = maps.size();
    for (const auto& h : maps)
      images.insert({flatten(compose(h, cocone.i).as_assignment()),
                     flatten(compose(h, cocone.j).as_assignment())});
    entry.injective = images.size() == maps.size();
    result.entries.push_back(std::move(entry));
  }
  return result;
}

}  // namespace graycat
