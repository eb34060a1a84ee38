// SPDX-License-Identifier: Apache-2.0
#include "graycat/double.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "graycat/error.hpp"

namespace graycat {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw AxiomViolation("double category: " + what);
}

}  // namespace

DoubleCat DoubleCat::from_tables(DoubleCatTables t, bool check) {
  DoubleCat p;
  const int nv = static_cast<int>(t.vert.size());
  const int nh = static_cast<int>(t.horiz.size());
  const int ns = static_cast<int>(t.squares.size());
  if (static_cast<int>(t.sq_vid.size()) != nh ||
      static_cast<int>(t.sq_hid.size()) != nv)
    fail("identity squares missing");
  auto insert = [](std::unordered_map<std::uint64_t, int>& m, int b, int a,
                   int r, const char* what) {
    auto [it, fresh] = m.emplace(key(b, a), r);
    if (!fresh && it->second != r)
      fail(std::string("conflicting ") + what + " entries");
  };
  for (const auto& e : t.vcomp_v) insert(p.vv_, e[0], e[1], e[2], "vertical");
  for (const auto& e : t.hcomp_h) insert(p.hh_, e[0], e[1], e[2], "horizontal");
  for (const auto& e : t.vcomp_s) insert(p.vs_, e[0], e[1], e[2], "square");
  for (const auto& e : t.hcomp_s) insert(p.hs_, e[0], e[1], e[2], "square");
  for (int f = 0; f < nv; ++f) {
    insert(p.vv_, f, t.vid[t.vert[f][0]], f, "vertical");
    insert(p.vv_, t.vid[t.vert[f][1]], f, f, "vertical");
  }
  for (int f = 0; f < nh; ++f) {
    insert(p.hh_, f, t.hid[t.horiz[f][0]], f, "horizontal");
    insert(p.hh_, t.hid[t.horiz[f][1]], f, f, "horizontal");
  }
  for (int s = 0; s < ns; ++s) {
    const auto& q = t.squares[s];
    insert(p.vs_, s, t.sq_vid[q.top], s, "square");
    insert(p.vs_, t.sq_vid[q.bottom], s, s, "square");
    insert(p.hs_, s, t.sq_hid[q.left], s, "square");
    insert(p.hs_, t.sq_hid[q.right], s, s, "square");
  }
  for (const auto& [k, r] : std::unordered_map<std::uint64_t, int>(p.hh_))
    insert(p.hs_, t.sq_vid[static_cast<int>(k >> 32)],
           t.sq_vid[static_cast<int>(k & 0xffffffffu)], t.sq_vid[r], "square");
  for (const auto& [k, r] : std::unordered_map<std::uint64_t, int>(p.vv_))
    insert(p.vs_, t.sq_hid[static_cast<int>(k >> 32)],
           t.sq_hid[static_cast<int>(k & 0xffffffffu)], t.sq_hid[r], "square");

  auto s = std::make_shared<FiniteStructure>();
  const int so = s->add_sort(t.objects);
  const int sv = s->add_sort(nv);
  const int sh = s->add_sort(nh);
  const int ss = s->add_sort(ns);
  std::vector<int> a(nv), b(nv), c(nh), d(nh);
  for (int f = 0; f < nv; ++f) a[f] = t.vert[f][0], b[f] = t.vert[f][1];
  for (int f = 0; f < nh; ++f) c[f] = t.horiz[f][0], d[f] = t.horiz[f][1];
  s->add_unary(sv, so, a);
  s->add_unary(sv, so, b);
  s->add_unary(sh, so, c);
  s->add_unary(sh, so, d);
  std::vector<int> top(ns), bottom(ns), left(ns), right(ns);
  for (int q = 0; q < ns; ++q) {
    top[q] = t.squares[q].top;
    bottom[q] = t.squares[q].bottom;
    left[q] = t.squares[q].left;
    right[q] = t.squares[q].right;
  }
  s->add_unary(ss, sh, top);
  s->add_unary(ss, sh, bottom);
  s->add_unary(ss, sv, left);
  s->add_unary(ss, sv, right);
  s->add_unary(so, sv, t.vid);
  s->add_unary(so, sh, t.hid);
  s->add_unary(sh, ss, t.sq_vid);
  s->add_unary(sv, ss, t.sq_hid);
  auto dump = [](const std::unordered_map<std::uint64_t, int>& m) {
    std::vector<std::array<int, 3>> out;
    for (const auto& [k, r] : m)
      out.push_back({static_cast<int>(k >> 32),
                     static_cast<int>(k & 0xffffffffu), r});
    std::sort(out.begin(), out.end());
    return out;
  };
  s->add_binary(sv, sv, sv, dump(p.vv_));
  s->add_binary(sh, sh, sh, dump(p.hh_));
  s->add_binary(ss, ss, ss, dump(p.vs_));
  s->add_binary(ss, ss, ss, dump(p.hs_));
  p.structure_ = std::move(s);
  p.t_ = std::move(t);
  if (p.t_.obj_names.size() != static_cast<std::size_t>(p.t_.objects)) {
    p.t_.obj_names.resize(p.t_.objects);
    for (int x = 0; x < p.t_.objects; ++x)
      if (p.t_.obj_names[x].empty()) p.t_.obj_names[x] = std::to_string(x);
  }
  if (check) p.validate();
  return p;
}

bool DoubleCat::is_identity_square(int s) const {
  const auto& q = t_.squares[s];
  return t_.sq_vid[q.top] == s || t_.sq_hid[q.left] == s;
}

void DoubleCat::validate() const {
  const int nv = num_vert(), nh = num_horiz(), ns = num_squares();
  for (int x = 0; x < t_.objects; ++x) {
    if (t_.vert[t_.vid[x]] != std::array<int, 2>{x, x}) fail("bad vertical identity");
    if (t_.horiz[t_.hid[x]] != std::array<int, 2>{x, x}) fail("bad horizontal identity");
    if (t_.sq_vid[t_.hid[x]] != t_.sq_hid[t_.vid[x]]) fail("two identity squares on an object");
  }
  for (int f = 0; f < nh; ++f) {
    const auto& q = t_.squares[t_.sq_vid[f]];
    if (q.top != f || q.bottom != f || q.left != t_.vid[t_.horiz[f][0]] ||
        q.right != t_.vid[t_.horiz[f][1]])
      fail("bad vertical identity square");
  }
  for (int f = 0; f < nv; ++f) {
    const auto& q = t_.squares[t_.sq_hid[f]];
    if (q.left != f || q.right != f || q.top != t_.hid[t_.vert[f][0]] ||
        q.bottom != t_.hid[t_.vert[f][1]])
      fail("bad horizontal identity square");
  }
  for (int s = 0; s < ns; ++s) {
    const auto& q = t_.squares[s];
    if (t_.horiz[q.top][0] != t_.vert[q.left][0] ||
        t_.horiz[q.top][1] != t_.vert[q.right][0] ||
        t_.horiz[q.bottom][0] != t_.vert[q.left][1] ||
        t_.horiz[q.bottom][1] != t_.vert[q.right][1])
      fail("square boundary does not close");
  }

  std::vector<std::vector<int>> vout(t_.objects), hout(t_.objects);
  for (int f = 0; f < nv; ++f) vout[t_.vert[f][0]].push_back(f);
  for (int f = 0; f < nh; ++f) hout[t_.horiz[f][0]].push_back(f);
  for (int f = 0; f < nv; ++f)
    for (int g : vout[t_.vert[f][1]]) {
      const int gf = vcomp_v(g, f);
      if (gf < 0) fail("vertical composition not total");
      if (t_.vert[gf] != std::array<int, 2>{t_.vert[f][0], t_.vert[g][1]})
        fail("vertical composite has wrong boundary");
      for (int h : vout[t_.vert[g][1]])
        if (vcomp_v(h, gf) != vcomp_v(vcomp_v(h, g), f))
          fail("vertical composition not associative");
    }
  for (int f = 0; f < nh; ++f)
    for (int g : hout[t_.horiz[f][1]]) {
      const int gf = hcomp_h(g, f);
      if (gf < 0) fail("horizontal composition not total");
      if (t_.horiz[gf] != std::array<int, 2>{t_.horiz[f][0], t_.horiz[g][1]})
        fail("horizontal composite has wrong boundary");
      for (int h : hout[t_.horiz[g][1]])
        if (hcomp_h(h, gf) != hcomp_h(hcomp_h(h, g), f))
          fail("horizontal composition not associative");
    }

  std::vector<std::vector<int>> by_top(nh), by_left(nv);
  for (int s = 0; s < ns; ++s) {
    by_top[t_.squares[s].top].push_back(s);
    by_left[t_.squares[s].left].push_back(s);
  }
  for (int a = 0; a < ns; ++a) {
    const auto& qa = t_.squares[a];
    for (int b : by_top[qa.bottom]) {
      const int ba = vcomp_s(b, a);
      if (ba < 0) fail("vertical square composition not total");
      const auto& qb = t_.squares[b];
      if (!(t_.squares[ba] == SquareCell{qa.top, qb.bottom,
                                         vcomp_v(qb.left, qa.left),
                                         vcomp_v(qb.right, qa.right)}))
        fail("vertical square composite has wrong boundary");
      for (int c : by_top[qb.bottom])
        if (vcomp_s(c, ba) != vcomp_s(vcomp_s(c, b), a))
          fail("vertical square composition not associative");
    }
    for (int b : by_left[qa.right]) {
      const int ba = hcomp_s(b, a);
      if (ba < 0) fail("horizontal square composition not total");
      const auto& qb = t_.squares[b];
      if (!(t_.squares[ba] == SquareCell{hcomp_h(qb.top, qa.top),
                                         hcomp_h(qb.bottom, qa.bottom),
                                         qa.left, qb.right}))
        fail("horizontal square composite has wrong boundary");
      for (int c : by_left[qb.right])
        if (hcomp_s(c, ba) != hcomp_s(hcomp_s(c, b), a))
          fail("horizontal square composition not associative");
      // Interchange with every 2x2 grid below (a, b).
      for (int a2 : by_top[qa.bottom])
        for (int b2 : by_top[qb.bottom])
          if (t_.squares[a2].right == t_.squares[b2].left &&
              vcomp_s(hcomp_s(b2, a2), ba) !=
                  hcomp_s(vcomp_s(b2, b), vcomp_s(a2, a)))
            fail("interchange law fails");
    }
  }
}

std::size_t DoubleCat::level_count(int n, int m) const {
  // Rows are horizontal n-chains of squares, keyed by their top and bottom
  // boundaries; columns of rows are counted by dynamic programming.
  using Boundary = std::vector<int>;
  std::map<Boundary, std::size_t> start;
  std::vector<std::pair<Boundary, Boundary>> rows;
  if (n == 0) {
    for (int x = 0; x < t_.objects; ++x) start[{x}] = 1;
    for (int f = 0; f < num_vert(); ++f)
      rows.push_back({{t_.vert[f][0]}, {t_.vert[f][1]}});
  } else {
    std::vector<std::vector<int>> hout(t_.objects), sq_left(num_vert());
    for (int f = 0; f < num_horiz(); ++f) hout[t_.horiz[f][0]].push_back(f);
    for (int s = 0; s < num_squares(); ++s)
      sq_left[t_.squares[s].left].push_back(s);
    std::vector<int> chain;
    std::function<void(int)> hchains = [&](int x) {
      if (static_cast<int>(chain.size()) == n) {
        start[chain] = 1;
        return;
      }
      for (int f : hout[x]) {
        chain.push_back(f);
        hchains(t_.horiz[f][1]);
        chain.pop_back();
      }
    };
    for (int x = 0; x < t_.objects; ++x) hchains(x);
    std::function<void(int, Boundary&, Boundary&)> srows =
        [&](int v, Boundary& top, Boundary& bottom) {
          if (static_cast<int>(top.size()) == n) {
            rows.push_back({top, bottom});
            return;
          }
          for (int s : sq_left[v]) {
            top.push_back(t_.squares[s].top);
            bottom.push_back(t_.squares[s].bottom);
            srows(t_.squares[s].right, top, bottom);
            top.pop_back();
            bottom.pop_back();
          }
        };
    Boundary top, bottom;
    for (int v = 0; v < num_vert(); ++v) srows(v, top, bottom);
  }
  std::map<Boundary, std::vector<const Boundary*>> next;
  for (const auto& [t, b] : rows) next[t].push_back(&b);
  std::map<Boundary, std::size_t> cur = start;
  for (int r = 0; r < m; ++r) {
    std::map<Boundary, std::size_t> nxt;
    for (const auto& [b, cnt] : cur) {
      auto it = next.find(b);
      if (it == next.end()) continue;
      for (const Boundary* b2 : it->second) nxt[*b2] += cnt;
    }
    cur = std::move(nxt);
  }
  std::size_t total = 0;
  for (const auto& [b, cnt] : cur) total += cnt;
  return total;
}

bool is_double_functor(const DoubleCat& p, const DoubleCat& q,
                       const DoubleFunctor& f) {
  return is_homomorphism(p.structure(), q.structure(), f);
}

DoubleFunctor identity_double_functor(const DoubleCat& p) {
  DoubleFunctor f(4);
  for (int s = 0; s < 4; ++s) {
    f[s].resize(p.structure().sizes[s]);
    std::iota(f[s].begin(), f[s].end(), 0);
  }
  return f;
}

DoubleFunctor compose(const DoubleFunctor& g, const DoubleFunctor& f) {
  DoubleFunctor h(f.size());
  for (std::size_t s = 0; s < f.size(); ++s)
    for (int x : f[s]) h[s].push_back(g[s][x]);
  return h;
}

namespace {

struct LaxSquare {
  SquareCell cell;
  int filler;
};

// Every square of squares(C), in a fixed order.
std::vector<LaxSquare> lax_squares(const TwoCat& c) {
  std::vector<LaxSquare> out;
  const int n1 = c.num_cells1();
  for (int top = 0; top < n1; ++top)
    for (int left = 0; left < n1; ++left) {
      if (c.cell1(left).src != c.cell1(top).src) continue;
      for (int right = 0; right < n1; ++right) {
        if (c.cell1(right).src != c.cell1(top).tgt) continue;
        for (int bottom : c.hom(c.cell1(left).tgt, c.cell1(right).tgt))
          for (int a : c.hom2(c.comp1(right, top), c.comp1(bottom, left)))
            out.push_back({{top, bottom, left, right}, a});
      }
    }
  return out;
}

std::uint64_t square_key(const SquareCell& q, int filler) {
  std::uint64_t h = 1469598103934665603ull;
  for (int x : {q.top, q.bottom, q.left, q.right, filler}) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

struct SquareIndex {
  std::vector<LaxSquare> list;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  explicit SquareIndex(const TwoCat& c) : list(lax_squares(c)) {
    for (int s = 0; s < static_cast<int>(list.size()); ++s)
      buckets[square_key(list[s].cell, list[s].filler)].push_back(s);
  }
  int find(const SquareCell& q, int filler) const {
    auto it = buckets.find(square_key(q, filler));
    if (it != buckets.end())
      for (int s : it->second)
        if (list[s].cell == q && list[s].filler == filler) return s;
    throw std::logic_error("square not found");
  }
};

void one_cell_tables(const TwoCat& c, DoubleCatTables& t, bool vert,
                     bool horiz) {
  t.objects = c.num_objects();
  for (int x = 0; x < c.num_objects(); ++x) t.obj_names.push_back(c.object_name(x));
  auto fill = [&](std::vector<std::array<int, 2>>& cells, std::vector<int>& ids,
                  std::vector<std::array<int, 3>>& comp,
                  std::vector<std::string>& names, bool full) {
    if (full) {
      for (int f = 0; f < c.num_cells1(); ++f) {
        cells.push_back({c.cell1(f).src, c.cell1(f).tgt});
        names.push_back(c.cell1_name(f));
      }
      for (int x = 0; x < c.num_objects(); ++x) ids.push_back(c.id1(x));
      for (const auto& e : c.tables().comp1) comp.push_back(e);
    } else {
      for (int x = 0; x < c.num_objects(); ++x) {
        cells.push_back({x, x});
        ids.push_back(x);
        names.emplace_back();
      }
    }
  };
  fill(t.vert, t.vid, t.vcomp_v, t.vert_names, vert);
  fill(t.horiz, t.hid, t.hcomp_h, t.horiz_names, horiz);
}

}  // namespace

DoubleCat squares(const TwoCat& c) {
  DoubleCatTables t;
  one_cell_tables(c, t, true, true);
  const SquareIndex idx(c);
  for (const auto& q : idx.list) t.squares.push_back(q.cell);
  for (int f = 0; f < c.num_cells1(); ++f) {
    const int x = c.cell1(f).src, y = c.cell1(f).tgt;
    t.sq_vid.push_back(idx.find({f, f, c.id1(x), c.id1(y)}, c.id2(f)));
  }
  for (int f = 0; f < c.num_cells1(); ++f) {
    const int x = c.cell1(f).src, y = c.cell1(f).tgt;
    t.sq_hid.push_back(idx.find({c.id1(x), c.id1(y), f, f}, c.id2(f)));
  }
  std::unordered_map<int, std::vector<int>> by_top, by_left;
  for (int s = 0; s < static_cast<int>(idx.list.size()); ++s) {
    by_top[idx.list[s].cell.top].push_back(s);
    by_left[idx.list[s].cell.left].push_back(s);
  }
  for (int a = 0; a < static_cast<int>(idx.list.size()); ++a) {
    const auto& [qa, al] = idx.list[a];
    for (int b : by_top[qa.bottom]) {
      const auto& [qb, be] = idx.list[b];
      const int filler = c.vcomp(c.hcomp(be, c.id2(qa.left)),
                                 c.hcomp(c.id2(qb.right), al));
      const SquareCell q{qa.top, qb.bottom, c.comp1(qb.left, qa.left),
                         c.comp1(qb.right, qa.right)};
      t.vcomp_s.push_back({b, a, idx.find(q, filler)});
    }
    for (int b : by_left[qa.right]) {
      const auto& [qb, be] = idx.list[b];
      const int filler = c.vcomp(c.hcomp(c.id2(qb.bottom), al),
                                 c.hcomp(be, c.id2(qa.top)));
      const SquareCell q{c.comp1(qb.top, qa.top), c.comp1(qb.bottom, qa.bottom),
                         qa.left, qb.right};
      t.hcomp_s.push_back({b, a, idx.find(q, filler)});
    }
  }
  return DoubleCat::from_tables(std::move(t), false);
}

DoubleCat inclusion(const TwoCat& c, Direction kind) {
  DoubleCatTables t;
  const bool v = kind == Direction::v;
  one_cell_tables(c, t, v, !v);
  for (int a = 0; a < c.num_cells2(); ++a) {
    const int f = c.cell2(a).src, g = c.cell2(a).tgt;
    const int x = c.cell1(f).src, y = c.cell1(f).tgt;
    // C_v: a 2-cell g' => f' is a square with left f' and right g'.
    t.squares.push_back(v ? SquareCell{x, y, g, f} : SquareCell{f, g, x, y});
  }
  for (int f = 0; f < (v ? c.num_objects() : c.num_cells1()); ++f)
    t.sq_vid.push_back(v ? c.id2(c.id1(f)) : c.id2(f));
  for (int f = 0; f < (v ? c.num_cells1() : c.num_objects()); ++f)
    t.sq_hid.push_back(v ? c.id2(f) : c.id2(c.id1(f)));
  for (const auto& e : c.tables().vcomp)
    (v ? t.hcomp_s : t.vcomp_s).push_back(v ? std::array<int, 3>{e[1], e[0], e[2]} : e);
  for (const auto& e : c.tables().hcomp)
    (v ? t.vcomp_s : t.hcomp_s).push_back(e);
  return DoubleCat::from_tables(std::move(t), false);
}

DoubleFunctor inclusion_map(const TwoCat& a, const TwoCat& b,
                            const TwoFunctor& f, Direction kind) {
  (void)a;
  (void)b;
  if (kind == Direction::v) return {f.obj, f.cell1, f.obj, f.cell2};
  return {f.obj, f.obj, f.cell1, f.cell2};
}

DoubleFunctor inclusion_into_squares(const TwoCat& c, Direction kind) {
  const SquareIndex idx(c);
  DoubleFunctor f(4);
  for (int x = 0; x < c.num_objects(); ++x) f[0].push_back(x);
  std::vector<int> ids;
  for (int x = 0; x < c.num_objects(); ++x) ids.push_back(c.id1(x));
  std::vector<int> all(c.num_cells1());
  std::iota(all.begin(), all.end(), 0);
  const bool v = kind == Direction::v;
  f[1] = v ? all : ids;
  f[2] = v ? ids : all;
  for (int a = 0; a < c.num_cells2(); ++a) {
    const int s = c.cell2(a).src, g = c.cell2(a).tgt;
    const int x = c.id1(c.cell1(s).src), y = c.id1(c.cell1(s).tgt);
    f[3].push_back(v ? idx.find({x, y, g, s}, a) : idx.find({s, g, x, y}, a));
  }
  return f;
}

DoubleCat product(const DoubleCat& p, const DoubleCat& q) {
  const auto& a = p.tables();
  const auto& b = q.tables();
  const int no = b.objects, nv = q.num_vert(), nh = q.num_horiz(),
            ns = q.num_squares();
  DoubleCatTables t;
  t.objects = a.objects * b.objects;
  for (int x = 0; x < a.objects; ++x)
    for (int y = 0; y < b.objects; ++y)
      t.obj_names.push_back(a.obj_names[x] + "," + b.obj_names[y]);
  auto pair1 = [](const std::vector<std::array<int, 2>>& u,
                  const std::vector<std::array<int, 2>>& w, int n) {
    std::vector<std::array<int, 2>> out;
    for (const auto& e : u)
      for (const auto& f : w) out.push_back({e[0] * n + f[0], e[1] * n + f[1]});
    return out;
  };
  t.vert = pair1(a.vert, b.vert, no);
  t.horiz = pair1(a.horiz, b.horiz, no);
  for (const auto& e : a.squares)
    for (const auto& f : b.squares)
      t.squares.push_back({e.top * nh + f.top, e.bottom * nh + f.bottom,
                           e.left * nv + f.left, e.right * nv + f.right});
  auto pair_ids = [](const std::vector<int>& u, const std::vector<int>& w,
                     int n) {
    std::vector<int> out;
    for (int x : u)
      for (int y : w) out.push_back(x * n + y);
    return out;
  };
  t.vid = pair_ids(a.vid, b.vid, nv);
  t.hid = pair_ids(a.hid, b.hid, nh);
  t.sq_vid = pair_ids(a.sq_vid, b.sq_vid, ns);
  t.sq_hid = pair_ids(a.sq_hid, b.sq_hid, ns);
  auto pair_comp = [](const FiniteStructure::Binary& u,
                      const FiniteStructure::Binary& w, int n,
                      std::vector<std::array<int, 3>>& out) {
    for (const auto& e : u.entries)
      for (const auto& f : w.entries)
        out.push_back({e[0] * n + f[0], e[1] * n + f[1], e[2] * n + f[2]});
  };
  const auto& sp = p.structure().binary;
  const auto& sq = q.structure().binary;
  pair_comp(sp[0], sq[0], nv, t.vcomp_v);
  pair_comp(sp[1], sq[1], nh, t.hcomp_h);
  pair_comp(sp[2], sq[2], ns, t.vcomp_s);
  pair_comp(sp[3], sq[3], ns, t.hcomp_s);
  t.vert_names.resize(t.vert.size());
  t.horiz_names.resize(t.horiz.size());
  return DoubleCat::from_tables(std::move(t), false);
}

DoubleFunctor product_map(const DoubleCat& p, const DoubleCat& q,
                          const DoubleCat& p2, const DoubleCat& q2,
                          const DoubleFunctor& f, const DoubleFunctor& g) {
  DoubleFunctor h(4);
  for (int s = 0; s < 4; ++s) {
    const int n2 = q2.structure().sizes[s];
    for (int x = 0; x < p.structure().sizes[s]; ++x)
      for (int y = 0; y < q.structure().sizes[s]; ++y)
        h[s].push_back(f[s][x] * n2 + g[s][y]);
  }
  (void)p2;
  return h;
}

DoubleCat terminal_double() { return inclusion(terminal(), Direction::v); }

DoubleCat grid(int n, int m) {
  return product(inclusion(ordinal(n), Direction::h),
                 inclusion(ordinal(m), Direction::v));
}

DoubleCat dualize(const DoubleCat& p, DoubleDual kind) {
  DoubleCatTables t = p.tables();
  const auto& bin = p.structure().binary;
  auto swap_args = [](const FiniteStructure::Binary& b) {
    std::vector<std::array<int, 3>> out;
    for (const auto& e : b.entries) out.push_back({e[1], e[0], e[2]});
    return out;
  };
  t.vcomp_v = bin[0].entries;
  t.hcomp_h = bin[1].entries;
  t.vcomp_s = bin[2].entries;
  t.hcomp_s = bin[3].entries;
  switch (kind) {
    case DoubleDual::hop:
      for (auto& e : t.horiz) std::swap(e[0], e[1]);
      for (auto& q : t.squares) std::swap(q.left, q.right);
      t.hcomp_h = swap_args(bin[1]);
      t.hcomp_s = swap_args(bin[3]);
      break;
    case DoubleDual::vop:
      for (auto& e : t.vert) std::swap(e[0], e[1]);
      for (auto& q : t.squares) std::swap(q.top, q.bottom);
      t.vcomp_v = swap_args(bin[0]);
      t.vcomp_s = swap_args(bin[2]);
      break;
    case DoubleDual::t:
      std::swap(t.vert, t.horiz);
      std::swap(t.vid, t.hid);
      std::swap(t.sq_vid, t.sq_hid);
      std::swap(t.vcomp_v, t.hcomp_h);
      std::swap(t.vcomp_s, t.hcomp_s);
      std::swap(t.vert_names, t.horiz_names);
      for (auto& q : t.squares) q = {q.left, q.right, q.top, q.bottom};
      break;
  }
  return DoubleCat::from_tables(std::move(t), false);
}

std::vector<DoubleFunctor> enumerate_double_functors(const DoubleCat& p,
                                                     const DoubleCat& q,
                                                     std::size_t node_budget) {
  SearchOptions opt;
  opt.node_budget = node_budget;
  return all_homomorphisms(p.structure(), q.structure(), opt);
}

std::size_t count_double_functors(const DoubleCat& p, const DoubleCat& q,
                                  std::size_t node_budget) {
  SearchOptions opt;
  opt.node_budget = node_budget;
  return count_homomorphisms(p.structure(), q.structure(), opt);
}

bool isomorphic(const DoubleCat& p, const DoubleCat& q) {
  return find_isomorphism(p.structure(), q.structure()).has_value();
}

bool is_complete(const DoubleCat& p, Completeness kind) {
  const auto& t = p.tables();
  for (int s = 0; s < p.num_squares(); ++s) {
    const auto& q = p.square(s);
    if (!p.is_vid(q.left) || !p.is_vid(q.right) || p.is_identity_square(s))
      continue;
    for (int r = 0; r < p.num_squares(); ++r)
      if (p.vcomp_s(r, s) == t.sq_vid[q.top] &&
          p.vcomp_s(s, r) == t.sq_vid[q.bottom])
        return false;
  }
  if (kind == Completeness::locally) return true;
  for (int f = 0; f < p.num_horiz(); ++f) {
    if (p.is_hid(f)) continue;
    for (int g = 0; g < p.num_horiz(); ++g)
      if (p.hcomp_h(g, f) == t.hid[t.horiz[f][0]] &&
          p.hcomp_h(f, g) == t.hid[t.horiz[f][1]])
        return false;
  }
  for (int f = 0; f < p.num_vert(); ++f) {
    if (p.is_vid(f)) continue;
    for (int g = 0; g < p.num_vert(); ++g)
      if (p.vcomp_v(g, f) == t.vid[t.vert[f][0]] &&
          p.vcomp_v(f, g) == t.vid[t.vert[f][1]])
        return false;
  }
  return true;
}

AdjunctionCounts verify_adjunction_counts(const TwoCat& c, const TwoCat& d,
                                          const TwoCat& e) {
  AdjunctionCounts out;
  out.double_side = count_double_functors(
      product(inclusion(c, Direction::h), inclusion(d, Direction::v)),
      squares(e));
  const GrayTensor t = gray_tensor(normalize(present_twocat(c)),
                                   normalize(present_twocat(d)));
  out.tensor_side = count_functors(t.result.cat, e);
  return out;
}

std::vector<NamedDouble> default_double_battery() {
  std::vector<NamedDouble> out;
  for (const auto& g : {GlobularSum::simplex(0), GlobularSum::simplex(1),
                        GlobularSum::simplex(2), GlobularSum::constant(1, 1)}) {
    const TwoCat e = build_globular_sum(g);
    out.push_back({"Sq" + g.name(), squares(e)});
    if (g.n > 0) {
      out.push_back({g.name() + "_v", inclusion(e, Direction::v)});
      out.push_back({g.name() + "_h", inclusion(e, Direction::h)});
    }
  }
  return out;
}

BatteryResult verify_double_pushout(const DoubleSpan& span,
                                    const DoubleCocone& cocone,
                                    const std::vector<NamedDouble>& battery) {
  auto require = [](const DoubleCat& x, const DoubleCat& y,
                    const DoubleFunctor& f) {
    if (!is_double_functor(x, y, f))
      throw AxiomViolation("not a double functor");
  };
  require(*span.a, *span.c, span.f);
  require(*span.a, *span.d, span.g);
  require(*span.c, *cocone.p, cocone.i);
  require(*span.d, *cocone.p, cocone.j);
  if (compose(cocone.i, span.f) != compose(cocone.j, span.g))
    throw std::invalid_argument("cocone does not commute");

  BatteryResult result;
  for (const auto& [name, e] : battery) {
    BatteryEntry entry;
    entry.name = name;
    std::map<std::vector<int>, std::size_t> from_c, from_d;
    for (const auto& h : enumerate_double_functors(*span.c, e))
      ++from_c[flatten(compose(h, span.f))];
    for (const auto& h : enumerate_double_functors(*span.d, e))
      ++from_d[flatten(compose(h, span.g))];
    for (const auto& [k, n] : from_c) {
      auto it = from_d.find(k);
      if (it != from_d.end()) entry.cone_maps += n * it->second;
    }
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    const auto maps = enumerate_double_functors(*cocone.p, e);
    entry.candidate_maps = maps.size();
    for (const auto& h : maps)
      images.insert({flatten(compose(h, cocone.i)), flatten(compose(h, cocone.j))});
    entry.injective = images.size() == maps.size();
    result.entries.push_back(std::move(entry));
  }
  return result;
}

namespace {

// Projection of product(p, q) onto p (which = 0) or q (which = 1).
DoubleFunctor product_projection(const DoubleCat& p, const DoubleCat& q,
                                 int which) {
  DoubleFunctor h(4);
  for (int s = 0; s < 4; ++s) {
    const int np = p.structure().sizes[s], nq = q.structure().sizes[s];
    for (int x = 0; x < np; ++x)
      for (int y = 0; y < nq; ++y) h[s].push_back(which == 0 ? x : y);
  }
  return h;
}

// The discrete object set of c, included into c.
TwoFunctor objects_into(const TwoCat& disc, const TwoCat& c) {
  TwoFunctor f;
  for (int x = 0; x < disc.num_objects(); ++x) f.obj.push_back(x);
  for (int a = 0; a < disc.num_cells1(); ++a)
    f.cell1.push_back(c.id1(disc.cell1(a).src));
  for (int a = 0; a < disc.num_cells2(); ++a)
    f.cell2.push_back(c.id2(f.cell1[disc.cell2(a).src]));
  return f;
}

// <n, m> -> [n; m]_h sending (i, j) to i and the row-j arrow i -> i+1 to the
// j-th parallel arrow.
DoubleFunctor grid_collapse(int n, int m, const DoubleCat& g,
                            const DoubleCat& target) {
  const TwoCat on = ordinal(n);
  const GlobularIndex idx(GlobularSum::constant(n, m));
  std::vector<DoubleFunctor> found;
  for (auto& h : enumerate_double_functors(g, target)) {
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i)
      for (int j = 0; j <= m && ok; ++j) ok = h[0][i * (m + 1) + j] == i;
    for (int f = 0; f < on.num_cells1() && ok; ++f) {
      const auto& c = on.cell1(f);
      if (c.tgt != c.src + 1) continue;
      for (int j = 0; j <= m && ok; ++j)
        ok = h[2][f * (m + 1) + j] == idx.cell1(c.src, c.tgt, {j});
    }
    if (ok) found.push_back(std::move(h));
  }
  if (found.size() != 1)
    throw HypothesisViolation("grid collapse is not unique");
  return found.front();
}

}  // namespace

BatteryResult verify_step3(int n, int m, int k, int l,
                           const std::vector<NamedDouble>& battery) {
  const TwoCat on = ordinal(n), om = ordinal(m);
  const Truncated t0 = truncate(on, Truncation::tau0);
  const TwoCat kl = build_globular_sum(GlobularSum::constant(k, l));
  const Truncated t1 = truncate(kl, Truncation::tau1);
  const TwoCat nm = build_globular_sum(GlobularSum::constant(n, m));

  const DoubleCat t0h = inclusion(t0.cat, Direction::h);
  const DoubleCat nh = inclusion(on, Direction::h);
  const DoubleCat mv = inclusion(om, Direction::v);
  const DoubleCat t1v = inclusion(t1.cat, Direction::v);
  const DoubleCat klv = inclusion(kl, Direction::v);
  const DoubleCat nmh = inclusion(nm, Direction::h);

  const DoubleCat a1 = product(t0h, mv);
  const DoubleCat a = product(a1, t1v);
  const DoubleCat g = product(nh, mv);
  const DoubleCat c = product(g, klv);
  const DoubleCat d = product(t0h, t1v);
  const DoubleCat p = product(nmh, klv);

  const DoubleFunctor t1_in = inclusion_map(t1.cat, kl, t1.map, Direction::v);
  const DoubleFunctor f = product_map(
      a1, t1v, g, klv,
      product_map(t0h, mv, nh, mv,
                  inclusion_map(t0.cat, on, t0.map, Direction::h),
                  identity_double_functor(mv)),
      t1_in);
  const DoubleFunctor gg = product_map(a1, t1v, t0h, t1v,
                                       product_projection(t0h, mv, 0),
                                       identity_double_functor(t1v));
  const DoubleFunctor i =
      product_map(g, klv, nmh, klv, grid_collapse(n, m, g, nmh),
                  identity_double_functor(klv));
  const DoubleFunctor j = product_map(
      t0h, t1v, nmh, klv,
      inclusion_map(t0.cat, nm, objects_into(t0.cat, nm), Direction::h),
      t1_in);
  return verify_double_pushout({&a, &c, &d, f, gg}, {&p, i, j}, battery);
}

namespace {

// One level (n, m) of the nerve: pairs (phi, psi_0..psi_n) with
// phi : [n] (x) [m] -> D and psi_k : [0] (x) [m] -> C over f.
class NerveLevel {
 public:
  struct Element {
    TwoFunctor phi;
    std::vector<TwoFunctor> psi;
  };

  NerveLevel(int n, int m, const TwoCat& c, const TwoCat& d,
             const TwoFunctor& f)
      : n_(n), m_(m), tensor_(tensor_simplices(n, m)),
        column_(tensor_simplices(0, m)) {
    std::map<std::vector<int>, std::vector<TwoFunctor>> fibers;
    for (auto& psi : enumerate_functors(column_.cat, c))
      fibers[flatten(compose(f, psi).as_assignment())].push_back(psi);
    std::vector<TwoFunctor> slices;
    std::vector<int> all_rows(m + 1);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    for (int k = 0; k <= n; ++k)
      slices.push_back(simplex_tensor_map(column_, tensor_, {k}, all_rows));
    for (auto& phi : enumerate_functors(tensor_.cat, d)) {
      std::vector<const std::vector<TwoFunctor>*> choice;
      for (int k = 0; k <= n; ++k) {
        auto it = fibers.find(flatten(compose(phi, slices[k]).as_assignment()));
        if (it == fibers.end()) break;
        choice.push_back(&it->second);
      }
      if (static_cast<int>(choice.size()) != n + 1) continue;
      std::vector<std::size_t> pos(n + 1, 0);
      while (true) {
        Element e{phi, {}};
        for (int k = 0; k <= n; ++k) e.psi.push_back((*choice[k])[pos[k]]);
        index_.emplace(key(e), static_cast<int>(elements_.size()));
        elements_.push_back(std::move(e));
        int k = n;
        while (k >= 0 && ++pos[k] == choice[k]->size()) pos[k--] = 0;
        if (k < 0) break;
      }
    }
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const Element& element(int x) const { return elements_[x]; }

  /// Index in this level of the restriction of `e` (from `from`) along
  /// alpha : [n] -> [from.n], beta : [m] -> [from.m].
  int restrict(const NerveLevel& from, int x, const std::vector<int>& alpha,
               const std::vector<int>& beta) const {
    const Element& e = from.elements_[x];
    const TwoFunctor u = simplex_tensor_map(tensor_, from.tensor_, alpha, beta);
    const TwoFunctor v = simplex_tensor_map(column_, from.column_, {0}, beta);
    Element r{compose(e.phi, u), {}};
    for (int k = 0; k <= n_; ++k) r.psi.push_back(compose(e.psi[alpha[k]], v));
    return index_.at(key(r));
  }

 private:
  static std::vector<int> key(const Element& e) {
    std::vector<int> k = flatten(e.phi.as_assignment());
    for (const auto& p : e.psi) {
      const auto f = flatten(p.as_assignment());
      k.insert(k.end(), f.begin(), f.end());
    }
    return k;
  }

  int n_, m_;
  SimplexTensor tensor_, column_;
  std::vector<Element> elements_;
  std::map<std::vector<int>, int> index_;
};

}  // namespace

DoubleCat cech_nerve(const TwoCat& c, const TwoCat& d, const TwoFunctor& f) {
  for (int a = 0; a < c.num_cells2(); ++a)
    if (!c.is_id2(a))
      throw HypothesisViolation("cech_nerve: domain has a non-identity 2-cell");
  require_functor(c, d, f);
  std::map<std::pair<int, int>, NerveLevel> lv;
  for (auto [n, m] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2},
                      {2, 0}, {1, 2}, {2, 1}})
    lv.emplace(std::pair{n, m}, NerveLevel(n, m, c, d, f));
  const auto& l00 = lv.at({0, 0});
  const auto& l01 = lv.at({0, 1});
  const auto& l10 = lv.at({1, 0});
  const auto& l11 = lv.at({1, 1});

  DoubleCatTables t;
  t.objects = l00.size();
  for (int x = 0; x < l01.size(); ++x)
    t.vert.push_back({l00.restrict(l01, x, {0}, {0}),
                      l00.restrict(l01, x, {0}, {1})});
  for (int x = 0; x < l10.size(); ++x)
    t.horiz.push_back({l00.restrict(l10, x, {0}, {0}),
                       l00.restrict(l10, x, {1}, {0})});
  for (int x = 0; x < l11.size(); ++x)
    t.squares.push_back({l10.restrict(l11, x, {0, 1}, {0}),
                         l10.restrict(l11, x, {0, 1}, {1}),
                         l01.restrict(l11, x, {0}, {0, 1}),
                         l01.restrict(l11, x, {1}, {0, 1})});
  for (int x = 0; x < l00.size(); ++x) {
    t.vid.push_back(l01.restrict(l00, x, {0}, {0, 0}));
    t.hid.push_back(l10.restrict(l00, x, {0, 0}, {0}));
  }
  for (int x = 0; x < l10.size(); ++x)
    t.sq_vid.push_back(l11.restrict(l10, x, {0, 1}, {0, 0}));
  for (int x = 0; x < l01.size(); ++x)
    t.sq_hid.push_back(l11.restrict(l01, x, {0, 0}, {0, 1}));

  // Composites from the inner face of level 2, first from the outer faces.
  auto comp = [&](const NerveLevel& two, const NerveLevel& one, bool vertical,
                  std::vector<int> lo, std::vector<std::array<int, 3>>& out) {
    const std::vector<int> first{0, 1}, second{1, 2}, outer{0, 2};
    for (int x = 0; x < two.size(); ++x) {
      if (vertical)
        out.push_back({one.restrict(two, x, lo, second),
                       one.restrict(two, x, lo, first),
                       one.restrict(two, x, lo, outer)});
      else
        out.push_back({one.restrict(two, x, second, lo),
                       one.restrict(two, x, first, lo),
                       one.restrict(two, x, outer, lo)});
    }
  };
  comp(lv.at({0, 2}), l01, true, {0}, t.vcomp_v);
  comp(lv.at({2, 0}), l10, false, {0}, t.hcomp_h);
  comp(lv.at({1, 2}), l11, true, {0, 1}, t.vcomp_s);
  comp(lv.at({2, 1}), l11, false, {0, 1}, t.hcomp_s);
  return DoubleCat::from_tables(std::move(t));
}

}  // namespace graycat
