// SPDX-License-Identifier: Apache-2.0
#include "graycat/gray.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "graycat/error.hpp"

namespace graycat {

bool path_dominates(const std::string& p, const std::string& q) {
  if (p.size() != q.size()) return false;
  int hp = 0, hq = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    hp += p[s] == 'H';
    hq += q[s] == 'H';
    if (hp < hq) return false;
  }
  return hp == hq;
}

namespace {

void lattice_words(int h, int v, std::string& cur,
                   std::vector<std::string>& out) {
  if (h == 0 && v == 0) {
    out.push_back(cur);
    return;
  }
  if (h > 0) {
    cur.push_back('H');
    lattice_words(h - 1, v, cur, out);
    cur.pop_back();
  }
  if (v > 0) {
    cur.push_back('V');
    lattice_words(h, v - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SimplexTensor tensor_simplices(int n, int m, const Budget& budget) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative simplex");
  SimplexTensor t;
  t.n = n;
  t.m = m;
  TwoCatBuilder b;
  const int n0 = (n + 1) * (m + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j) {
      b.add_object(std::to_string(i) + std::to_string(j));
      t.paths.push_back({i, j, ""});
    }

  // 1-cells, grouped by hom.
  std::map<std::pair<int, std::string>, int> cell_of;
  std::vector<std::vector<int>> hom(static_cast<std::size_t>(n0) * n0);
  for (int x = 0; x < n0; ++x) {
    cell_of[{x, ""}] = b.id1(x);
    hom[static_cast<std::size_t>(x) * n0 + x].push_back(b.id1(x));
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j)
      for (int i2 = i; i2 <= n; ++i2)
        for (int j2 = j; j2 <= m; ++j2) {
          if (i2 == i && j2 == j) continue;
          std::vector<std::string> words;
          std::string cur;
          lattice_words(i2 - i, j2 - j, cur, words);
          const int x = t.object(i, j), y = t.object(i2, j2);
          for (auto& w : words) {
            if (static_cast<std::size_t>(b.num_cells1()) >= budget.cells)
              throw BudgetExceeded("tensor_simplices: too many 1-cells");
            const int f = b.add_cell1(x, y, std::to_string(i) +
                                                std::to_string(j) + w);
            cell_of[{x, w}] = f;
            hom[static_cast<std::size_t>(x) * n0 + y].push_back(f);
            t.paths.push_back({i, j, w});
          }
        }
  const int n1 = b.num_cells1();
  auto target = [&](int f) { return b.cell1(f).tgt; };

  // 2-cells: p => q whenever p dominates q.
  std::map<std::pair<int, int>, int> two;
  for (int f = 0; f < n1; ++f) two[{f, f}] = b.id2(f);
  for (const auto& h : hom)
    for (int p : h)
      for (int q : h)
        if (p != q && path_dominates(t.paths[p].steps, t.paths[q].steps)) {
          if (static_cast<std::size_t>(b.num_cells2()) >= budget.cells)
            throw BudgetExceeded("tensor_simplices: too many 2-cells");
          two[{p, q}] = b.add_cell2(p, q);
        }

  auto concat = [&](int g, int f) {
    const int x = b.cell1(f).src;
    return cell_of.at({x, t.paths[f].steps + t.paths[g].steps});
  };
  for (int f = 0; f < n1; ++f)
    for (int g = 0; g < n1; ++g)
      if (target(f) == b.cell1(g).src) b.set_comp1(g, f, concat(g, f));
  for (const auto& [pq, a] : two)
    for (const auto& [qr, c] : two)
      if (qr.first == pq.second)
        b.set_vcomp(c, a, two.at({pq.first, qr.second}));
  for (const auto& [pq, a] : two)
    for (const auto& [rs, c] : two)
      if (target(pq.first) == b.cell1(rs.first).src)
        b.set_hcomp(c, a,
                    two.at({concat(rs.first, pq.first),
                            concat(rs.second, pq.second)}));
  t.cat = b.build(false);
  return t;
}

namespace {

Pasting then(Pasting p, const Pasting& q) {
  p.atoms.insert(p.atoms.end(), q.atoms.begin(), q.atoms.end());
  return p;
}

Pasting single_atom(int obj, const Word& pre, int gen, const Word& post,
                    const Presentation& pres) {
  Pasting p;
  p.obj = obj;
  p.start = pre;
  const auto& g = pres.gens2[gen];
  p.start.insert(p.start.end(), g.src.begin(), g.src.end());
  p.start.insert(p.start.end(), post.begin(), post.end());
  p.atoms.push_back({pre, gen, post});
  return p;
}

}  // namespace

Word GrayTensor::word_h(const Word& u, int b) const {
  Word out;
  for (int f : u) out.push_back(gen_h(f, b));
  return out;
}

Word GrayTensor::word_v(int a, const Word& w) const {
  Word out;
  for (int g : w) out.push_back(gen_v(a, g));
  return out;
}

Pasting GrayTensor::grid(int a, const Word& u, int b, const Word& w) const {
  // Tokens: (false, f) is a horizontal step, (true, g) a vertical one.
  std::vector<std::pair<bool, int>> tok;
  for (int f : u) tok.push_back({false, f});
  for (int g : w) tok.push_back({true, g});
  const auto& pa = left.pres;
  const auto& pb = right.pres;
  auto render = [&](std::size_t from, std::size_t to, int& x, int& y) {
    Word out;
    for (std::size_t s = from; s < to; ++s) {
      if (!tok[s].first) {
        out.push_back(gen_h(tok[s].second, y));
        x = pa.gens1[tok[s].second].tgt;
      } else {
        out.push_back(gen_v(x, tok[s].second));
        y = pb.gens1[tok[s].second].tgt;
      }
    }
    return out;
  };
  Pasting p;
  p.obj = object(a, b);
  {
    int x = a, y = b;
    p.start = render(0, tok.size(), x, y);
  }
  const std::size_t nh = u.size();
  for (std::size_t l = 0; l < w.size(); ++l) {
    // The l-th vertical step sits at position nh + l and moves to l.
    for (std::size_t s = nh + l; s > l; --s) {
      int x = a, y = b;
      Atom at;
      at.pre = render(0, s - 1, x, y);
      const int f = tok[s - 1].second, g = tok[s].second;
      at.gen = gen_sq(f, g);
      std::swap(tok[s - 1], tok[s]);
      int x2 = x, y2 = y;
      render(s - 1, s + 1, x2, y2);
      at.post = render(s + 1, tok.size(), x2, y2);
      p.atoms.push_back(std::move(at));
    }
  }
  return p;
}

Pasting GrayTensor::pasting_h(const Pasting& q, int b) const {
  Pasting p;
  p.obj = object(q.obj, b);
  p.start = word_h(q.start, b);
  for (const auto& at : q.atoms)
    p.atoms.push_back({word_h(at.pre, b), gen2_h(at.gen, b),
                       word_h(at.post, b)});
  return p;
}

Pasting GrayTensor::pasting_v(int a, const Pasting& q) const {
  Pasting p;
  p.obj = object(a, q.obj);
  p.start = word_v(a, q.start);
  for (const auto& at : q.atoms)
    p.atoms.push_back({word_v(a, at.pre), gen2_v(a, at.gen),
                       word_v(a, at.post)});
  return p;
}

GrayTensor gray_tensor(const Presented& a, const Presented& b,
                       const NormalizeOptions& opt) {
  GrayTensor t;
  t.left = a;
  t.right = b;
  const auto& pa = a.pres;
  const auto& pb = b.pres;
  const int na = static_cast<int>(pa.objects.size());
  const int nb = static_cast<int>(pb.objects.size());
  Presentation p;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      p.add_object(pa.objects[x] + "." + pb.objects[y]);

  t.h1_.assign(pa.gens1.size(), std::vector<int>(nb));
  for (std::size_t f = 0; f < pa.gens1.size(); ++f)
    for (int y = 0; y < nb; ++y)
      t.h1_[f][y] = p.add_gen1(t.object(pa.gens1[f].src, y),
                               t.object(pa.gens1[f].tgt, y),
                               pa.gens1[f].name + "." + pb.objects[y]);
  t.v1_.assign(na, std::vector<int>(pb.gens1.size()));
  for (int x = 0; x < na; ++x)
    for (std::size_t g = 0; g < pb.gens1.size(); ++g)
      t.v1_[x][g] = p.add_gen1(t.object(x, pb.gens1[g].src),
                               t.object(x, pb.gens1[g].tgt),
                               pa.objects[x] + "." + pb.gens1[g].name);

  t.h2_.assign(pa.gens2.size(), std::vector<int>(nb));
  for (std::size_t al = 0; al < pa.gens2.size(); ++al)
    for (int y = 0; y < nb; ++y) {
      const auto& g = pa.gens2[al];
      t.h2_[al][y] = p.add_gen2(t.object(g.src_obj, y), t.object(g.tgt_obj, y),
                                t.word_h(g.src, y), t.word_h(g.tgt, y),
                                g.name + "." + pb.objects[y]);
    }
  t.v2_.assign(na, std::vector<int>(pb.gens2.size()));
  for (int x = 0; x < na; ++x)
    for (std::size_t be = 0; be < pb.gens2.size(); ++be) {
      const auto& g = pb.gens2[be];
      t.v2_[x][be] = p.add_gen2(t.object(x, g.src_obj), t.object(x, g.tgt_obj),
                                t.word_v(x, g.src), t.word_v(x, g.tgt),
                                pa.objects[x] + "." + g.name);
    }
  t.sq_.assign(pa.gens1.size(), std::vector<int>(pb.gens1.size()));
  for (std::size_t f = 0; f < pa.gens1.size(); ++f)
    for (std::size_t g = 0; g < pb.gens1.size(); ++g) {
      const int x = pa.gens1[f].src, x2 = pa.gens1[f].tgt;
      const int y = pb.gens1[g].src, y2 = pb.gens1[g].tgt;
      t.sq_[f][g] = p.add_gen2(
          t.object(x, y), t.object(x2, y2),
          {t.gen_h(static_cast<int>(f), y), t.gen_v(x2, static_cast<int>(g))},
          {t.gen_v(x, static_cast<int>(g)), t.gen_h(static_cast<int>(f), y2)},
          pa.gens1[f].name + "." + pb.gens1[g].name);
    }

  // Relations of each factor, tensored with the objects of the other.
  for (const auto& r : pa.rel1)
    for (int y = 0; y < nb; ++y)
      p.rel1.push_back({t.object(r.obj, y), t.word_h(r.lhs, y),
                        t.word_h(r.rhs, y)});
  for (const auto& r : pb.rel1)
    for (int x = 0; x < na; ++x)
      p.rel1.push_back({t.object(x, r.obj), t.word_v(x, r.lhs),
                        t.word_v(x, r.rhs)});
  for (const auto& [l, r] : pa.rel2)
    for (int y = 0; y < nb; ++y)
      p.rel2.push_back({t.pasting_h(l, y), t.pasting_h(r, y)});
  for (const auto& [l, r] : pb.rel2)
    for (int x = 0; x < na; ++x)
      p.rel2.push_back({t.pasting_v(x, l), t.pasting_v(x, r)});

  // Squares over related words agree.
  for (const auto& r : pa.rel1)
    for (std::size_t g = 0; g < pb.gens1.size(); ++g) {
      const int y = pb.gens1[g].src;
      const Word w{static_cast<int>(g)};
      p.rel2.push_back({t.grid(r.obj, r.lhs, y, w), t.grid(r.obj, r.rhs, y, w)});
    }
  for (const auto& r : pb.rel1)
    for (std::size_t f = 0; f < pa.gens1.size(); ++f) {
      const int x = pa.gens1[f].src;
      const Word u{static_cast<int>(f)};
      p.rel2.push_back({t.grid(x, u, r.obj, r.lhs), t.grid(x, u, r.obj, r.rhs)});
    }

  // Naturality of the squares in 2-cells of either factor.
  for (std::size_t al = 0; al < pa.gens2.size(); ++al)
    for (std::size_t g = 0; g < pb.gens1.size(); ++g) {
      const auto& A = pa.gens2[al];
      const int x = A.src_obj, x2 = A.tgt_obj;
      const int y = pb.gens1[g].src, y2 = pb.gens1[g].tgt;
      const Word gw{static_cast<int>(g)};
      const Word tail = t.word_v(x2, gw);
      const Word head = t.word_v(x, gw);
      Pasting lhs = then(
          single_atom(t.object(x, y), {}, t.gen2_h(static_cast<int>(al), y),
                      tail, p),
          t.grid(x, A.tgt, y, gw));
      Pasting rhs = then(t.grid(x, A.src, y, gw),
                         single_atom(t.object(x, y), head,
                                     t.gen2_h(static_cast<int>(al), y2), {}, p));
      p.rel2.push_back({lhs, rhs});
    }
  for (std::size_t be = 0; be < pb.gens2.size(); ++be)
    for (std::size_t f = 0; f < pa.gens1.size(); ++f) {
      const auto& B = pb.gens2[be];
      const int y = B.src_obj, y2 = B.tgt_obj;
      const int x = pa.gens1[f].src, x2 = pa.gens1[f].tgt;
      const Word fw{static_cast<int>(f)};
      const Word head = t.word_h(fw, y);
      const Word tail = t.word_h(fw, y2);
      Pasting lhs = then(
          single_atom(t.object(x, y), head, t.gen2_v(x2, static_cast<int>(be)),
                      {}, p),
          t.grid(x, fw, y, B.tgt));
      Pasting rhs = then(t.grid(x, fw, y, B.src),
                         single_atom(t.object(x, y), {},
                                     t.gen2_v(x, static_cast<int>(be)), tail, p));
      p.rel2.push_back({lhs, rhs});
    }

  t.result = normalize(p, opt);
  return t;
}

Presented present_globular(const GlobularSum& g) {
  return normalize(present(g));
}

TwoFunctor globular_comparison(const GlobularSum& g, const Presented& p) {
  const TwoCat ext = build_globular_sum(g);
  auto iso = find_isomorphism(ext, p.cat);
  if (!iso) throw RecognitionError("globular sum presentation mismatch");
  return *iso;
}

GrayTensor tensor(const GlobularSum& a, const GlobularSum& b) {
  return gray_tensor(present_globular(a), present_globular(b));
}

GrayTensor tensor_triple(int n1, int n2, int n3) {
  NormalizeOptions opt;
  opt.check_confluence = true;
  const GrayTensor first =
      gray_tensor(present_globular(GlobularSum::simplex(n1)),
                  present_globular(GlobularSum::simplex(n2)), opt);
  return gray_tensor(first.result, present_globular(GlobularSum::simplex(n3)),
                     opt);
}

GrayTensor tensor_triple_right(int n1, int n2, int n3) {
  NormalizeOptions opt;
  opt.check_confluence = true;
  const GrayTensor second =
      gray_tensor(present_globular(GlobularSum::simplex(n2)),
                  present_globular(GlobularSum::simplex(n3)), opt);
  return gray_tensor(present_globular(GlobularSum::simplex(n1)), second.result,
                     opt);
}

TwoFunctor tensor_map(const GrayTensor& src, const GrayTensor& tgt,
                      const TwoFunctor& u, const TwoFunctor& v) {
  const auto& pa = src.left.pres;
  const auto& pb = src.right.pres;
  const auto& out = tgt.result;
  std::vector<int> obj, g1, g2;
  obj.resize(src.result.pres.objects.size());
  for (std::size_t x = 0; x < pa.objects.size(); ++x)
    for (std::size_t y = 0; y < pb.objects.size(); ++y)
      obj[src.object(static_cast<int>(x), static_cast<int>(y))] =
          tgt.object(u.obj[src.left.obj_of[x]], v.obj[src.right.obj_of[y]]);
  g1.assign(src.result.pres.gens1.size(), -1);
  g2.assign(src.result.pres.gens2.size(), -1);
  for (std::size_t f = 0; f < pa.gens1.size(); ++f)
    for (std::size_t y = 0; y < pb.objects.size(); ++y) {
      const auto& [x0, w] = tgt.left.rep1[u.cell1[src.left.gen1_cell[f]]];
      const int y2 = v.obj[y];
      g1[src.gen_h(static_cast<int>(f), static_cast<int>(y))] =
          out.word_cell(tgt.object(x0, y2), tgt.word_h(w, y2));
    }
  for (std::size_t x = 0; x < pa.objects.size(); ++x)
    for (std::size_t g = 0; g < pb.gens1.size(); ++g) {
      const auto& [y0, w] = tgt.right.rep1[v.cell1[src.right.gen1_cell[g]]];
      const int x2 = u.obj[x];
      g1[src.gen_v(static_cast<int>(x), static_cast<int>(g))] =
          out.word_cell(tgt.object(x2, y0), tgt.word_v(x2, w));
    }
  for (std::size_t al = 0; al < pa.gens2.size(); ++al)
    for (std::size_t y = 0; y < pb.objects.size(); ++y) {
      const Pasting& q = tgt.left.rep2[u.cell2[src.left.gen2_cell[al]]];
      g2[src.gen2_h(static_cast<int>(al), static_cast<int>(y))] =
          out.pasting_cell(tgt.pasting_h(q, v.obj[y]));
    }
  for (std::size_t x = 0; x < pa.objects.size(); ++x)
    for (std::size_t be = 0; be < pb.gens2.size(); ++be) {
      const Pasting& q = tgt.right.rep2[v.cell2[src.right.gen2_cell[be]]];
      g2[src.gen2_v(static_cast<int>(x), static_cast<int>(be))] =
          out.pasting_cell(tgt.pasting_v(u.obj[x], q));
    }
  for (std::size_t f = 0; f < pa.gens1.size(); ++f)
    for (std::size_t g = 0; g < pb.gens1.size(); ++g) {
      const auto& [x0, wu] = tgt.left.rep1[u.cell1[src.left.gen1_cell[f]]];
      const auto& [y0, wv] = tgt.right.rep1[v.cell1[src.right.gen1_cell[g]]];
      g2[src.gen_sq(static_cast<int>(f), static_cast<int>(g))] =
          out.pasting_cell(tgt.grid(x0, wu, y0, wv));
    }
  return functor_from_generators(src.result, out.cat, obj, g1, g2);
}

TwoFunctor tensor_projection(const GrayTensor& t, int which) {
  const Presented& keep = which == 0 ? t.left : t.right;
  const auto& pa = t.left.pres;
  const auto& pb = t.right.pres;
  const auto& c = keep.cat;
  std::vector<int> obj(t.result.pres.objects.size());
  std::vector<int> g1(t.result.pres.gens1.size());
  std::vector<int> g2(t.result.pres.gens2.size());
  for (int x = 0; x < static_cast<int>(pa.objects.size()); ++x)
    for (int y = 0; y < static_cast<int>(pb.objects.size()); ++y)
      obj[t.object(x, y)] = which == 0 ? x : y;
  for (int f = 0; f < static_cast<int>(pa.gens1.size()); ++f)
    for (int y = 0; y < static_cast<int>(pb.objects.size()); ++y)
      g1[t.gen_h(f, y)] = which == 0 ? t.left.gen1_cell[f] : c.id1(y);
  for (int x = 0; x < static_cast<int>(pa.objects.size()); ++x)
    for (int g = 0; g < static_cast<int>(pb.gens1.size()); ++g)
      g1[t.gen_v(x, g)] = which == 0 ? c.id1(x) : t.right.gen1_cell[g];
  for (int al = 0; al < static_cast<int>(pa.gens2.size()); ++al)
    for (int y = 0; y < static_cast<int>(pb.objects.size()); ++y)
      g2[t.gen2_h(al, y)] =
          which == 0 ? t.left.gen2_cell[al] : c.id2(c.id1(y));
  for (int x = 0; x < static_cast<int>(pa.objects.size()); ++x)
    for (int be = 0; be < static_cast<int>(pb.gens2.size()); ++be)
      g2[t.gen2_v(x, be)] =
          which == 0 ? c.id2(c.id1(x)) : t.right.gen2_cell[be];
  for (int f = 0; f < static_cast<int>(pa.gens1.size()); ++f)
    for (int g = 0; g < static_cast<int>(pb.gens1.size()); ++g)
      g2[t.gen_sq(f, g)] = which == 0 ? c.id2(t.left.gen1_cell[f])
                                      : c.id2(t.right.gen1_cell[g]);
  return functor_from_generators(t.result, c, obj, g1, g2);
}

TwoFunctor tensor_slice(const GrayTensor& t, int which, int obj) {
  const Presented& src = which == 0 ? t.left : t.right;
  const auto& ps = src.pres;
  std::vector<int> o(ps.objects.size()), g1(ps.gens1.size()),
      g2(ps.gens2.size());
  for (int x = 0; x < static_cast<int>(o.size()); ++x)
    o[x] = which == 0 ? t.object(x, obj) : t.object(obj, x);
  for (int f = 0; f < static_cast<int>(g1.size()); ++f)
    g1[f] = t.result.gen1_cell[which == 0 ? t.gen_h(f, obj) : t.gen_v(obj, f)];
  for (int a = 0; a < static_cast<int>(g2.size()); ++a)
    g2[a] =
        t.result.gen2_cell[which == 0 ? t.gen2_h(a, obj) : t.gen2_v(obj, a)];
  return functor_from_generators(src, t.result.cat, o, g1, g2);
}

Collapse collapse_to_globular(int n, int m) {
  Collapse c{gray_tensor(present_globular(GlobularSum::simplex(n)),
                         present_globular(GlobularSum::simplex(m))),
             present_globular(GlobularSum::constant(n, m)),
             {}};
  const auto& t = c.source;
  const auto& g = c.target;
  std::vector<int> obj(t.result.pres.objects.size());
  std::vector<int> g1(t.result.pres.gens1.size());
  std::vector<int> g2(t.result.pres.gens2.size());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j) obj[t.object(i, j)] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      g1[t.gen_h(i, j)] = g.gen1_cell[i * (m + 1) + j];
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < m; ++j) g1[t.gen_v(i, j)] = g.cat.id1(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) g2[t.gen_sq(i, j)] = g.gen2_cell[i * m + j];
  c.map = functor_from_generators(t.result, g.cat, obj, g1, g2);
  return c;
}

namespace {

// [m]^op presented by generators i+1 -> i.
Presented present_opposite_simplex(int m) {
  Presentation p;
  for (int i = 0; i <= m; ++i) p.add_object(std::to_string(i));
  for (int i = 0; i < m; ++i) p.add_gen1(i + 1, i, "f" + std::to_string(i));
  return normalize(p);
}

}  // namespace

Collapse collapse_to_globular_dual(int n, int m) {
  Collapse c{gray_tensor(present_opposite_simplex(m),
                         present_globular(GlobularSum::simplex(n))),
             present_globular(GlobularSum::constant(n, m)),
             {}};
  const auto& t = c.source;
  const auto& g = c.target;
  std::vector<int> obj(t.result.pres.objects.size());
  std::vector<int> g1(t.result.pres.gens1.size());
  std::vector<int> g2(t.result.pres.gens2.size());
  for (int i = 0; i <= m; ++i)
    for (int k = 0; k <= n; ++k) obj[t.object(i, k)] = k;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) g1[t.gen_h(i, k)] = g.cat.id1(k);
  for (int i = 0; i <= m; ++i)
    for (int k = 0; k < n; ++k)
      g1[t.gen_v(i, k)] = g.gen1_cell[k * (m + 1) + i];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k) g2[t.gen_sq(i, k)] = g.gen2_cell[k * m + i];
  c.map = functor_from_generators(t.result, g.cat, obj, g1, g2);
  return c;
}

namespace {

// Iterated binary coproduct, summands in order.
TwoCat coproduct_all(const std::vector<TwoCat>& parts) {
  TwoCat out = parts.at(0);
  for (std::size_t s = 1; s < parts.size(); ++s)
    out = coproduct(out, parts[s]);
  return out;
}

// The map out of coproduct_all(parts) given by one map per summand.
TwoFunctor copair(const std::vector<TwoCat>& parts,
                  const std::vector<TwoFunctor>& maps) {
  TwoFunctor f;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    f.obj.insert(f.obj.end(), maps[s].obj.begin(), maps[s].obj.end());
    f.cell1.insert(f.cell1.end(), maps[s].cell1.begin(), maps[s].cell1.end());
    f.cell2.insert(f.cell2.end(), maps[s].cell2.begin(), maps[s].cell2.end());
  }
  return f;
}

// The constant functor at object x.
TwoFunctor constant_functor(const TwoCat& src, const TwoCat& tgt, int x) {
  TwoFunctor f;
  f.obj.assign(src.num_objects(), x);
  f.cell1.assign(src.num_cells1(), tgt.id1(x));
  f.cell2.assign(src.num_cells2(), tgt.id2(tgt.id1(x)));
  return f;
}

}  // namespace

std::vector<NamedCat> default_battery() {
  std::vector<NamedCat> out;
  for (const auto& g : {GlobularSum::simplex(0), GlobularSum::simplex(1),
                        GlobularSum::simplex(2), GlobularSum::constant(1, 1),
                        GlobularSum::constant(1, 2), GlobularSum(2, {1, 0})})
    out.push_back({g.name(), build_globular_sum(g)});
  out.push_back({"[1]x[1]", tensor_simplices(1, 1).cat});
  return out;
}

BatteryResult verify_quotient_square(int n, int m, bool right,
                                     const std::vector<NamedCat>& battery) {
  const Collapse c = right ? collapse_to_globular_dual(n, m)
                           : collapse_to_globular(n, m);
  const GrayTensor& t = c.source;
  // Slices collapsed to points: columns {k} (x) [m], or rows [m]^op (x) {k}.
  const int slice_side = right ? 0 : 1;
  const Presented& slice = right ? t.left : t.right;
  std::vector<TwoCat> parts(n + 1, slice.cat), points(n + 1, terminal());
  std::vector<TwoFunctor> incl, crush, pt;
  const TwoCat apex = coproduct_all(parts);
  const TwoCat base = coproduct_all(points);
  for (int k = 0; k <= n; ++k) {
    incl.push_back(tensor_slice(t, slice_side, k));
    crush.push_back(constant_functor(slice.cat, base, k));
    pt.push_back(constant_functor(terminal(), c.target.cat, k));
  }
  Span span{&apex, &t.result.cat, &base, copair(parts, incl),
            copair(parts, crush)};
  Cocone cocone{&c.target.cat, c.map, copair(points, pt)};
  return verify_pushout_by_battery(span, cocone, battery);
}

namespace {

struct GridGen {
  int j, l;
  bool k_step;  // otherwise a step in the [m] direction
};

// Decodes the 1-generators of the presented product [m] x [k].
std::vector<GridGen> grid_generators(const Presented& p, int k) {
  std::vector<GridGen> out;
  for (const auto& g : p.pres.gens1) {
    const int j = g.src / (k + 1), l = g.src % (k + 1);
    const int l2 = g.tgt % (k + 1);
    out.push_back({j, l, l2 != l});
  }
  return out;
}

// Pins h(image[c]) = value[c], returning false on a conflict.
bool pin_along(const TwoFunctor& image, const TwoFunctor& value,
               Assignment& pins) {
  auto put = [](std::vector<int>& slot, const std::vector<int>& at,
                const std::vector<int>& val) {
    for (std::size_t c = 0; c < at.size(); ++c) {
      int& s = slot[at[c]];
      if (s >= 0 && s != val[c]) return false;
      s = val[c];
    }
    return true;
  };
  return put(pins[0], image.obj, value.obj) &&
         put(pins[1], image.cell1, value.cell1) &&
         put(pins[2], image.cell2, value.cell2);
}

}  // namespace

FunnyCollapse funny_collapse(int n, int m, int k) {
  const Collapse psi = collapse_to_globular(n, m);
  const Presented pk = present_globular(GlobularSum::simplex(k));
  const Presented grid =
      normalize(present_twocat(cartesian_product(ordinal(m), ordinal(k))));
  FunnyCollapse fc{
      gray_tensor(present_globular(GlobularSum::simplex(n)), grid),
      gray_tensor(psi.target, pk), {}, 0};
  const GrayTensor& S = fc.source;
  const GrayTensor& T = fc.target;
  const auto gg = grid_generators(grid, k);
  auto pobj = [&](int j, int l) { return j * (k + 1) + l; };

  // The collapse on generators.
  {
    std::vector<int> obj(S.result.pres.objects.size());
    std::vector<int> g1(S.result.pres.gens1.size());
    std::vector<int> g2(S.result.pres.gens2.size());
    const auto& R = T.result;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= m; ++j)
        for (int l = 0; l <= k; ++l) obj[S.object(i, pobj(j, l))] = T.object(i, l);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= m; ++j)
        for (int l = 0; l <= k; ++l)
          g1[S.gen_h(i, pobj(j, l))] =
              R.gen1_cell[T.gen_h(i * (m + 1) + j, l)];
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < static_cast<int>(gg.size()); ++s)
        g1[S.gen_v(i, s)] = gg[s].k_step
                                ? R.gen1_cell[T.gen_v(i, gg[s].l)]
                                : R.cat.id1(T.object(i, gg[s].l));
    for (int i = 0; i < n; ++i)
      for (int s = 0; s < static_cast<int>(gg.size()); ++s)
        g2[S.gen_sq(i, s)] =
            gg[s].k_step
                ? R.gen2_cell[T.gen_sq(i * (m + 1) + gg[s].j, gg[s].l)]
                : R.gen2_cell[T.gen2_h(i * m + gg[s].j, gg[s].l)];
    fc.map = functor_from_generators(S.result, R.cat, obj, g1, g2);
  }

  // q : ([n] (x) [m]) (x) [k] -> [n] (x) ([m] x [k]).
  const GrayTensor triple = gray_tensor(psi.source.result, pk);
  const GrayTensor& N = psi.source;
  std::vector<int> kind(N.result.pres.gens1.size()), at_i(kind.size()),
      at_j(kind.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) {
      kind[N.gen_h(i, j)] = 0;
      at_i[N.gen_h(i, j)] = i;
      at_j[N.gen_h(i, j)] = j;
    }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < m; ++j) {
      kind[N.gen_v(i, j)] = 1;
      at_i[N.gen_v(i, j)] = i;
      at_j[N.gen_v(i, j)] = j;
    }
  auto step = [&](int j, int l, bool k_step) {
    for (int s = 0; s < static_cast<int>(gg.size()); ++s)
      if (gg[s].j == j && gg[s].l == l && gg[s].k_step == k_step) return s;
    throw std::logic_error("missing grid generator");
  };
  TwoFunctor q;
  {
    const auto& R = S.result;
    std::vector<int> obj(triple.result.pres.objects.size());
    std::vector<int> g1(triple.result.pres.gens1.size());
    std::vector<int> g2(triple.result.pres.gens2.size());
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= m; ++j)
        for (int l = 0; l <= k; ++l)
          obj[triple.object(N.object(i, j), l)] = S.object(i, pobj(j, l));
    for (int e = 0; e < static_cast<int>(kind.size()); ++e)
      for (int l = 0; l <= k; ++l)
        g1[triple.gen_h(e, l)] =
            kind[e] == 0 ? R.gen1_cell[S.gen_h(at_i[e], pobj(at_j[e], l))]
                         : R.gen1_cell[S.gen_v(at_i[e], step(at_j[e], l, false))];
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= m; ++j)
        for (int l = 0; l < k; ++l)
          g1[triple.gen_v(N.object(i, j), l)] =
              R.gen1_cell[S.gen_v(i, step(j, l, true))];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        for (int l = 0; l <= k; ++l)
          g2[triple.gen2_h(N.gen_sq(i, j), l)] =
              R.gen2_cell[S.gen_sq(i, step(j, l, false))];
    for (int e = 0; e < static_cast<int>(kind.size()); ++e)
      for (int l = 0; l < k; ++l) {
        const int i = at_i[e], j = at_j[e];
        if (kind[e] == 0) {
          g2[triple.gen_sq(e, l)] = R.gen2_cell[S.gen_sq(i, step(j, l, true))];
        } else {
          const int c = R.word_cell(
              S.object(i, pobj(j, l)),
              {S.gen_v(i, step(j, l, false)), S.gen_v(i, step(j + 1, l, true))});
          g2[triple.gen_sq(e, l)] = R.cat.id2(c);
        }
      }
    q = functor_from_generators(triple.result, R.cat, obj, g1, g2);
  }

  const TwoFunctor psi_k =
      tensor_map(triple, T, psi.map, identity_functor(pk.cat));
  if (compose(fc.map, q) != psi_k)
    throw HypothesisViolation("collapse does not factor psi (x) [k]");
  Assignment pins{std::vector<int>(S.result.cat.num_objects(), -1),
                  std::vector<int>(S.result.cat.num_cells1(), -1),
                  std::vector<int>(S.result.cat.num_cells2(), -1)};
  if (pin_along(q, psi_k, pins)) {
    SearchOptions opt;
    opt.pinned = &pins;
    fc.factorizations = count_homomorphisms(S.result.cat.structure(),
                                            T.result.cat.structure(), opt);
  }
  return fc;
}

BatteryResult verify_funny_square(int n, int m, int k,
                                  const std::vector<NamedCat>& battery) {
  const FunnyCollapse fc = funny_collapse(n, m, k);
  const GrayTensor& S = fc.source;
  const GrayTensor& T = fc.target;
  const Presented& grid = S.right;
  const Presented& pk = T.right;
  const auto gg = grid_generators(grid, k);
  std::vector<int> obj(grid.pres.objects.size()), g1(gg.size());
  for (int x = 0; x < static_cast<int>(obj.size()); ++x) obj[x] = x % (k + 1);
  for (int s = 0; s < static_cast<int>(gg.size()); ++s)
    g1[s] = gg[s].k_step ? pk.gen1_cell[gg[s].l] : pk.cat.id1(gg[s].l);
  const TwoFunctor proj = functor_from_generators(grid, pk.cat, obj, g1, {});

  std::vector<TwoCat> grids(n + 1, grid.cat), lines(n + 1, pk.cat);
  const TwoCat apex = coproduct_all(grids);
  const TwoCat base = coproduct_all(lines);
  std::vector<TwoFunctor> top, down, bottom;
  for (int i = 0; i <= n; ++i) {
    top.push_back(tensor_slice(S, 1, i));
    TwoFunctor d = proj;
    for (int& x : d.obj) x += i * pk.cat.num_objects();
    for (int& x : d.cell1) x += i * pk.cat.num_cells1();
    for (int& x : d.cell2) x += i * pk.cat.num_cells2();
    down.push_back(d);
    bottom.push_back(tensor_slice(T, 1, i));
  }
  Span span{&apex, &S.result.cat, &base, copair(grids, top),
            copair(grids, down)};
  Cocone cocone{&T.result.cat, fc.map, copair(lines, bottom)};
  return verify_pushout_by_battery(span, cocone, battery);
}

namespace {

// The underlying 1-category of a globular sum, which is free.
Presented present_tau1(const GlobularSum& g) {
  Presentation p = present(g);
  p.gens2.clear();
  return normalize(p);
}

}  // namespace

BatteryResult verify_crush_product(int n, int m, int k,
                                   const std::vector<NamedCat>& battery) {
  const GlobularSum g = GlobularSum::constant(n, m);
  const Presented full = present_globular(g);
  const Presented thin = present_tau1(g);
  const Presented pk = present_globular(GlobularSum::simplex(k));
  const GrayTensor big = gray_tensor(full, pk);
  const GrayTensor small = gray_tensor(thin, pk);
  std::vector<int> obj(thin.pres.objects.size());
  std::iota(obj.begin(), obj.end(), 0);
  const TwoFunctor incl =
      functor_from_generators(thin, full.cat, obj, full.gen1_cell, {});
  Span span{&small.result.cat, &big.result.cat, &thin.cat,
            tensor_map(small, big, incl, identity_functor(pk.cat)),
            tensor_projection(small, 0)};
  Cocone cocone{&full.cat, tensor_projection(big, 0), incl};
  return verify_pushout_by_battery(span, cocone, battery);
}

DualityReport verify_duality(const GlobularSum& a, const GlobularSum& b) {
  const TwoCat ab = tensor(a, b).result.cat;
  DualityReport r;
  r.op = isomorphic(dual_op(ab),
                    tensor(dual(b, Dual::op), dual(a, Dual::op)).result.cat);
  r.co = isomorphic(dual_co(ab),
                    tensor(dual(b, Dual::co), dual(a, Dual::co)).result.cat);
  return r;
}

namespace {

TwoFunctor invert(const TwoFunctor& f) {
  TwoFunctor g;
  auto inv = [](const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t x = 0; x < v.size(); ++x) out[v[x]] = static_cast<int>(x);
    return out;
  };
  g.obj = inv(f.obj);
  g.cell1 = inv(f.cell1);
  g.cell2 = inv(f.cell2);
  return g;
}

struct RigidityProblem {
  struct Edge {
    int from, to;  // pair indices
    TwoFunctor map;
  };
  std::vector<const TwoCat*> cats;  // per pair
  std::vector<Edge> edges;
  std::vector<TwoFunctor> chosen;
  std::size_t nodes = 0;
  std::size_t budget = 0;

  bool consistent(int p) const {
    for (const auto& e : edges) {
      if (std::max(e.from, e.to) != p) continue;
      if (compose(chosen[e.to], e.map) != compose(e.map, chosen[e.from]))
        return false;
    }
    return true;
  }

  std::size_t count(int p) {
    if (p == static_cast<int>(cats.size())) return 1;
    const TwoCat& c = *cats[p];
    Assignment pins{std::vector<int>(c.num_objects(), -1),
                    std::vector<int>(c.num_cells1(), -1),
                    std::vector<int>(c.num_cells2(), -1)};
    for (const auto& e : edges)
      if (e.to == p && e.from < p &&
          !pin_along(e.map, compose(e.map, chosen[e.from]), pins))
        return 0;
    SearchOptions opt;
    opt.pinned = &pins;
    opt.node_budget = budget;
    std::vector<Assignment> cands;
    search_homomorphisms(c.structure(), c.structure(), opt,
                         [&](const Assignment& h) {
                           cands.push_back(h);
                           return true;
                         });
    std::size_t total = 0;
    for (const auto& h : cands) {
      if (++nodes > budget) throw BudgetExceeded("rigidity search");
      chosen[p] = TwoFunctor::from_assignment(h);
      if (consistent(p)) total += count(p + 1);
    }
    return total;
  }
};

}  // namespace

std::size_t verify_rigidity(const std::vector<GlobularSum>& subsite,
                            const Budget& budget) {
  const Site site = site_from_shapes(subsite, budget);
  const int ns = site.num_objects();
  std::vector<Presented> pres;
  std::vector<TwoFunctor> to_pres, from_pres;
  for (int a = 0; a < ns; ++a) {
    pres.push_back(present_globular(site.globular(a)));
    to_pres.push_back(globular_comparison(site.globular(a), pres.back()));
    from_pres.push_back(invert(to_pres.back()));
  }
  auto transport = [&](int f) {
    const auto& mo = site.morphism(f);
    return compose(to_pres[mo.tgt], compose(site.functor(f), from_pres[mo.src]));
  };

  struct PairT {
    int a, b;
    GrayTensor t;
  };
  std::vector<PairT> pairs;
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      pairs.push_back({a, b, gray_tensor(pres[a], pres[b])});
  std::stable_sort(pairs.begin(), pairs.end(), [](const PairT& x, const PairT& y) {
    auto size = [](const PairT& p) {
      const auto& c = p.t.result.cat;
      return c.num_objects() + c.num_cells1() + c.num_cells2();
    };
    return size(x) < size(y);
  });

  RigidityProblem prob;
  prob.budget = budget.search_nodes;
  for (const auto& p : pairs) prob.cats.push_back(&p.t.result.cat);
  prob.chosen.resize(pairs.size());
  for (int x = 0; x < static_cast<int>(pairs.size()); ++x)
    for (int y = 0; y < static_cast<int>(pairs.size()); ++y)
      for (int u : site.hom(pairs[x].a, pairs[y].a))
        for (int v : site.hom(pairs[x].b, pairs[y].b))
          prob.edges.push_back(
              {x, y, tensor_map(pairs[x].t, pairs[y].t, transport(u),
                                transport(v))});
  return prob.count(0);
}

PresheafRoute compare_presheaf_route(int n, int m, int k, const Site& site,
                                     const std::vector<NamedCat>& battery) {
  const Collapse psi = collapse_to_globular(n, m);
  const Presented pm = present_globular(GlobularSum::simplex(m));
  const Presented pk = present_globular(GlobularSum::simplex(k));
  const GrayTensor triple = gray_tensor(psi.source.result, pk);
  const GrayTensor column = gray_tensor(pm, pk);
  const GrayTensor target = gray_tensor(psi.target, pk);
  const TwoFunctor id_k = identity_functor(pk.cat);

  std::vector<TwoCat> columns(n + 1, column.result.cat), lines(n + 1, pk.cat);
  const TwoCat apex = coproduct_all(columns);
  const TwoCat base = coproduct_all(lines);
  std::vector<TwoFunctor> up, down, side;
  for (int i = 0; i <= n; ++i) {
    up.push_back(tensor_map(column, triple, tensor_slice(psi.source, 1, i), id_k));
    TwoFunctor d = tensor_projection(column, 1);
    for (int& x : d.obj) x += i * pk.cat.num_objects();
    for (int& x : d.cell1) x += i * pk.cat.num_cells1();
    for (int& x : d.cell2) x += i * pk.cat.num_cells2();
    down.push_back(d);
    side.push_back(tensor_slice(target, 1, i));
  }
  Span span{&apex, &triple.result.cat, &base, copair(columns, up),
            copair(columns, down)};
  Cocone cocone{&target.result.cat, tensor_map(triple, target, psi.map, id_k),
                copair(lines, side)};

  auto shared = std::make_shared<const Site>(site);
  const Nerve na = nerve(apex, shared);
  const Nerve nc = nerve(triple.result.cat, shared);
  const Nerve nd = nerve(base, shared);
  Diagram d;
  d.nodes = {&na.presheaf, &nc.presheaf, &nd.presheaf};
  d.edges.push_back({0, 1, nerve_map(na, nc, span.f)});
  d.edges.push_back({0, 2, nerve_map(na, nd, span.g)});
  const Colimit colim = finite_colimit(d);

  PresheafRoute out;
  std::string why;
  if (is_segal_theta2(colim.object, &why)) {
    const bool same = isomorphic(presheaf_to_twocat(colim.object),
                                 target.result.cat);
    out.status = same ? PresheafRoute::Status::agree
                      : PresheafRoute::Status::disagree;
    out.reason = same ? "pointwise pushout is the nerve of the tensor"
                      : "pointwise pushout recognizes a different 2-category";
    return out;
  }
  out.status = PresheafRoute::Status::inconclusive;
  out.reason = "pointwise pushout is not Segal: " + why;
  out.fallback = verify_pushout_by_battery(span, cocone, battery);
  return out;
}

bool verify_associativity(int n1, int n2, int n3, const Budget& budget) {
  const TwoCat l = tensor_triple(n1, n2, n3).result.cat;
  const TwoCat r = tensor_triple_right(n1, n2, n3).result.cat;
  if (l.num_objects() != r.num_objects() || l.num_cells1() != r.num_cells1() ||
      l.num_cells2() != r.num_cells2())
    return false;
  // Both bracketings number the object (i, j, k) the same way.
  Assignment pins{std::vector<int>(l.num_objects()),
                  std::vector<int>(l.num_cells1(), -1),
                  std::vector<int>(l.num_cells2(), -1)};
  std::iota(pins[0].begin(), pins[0].end(), 0);
  SearchOptions opt;
  opt.injective = true;
  opt.pinned = &pins;
  opt.node_budget = budget.search_nodes;
  bool found = false;
  search_homomorphisms(l.structure(), r.structure(), opt,
                       [&](const Assignment& h) {
                         const TwoFunctor inv = invert(TwoFunctor::from_assignment(h));
                         found = is_functor(r, l, inv);
                         return !found;
                       });
  return found;
}

Step2Report verify_step2(int n, int m, int k,
                         const std::vector<NamedCat>& battery) {
  Step2Report out;
  out.left = verify_funny_square(n, k, m, battery);

  const Collapse cd = collapse_to_globular_dual(n, k);
  const Presented pm = present_globular(GlobularSum::simplex(m));
  const GrayTensor top = gray_tensor(cd.source.result, pm);
  const GrayTensor cand = gray_tensor(cd.target, pm);
  const GrayTensor column = gray_tensor(cd.source.left, pm);
  std::vector<TwoCat> columns(n + 1, column.result.cat), lines(n + 1, pm.cat);
  const TwoCat apex = coproduct_all(columns);
  const TwoCat base = coproduct_all(lines);
  const TwoFunctor proj = tensor_projection(column, 1);
  std::vector<TwoFunctor> up, down, side;
  for (int i = 0; i <= n; ++i) {
    up.push_back(tensor_map(column, top, tensor_slice(cd.source, 0, i),
                            identity_functor(pm.cat)));
    TwoFunctor d = proj;
    for (int& x : d.obj) x += i * pm.cat.num_objects();
    for (int& x : d.cell1) x += i * pm.cat.num_cells1();
    for (int& x : d.cell2) x += i * pm.cat.num_cells2();
    down.push_back(d);
    side.push_back(tensor_slice(cand, 1, i));
  }
  Span span{&apex, &top.result.cat, &base, copair(columns, up),
            copair(columns, down)};
  Cocone cocone{&cand.result.cat,
                tensor_map(top, cand, cd.map, identity_functor(pm.cat)),
                copair(lines, side)};
  out.right = verify_pushout_by_battery(span, cocone, battery);
  return out;
}

TwoFunctor simplex_tensor_map(const SimplexTensor& src,
                              const SimplexTensor& tgt,
                              const std::vector<int>& alpha,
                              const std::vector<int>& beta) {
  if (static_cast<int>(alpha.size()) != src.n + 1 ||
      static_cast<int>(beta.size()) != src.m + 1)
    throw std::invalid_argument("simplex_tensor_map: wrong arity");
  for (int x : alpha)
    if (x < 0 || x > tgt.n) throw std::invalid_argument("alpha out of range");
  for (int x : beta)
    if (x < 0 || x > tgt.m) throw std::invalid_argument("beta out of range");
  for (int i = 0; i < src.n; ++i)
    if (alpha[i] > alpha[i + 1]) throw std::invalid_argument("alpha not monotone");
  for (int j = 0; j < src.m; ++j)
    if (beta[j] > beta[j + 1]) throw std::invalid_argument("beta not monotone");

  std::map<std::tuple<int, int, std::string>, int> lookup;
  for (int f = 0; f < static_cast<int>(tgt.paths.size()); ++f) {
    const auto& p = tgt.paths[f];
    lookup[{p.i, p.j, p.steps}] = f;
  }
  TwoFunctor out;
  for (int i = 0; i <= src.n; ++i)
    for (int j = 0; j <= src.m; ++j)
      out.obj.push_back(tgt.object(alpha[i], beta[j]));
  for (const auto& p : src.paths) {
    std::string steps;
    int i = p.i, j = p.j;
    for (char c : p.steps) {
      if (c == 'H') {
        steps.append(alpha[i + 1] - alpha[i], 'H');
        ++i;
      } else {
        steps.append(beta[j + 1] - beta[j], 'V');
        ++j;
      }
    }
    out.cell1.push_back(lookup.at({alpha[p.i], beta[p.j], steps}));
  }
  for (int a = 0; a < src.cat.num_cells2(); ++a) {
    const auto& c = src.cat.cell2(a);
    const auto& h =
        tgt.cat.hom2(out.cell1[c.src], out.cell1[c.tgt]);
    if (h.size() != 1) throw std::logic_error("lattice 2-cells not unique");
    out.cell2.push_back(h.front());
  }
  return out;
}

}  // namespace graycat
