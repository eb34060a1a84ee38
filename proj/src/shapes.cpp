// SPDX-License-Identifier: Apache-2.0
#include "graycat/shapes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace graycat {

std::string GlobularSum::name() const {
  if (n == 0) return "[0]";
  const bool zero = std::all_of(widths.begin(), widths.end(),
                                [](int w) { return w == 0; });
  if (zero) return "[" + std::to_string(n) + "]";
  const bool constant = std::all_of(widths.begin(), widths.end(),
                                    [&](int w) { return w == widths[0]; });
  if (constant)
    return "[" + std::to_string(n) + ";" + std::to_string(widths[0]) + "]";
  std::string s = "[" + std::to_string(n) + ";(";
  for (int i = 0; i < n; ++i) {
    if (i) s += ",";
    s += std::to_string(widths[i]);
  }
  return s + ")]";
}

void GlobularSum::check() const {
  if (n < 0 || static_cast<int>(widths.size()) != n)
    throw std::invalid_argument("globular sum needs exactly n widths");
  for (int w : widths)
    if (w < 0) throw std::invalid_argument("widths must be non-negative");
}

GlobularSum parse_globular_sum(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != '(' && c != ')' && c != ' ') s += c;
  auto to_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || v < 0)
      throw std::invalid_argument("cannot parse globular sum: " + text);
    return v;
  };
  const auto semi = s.find(';');
  const int n = to_int(s.substr(0, semi));
  GlobularSum g = GlobularSum::simplex(n);
  if (semi != std::string::npos) {
    std::vector<int> w;
    std::stringstream rest(s.substr(semi + 1));
    std::string item;
    while (std::getline(rest, item, ',')) w.push_back(to_int(item));
    if (w.size() == 1 && n != 1)
      g = GlobularSum::constant(n, w[0]);
    else
      g.widths = w;
  }
  g.check();
  return g;
}

namespace {

// All tuples t with 0 <= t_k <= bound_k, in lexicographic order.
std::vector<std::vector<int>> tuples(const std::vector<int>& bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(bound.size(), 0);
  while (true) {
    out.push_back(t);
    int k = static_cast<int>(t.size()) - 1;
    while (k >= 0 && t[k] == bound[k]) t[k--] = 0;
    if (k < 0) break;
    ++t[k];
  }
  return out;
}

bool leq(const std::vector<int>& s, const std::vector<int>& t) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] > t[k]) return false;
  return true;
}

std::vector<int> key(int i, int j, const std::vector<int>& a,
                     const std::vector<int>& b = {}) {
  std::vector<int> k{i, j};
  k.insert(k.end(), a.begin(), a.end());
  k.insert(k.end(), b.begin(), b.end());
  return k;
}

}  // namespace

GlobularIndex::GlobularIndex(const GlobularSum& g) : g_(g) {
  g.check();
  for (int i = 0; i <= g.n; ++i) {
    id1_[key(i, i, {})] = i;
    c1_.push_back({i, i, {}});
  }
  for (int i = 0; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      for (auto& t : tuples({g.widths.begin() + i, g.widths.begin() + j})) {
        id1_[key(i, j, t)] = static_cast<int>(c1_.size());
        c1_.push_back({i, j, t});
      }
  for (const auto& c : c1_) {
    id2_[key(c.i, c.j, c.t, c.t)] = static_cast<int>(c2_.size());
    c2_.push_back({c.i, c.j, c.t, c.t});
  }
  for (int i = 0; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j) {
      const auto all = tuples({g.widths.begin() + i, g.widths.begin() + j});
      for (const auto& s : all)
        for (const auto& t : all)
          if (s != t && leq(s, t)) {
            id2_[key(i, j, s, t)] = static_cast<int>(c2_.size());
            c2_.push_back({i, j, s, t});
          }
    }
}

int GlobularIndex::cell1(int i, int j, const std::vector<int>& t) const {
  auto it = id1_.find(key(i, j, t));
  if (it == id1_.end()) throw std::out_of_range("no such 1-cell");
  return it->second;
}

int GlobularIndex::cell2(int i, int j, const std::vector<int>& s,
                         const std::vector<int>& t) const {
  auto it = id2_.find(key(i, j, s, t));
  if (it == id2_.end()) throw std::out_of_range("no such 2-cell");
  return it->second;
}

TwoCat build_globular_sum(const GlobularSum& g) {
  GlobularIndex idx(g);
  auto tuple_name = [](const std::vector<int>& t) {
    std::string s;
    for (int x : t) s += std::to_string(x);
    return s;
  };
  TwoCatBuilder b;
  for (int i = 0; i <= g.n; ++i) b.add_object(std::to_string(i));
  const auto& c1 = idx.cells1();
  const auto& c2 = idx.cells2();
  for (std::size_t f = g.n + 1; f < c1.size(); ++f)
    b.add_cell1(c1[f].i, c1[f].j,
                std::to_string(c1[f].i) + std::to_string(c1[f].j) + ":" +
                    tuple_name(c1[f].t));
  for (std::size_t a = c1.size(); a < c2.size(); ++a)
    b.add_cell2(idx.cell1(c2[a].i, c2[a].j, c2[a].s),
                idx.cell1(c2[a].i, c2[a].j, c2[a].t),
                tuple_name(c2[a].s) + "<=" + tuple_name(c2[a].t));
  auto cat = [](const std::vector<int>& a, const std::vector<int>& b2) {
    auto out = a;
    out.insert(out.end(), b2.begin(), b2.end());
    return out;
  };
  for (const auto& f : c1)
    for (const auto& h : c1)
      if (f.j == h.i)
        b.set_comp1(idx.cell1(h.i, h.j, h.t), idx.cell1(f.i, f.j, f.t),
                    idx.cell1(f.i, h.j, cat(f.t, h.t)));
  for (const auto& a : c2) {
    const int ia = idx.cell2(a.i, a.j, a.s, a.t);
    for (const auto& c : c2) {
      if (c.i == a.i && c.j == a.j && c.s == a.t)
        b.set_vcomp(idx.cell2(c.i, c.j, c.s, c.t), ia,
                    idx.cell2(a.i, a.j, a.s, c.t));
      if (c.i == a.j)
        b.set_hcomp(idx.cell2(c.i, c.j, c.s, c.t), ia,
                    idx.cell2(a.i, c.j, cat(a.s, c.s), cat(a.t, c.t)));
    }
  }
  return b.build();
}

Presentation present(const GlobularSum& g) {
  g.check();
  Presentation p;
  for (int i = 0; i <= g.n; ++i) p.add_object(std::to_string(i));
  std::vector<std::vector<int>> f(g.n);
  for (int k = 0; k < g.n; ++k)
    for (int a = 0; a <= g.widths[k]; ++a)
      f[k].push_back(p.add_gen1(k, k + 1,
                                "f" + std::to_string(k) + std::to_string(a)));
  for (int k = 0; k < g.n; ++k)
    for (int a = 0; a < g.widths[k]; ++a)
      p.add_gen2(k, k + 1, {f[k][a]}, {f[k][a + 1]},
                 "a" + std::to_string(k) + std::to_string(a));
  return p;
}

GlobularSum dual(const GlobularSum& g, Dual kind) {
  if (kind == Dual::co) return g;
  GlobularSum out = g;
  std::reverse(out.widths.begin(), out.widths.end());
  return out;
}

int Site::find(const GlobularSum& g) const {
  auto it = std::find(shapes_.begin(), shapes_.end(), g);
  return it == shapes_.end() ? -1 : static_cast<int>(it - shapes_.begin());
}

int Site::find(int n, int m) const {
  auto it = std::find(bisimplices_.begin(), bisimplices_.end(),
                      std::make_pair(n, m));
  return it == bisimplices_.end() ? -1
                                  : static_cast<int>(it - bisimplices_.begin());
}

int Site::lookup(int src, int tgt, const std::vector<int>& data) const {
  std::vector<int> k{src, tgt};
  k.insert(k.end(), data.begin(), data.end());
  auto it = lookup_.find(k);
  return it == lookup_.end() ? -1 : it->second;
}

int Site::compose(int g, int f) const {
  const auto& mf = mor_[f];
  const auto& mg = mor_[g];
  if (mf.tgt != mg.src) throw std::invalid_argument("morphisms not composable");
  std::vector<int> data;
  if (family_ == SiteFamily::theta2) {
    const auto& a = real_[mf.src];
    const auto& b = real_[mf.tgt];
    const int sa[3] = {a.num_objects(), a.num_cells1(), a.num_cells2()};
    const int sb[3] = {0, b.num_objects(), b.num_objects() + b.num_cells1()};
    int off = 0;
    for (int d = 0; d < 3; ++d) {
      for (int x = 0; x < sa[d]; ++x)
        data.push_back(mg.data[sb[d] + mf.data[off + x]]);
      off += sa[d];
    }
  } else {
    const auto [n, m] = bisimplices_[mf.src];
    const auto [n2, m2] = bisimplices_[mf.tgt];
    (void)m;
    (void)m2;
    for (int x = 0; x < static_cast<int>(mf.data.size()); ++x) {
      const int v = mf.data[x];
      data.push_back(x <= n ? mg.data[v] : mg.data[n2 + 1 + v]);
    }
  }
  const int out = lookup(mf.src, mg.tgt, data);
  if (out < 0) throw std::logic_error("site is not closed under composition");
  return out;
}

TwoFunctor Site::functor(int f) const {
  const auto& m = mor_[f];
  const auto& a = real_[m.src];
  TwoFunctor out;
  auto it = m.data.begin();
  out.obj.assign(it, it + a.num_objects());
  it += a.num_objects();
  out.cell1.assign(it, it + a.num_cells1());
  it += a.num_cells1();
  out.cell2.assign(it, it + a.num_cells2());
  return out;
}

void Site::add_morphism(int a, int b, std::vector<int> data) {
  const int id = static_cast<int>(mor_.size());
  std::vector<int> k{a, b};
  k.insert(k.end(), data.begin(), data.end());
  lookup_.emplace(std::move(k), id);
  mor_.push_back({a, b, std::move(data)});
  hom_[static_cast<std::size_t>(a) * num_objects() + b].push_back(id);
}

void Site::finish() {
  identity_.assign(num_objects(), -1);
  for (int a = 0; a < num_objects(); ++a) {
    std::vector<int> data;
    if (family_ == SiteFamily::theta2) {
      auto id = identity_functor(real_[a]);
      data = id.obj;
      data.insert(data.end(), id.cell1.begin(), id.cell1.end());
      data.insert(data.end(), id.cell2.begin(), id.cell2.end());
    } else {
      const auto [n, m] = bisimplices_[a];
      for (int i = 0; i <= n; ++i) data.push_back(i);
      for (int j = 0; j <= m; ++j) data.push_back(j);
    }
    identity_[a] = lookup(a, a, data);
    if (identity_[a] < 0) throw std::logic_error("site lacks an identity");
  }
}

namespace {

std::vector<std::vector<int>> monotone_maps(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(n + 1, 0);
  while (true) {
    out.push_back(f);
    int i = n;
    while (i >= 0 && f[i] == k) --i;
    if (i < 0) break;
    ++f[i];
    for (int j = i + 1; j <= n; ++j) f[j] = f[i];
  }
  return out;
}

}  // namespace

Site site_from_shapes(const std::vector<GlobularSum>& shapes,
                      const Budget& budget) {
  Site s;
  s.family_ = SiteFamily::theta2;
  for (const auto& g : shapes) {
    s.shapes_.push_back(g);
    s.names_.push_back(g.name());
    s.real_.push_back(build_globular_sum(g));
  }
  const int n = s.num_objects();
  s.hom_.assign(static_cast<std::size_t>(n) * n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& f : enumerate_functors(s.real_[a], s.real_[b])) {
        std::vector<int> data = f.obj;
        data.insert(data.end(), f.cell1.begin(), f.cell1.end());
        data.insert(data.end(), f.cell2.begin(), f.cell2.end());
        s.add_morphism(a, b, std::move(data));
        if (s.mor_.size() > budget.cells)
          throw BudgetExceeded("site truncation has too many morphisms");
      }
  s.finish();
  return s;
}

Site truncated_site(SiteFamily family, int max_n, int max_w,
                    const Budget& budget) {
  if (max_n < 0 || max_w < 0)
    throw std::invalid_argument("truncation bounds must be non-negative");
  if (family == SiteFamily::theta2) {
    std::vector<GlobularSum> shapes;
    for (int n = 0; n <= max_n; ++n)
      for (auto& w : tuples(std::vector<int>(n, max_w)))
        shapes.push_back({n, w});
    return site_from_shapes(shapes, budget);
  }
  Site s;
  s.family_ = SiteFamily::delta_square;
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= max_n; ++m) {
      s.bisimplices_.push_back({n, m});
      s.names_.push_back("(" + std::to_string(n) + "," + std::to_string(m) +
                         ")");
      s.real_.push_back(cartesian_product(ordinal(n), ordinal(m)));
    }
  const int k = s.num_objects();
  s.hom_.assign(static_cast<std::size_t>(k) * k, {});
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const auto [n, m] = s.bisimplices_[a];
      const auto [n2, m2] = s.bisimplices_[b];
      for (const auto& f : monotone_maps(n, n2))
        for (const auto& g : monotone_maps(m, m2)) {
          std::vector<int> data = f;
          data.insert(data.end(), g.begin(), g.end());
          s.add_morphism(a, b, std::move(data));
          if (s.mor_.size() > budget.cells)
            throw BudgetExceeded("site truncation has too many morphisms");
        }
    }
  s.finish();
  return s;
}

}  // namespace graycat
