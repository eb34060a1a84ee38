// SPDX-License-Identifier: Apache-2.0
#include "graycat/presheaf.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace graycat {

SetPresheaf::SetPresheaf(std::shared_ptr<const Site> site)
    : site_(std::move(site)),
      sizes_(site_->num_objects(), 0),
      actions_(site_->num_morphisms()) {}

void SetPresheaf::validate() const {
  const Site& s = *site_;
  for (std::size_t f = 0; f < s.num_morphisms(); ++f) {
    const auto& m = s.morphism(static_cast<int>(f));
    if (static_cast<int>(actions_[f].size()) != sizes_[m.tgt])
      throw AxiomViolation("action table has the wrong size");
    for (int v : actions_[f])
      if (v < 0 || v >= sizes_[m.src])
        throw AxiomViolation("action leaves its target set");
  }
  for (int a = 0; a < s.num_objects(); ++a) {
    const auto& t = actions_[s.identity(a)];
    for (int x = 0; x < sizes_[a]; ++x)
      if (t[x] != x) throw AxiomViolation("identity acts non-trivially");
  }
  const int n = s.num_objects();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int f : s.hom(a, b))
        for (int c = 0; c < n; ++c)
          for (int g : s.hom(b, c)) {
            const auto& gf = actions_[s.compose(g, f)];
            for (int x = 0; x < sizes_[c]; ++x)
              if (gf[x] != actions_[f][actions_[g][x]])
                throw AxiomViolation("action is not functorial");
          }
}

const FiniteStructure& SetPresheaf::structure() const {
  if (!structure_) {
    auto st = std::make_shared<FiniteStructure>();
    for (int n : sizes_) st->add_sort(n);
    for (std::size_t f = 0; f < actions_.size(); ++f) {
      const auto& m = site_->morphism(static_cast<int>(f));
      st->add_unary(m.tgt, m.src, actions_[f]);
    }
    structure_ = std::move(st);
  }
  return *structure_;
}

bool is_natural(const SetPresheaf& x, const SetPresheaf& y,
                const PresheafMap& m) {
  const Site& s = x.site();
  if (static_cast<int>(m.components.size()) != s.num_objects()) return false;
  for (int a = 0; a < s.num_objects(); ++a) {
    if (static_cast<int>(m.components[a].size()) != x.size(a)) return false;
    for (int v : m.components[a])
      if (v < 0 || v >= y.size(a)) return false;
  }
  for (std::size_t f = 0; f < s.num_morphisms(); ++f) {
    const auto& mor = s.morphism(static_cast<int>(f));
    for (int e = 0; e < x.size(mor.tgt); ++e)
      if (m.components[mor.src][x.act(static_cast<int>(f), e)] !=
          y.act(static_cast<int>(f), m.components[mor.tgt][e]))
        return false;
  }
  return true;
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
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

Colimit finite_colimit(const Diagram& d) {
  if (d.nodes.empty()) throw std::invalid_argument("empty diagram");
  const auto site = d.nodes[0]->site_ptr();
  for (const auto* x : d.nodes)
    if (x->site_ptr() != site)
      throw std::invalid_argument("diagram mixes sites");
  for (const auto& e : d.edges)
    if (!is_natural(*d.nodes[e.from], *d.nodes[e.to], e.map))
      throw std::invalid_argument("diagram edge is not natural");

  const int nobj = site->num_objects();
  const int nn = static_cast<int>(d.nodes.size());
  Colimit c{SetPresheaf(site), std::vector<PresheafMap>(nn)};
  for (auto& inj : c.injections) inj.components.resize(nobj);
  // Per object: node offsets, classes, and one representative per class.
  std::vector<std::vector<int>> offset(nobj, std::vector<int>(nn + 1, 0));
  std::vector<std::vector<int>> cls(nobj);
  std::vector<std::vector<std::pair<int, int>>> rep(nobj);
  for (int o = 0; o < nobj; ++o) {
    for (int i = 0; i < nn; ++i)
      offset[o][i + 1] = offset[o][i] + d.nodes[i]->size(o);
    UnionFind uf(offset[o][nn]);
    for (const auto& e : d.edges)
      for (int x = 0; x < d.nodes[e.from]->size(o); ++x)
        uf.unite(offset[o][e.from] + x, offset[o][e.to] + e.map.components[o][x]);
    cls[o].assign(offset[o][nn], -1);
    std::vector<int> root_cls(offset[o][nn], -1);
    for (int i = 0; i < nn; ++i)
      for (int x = 0; x < d.nodes[i]->size(o); ++x) {
        const int g = offset[o][i] + x;
        const int r = uf.find(g);
        if (root_cls[r] < 0) {
          root_cls[r] = static_cast<int>(rep[o].size());
          rep[o].push_back({i, x});
        }
        cls[o][g] = root_cls[r];
        c.injections[i].components[o].push_back(cls[o][g]);
      }
    c.object.set_size(o, static_cast<int>(rep[o].size()));
  }
  for (std::size_t f = 0; f < site->num_morphisms(); ++f) {
    const auto& m = site->morphism(static_cast<int>(f));
    std::vector<int> table;
    for (const auto& [i, x] : rep[m.tgt])
      table.push_back(
          cls[m.src][offset[m.src][i] + d.nodes[i]->act(static_cast<int>(f), x)]);
    c.object.set_action(static_cast<int>(f), std::move(table));
  }
  return c;
}

bool check_colimit_universal(const Diagram& d, const Colimit& c,
                             const SetPresheaf& y) {
  const int nn = static_cast<int>(d.nodes.size());
  std::vector<std::vector<Assignment>> maps(nn);
  for (int i = 0; i < nn; ++i)
    maps[i] = all_homomorphisms(d.nodes[i]->structure(), y.structure());
  // Count compatible families by depth-first search over the nodes.
  std::vector<int> choice(nn, -1);
  std::size_t families = 0;
  std::function<void(int)> dfs = [&](int i) {
    if (i == nn) {
      ++families;
      return;
    }
    for (int k = 0; k < static_cast<int>(maps[i].size()); ++k) {
      choice[i] = k;
      bool ok = true;
      for (const auto& e : d.edges) {
        if (std::max(e.from, e.to) != i) continue;
        const auto& hf = maps[e.from][choice[e.from]];
        const auto& ht = maps[e.to][choice[e.to]];
        for (std::size_t o = 0; o < e.map.components.size() && ok; ++o)
          for (std::size_t x = 0; x < e.map.components[o].size() && ok; ++x)
            ok = hf[o][x] == ht[o][e.map.components[o][x]];
        if (!ok) break;
      }
      if (ok) dfs(i + 1);
    }
    choice[i] = -1;
  };
  dfs(0);

  const auto from_colim = all_homomorphisms(c.object.structure(), y.structure());
  std::set<std::vector<std::vector<int>>> restricted;
  for (const auto& h : from_colim) {
    std::vector<std::vector<int>> key;
    for (int i = 0; i < nn; ++i) {
      const auto& inj = c.injections[i].components;
      std::vector<int> flat;
      for (std::size_t o = 0; o < inj.size(); ++o)
        for (int v : inj[o]) flat.push_back(h[o][v]);
      key.push_back(std::move(flat));
    }
    restricted.insert(std::move(key));
  }
  return restricted.size() == from_colim.size() &&
         from_colim.size() == families;
}

int find_site_morphism(const Site& s, int a, int b,
                       const std::function<bool(const TwoFunctor&)>& pred) {
  int found = -1;
  for (int f : s.hom(a, b))
    if (pred(s.functor(f))) {
      if (found >= 0) throw std::logic_error("site morphism is not unique");
      found = f;
    }
  if (found < 0) throw std::logic_error("site morphism not found");
  return found;
}

namespace {

// Site morphisms between globular sums, named by where they send 1-cells.
struct GlobularMaps {
  const Site& s;

  // [1;w] -> g picking bead k (g has n >= k+1, widths[k] == w).
  int bead(int src, int tgt, int k) const {
    GlobularIndex is(s.globular(src)), it(s.globular(tgt));
    const int w = s.globular(src).widths[0];
    return find_site_morphism(s, src, tgt, [&](const TwoFunctor& f) {
      if (f.obj[0] != k || f.obj[1] != k + 1) return false;
      for (int a = 0; a <= w; ++a)
        if (f.cell1[is.cell1(0, 1, {a})] != it.cell1(k, k + 1, {a}))
          return false;
      return true;
    });
  }
  // [0] -> g picking object x.
  int point(int src, int tgt, int x) const {
    return find_site_morphism(s, src, tgt,
                              [&](const TwoFunctor& f) { return f.obj[0] == x; });
  }
  // [1] or [1;1] -> [1;w] sending the 1-cells {0}, {1} (if present) to the
  // given tuples.
  int cells(int src, int tgt, const std::vector<std::vector<int>>& images,
            int i, int j) const {
    GlobularIndex is(s.globular(src)), it(s.globular(tgt));
    return find_site_morphism(s, src, tgt, [&](const TwoFunctor& f) {
      if (f.obj[0] != i || f.obj[1] != j) return false;
      for (int a = 0; a < static_cast<int>(images.size()); ++a)
        if (f.cell1[is.cell1(0, 1, {a})] != it.cell1(i, j, images[a]))
          return false;
      return true;
    });
  }
};

// Sum over chains y_0, ..., y_{k-1} with tgt(y_i) == src(y_{i+1}).
std::size_t count_chains(const std::vector<const std::vector<int>*>& src,
                         const std::vector<const std::vector<int>*>& tgt,
                         int base_size) {
  std::vector<std::size_t> cnt(base_size, 0);
  for (int v : *tgt[0]) ++cnt[v];
  for (std::size_t k = 1; k < src.size(); ++k) {
    std::vector<std::size_t> next(base_size, 0);
    for (std::size_t y = 0; y < src[k]->size(); ++y)
      next[(*tgt[k])[y]] += cnt[(*src[k])[y]];
    cnt = std::move(next);
  }
  std::size_t total = 0;
  for (auto c : cnt) total += c;
  return total;
}

bool segal_map(const SetPresheaf& x, int obj,
               const std::vector<int>& pieces,  // site morphisms piece -> obj
               const std::vector<int>& src,     // per piece: base -> piece
               const std::vector<int>& tgt, int base, std::string* reason) {
  std::set<std::vector<int>> images;
  for (int e = 0; e < x.size(obj); ++e) {
    std::vector<int> t;
    for (int p : pieces) t.push_back(x.act(p, e));
    images.insert(std::move(t));
  }
  std::vector<const std::vector<int>*> s, t;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    s.push_back(&x.action(src[k]));
    t.push_back(&x.action(tgt[k]));
  }
  const std::size_t chains = count_chains(s, t, x.size(base));
  const bool ok = static_cast<int>(images.size()) == x.size(obj) &&
                  images.size() == chains;
  if (!ok && reason)
    *reason = "Segal map at " + x.site().object_name(obj) + " sends " +
              std::to_string(x.size(obj)) + " elements onto " +
              std::to_string(images.size()) + " of " + std::to_string(chains) +
              " chains";
  return ok;
}

}  // namespace

bool is_segal_theta2(const SetPresheaf& x, std::string* reason) {
  const Site& s = x.site();
  if (s.family() != SiteFamily::theta2)
    throw std::invalid_argument("Segal check needs a theta2 site");
  GlobularMaps maps{s};
  const int pt = s.find(GlobularSum::simplex(0));
  const int arrow = s.find(GlobularSum::simplex(1));
  const int cell = s.find(GlobularSum::constant(1, 1));
  for (int o = 0; o < s.num_objects(); ++o) {
    const auto& g = s.globular(o);
    if (g.n >= 2 && pt >= 0) {
      std::vector<int> pieces, src, tgt;
      bool available = true;
      for (int k = 0; k < g.n && available; ++k) {
        const int b = s.find(GlobularSum::constant(1, g.widths[k]));
        if (b < 0) {
          available = false;
          break;
        }
        pieces.push_back(maps.bead(b, o, k));
        src.push_back(maps.point(pt, b, 0));
        tgt.push_back(maps.point(pt, b, 1));
      }
      if (available && !segal_map(x, o, pieces, src, tgt, pt, reason))
        return false;
    }
    if (g.n == 1 && g.widths[0] >= 2 && cell >= 0 && arrow >= 0) {
      std::vector<int> pieces, src, tgt;
      for (int j = 0; j < g.widths[0]; ++j) {
        pieces.push_back(maps.cells(cell, o, {{j}, {j + 1}}, 0, 1));
        src.push_back(maps.cells(arrow, cell, {{0}}, 0, 1));
        tgt.push_back(maps.cells(arrow, cell, {{1}}, 0, 1));
      }
      if (!segal_map(x, o, pieces, src, tgt, arrow, reason)) return false;
    }
  }
  return true;
}

TwoCat presheaf_to_twocat(const SetPresheaf& x) {
  const Site& s = x.site();
  if (s.family() != SiteFamily::theta2)
    throw RecognitionError("recognition needs a theta2 site");
  const int pt = s.find(GlobularSum::simplex(0));
  const int arrow = s.find(GlobularSum::simplex(1));
  const int tri = s.find(GlobularSum::simplex(2));
  const int cell = s.find(GlobularSum::constant(1, 1));
  const int vcell = s.find(GlobularSum::constant(1, 2));
  const int hcell = s.find(GlobularSum::constant(2, 1));
  if (std::min({pt, arrow, tri, cell, vcell, hcell}) < 0)
    throw RecognitionError(
        "site lacks one of [0], [1], [2], [1;1], [1;2], [2;1]");
  std::string reason;
  if (!is_segal_theta2(x, &reason)) throw RecognitionError(reason);

  GlobularMaps maps{s};
  TwoCatTables t;
  const int d0 = maps.point(pt, arrow, 0);
  const int d1 = maps.point(pt, arrow, 1);
  const int degen = s.hom(arrow, pt).at(0);
  for (int v = 0; v < x.size(pt); ++v) t.id1.push_back(x.act(degen, v));
  for (int f = 0; f < x.size(arrow); ++f)
    t.c1.push_back({x.act(d0, f), x.act(d1, f)});
  const int lower = maps.cells(arrow, cell, {{0}}, 0, 1);
  const int upper = maps.cells(arrow, cell, {{1}}, 0, 1);
  const int crush =
      find_site_morphism(s, cell, arrow, [](const TwoFunctor& f) {
        return f.obj[0] == 0 && f.obj[1] == 1;
      });
  for (int a = 0; a < x.size(cell); ++a)
    t.c2.push_back({x.act(lower, a), x.act(upper, a)});
  for (int f = 0; f < x.size(arrow); ++f) t.id2.push_back(x.act(crush, f));

  const int e01 = maps.cells(arrow, tri, {{0}}, 0, 1);
  const int e12 = maps.cells(arrow, tri, {{0}}, 1, 2);
  const int e02 = maps.cells(arrow, tri, {{0, 0}}, 0, 2);
  for (int z = 0; z < x.size(tri); ++z)
    t.comp1.push_back({x.act(e12, z), x.act(e01, z), x.act(e02, z)});
  const int v01 = maps.cells(cell, vcell, {{0}, {1}}, 0, 1);
  const int v12 = maps.cells(cell, vcell, {{1}, {2}}, 0, 1);
  const int v02 = maps.cells(cell, vcell, {{0}, {2}}, 0, 1);
  for (int z = 0; z < x.size(vcell); ++z)
    t.vcomp.push_back({x.act(v12, z), x.act(v01, z), x.act(v02, z)});
  const int h01 = maps.cells(cell, hcell, {{0}, {1}}, 0, 1);
  const int h12 = maps.cells(cell, hcell, {{0}, {1}}, 1, 2);
  const int h02 = maps.cells(cell, hcell, {{0, 0}, {1, 1}}, 0, 2);
  for (int z = 0; z < x.size(hcell); ++z)
    t.hcomp.push_back({x.act(h12, z), x.act(h01, z), x.act(h02, z)});
  try {
    return TwoCat::from_tables(std::move(t), true);
  } catch (const AxiomViolation& e) {
    throw RecognitionError(std::string("levels do not form a 2-category: ") +
                           e.what());
  }
}

bool is_complete(const SetPresheaf& x, CompletenessLevel level) {
  const TwoCat c = presheaf_to_twocat(x);
  if (level == CompletenessLevel::objects) {
    for (int f = 0; f < c.num_cells1(); ++f) {
      if (c.is_id1(f)) continue;
      const auto [a, b] = c.cell1(f);
      for (int g : c.hom(b, a))
        if (c.comp1(g, f) == c.id1(a) && c.comp1(f, g) == c.id1(b))
          return false;
    }
    return true;
  }
  for (int p = 0; p < c.num_cells2(); ++p) {
    if (c.is_id2(p)) continue;
    const auto [f, g] = c.cell2(p);
    for (int q : c.hom2(g, f))
      if (c.vcomp(q, p) == c.id2(f) && c.vcomp(p, q) == c.id2(g)) return false;
  }
  return true;
}

std::optional<PresheafMap> find_isomorphism(const SetPresheaf& x,
                                            const SetPresheaf& y) {
  if (x.site_ptr() != y.site_ptr())
    throw std::invalid_argument("presheaves live on different sites");
  auto h = find_isomorphism(x.structure(), y.structure());
  if (!h) return std::nullopt;
  return PresheafMap{*h};
}

int Nerve::find(int obj, const TwoFunctor& f) const {
  auto it = index[obj].find(flatten(f.as_assignment()));
  return it == index[obj].end() ? -1 : it->second;
}

Nerve nerve(const TwoCat& c, std::shared_ptr<const Site> site) {
  if (site->family() != SiteFamily::theta2)
    throw std::invalid_argument("nerve needs a theta2 site");
  Nerve n{SetPresheaf(site), {}, {}};
  const int nobj = site->num_objects();
  n.elements.resize(nobj);
  n.index.resize(nobj);
  for (int o = 0; o < nobj; ++o) {
    n.elements[o] = enumerate_functors(site->realization(o), c);
    for (int e = 0; e < static_cast<int>(n.elements[o].size()); ++e)
      n.index[o].emplace(flatten(n.elements[o][e].as_assignment()), e);
    n.presheaf.set_size(o, static_cast<int>(n.elements[o].size()));
  }
  for (std::size_t f = 0; f < site->num_morphisms(); ++f) {
    const auto& m = site->morphism(static_cast<int>(f));
    const TwoFunctor phi = site->functor(static_cast<int>(f));
    std::vector<int> table;
    table.reserve(n.elements[m.tgt].size());
    for (const auto& e : n.elements[m.tgt]) table.push_back(n.find(m.src, compose(e, phi)));
    n.presheaf.set_action(static_cast<int>(f), std::move(table));
  }
  return n;
}

PresheafMap nerve_map(const Nerve& a, const Nerve& b, const TwoFunctor& f) {
  PresheafMap m;
  for (std::size_t o = 0; o < a.elements.size(); ++o) {
    std::vector<int> comp;
    for (const auto& e : a.elements[o]) {
      const int v = b.find(static_cast<int>(o), compose(f, e));
      if (v < 0) throw std::invalid_argument("map does not land in the nerve");
      comp.push_back(v);
    }
    m.components.push_back(std::move(comp));
  }
  return m;
}

}  // namespace graycat
