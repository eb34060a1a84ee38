// SPDX-License-Identifier: Apache-2.0
#include "graycat/twocat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graycat {

namespace {

const std::vector<int> kEmpty;

void fail(const std::string& what) { throw AxiomViolation(what); }

}  // namespace

const std::vector<int>& TwoCat::hom2(int f, int g) const {
  auto it = hom2_.find(key(f, g));
  return it == hom2_.end() ? kEmpty : it->second;
}

TwoCat TwoCat::from_tables(TwoCatTables t, bool check) {
  TwoCat c;
  const int n0 = static_cast<int>(t.id1.size());
  const int n1 = static_cast<int>(t.c1.size());
  const int n2 = static_cast<int>(t.c2.size());
  if (static_cast<int>(t.id2.size()) != n1)
    fail("id2 must be given for every 1-cell");
  c.c1_ = std::move(t.c1);
  c.c2_ = std::move(t.c2);
  c.id1_ = std::move(t.id1);
  c.id2_ = std::move(t.id2);

  auto insert = [](std::unordered_map<std::uint64_t, int>& m, int a, int b,
                   int r, const char* what) {
    auto [it, fresh] = m.emplace(key(a, b), r);
    if (!fresh && it->second != r)
      fail(std::string("conflicting ") + what + " entries");
  };
  for (const auto& e : t.comp1) insert(c.comp1_, e[0], e[1], e[2], "comp1");
  for (const auto& e : t.vcomp) insert(c.vcomp_, e[0], e[1], e[2], "vcomp");
  for (const auto& e : t.hcomp) insert(c.hcomp_, e[0], e[1], e[2], "hcomp");

  for (int f = 0; f < n1; ++f) {
    const auto [x, y] = c.c1_[f];
    insert(c.comp1_, f, c.id1_[x], f, "comp1");
    insert(c.comp1_, c.id1_[y], f, f, "comp1");
  }
  for (int a = 0; a < n2; ++a) {
    const auto [f, g] = c.c2_[a];
    insert(c.vcomp_, a, c.id2_[f], a, "vcomp");
    insert(c.vcomp_, c.id2_[g], a, a, "vcomp");
    const int x = c.c1_[f].src;
    const int y = c.c1_[f].tgt;
    insert(c.hcomp_, a, c.id2_[c.id1_[x]], a, "hcomp");
    insert(c.hcomp_, c.id2_[c.id1_[y]], a, a, "hcomp");
  }
  for (const auto& [k, gf] : c.comp1_) {
    const int g = static_cast<int>(k >> 32);
    const int f = static_cast<int>(k & 0xffffffffu);
    (void)gf;
    insert(c.hcomp_, c.id2_[g], c.id2_[f], c.id2_[c.comp1_.at(k)], "hcomp");
  }

  c.hom_.assign(static_cast<std::size_t>(n0) * n0, {});
  for (int f = 0; f < n1; ++f)
    c.hom_[static_cast<std::size_t>(c.c1_[f].src) * n0 + c.c1_[f].tgt]
        .push_back(f);
  for (int a = 0; a < n2; ++a)
    c.hom2_[key(c.c2_[a].src, c.c2_[a].tgt)].push_back(a);

  c.obj_names_ = std::move(t.obj_names);
  c.c1_names_ = std::move(t.c1_names);
  c.c2_names_ = std::move(t.c2_names);
  c.obj_names_.resize(n0);
  c.c1_names_.resize(n1);
  c.c2_names_.resize(n2);
  for (int x = 0; x < n0; ++x)
    if (c.obj_names_[x].empty()) c.obj_names_[x] = std::to_string(x);
  for (int f = 0; f < n1; ++f)
    if (c.c1_names_[f].empty())
      c.c1_names_[f] = c.is_id1(f) ? "id" + c.obj_names_[c.c1_[f].src]
                                   : "f" + std::to_string(f);
  for (int a = 0; a < n2; ++a)
    if (c.c2_names_[a].empty())
      c.c2_names_[a] = c.is_id2(a) ? "id" + c.c1_names_[c.c2_[a].src]
                                   : "a" + std::to_string(a);

  auto s = std::make_shared<FiniteStructure>();
  s->add_sort(n0);
  s->add_sort(n1);
  s->add_sort(n2);
  std::vector<int> src1(n1), tgt1(n1), src2(n2), tgt2(n2);
  for (int f = 0; f < n1; ++f) {
    src1[f] = c.c1_[f].src;
    tgt1[f] = c.c1_[f].tgt;
  }
  for (int a = 0; a < n2; ++a) {
    src2[a] = c.c2_[a].src;
    tgt2[a] = c.c2_[a].tgt;
  }
  s->add_unary(1, 0, std::move(src1));
  s->add_unary(1, 0, std::move(tgt1));
  s->add_unary(2, 1, std::move(src2));
  s->add_unary(2, 1, std::move(tgt2));
  s->add_unary(0, 1, c.id1_);
  s->add_unary(1, 2, c.id2_);
  auto entries = [](const std::unordered_map<std::uint64_t, int>& m,
                    auto keep) {
    std::vector<std::array<int, 3>> out;
    for (const auto& [k, r] : m) {
      const int a = static_cast<int>(k >> 32);
      const int b = static_cast<int>(k & 0xffffffffu);
      if (keep(a, b)) out.push_back({a, b, r});
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto all = [](int, int) { return true; };
  s->add_binary(1, 1, 1, entries(c.comp1_, all));
  s->add_binary(2, 2, 2, entries(c.vcomp_, all));
  s->add_binary(2, 2, 2, entries(c.hcomp_, [&c](int a, int b) {
    return c.is_id2(a) || c.is_id2(b);
  }));
  c.structure_ = std::move(s);

  if (check) c.validate();
  return c;
}

TwoCatTables TwoCat::tables() const {
  TwoCatTables t;
  t.c1 = c1_;
  t.c2 = c2_;
  t.id1 = id1_;
  t.id2 = id2_;
  auto dump = [](const std::unordered_map<std::uint64_t, int>& m) {
    std::vector<std::array<int, 3>> out;
    for (const auto& [k, r] : m)
      out.push_back({static_cast<int>(k >> 32),
                     static_cast<int>(k & 0xffffffffu), r});
    std::sort(out.begin(), out.end());
    return out;
  };
  t.comp1 = dump(comp1_);
  t.vcomp = dump(vcomp_);
  t.hcomp = dump(hcomp_);
  t.obj_names = obj_names_;
  t.c1_names = c1_names_;
  t.c2_names = c2_names_;
  return t;
}

void TwoCat::validate() const {
  const int n0 = num_objects();
  const int n1 = num_cells1();
  const int n2 = num_cells2();
  for (int x = 0; x < n0; ++x)
    if (c1_[id1_[x]].src != x || c1_[id1_[x]].tgt != x)
      fail("identity 1-cell has wrong boundary");
  for (int f = 0; f < n1; ++f)
    if (c2_[id2_[f]].src != f || c2_[id2_[f]].tgt != f)
      fail("identity 2-cell has wrong boundary");
  for (int a = 0; a < n2; ++a) {
    const auto& f = c1_[c2_[a].src];
    const auto& g = c1_[c2_[a].tgt];
    if (f.src != g.src || f.tgt != g.tgt) fail("2-cell between non-parallel 1-cells");
  }

  std::vector<std::vector<int>> out1(n0), out2(n0), from2(n1);
  for (int f = 0; f < n1; ++f) out1[c1_[f].src].push_back(f);
  for (int a = 0; a < n2; ++a) {
    out2[c1_[c2_[a].src].src].push_back(a);
    from2[c2_[a].src].push_back(a);
  }
  auto obj_src2 = [&](int a) { return c1_[c2_[a].src].src; };
  auto obj_tgt2 = [&](int a) { return c1_[c2_[a].src].tgt; };

  for (int f = 0; f < n1; ++f)
    for (int g : out1[c1_[f].tgt]) {
      const int gf = comp1(g, f);
      if (gf < 0) fail("comp1 not total");
      if (c1_[gf].src != c1_[f].src || c1_[gf].tgt != c1_[g].tgt)
        fail("comp1 has wrong boundary");
      for (int h : out1[c1_[g].tgt])
        if (comp1(h, gf) != comp1(comp1(h, g), f)) fail("comp1 not associative");
    }
  for (int a = 0; a < n2; ++a)
    for (int b : from2[c2_[a].tgt]) {
      const int ba = vcomp(b, a);
      if (ba < 0) fail("vcomp not total");
      if (c2_[ba].src != c2_[a].src || c2_[ba].tgt != c2_[b].tgt)
        fail("vcomp has wrong boundary");
      for (int c : from2[c2_[b].tgt])
        if (vcomp(c, ba) != vcomp(vcomp(c, b), a)) fail("vcomp not associative");
    }
  for (int a = 0; a < n2; ++a)
    for (int b : out2[obj_tgt2(a)]) {
      const int ba = hcomp(b, a);
      if (ba < 0) fail("hcomp not total");
      if (c2_[ba].src != comp1(c2_[b].src, c2_[a].src) ||
          c2_[ba].tgt != comp1(c2_[b].tgt, c2_[a].tgt))
        fail("hcomp has wrong boundary");
      for (int c : out2[obj_tgt2(b)])
        if (hcomp(c, ba) != hcomp(hcomp(c, b), a)) fail("hcomp not associative");
      // Interchange with every vertical successor pair.
      for (int a2 : from2[c2_[a].tgt])
        for (int b2 : from2[c2_[b].tgt])
          if (hcomp(vcomp(b2, b), vcomp(a2, a)) !=
              vcomp(hcomp(b2, a2), ba))
            fail("interchange law fails");
    }
  (void)obj_src2;
}

int TwoCatBuilder::add_object(std::string name) {
  const int x = num_objects();
  const int f = num_cells1();
  const int a = num_cells2();
  t_.id1.push_back(f);
  t_.obj_names.push_back(std::move(name));
  t_.c1.push_back({x, x});
  t_.c1_names.emplace_back();
  t_.id2.push_back(a);
  t_.c2.push_back({f, f});
  t_.c2_names.emplace_back();
  return x;
}

int TwoCatBuilder::add_cell1(int src, int tgt, std::string name) {
  const int f = num_cells1();
  const int a = num_cells2();
  t_.c1.push_back({src, tgt});
  t_.c1_names.push_back(std::move(name));
  t_.id2.push_back(a);
  t_.c2.push_back({f, f});
  t_.c2_names.emplace_back();
  return f;
}

int TwoCatBuilder::add_cell2(int src, int tgt, std::string name) {
  const int a = num_cells2();
  t_.c2.push_back({src, tgt});
  t_.c2_names.push_back(std::move(name));
  return a;
}

void TwoCatBuilder::set_comp1(int g, int f, int gf) {
  t_.comp1.push_back({g, f, gf});
}
void TwoCatBuilder::set_vcomp(int b, int a, int ba) {
  t_.vcomp.push_back({b, a, ba});
}
void TwoCatBuilder::set_hcomp(int b, int a, int ba) {
  t_.hcomp.push_back({b, a, ba});
}

TwoCat TwoCatBuilder::build(bool check) {
  return TwoCat::from_tables(std::move(t_), check);
}

}  // namespace graycat
