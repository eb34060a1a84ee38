// SPDX-License-Identifier: Apache-2.0
#include "graycat/computad.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace graycat {

int Presentation::add_object(std::string name) {
  objects.push_back(std::move(name));
  return static_cast<int>(objects.size()) - 1;
}

int Presentation::add_gen1(int src, int tgt, std::string name) {
  gens1.push_back({src, tgt, std::move(name)});
  return static_cast<int>(gens1.size()) - 1;
}

int Presentation::add_gen2(int src_obj, int tgt_obj, Word src, Word tgt,
                           std::string name) {
  if (word_target(src_obj, src) != tgt_obj ||
      word_target(src_obj, tgt) != tgt_obj)
    throw MalformedBoundary("2-generator " + name + " has a bad boundary");
  gens2.push_back({src_obj, tgt_obj, std::move(src), std::move(tgt),
                   std::move(name)});
  return static_cast<int>(gens2.size()) - 1;
}

int Presentation::word_target(int obj, const Word& w) const {
  for (int g : w) {
    if (g < 0 || g >= static_cast<int>(gens1.size()) || gens1[g].src != obj)
      throw MalformedBoundary("word is not composable");
    obj = gens1[g].tgt;
  }
  return obj;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
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

bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

using Key = std::vector<int>;
using KeyMap = std::unordered_map<Key, int, VectorHash>;

class Normalizer {
 public:
  Normalizer(const Presentation& p, const NormalizeOptions& opt)
      : p_(p), opt_(opt) {}

  Presented run() {
    enumerate_words();
    quotient_words();
    enumerate_atoms();
    enumerate_paths();
    collect_rules();
    quotient_paths();
    if (opt_.check_confluence) check_confluence();
    return assemble();
  }

 private:
  // --- 1-cells ----------------------------------------------------------
  void enumerate_words() {
    const int n0 = static_cast<int>(p_.objects.size());
    std::vector<std::vector<int>> out(n0);
    for (int g = 0; g < static_cast<int>(p_.gens1.size()); ++g)
      out[p_.gens1[g].src].push_back(g);
    for (int x = 0; x < n0; ++x) {
      // Breadth-first so that each class representative is a shortest word.
      std::vector<Word> frontier{{}};
      std::vector<int> ends{x};
      for (std::size_t len = 0; !frontier.empty(); ++len) {
        if (len > static_cast<std::size_t>(n0))
          throw MalformedBoundary("1-generators contain a directed cycle");
        std::vector<Word> next;
        std::vector<int> next_ends;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
          add_word(x, ends[i], frontier[i]);
          for (int g : out[ends[i]]) {
            Word w = frontier[i];
            w.push_back(g);
            next.push_back(std::move(w));
            next_ends.push_back(p_.gens1[g].tgt);
          }
        }
        frontier = std::move(next);
        ends = std::move(next_ends);
      }
    }
  }

  void add_word(int src, int tgt, const Word& w) {
    if (words_.size() >= opt_.max_cells)
      throw BudgetExceeded("too many words in presentation");
    Key k{src};
    k.insert(k.end(), w.begin(), w.end());
    word_id_.emplace(std::move(k), static_cast<int>(words_.size()));
    words_.push_back({src, tgt, w});
    word_uf_.add();
  }

  int word(int src, const Word& w) const {
    Key k{src};
    k.insert(k.end(), w.begin(), w.end());
    auto it = word_id_.find(k);
    if (it == word_id_.end()) throw MalformedBoundary("word is not composable");
    return it->second;
  }

  void quotient_words() {
    const int n0 = static_cast<int>(p_.objects.size());
    std::vector<std::vector<int>> ending(n0), starting(n0);
    for (int i = 0; i < static_cast<int>(words_.size()); ++i) {
      ending[words_[i].tgt].push_back(i);
      starting[words_[i].src].push_back(i);
    }
    for (const auto& r : p_.rel1) {
      const int y = p_.word_target(r.obj, r.lhs);
      if (p_.word_target(r.obj, r.rhs) != y)
        throw MalformedBoundary("1-relation between non-parallel words");
      for (int pi : ending[r.obj])
        for (int si : starting[y]) {
          const auto& pw = words_[pi];
          const auto& sw = words_[si].w;
          Word l = pw.w, rr = pw.w;
          l.insert(l.end(), r.lhs.begin(), r.lhs.end());
          l.insert(l.end(), sw.begin(), sw.end());
          rr.insert(rr.end(), r.rhs.begin(), r.rhs.end());
          rr.insert(rr.end(), sw.begin(), sw.end());
          word_uf_.unite(word(pw.src, l), word(pw.src, rr));
        }
    }
    // Number classes: identities first, then by least word.
    cell_of_word_.assign(words_.size(), -1);
    std::vector<int> root_cell(words_.size(), -1);
    for (int x = 0; x < n0; ++x) {
      const int w = word(x, {});
      root_cell[word_uf_.find(w)] = x;
      rep1_.push_back(w);
    }
    for (int i = 0; i < static_cast<int>(words_.size()); ++i) {
      const int r = word_uf_.find(i);
      if (root_cell[r] < 0) {
        root_cell[r] = static_cast<int>(rep1_.size());
        rep1_.push_back(i);
      }
      cell_of_word_[i] = root_cell[r];
    }
    const int n1 = static_cast<int>(rep1_.size());
    cells_out_.assign(n0, {});
    cells_in_.assign(n0, {});
    for (int c = 0; c < n1; ++c) {
      cells_out_[cell_src(c)].push_back(c);
      cells_in_[cell_tgt(c)].push_back(c);
    }
  }

  int cell_src(int c) const { return words_[rep1_[c]].src; }
  int cell_tgt(int c) const { return words_[rep1_[c]].tgt; }
  const Word& cell_word(int c) const { return words_[rep1_[c]].w; }

  int cell_of(int src, const Word& w) const {
    return cell_of_word_[word(src, w)];
  }
  int cat_cells(int src, const std::vector<const Word*>& parts) const {
    Word w;
    for (const Word* p : parts) w.insert(w.end(), p->begin(), p->end());
    return cell_of(src, w);
  }

  // --- atoms ------------------------------------------------------------
  void enumerate_atoms() {
    for (int g = 0; g < static_cast<int>(p_.gens2.size()); ++g) {
      const auto& gen = p_.gens2[g];
      for (int u : cells_in_[gen.src_obj])
        for (int v : cells_out_[gen.tgt_obj]) {
          const int x = cell_src(u);
          AtomData a;
          a.pre = u;
          a.gen = g;
          a.post = v;
          a.src = cat_cells(x, {&cell_word(u), &gen.src, &cell_word(v)});
          a.tgt = cat_cells(x, {&cell_word(u), &gen.tgt, &cell_word(v)});
          atom_id_.emplace(Key{u, g, v}, static_cast<int>(atoms_.size()));
          atoms_.push_back(a);
        }
    }
    atoms_from_.assign(rep1_.size(), {});
    for (int a = 0; a < static_cast<int>(atoms_.size()); ++a)
      atoms_from_[atoms_[a].src].push_back(a);
  }

  int atom(int u, int g, int v) const { return atom_id_.at(Key{u, g, v}); }

  // --- 2-cells ----------------------------------------------------------
  void enumerate_paths() {
    std::vector<int> seq;
    for (int w = 0; w < static_cast<int>(rep1_.size()); ++w) {
      seq.clear();
      extend(w, w, seq, 0);
    }
  }

  void extend(int start, int cur, std::vector<int>& seq, std::size_t depth) {
    if (depth > atoms_.size())
      throw MalformedBoundary("2-generators contain a directed cycle");
    if (paths_.size() >= opt_.max_cells)
      throw BudgetExceeded("too many pastings in presentation");
    Key k{start};
    k.insert(k.end(), seq.begin(), seq.end());
    path_id_.emplace(std::move(k), static_cast<int>(paths_.size()));
    paths_.push_back({start, cur, seq});
    for (int a : atoms_from_[cur]) {
      seq.push_back(a);
      extend(start, atoms_[a].tgt, seq, depth + 1);
      seq.pop_back();
    }
  }

  int path(int start, const std::vector<int>& seq) const {
    Key k{start};
    k.insert(k.end(), seq.begin(), seq.end());
    auto it = path_id_.find(k);
    if (it == path_id_.end())
      throw MalformedBoundary("pasting is not composable");
    return it->second;
  }

  void add_rule(std::vector<int> l, std::vector<int> r) {
    if (l.empty() || r.empty()) {
      if (l == r) return;
      throw MalformedBoundary("2-relation equates an identity to a pasting");
    }
    if (l == r) return;
    rules_by_first_[l.front()].push_back(rules_.size());
    rules_.push_back({l, r});
    rules_by_first_[r.front()].push_back(rules_.size());
    rules_.push_back({std::move(r), std::move(l)});
  }

  void collect_rules() {
    rules_by_first_.assign(atoms_.size(), {});
    const int n2 = static_cast<int>(p_.gens2.size());
    // Interchange of two generators side by side.
    for (int ga = 0; ga < n2; ++ga)
      for (int gb = 0; gb < n2; ++gb) {
        const auto& A = p_.gens2[ga];
        const auto& B = p_.gens2[gb];
        for (int m : cells_out_[A.tgt_obj]) {
          if (cell_tgt(m) != B.src_obj) continue;
          const Word& mw = cell_word(m);
          for (int u : cells_in_[A.src_obj])
            for (int s : cells_out_[B.tgt_obj]) {
              const int x = cell_src(u);
              const Word& uw = cell_word(u);
              const Word& sw = cell_word(s);
              const int after_a_src = cat_cells(A.tgt_obj, {&mw, &B.src, &sw});
              const int after_a_tgt = cat_cells(A.tgt_obj, {&mw, &B.tgt, &sw});
              const int before_b_tgt = cat_cells(x, {&uw, &A.tgt, &mw});
              const int before_b_src = cat_cells(x, {&uw, &A.src, &mw});
              add_rule({atom(u, ga, after_a_src), atom(before_b_tgt, gb, s)},
                       {atom(before_b_src, gb, s), atom(u, ga, after_a_tgt)});
            }
        }
      }
    // Whiskered 2-relations.
    for (const auto& [lhs, rhs] : p_.rel2) {
      if (lhs.obj != rhs.obj ||
          cell_of(lhs.obj, lhs.start) != cell_of(rhs.obj, rhs.start))
        throw MalformedBoundary("2-relation between pastings with different sources");
      const int y = p_.word_target(lhs.obj, lhs.start);
      for (int u : cells_in_[lhs.obj])
        for (int s : cells_out_[y]) {
          auto whisker = [&](const Pasting& q) {
            std::vector<int> seq;
            for (const auto& at : q.atoms) {
              const auto& gen = p_.gens2[at.gen];
              const int pre = cat_cells(cell_src(u), {&cell_word(u), &at.pre});
              const int post = cat_cells(gen.tgt_obj, {&at.post, &cell_word(s)});
              seq.push_back(atom(pre, at.gen, post));
            }
            const int start =
                cat_cells(cell_src(u), {&cell_word(u), &q.start, &cell_word(s)});
            path(start, seq);  // checks composability
            return seq;
          };
          auto l = whisker(lhs);
          auto r = whisker(rhs);
          const int start = cat_cells(cell_src(u),
                                      {&cell_word(u), &lhs.start, &cell_word(s)});
          const int end_l = paths_[path(start, l)].end;
          const int end_r = paths_[path(start, r)].end;
          if (end_l != end_r)
            throw MalformedBoundary("2-relation between pastings with different targets");
          add_rule(std::move(l), std::move(r));
        }
    }
  }

  template <class F>
  void for_each_rewrite(int pid, F&& f) const {
    const auto& seq = paths_[pid].seq;
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t ri : rules_by_first_[seq[i]]) {
        const auto& [l, r] = rules_[ri];
        if (i + l.size() > seq.size() ||
            !std::equal(l.begin(), l.end(), seq.begin() + i))
          continue;
        f(i, l, r);
      }
  }

  void quotient_paths() {
    path_uf_.parent.resize(paths_.size());
    std::iota(path_uf_.parent.begin(), path_uf_.parent.end(), 0);
    for (int pid = 0; pid < static_cast<int>(paths_.size()); ++pid) {
      const auto& seq = paths_[pid].seq;
      for_each_rewrite(pid, [&](std::size_t i, const std::vector<int>& l,
                                const std::vector<int>& r) {
        std::vector<int> out(seq.begin(), seq.begin() + i);
        out.insert(out.end(), r.begin(), r.end());
        out.insert(out.end(), seq.begin() + i + l.size(), seq.end());
        path_uf_.unite(pid, path(paths_[pid].start, out));
      });
    }
  }

  // Orients every rule towards shortlex-smaller sequences. Where a class
  // still has several irreducible paths, each extra one gets a rule to the
  // least of them, repeated until normal forms are unique.
  void check_confluence() {
    for (;;) {
      std::unordered_map<int, std::vector<int>> irreducible;
      for (int pid = 0; pid < static_cast<int>(paths_.size()); ++pid) {
        bool reducible = false;
        for_each_rewrite(pid, [&](std::size_t, const std::vector<int>& l,
                                  const std::vector<int>& r) {
          if (shortlex_less(r, l)) reducible = true;
        });
        if (!reducible) irreducible[path_uf_.find(pid)].push_back(pid);
      }
      bool done = true;
      for (int pid = 0; pid < static_cast<int>(paths_.size()); ++pid) {
        if (path_uf_.find(pid) != pid) continue;
        auto& forms = irreducible[pid];
        if (forms.empty())
          throw NonConfluence("2-cell has no normal form");
        if (forms.size() == 1) continue;
        done = false;
        std::sort(forms.begin(), forms.end(), [&](int x, int y) {
          return shortlex_less(paths_[x].seq, paths_[y].seq);
        });
        for (std::size_t k = 1; k < forms.size(); ++k) {
          if (++completion_rules_ > opt_.max_completion_rules)
            throw NonConfluence("completion exceeded " +
                                std::to_string(opt_.max_completion_rules) +
                                " rules");
          add_rule(paths_[forms[k]].seq, paths_[forms[0]].seq);
        }
      }
      if (done) return;
    }
  }

  Presented assemble();
  std::size_t completion_rules_ = 0;

  struct WordData {
    int src;
    int tgt;
    Word w;
  };
  struct AtomData {
    int pre, gen, post, src, tgt;
  };
  struct PathData {
    int start;
    int end;
    std::vector<int> seq;
  };

  const Presentation& p_;
  const NormalizeOptions& opt_;
  std::vector<WordData> words_;
  KeyMap word_id_;
  UnionFind word_uf_;
  std::vector<int> cell_of_word_;
  std::vector<int> rep1_;  // cell -> representative word id
  std::vector<std::vector<int>> cells_out_, cells_in_;
  std::vector<AtomData> atoms_;
  KeyMap atom_id_;
  std::vector<std::vector<int>> atoms_from_;
  std::vector<PathData> paths_;
  KeyMap path_id_;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rules_;
  std::vector<std::vector<std::size_t>> rules_by_first_;
  UnionFind path_uf_;
};

Presented Normalizer::assemble() {
  const int n0 = static_cast<int>(p_.objects.size());
  const int n1 = static_cast<int>(rep1_.size());
  TwoCatBuilder b;
  for (const auto& name : p_.objects) b.add_object(name);
  for (int c = n0; c < n1; ++c) {
    std::string name;
    for (int g : cell_word(c)) {
      if (!name.empty()) name += ";";
      name += p_.gens1[g].name;
    }
    b.add_cell1(cell_src(c), cell_tgt(c), name);
  }

  std::vector<int> cell_of_path(paths_.size(), -1);
  std::vector<int> root_cell(paths_.size(), -1);
  std::vector<int> rep2;  // 2-cell -> path id
  for (int c = 0; c < n1; ++c) {
    const int pid = path(c, {});
    root_cell[path_uf_.find(pid)] = c;
    rep2.push_back(pid);
  }
  for (int pid = 0; pid < static_cast<int>(paths_.size()); ++pid) {
    const int r = path_uf_.find(pid);
    if (root_cell[r] < 0) {
      const auto& seq = paths_[pid].seq;
      std::string name = seq.size() == 1 ? p_.gens2[atoms_[seq[0]].gen].name
                                         : std::string();
      root_cell[r] = b.add_cell2(paths_[pid].start, paths_[pid].end, name);
      rep2.push_back(pid);
    }
    cell_of_path[pid] = root_cell[r];
  }
  const int n2 = static_cast<int>(rep2.size());

  for (int f = n0; f < n1; ++f)
    for (int g : cells_out_[cell_tgt(f)]) {
      if (g < n0) continue;
      b.set_comp1(g, f, cat_cells(cell_src(f), {&cell_word(f), &cell_word(g)}));
    }

  auto src2 = [&](int a) { return paths_[rep2[a]].start; };
  auto tgt2 = [&](int a) { return paths_[rep2[a]].end; };
  std::vector<std::vector<int>> from2(n1);
  std::vector<std::vector<int>> out2(n0);
  for (int a = 0; a < n2; ++a) {
    from2[src2(a)].push_back(a);
    out2[cell_src(src2(a))].push_back(a);
  }
  for (int a = n1; a < n2; ++a)
    for (int c : from2[tgt2(a)]) {
      if (c < n1) continue;
      auto seq = paths_[rep2[a]].seq;
      const auto& tail = paths_[rep2[c]].seq;
      seq.insert(seq.end(), tail.begin(), tail.end());
      b.set_vcomp(c, a, cell_of_path[path(src2(a), seq)]);
    }

  for (int a = 0; a < n2; ++a) {
    const int f = src2(a);
    const int f2 = tgt2(a);
    if (a < n0) continue;  // identity on an identity 1-cell
    for (int c : out2[cell_tgt(f)]) {
      if (c < n0) continue;
      const int g = src2(c);
      std::vector<int> seq;
      for (int at : paths_[rep2[a]].seq) {
        const auto& d = atoms_[at];
        seq.push_back(atom(d.pre, d.gen,
                           cat_cells(p_.gens2[d.gen].tgt_obj,
                                     {&cell_word(d.post), &cell_word(g)})));
      }
      for (int at : paths_[rep2[c]].seq) {
        const auto& d = atoms_[at];
        seq.push_back(atom(
            cat_cells(cell_src(f2), {&cell_word(f2), &cell_word(d.pre)}),
            d.gen, d.post));
      }
      const int start = cat_cells(cell_src(f), {&cell_word(f), &cell_word(g)});
      b.set_hcomp(c, a, cell_of_path[path(start, seq)]);
    }
  }

  Presented out;
  out.pres = p_;
  out.cat = b.build(opt_.validate);
  for (int g = 0; g < static_cast<int>(p_.gens1.size()); ++g)
    out.gen1_cell.push_back(cell_of(p_.gens1[g].src, {g}));
  for (int g = 0; g < static_cast<int>(p_.gens2.size()); ++g) {
    const auto& gen = p_.gens2[g];
    const int a = atom(gen.src_obj, g, gen.tgt_obj);
    out.gen2_cell.push_back(cell_of_path[path(atoms_[a].src, {a})]);
  }
  out.obj_of.resize(n0);
  std::iota(out.obj_of.begin(), out.obj_of.end(), 0);
  for (int c = 0; c < n1; ++c) out.rep1.push_back({cell_src(c), cell_word(c)});
  for (int a = 0; a < n2; ++a) {
    const auto& pd = paths_[rep2[a]];
    Pasting q;
    q.obj = cell_src(pd.start);
    q.start = cell_word(pd.start);
    for (int at : pd.seq)
      q.atoms.push_back({cell_word(atoms_[at].pre), atoms_[at].gen,
                         cell_word(atoms_[at].post)});
    out.rep2.push_back(std::move(q));
  }
  out.completion_rules = completion_rules_;
  return out;
}

}  // namespace

Presented normalize(const Presentation& p, const NormalizeOptions& opt) {
  Normalizer n(p, opt);
  return n.run();
}

int Presented::word_cell(int obj, const Word& w) const {
  int c = cat.id1(obj_of[obj]);
  for (int g : w) {
    if (pres.gens1[g].src != obj) throw MalformedBoundary("word is not composable");
    c = cat.comp1(gen1_cell[g], c);
    obj = pres.gens1[g].tgt;
  }
  return c;
}

int Presented::pasting_cell(const Pasting& p) const {
  const int start = word_cell(p.obj, p.start);
  int cur = cat.id2(start);
  for (const auto& at : p.atoms) {
    const auto& gen = pres.gens2[at.gen];
    const int u = word_cell(p.obj, at.pre);
    if (cat.cell1(u).tgt != obj_of[gen.src_obj])
      throw MalformedBoundary("atom whiskering does not compose");
    const int v = word_cell(gen.tgt_obj, at.post);
    const int a = cat.hcomp(cat.id2(v), cat.hcomp(gen2_cell[at.gen], cat.id2(u)));
    if (a < 0 || cat.cell2(a).src != cat.cell2(cur).tgt)
      throw MalformedBoundary("pasting does not compose");
    cur = cat.vcomp(a, cur);
  }
  return cur;
}

TwoFunctor functor_from_generators(const Presented& src, const TwoCat& tgt,
                                   const std::vector<int>& obj_image,
                                   const std::vector<int>& gen1_image,
                                   const std::vector<int>& gen2_image) {
  const auto& pres = src.pres;
  auto word_image = [&](int obj, const Word& w) {
    int c = tgt.id1(obj_image[obj]);
    for (int g : w) {
      const int next = tgt.comp1(gen1_image[g], c);
      if (next < 0) throw MalformedBoundary("generator images do not compose");
      c = next;
    }
    return c;
  };
  TwoFunctor f;
  f.obj.resize(src.cat.num_objects());
  for (int x = 0; x < static_cast<int>(pres.objects.size()); ++x)
    f.obj[src.obj_of[x]] = obj_image[x];
  for (const auto& [x, w] : src.rep1) f.cell1.push_back(word_image(x, w));
  for (const auto& q : src.rep2) {
    int cur = tgt.id2(word_image(q.obj, q.start));
    for (const auto& at : q.atoms) {
      const auto& gen = pres.gens2[at.gen];
      const int u = word_image(q.obj, at.pre);
      const int v = word_image(gen.tgt_obj, at.post);
      const int a =
          tgt.hcomp(tgt.id2(v), tgt.hcomp(gen2_image[at.gen], tgt.id2(u)));
      if (a < 0 || tgt.cell2(a).src != tgt.cell2(cur).tgt)
        throw MalformedBoundary("generator images do not compose");
      cur = tgt.vcomp(a, cur);
    }
    f.cell2.push_back(cur);
  }
  require_functor(src.cat, tgt, f);
  return f;
}

Presentation present_twocat(const TwoCat& c) {
  Presentation p;
  const int n0 = c.num_objects();
  const int n1 = c.num_cells1();
  const int n2 = c.num_cells2();
  for (int x = 0; x < n0; ++x) p.add_object(c.object_name(x));
  const auto t = c.tables();

  // 1-generators: indecomposable 1-cells, plus whatever is unreachable.
  std::vector<char> decomposable1(n1, 0);
  for (const auto& e : t.comp1)
    if (!c.is_id1(e[0]) && !c.is_id1(e[1])) decomposable1[e[2]] = 1;
  std::vector<int> gen_cell1;
  std::vector<std::optional<Word>> rep1(n1);
  for (int f = 0; f < n1; ++f)
    if (!c.is_id1(f) && !decomposable1[f]) {
      p.add_gen1(c.cell1(f).src, c.cell1(f).tgt, c.cell1_name(f));
      gen_cell1.push_back(f);
    }
  for (int x = 0; x < n0; ++x) rep1[c.id1(x)] = Word{};
  while (true) {
    std::vector<int> queue;
    for (int f = 0; f < n1; ++f)
      if (rep1[f]) queue.push_back(f);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int f = queue[qi];
      for (int g = 0; g < static_cast<int>(gen_cell1.size()); ++g) {
        const int gf = c.comp1(gen_cell1[g], f);
        if (gf < 0 || rep1[gf]) continue;
        rep1[gf] = *rep1[f];
        rep1[gf]->push_back(g);
        queue.push_back(gf);
      }
    }
    int missing = -1;
    for (int f = 0; f < n1 && missing < 0; ++f)
      if (!rep1[f]) missing = f;
    if (missing < 0) break;
    const int g = p.add_gen1(c.cell1(missing).src, c.cell1(missing).tgt,
                             c.cell1_name(missing));
    gen_cell1.push_back(missing);
    rep1[missing] = Word{g};
  }
  for (int f = 0; f < n1; ++f)
    for (int g = 0; g < static_cast<int>(gen_cell1.size()); ++g) {
      const int gf = c.comp1(gen_cell1[g], f);
      if (gf < 0) continue;
      Word lhs = *rep1[f];
      lhs.push_back(g);
      if (lhs != *rep1[gf]) p.rel1.push_back({c.cell1(f).src, lhs, *rep1[gf]});
    }

  // 2-generators.
  std::vector<char> decomposable2(n2, 0);
  for (const auto& e : t.vcomp)
    if (!c.is_id2(e[0]) && !c.is_id2(e[1])) decomposable2[e[2]] = 1;
  auto trivial = [&](int a) { return c.is_id2(a) && c.is_id1(c.cell2(a).src); };
  for (const auto& e : t.hcomp)
    if (!trivial(e[0]) && !trivial(e[1])) decomposable2[e[2]] = 1;

  struct AtomCell {
    Atom atom;
    int cell;
  };
  std::vector<AtomCell> atoms;
  std::vector<int> gen_cell2;
  auto add_gen2 = [&](int a) {
    const auto [f, g] = c.cell2(a);
    const int x = c.cell1(f).src;
    const int y = c.cell1(f).tgt;
    const int gen = p.add_gen2(x, y, *rep1[f], *rep1[g], c.cell2_name(a));
    gen_cell2.push_back(a);
    for (int u = 0; u < n1; ++u) {
      if (c.cell1(u).tgt != x) continue;
      for (int v = 0; v < n1; ++v) {
        if (c.cell1(v).src != y) continue;
        const int cell = c.hcomp(c.id2(v), c.hcomp(a, c.id2(u)));
        atoms.push_back({{*rep1[u], gen, *rep1[v]}, cell});
      }
    }
  };
  for (int a = 0; a < n2; ++a)
    if (!c.is_id2(a) && !decomposable2[a]) add_gen2(a);

  std::vector<std::optional<Pasting>> rep2(n2);
  for (int f = 0; f < n1; ++f)
    rep2[c.id2(f)] = Pasting{c.cell1(f).src, *rep1[f], {}};
  while (true) {
    std::vector<int> queue;
    for (int a = 0; a < n2; ++a)
      if (rep2[a]) queue.push_back(a);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int a = queue[qi];
      for (const auto& at : atoms) {
        const int b = c.vcomp(at.cell, a);
        if (b < 0 || rep2[b]) continue;
        rep2[b] = *rep2[a];
        rep2[b]->atoms.push_back(at.atom);
        queue.push_back(b);
      }
    }
    int missing = -1;
    for (int a = 0; a < n2 && missing < 0; ++a)
      if (!rep2[a]) missing = a;
    if (missing < 0) break;
    add_gen2(missing);
    const auto [f, g] = c.cell2(missing);
    rep2[missing] = Pasting{c.cell1(f).src, *rep1[f],
                            {{Word{}, static_cast<int>(gen_cell2.size()) - 1,
                              Word{}}}};
  }
  for (int a = 0; a < n2; ++a)
    for (const auto& at : atoms) {
      const int b = c.vcomp(at.cell, a);
      if (b < 0) continue;
      Pasting lhs = *rep2[a];
      lhs.atoms.push_back(at.atom);
      if (lhs.atoms != rep2[b]->atoms || lhs.start != rep2[b]->start)
        p.rel2.push_back({lhs, *rep2[b]});
    }
  return p;
}

}  // namespace graycat
