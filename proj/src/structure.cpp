// SPDX-License-Identifier: Apache-2.0
#include "graycat/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace graycat {

void FiniteStructure::require_same_signature(
    const FiniteStructure& other) const {
  auto fail = [] {
    throw std::invalid_argument("structures have different signatures");
  };
  if (sizes.size() != other.sizes.size() ||
      unary.size() != other.unary.size() ||
      binary.size() != other.binary.size())
    fail();
  for (std::size_t i = 0; i < unary.size(); ++i)
    if (unary[i].from != other.unary[i].from ||
        unary[i].to != other.unary[i].to)
      fail();
  for (std::size_t i = 0; i < binary.size(); ++i)
    if (binary[i].lhs != other.binary[i].lhs ||
        binary[i].rhs != other.binary[i].rhs ||
        binary[i].to != other.binary[i].to)
      fail();
}

namespace {

class BinaryIndex {
 public:
  BinaryIndex(const FiniteStructure::Binary& op, int lhs_size, int rhs_size)
      : rhs_size_(rhs_size) {
    const auto dense = static_cast<std::size_t>(lhs_size) *
                       static_cast<std::size_t>(rhs_size);
    if (dense <= (std::size_t{1} << 22)) {
      dense_.assign(dense, -1);
      for (const auto& e : op.entries)
        dense_[static_cast<std::size_t>(e[0]) * rhs_size_ + e[1]] = e[2];
    } else {
      use_map_ = true;
      for (const auto& e : op.entries) map_[key(e[0], e[1])] = e[2];
    }
  }

  int operator()(int a, int b) const {
    if (!use_map_)
      return dense_[static_cast<std::size_t>(a) * rhs_size_ + b];
    auto it = map_.find(key(a, b));
    return it == map_.end() ? -1 : it->second;
  }

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  std::size_t rhs_size_;
  bool use_map_ = false;
  std::vector<int> dense_;
  std::unordered_map<std::uint64_t, int> map_;
};

struct Constraint {
  bool binary;
  int op;
  int entry;
};

struct Step {
  int sort;
  int elem;
  // Derivation from earlier positions: kind 0 = free, 1 = unary, 2 = binary.
  int kind = 0;
  int op = -1;
  int a = -1;  // element ids (in their sorts)
  int b = -1;
  int anchor_op = -1;  // unary op with this element as argument, result earlier
  int anchor_result = -1;
  std::vector<Constraint> checks;
};

class Search {
 public:
  Search(const FiniteStructure& src, const FiniteStructure& tgt,
         const SearchOptions& options,
         const std::function<bool(const Assignment&)>& visit)
      : src_(src), tgt_(tgt), opt_(options), visit_(visit) {
    src_.require_same_signature(tgt_);
    plan();
    for (std::size_t i = 0; i < tgt_.binary.size(); ++i) {
      const auto& op = tgt_.binary[i];
      tindex_.emplace_back(op, tgt_.sizes[op.lhs], tgt_.sizes[op.rhs]);
    }
    preimages_.resize(tgt_.unary.size());
    for (std::size_t u = 0; u < tgt_.unary.size(); ++u) {
      const auto& op = tgt_.unary[u];
      preimages_[u].assign(tgt_.sizes[op.to], {});
      for (int x = 0; x < static_cast<int>(op.table.size()); ++x)
        preimages_[u][op.table[x]].push_back(x);
    }
    h_.resize(src_.sizes.size());
    used_.resize(src_.sizes.size());
    for (std::size_t s = 0; s < src_.sizes.size(); ++s) {
      h_[s].assign(src_.sizes[s], -1);
      used_[s].assign(tgt_.sizes[s], 0);
    }
  }

  std::size_t run() {
    if (opt_.injective)
      for (std::size_t s = 0; s < src_.sizes.size(); ++s)
        if (src_.sizes[s] > tgt_.sizes[s]) return 0;
    for (std::size_t s = 0; s < src_.sizes.size(); ++s)
      if (src_.sizes[s] > 0 && tgt_.sizes[s] == 0) return 0;
    descend(0);
    return found_;
  }

 private:
  void plan() {
    const int nsorts = static_cast<int>(src_.sizes.size());
    std::vector<int> order = opt_.sort_order;
    if (order.empty())
      for (int s = 0; s < nsorts; ++s) order.push_back(s);
    if (static_cast<int>(order.size()) != nsorts)
      throw std::invalid_argument("sort_order must list every sort once");
    std::vector<int> rank(nsorts);
    for (int r = 0; r < nsorts; ++r) rank[order[r]] = r;

    pos_.resize(nsorts);
    for (int s = 0; s < nsorts; ++s) pos_[s].assign(src_.sizes[s], -1);

    // Producers of each element, and for each element the producers it feeds.
    struct Producer {
      bool binary;
      int op;
      int a;
      int b;
      int out;
    };
    std::vector<Producer> producers;
    std::vector<std::vector<std::vector<int>>> feeds(nsorts);
    std::vector<std::vector<char>> decomposable(nsorts);
    std::vector<std::vector<std::vector<std::pair<int, int>>>> preimage(nsorts);
    for (int s = 0; s < nsorts; ++s) {
      feeds[s].resize(src_.sizes[s]);
      preimage[s].resize(src_.sizes[s]);
      decomposable[s].assign(src_.sizes[s], 0);
    }
    for (int u = 0; u < static_cast<int>(src_.unary.size()); ++u) {
      const auto& op = src_.unary[u];
      for (int x = 0; x < static_cast<int>(op.table.size()); ++x) {
        feeds[op.from][x].push_back(static_cast<int>(producers.size()));
        producers.push_back({false, u, x, -1, op.table[x]});
        preimage[op.to][op.table[x]].push_back({u, x});
      }
    }
    for (int bi = 0; bi < static_cast<int>(src_.binary.size()); ++bi) {
      const auto& op = src_.binary[bi];
      for (const auto& e : op.entries) {
        const int id = static_cast<int>(producers.size());
        producers.push_back({true, bi, e[0], e[1], e[2]});
        feeds[op.lhs][e[0]].push_back(id);
        if (op.lhs != op.rhs || e[0] != e[1]) feeds[op.rhs][e[1]].push_back(id);
        const bool a_is = op.lhs == op.to && e[0] == e[2];
        const bool b_is = op.rhs == op.to && e[1] == e[2];
        if (!a_is && !b_is) decomposable[op.to][e[2]] = 1;
      }
    }

    auto placed = [&](int sort, int elem) { return pos_[sort][elem] >= 0; };
    std::vector<int> derive_queue;  // producer ids whose arguments are placed
    std::vector<std::vector<std::pair<int, int>>> anchored(2 * nsorts);
    auto place = [&](int sort, int elem, int kind, int op, int a, int b) {
      Step st;
      st.sort = sort;
      st.elem = elem;
      st.kind = kind;
      st.op = op;
      st.a = a;
      st.b = b;
      pos_[sort][elem] = static_cast<int>(steps_.size());
      steps_.push_back(std::move(st));
      for (int pid : feeds[sort][elem]) {
        const auto& p = producers[pid];
        if (p.binary) {
          const auto& bop = src_.binary[p.op];
          if (!placed(bop.lhs, p.a) || !placed(bop.rhs, p.b)) continue;
        }
        derive_queue.push_back(pid);
      }
      for (auto [u, x] : preimage[sort][elem]) {
        const int from = src_.unary[u].from;
        if (!placed(from, x))
          anchored[2 * rank[from] + decomposable[from][x]].push_back({from, x});
      }
    };

    std::size_t remaining = 0;
    for (int s = 0; s < nsorts; ++s) remaining += src_.sizes[s];
    std::vector<int> scan(2 * nsorts, 0);
    while (remaining > 0) {
      bool done_one = false;
      while (!derive_queue.empty()) {
        const auto p = producers[derive_queue.back()];
        derive_queue.pop_back();
        const int to =
            p.binary ? src_.binary[p.op].to : src_.unary[p.op].to;
        if (placed(to, p.out)) continue;
        place(to, p.out, p.binary ? 2 : 1, p.op, p.a, p.b);
        done_one = true;
        break;
      }
      if (done_one) {
        --remaining;
        continue;
      }
      int ps = -1, pe = -1;
      for (auto& bucket : anchored) {
        while (!bucket.empty() && placed(bucket.back().first,
                                         bucket.back().second))
          bucket.pop_back();
        if (!bucket.empty()) {
          ps = bucket.back().first;
          pe = bucket.back().second;
          break;
        }
      }
      for (int key = 0; key < 2 * nsorts && ps < 0; ++key) {
        const int s = order[key / 2];
        const char want = static_cast<char>(key % 2);
        for (int& e = scan[key]; e < src_.sizes[s]; ++e)
          if (!placed(s, e) && decomposable[s][e] == want) {
            ps = s;
            pe = e;
            break;
          }
      }
      place(ps, pe, 0, -1, -1, -1);
      --remaining;
    }

    // Attach every equation to the latest position it mentions.
    for (int u = 0; u < static_cast<int>(src_.unary.size()); ++u) {
      const auto& op = src_.unary[u];
      for (int x = 0; x < static_cast<int>(op.table.size()); ++x) {
        const int px = pos_[op.from][x];
        const int py = pos_[op.to][op.table[x]];
        steps_[std::max(px, py)].checks.push_back({false, u, x});
        if (px > py && steps_[px].kind == 0 && steps_[px].anchor_op < 0) {
          steps_[px].anchor_op = u;
          steps_[px].anchor_result = op.table[x];
        }
      }
    }
    for (int bi = 0; bi < static_cast<int>(src_.binary.size()); ++bi) {
      const auto& op = src_.binary[bi];
      for (int k = 0; k < static_cast<int>(op.entries.size()); ++k) {
        const auto& e = op.entries[k];
        const int p = std::max({pos_[op.lhs][e[0]], pos_[op.rhs][e[1]],
                                pos_[op.to][e[2]]});
        steps_[p].checks.push_back({true, bi, k});
      }
    }
  }

  bool check(const Step& st) const {
    for (const auto& c : st.checks) {
      if (!c.binary) {
        const auto& op = src_.unary[c.op];
        const int x = h_[op.from][c.entry];
        const int y = h_[op.to][op.table[c.entry]];
        if (tgt_.unary[c.op].table[x] != y) return false;
      } else {
        const auto& op = src_.binary[c.op];
        const auto& e = op.entries[c.entry];
        const int r = tindex_[c.op](h_[op.lhs][e[0]], h_[op.rhs][e[1]]);
        if (r < 0 || r != h_[op.to][e[2]]) return false;
      }
    }
    return true;
  }

  bool assign_and_descend(std::size_t p, const Step& st, int v) {
    if (opt_.injective && used_[st.sort][v]) return true;
    h_[st.sort][st.elem] = v;
    if (check(st)) {
      if (opt_.injective) used_[st.sort][v] = 1;
      const bool go_on = descend(p + 1);
      if (opt_.injective) used_[st.sort][v] = 0;
      h_[st.sort][st.elem] = -1;
      return go_on;
    }
    h_[st.sort][st.elem] = -1;
    return true;
  }

  // Returns false when the visitor asked to stop.
  bool descend(std::size_t p) {
    if (++nodes_ > opt_.node_budget)
      throw BudgetExceeded("homomorphism search exceeded node budget");
    if (p == steps_.size()) {
      ++found_;
      return visit_(h_);
    }
    const Step& st = steps_[p];
    int forced = -1;
    if (opt_.pinned) forced = (*opt_.pinned)[st.sort][st.elem];
    if (st.kind == 1) {
      const auto& op = tgt_.unary[st.op];
      const int v = op.table[h_[op.from][st.a]];
      if (forced >= 0 && v != forced) return true;
      return assign_and_descend(p, st, v);
    }
    if (st.kind == 2) {
      const auto& op = tgt_.binary[st.op];
      const int v = tindex_[st.op](h_[op.lhs][st.a], h_[op.rhs][st.b]);
      if (v < 0 || (forced >= 0 && v != forced)) return true;
      return assign_and_descend(p, st, v);
    }
    if (forced >= 0) return assign_and_descend(p, st, forced);
    if (st.anchor_op >= 0) {
      const auto& op = src_.unary[st.anchor_op];
      const int target = h_[op.to][st.anchor_result];
      for (int v : preimages_[st.anchor_op][target])
        if (!assign_and_descend(p, st, v)) return false;
      return true;
    }
    for (int v = 0; v < tgt_.sizes[st.sort]; ++v)
      if (!assign_and_descend(p, st, v)) return false;
    return true;
  }

  const FiniteStructure& src_;
  const FiniteStructure& tgt_;
  const SearchOptions& opt_;
  const std::function<bool(const Assignment&)>& visit_;
  std::vector<Step> steps_;
  std::vector<std::vector<int>> pos_;
  std::vector<BinaryIndex> tindex_;
  std::vector<std::vector<std::vector<int>>> preimages_;
  Assignment h_;
  std::vector<std::vector<char>> used_;
  std::size_t nodes_ = 0;
  std::size_t found_ = 0;
};

}  // namespace

std::size_t search_homomorphisms(
    const FiniteStructure& src, const FiniteStructure& tgt,
    const SearchOptions& options,
    const std::function<bool(const Assignment&)>& visit) {
  Search s(src, tgt, options, visit);
  return s.run();
}

std::vector<Assignment> all_homomorphisms(const FiniteStructure& src,
                                          const FiniteStructure& tgt,
                                          const SearchOptions& options) {
  std::vector<Assignment> out;
  search_homomorphisms(src, tgt, options, [&](const Assignment& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::size_t count_homomorphisms(const FiniteStructure& src,
                                const FiniteStructure& tgt,
                                const SearchOptions& options) {
  return search_homomorphisms(src, tgt, options,
                              [](const Assignment&) { return true; });
}

bool is_homomorphism(const FiniteStructure& src, const FiniteStructure& tgt,
                     const Assignment& h) {
  src.require_same_signature(tgt);
  if (h.size() != src.sizes.size()) return false;
  for (std::size_t s = 0; s < src.sizes.size(); ++s) {
    if (static_cast<int>(h[s].size()) != src.sizes[s]) return false;
    for (int v : h[s])
      if (v < 0 || v >= tgt.sizes[s]) return false;
  }
  for (std::size_t u = 0; u < src.unary.size(); ++u) {
    const auto& op = src.unary[u];
    for (int x = 0; x < static_cast<int>(op.table.size()); ++x)
      if (tgt.unary[u].table[h[op.from][x]] != h[op.to][op.table[x]])
        return false;
  }
  for (std::size_t b = 0; b < src.binary.size(); ++b) {
    const auto& op = src.binary[b];
    BinaryIndex idx(tgt.binary[b], tgt.sizes[op.lhs], tgt.sizes[op.rhs]);
    for (const auto& e : op.entries)
      if (idx(h[op.lhs][e[0]], h[op.rhs][e[1]]) != h[op.to][e[2]])
        return false;
  }
  return true;
}

std::optional<Assignment> find_isomorphism(const FiniteStructure& a,
                                           const FiniteStructure& b,
                                           std::size_t node_budget) {
  a.require_same_signature(b);
  if (a.sizes != b.sizes) return std::nullopt;
  for (std::size_t i = 0; i < a.binary.size(); ++i)
    if (a.binary[i].entries.size() != b.binary[i].entries.size())
      return std::nullopt;
  SearchOptions opt;
  opt.injective = true;
  opt.node_budget = node_budget;
  std::optional<Assignment> out;
  search_homomorphisms(a, b, opt, [&](const Assignment& h) {
    out = h;
    return false;
  });
  return out;
}

std::vector<int> flatten(const Assignment& h) {
  std::vector<int> out;
  for (const auto& v : h) {
    out.push_back(static_cast<int>(v.size()));
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace graycat
