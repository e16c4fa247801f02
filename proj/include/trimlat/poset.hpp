#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trimlat/bitset.hpp"
#include "trimlat/errors.hpp"

namespace trimlat {

using Element = std::uint32_t;
using Relation = std::pair<Element, Element>;  // (a, b) means a <= b

// Finite poset on 0..n-1. Immutable after construction; the full order
// relation is kept as up/down bitsets and the Hasse diagram as cover lists.
class Poset {
public:
  Poset() = default;

  // Reflexive-transitive closure of `relations`, reduced to covers.
  static Poset from_relations(std::size_t n, std::span<const Relation> relations) {
    std::vector<std::vector<Element>> succ(n);
    for (auto [a, b] : relations) {
      if (a >= n || b >= n)
        throw Error(ErrorKind::InvalidInput, "relation (" + std::to_string(a) + "," + std::to_string(b) +
                                                 ") out of range for n=" + std::to_string(n));
      if (a != b) succ[a].push_back(b);
    }
    // Kahn's algorithm, smallest index first, for a deterministic topological order.
    std::vector<std::size_t> indeg(n, 0);
    for (auto& s : succ)
      for (auto b : s) ++indeg[b];
    std::vector<Element> topo;
    topo.reserve(n);
    std::vector<Element> ready;
    for (Element v = 0; v < n; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    std::make_heap(ready.begin(), ready.end(), std::greater<>{});
    while (!ready.empty()) {
      std::pop_heap(ready.begin(), ready.end(), std::greater<>{});
      Element v = ready.back();
      ready.pop_back();
      topo.push_back(v);
      for (auto b : succ[v])
        if (--indeg[b] == 0) {
          ready.push_back(b);
          std::push_heap(ready.begin(), ready.end(), std::greater<>{});
        }
    }
    if (topo.size() != n) {
      Element witness = 0;
      while (indeg[witness] == 0) ++witness;
      throw Error(ErrorKind::CycleDetected, "relations force a cycle through element " + std::to_string(witness));
    }
    std::vector<Bitset> up(n, Bitset(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      up[*it].set(*it);
      for (auto b : succ[*it]) up[*it] |= up[b];
    }
    return Poset(std::move(up), std::move(topo));
  }

  // From a full order relation: up[a] = { b : a <= b }. Validates the
  // partial-order axioms.
  static Poset from_order(std::vector<Bitset> up) {
    const std::size_t n = up.size();
    for (std::size_t a = 0; a < n; ++a) {
      if (up[a].size() != n || !up[a].test(a))
        throw Error(ErrorKind::InvalidInput, "order relation is not reflexive at " + std::to_string(a));
      up[a].for_each([&](std::size_t b) {
        if (b != a && up[b].test(a)) throw Error(ErrorKind::CycleDetected, "order relation is not antisymmetric");
        if (!up[b].is_subset_of(up[a])) throw Error(ErrorKind::InvalidInput, "order relation is not transitive");
      });
    }
    // Sorting by decreasing up-set size is a linear extension.
    std::vector<Element> topo(n);
    std::iota(topo.begin(), topo.end(), Element{0});
    std::stable_sort(topo.begin(), topo.end(), [&](Element a, Element b) { return up[a].count() > up[b].count(); });
    return Poset(std::move(up), std::move(topo));
  }

  std::size_t size() const noexcept { return up_.size(); }

  bool leq(Element a, Element b) const noexcept { return up_[a].test(b); }
  bool less(Element a, Element b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const noexcept { return leq(a, b) || leq(b, a); }

  const Bitset& up_set(Element a) const noexcept { return up_[a]; }
  const Bitset& down_set(Element a) const noexcept { return down_[a]; }

  const std::vector<Relation>& covers() const noexcept { return covers_; }
  const std::vector<Element>& upper_covers(Element a) const noexcept { return upper_[a]; }
  const std::vector<Element>& lower_covers(Element a) const noexcept { return lower_[a]; }
  bool is_cover(Element a, Element b) const noexcept {
    return std::binary_search(upper_[a].begin(), upper_[a].end(), b);
  }

  // A deterministic linear extension (smallest-index minimal element first).
  const std::vector<Element>& topological_order() const noexcept { return topo_; }
  std::size_t rank_in_topological_order(Element a) const noexcept { return topo_rank_[a]; }

  std::vector<Element> minimal_elements() const {
    std::vector<Element> out;
    for (Element a = 0; a < size(); ++a)
      if (lower_[a].empty()) out.push_back(a);
    return out;
  }
  std::vector<Element> maximal_elements() const {
    std::vector<Element> out;
    for (Element a = 0; a < size(); ++a)
      if (upper_[a].empty()) out.push_back(a);
    return out;
  }

  Poset dual() const {
    std::vector<Relation> rel;
    rel.reserve(covers_.size());
    for (auto [a, b] : covers_) rel.emplace_back(b, a);
    return from_relations(size(), rel);
  }

  // Induced subposet on `keep` (in increasing index order); element i of the
  // result is keep[i].
  Poset induced(std::span<const Element> keep) const {
    const std::size_t m = keep.size();
    std::vector<Bitset> up(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k)
        if (leq(keep[i], keep[k])) up[i].set(k);
    return from_order(std::move(up));
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

private:
  Poset(std::vector<Bitset> up, std::vector<Element> topo) : up_(std::move(up)), topo_(std::move(topo)) {
    const std::size_t n = up_.size();
    topo_rank_.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) topo_rank_[topo_[r]] = r;
    down_.assign(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) up_[a].for_each([&](std::size_t b) { down_[b].set(a); });

    // Covers of a: walk the strict up-set in topological order; an element is
    // a cover iff no earlier-found cover lies below it.
    upper_.assign(n, {});
    lower_.assign(n, {});
    std::vector<Element> above;
    for (Element a = 0; a < n; ++a) {
      above.clear();
      up_[a].for_each([&](std::size_t b) {
        if (b != a) above.push_back(static_cast<Element>(b));
      });
      std::sort(above.begin(), above.end(), [&](Element x, Element y) { return topo_rank_[x] < topo_rank_[y]; });
      Bitset reached(n);
      for (auto b : above) {
        if (reached.test(b)) continue;
        upper_[a].push_back(b);
        reached |= up_[b];
      }
      std::sort(upper_[a].begin(), upper_[a].end());
    }
    for (Element a = 0; a < n; ++a)
      for (auto b : upper_[a]) {
        lower_[b].push_back(a);
        covers_.emplace_back(a, b);
      }
    for (auto& l : lower_) std::sort(l.begin(), l.end());
  }

  std::vector<Bitset> up_, down_;
  std::vector<Element> topo_;
  std::vector<std::size_t> topo_rank_;
  std::vector<std::vector<Element>> upper_, lower_;
  std::vector<Relation> covers_;
};

// Enumerates up to `limit` linear extensions in lexicographic order of the
// element sequence; the first is always the canonical (smallest-index-first)
// extension.
inline std::vector<std::vector<Element>> linear_extensions(const Poset& q, std::size_t limit) {
  std::vector<std::vector<Element>> out;
  if (limit == 0) return out;
  const std::size_t n = q.size();
  std::vector<std::size_t> missing(n);
  for (Element a = 0; a < n; ++a) missing[a] = q.lower_covers(a).size();
  std::vector<Element> current;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (Element a = 0; a < n && out.size() < limit; ++a) {
      if (used[a] || missing[a] != 0) continue;
      used[a] = true;
      current.push_back(a);
      for (auto b : q.upper_covers(a)) --missing[b];
      self(self);
      for (auto b : q.upper_covers(a)) ++missing[b];
      current.pop_back();
      used[a] = false;
    }
  };
  rec(rec);
  return out;
}

inline std::vector<Element> canonical_linear_extension(const Poset& q) { return linear_extensions(q, 1).front(); }

// True iff `seq` lists every element exactly once and refines the order.
inline bool is_linear_extension(const Poset& q, std::span<const Element> seq) {
  if (seq.size() != q.size()) return false;
  std::vector<std::size_t> pos(q.size(), q.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] >= q.size() || pos[seq[i]] != q.size()) return false;
    pos[seq[i]] = i;
  }
  for (auto [a, b] : q.covers())
    if (pos[a] > pos[b]) return false;
  return true;
}

// All antichains (including the empty one), sorted by size then lexicographically.
inline std::vector<Bitset> antichains(const Poset& q) {
  const std::size_t n = q.size();
  std::vector<Bitset> out;
  Bitset current(n);
  Bitset blocked(n);  // elements comparable to something in `current`
  auto rec = [&](auto&& self, Element start) -> void {
    out.push_back(current);
    for (Element a = start; a < n; ++a) {
      if (blocked.test(a)) continue;
      Bitset saved = blocked;
      current.set(a);
      blocked |= q.up_set(a);
      blocked |= q.down_set(a);
      self(self, a + 1);
      blocked = saved;
      current.reset(a);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trimlat
