#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "trimlat/bitset.hpp"
#include "trimlat/errors.hpp"
#include "trimlat/lattice.hpp"
#include "trimlat/poset.hpp"

namespace trimlat {

inline constexpr std::size_t default_element_cap = 100000;

// The distributive lattice of order ideals of q. Element 0 is the empty
// ideal; elements are sorted by (size, members).
struct IdealLattice {
  Poset base;
  Lattice lattice;
  std::vector<Bitset> ideals;

  // The element of `base` added along the cover y < z.
  Element added(Element y, Element z) const { return static_cast<Element>((ideals[z] - ideals[y]).first()); }

  std::optional<Element> find(const Bitset& ideal) const {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal);
    if (it == ideals.end() || !(*it == ideal)) return std::nullopt;
    return static_cast<Element>(it - ideals.begin());
  }
};

// All order ideals of q, at most `cap` of them.
inline std::vector<Bitset> enumerate_ideals(const Poset& q, std::size_t cap = default_element_cap) {
  const std::size_t n = q.size();
  const auto& topo = q.topological_order();
  std::vector<Bitset> out;
  Bitset cur(n);
  // Walk elements in topological order; an element may join only if its
  // lower covers are already in, so every leaf is an ideal.
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      if (out.size() >= cap) throw SizeLimitExceeded(cap, "too many order ideals");
      out.push_back(cur);
      return;
    }
    Element a = topo[pos];
    self(self, pos + 1);
    for (auto b : q.lower_covers(a))
      if (!cur.test(b)) return;
    cur.set(a);
    self(self, pos + 1);
    cur.reset(a);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline IdealLattice order_ideals(const Poset& q, std::size_t cap = default_element_cap) {
  IdealLattice r;
  r.base = q;
  r.ideals = enumerate_ideals(q, cap);
  std::unordered_map<Bitset, Element, BitsetHash> index;
  for (Element i = 0; i < r.ideals.size(); ++i) index.emplace(r.ideals[i], i);
  std::vector<Relation> covers;
  for (Element i = 0; i < r.ideals.size(); ++i) {
    const Bitset& I = r.ideals[i];
    for (Element a = 0; a < q.size(); ++a) {
      if (I.test(a)) continue;
      if (!q.down_set(a).is_subset_of(I | Bitset(q.size(), {a}))) continue;
      Bitset J = I;
      J.set(a);
      covers.emplace_back(i, index.at(J));
    }
  }
  r.lattice = Lattice::from_relations(r.ideals.size(), covers);
  return r;
}

}  // namespace trimlat
