#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "trimlat/bitset.hpp"
#include "trimlat/errors.hpp"
#include "trimlat/labelling.hpp"
#include "trimlat/lattice.hpp"

namespace trimlat {

// A bijection on the elements of a lattice, with its cycles. Each cycle
// starts at its smallest element; cycles are ordered by that element.
struct LatticePermutation {
  std::vector<Element> forward;
  std::vector<std::vector<Element>> cycles;

  static LatticePermutation from_map(std::vector<Element> f) {
    const std::size_t n = f.size();
    std::vector<char> hit(n, 0);
    for (auto y : f) {
      if (y >= n || hit[y]) throw Error(ErrorKind::InvalidInput, "map is not a bijection");
      hit[y] = 1;
    }
    LatticePermutation p;
    std::vector<char> seen(n, 0);
    for (Element x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::vector<Element> c;
      for (Element y = x; !seen[y]; y = f[y]) {
        seen[y] = 1;
        c.push_back(y);
      }
      p.cycles.push_back(std::move(c));
    }
    p.forward = std::move(f);
    return p;
  }

  std::size_t size() const noexcept { return forward.size(); }
  Element operator()(Element x) const noexcept { return forward[x]; }
  friend bool operator==(const LatticePermutation& a, const LatticePermutation& b) { return a.forward == b.forward; }
};

struct OrbitSummary {
  std::vector<std::size_t> cycle_type;  // decreasing
  std::uint64_t order = 1;
  std::size_t max_orbit() const noexcept { return cycle_type.empty() ? 0 : cycle_type.front(); }
};

inline OrbitSummary orbits(const LatticePermutation& p) {
  OrbitSummary s;
  for (auto& c : p.cycles) {
    s.cycle_type.push_back(c.size());
    s.order = std::lcm(s.order, static_cast<std::uint64_t>(c.size()));
  }
  std::sort(s.cycle_type.begin(), s.cycle_type.end(), std::greater<>{});
  return s;
}

// row(x) = the unique y with U(y) = D(x).
inline LatticePermutation rowmotion_global(const Lattice& l, const CoverLabelling& g) {
  std::unordered_map<Bitset, Element, BitsetHash> by_up;
  for (Element y = 0; y < l.size(); ++y)
    if (!by_up.emplace(g.up_labels(y), y).second)
      throw Error(ErrorKind::NotDescriptive, "two elements share up-labels, e.g. " + std::to_string(y));
  std::vector<Element> f(l.size());
  std::vector<char> hit(l.size(), 0);
  for (Element x = 0; x < l.size(); ++x) {
    auto it = by_up.find(g.down_labels(x));
    if (it == by_up.end())
      throw Error(ErrorKind::NotDescriptive, "down-labels of " + std::to_string(x) + " are nobody's up-labels");
    if (hit[it->second]) throw Error(ErrorKind::NotDescriptive, "two elements share down-labels");
    hit[it->second] = 1;
    f[x] = it->second;
  }
  return LatticePermutation::from_map(std::move(f));
}

// The other end of the edge at x labelled `label`, or x if there is none.
inline Element flip(const CoverLabelling& g, Element x, Label label) {
  for (auto& e : g.up(x))
    if (e.label == label) return e.other;
  for (auto& e : g.down(x))
    if (e.label == label) return e.other;
  return x;
}

inline void require_linear_extension(const CoverLabelling& g, std::span<const Label> ext) {
  std::vector<Element> seq(ext.begin(), ext.end());
  if (!is_linear_extension(g.label_poset(), seq))
    throw Error(ErrorKind::NotALinearExtension, "label sequence is not a linear extension of the label poset");
}

struct TraceStep {
  Label label;
  Element element;  // position after the flip
};

inline std::vector<TraceStep> slow_trace(const CoverLabelling& g, std::span<const Label> ext, Element x) {
  require_linear_extension(g, ext);
  std::vector<TraceStep> t;
  t.reserve(ext.size());
  for (auto lab : ext) {
    x = flip(g, x, lab);
    t.push_back({lab, x});
  }
  return t;
}

// Composition of flips in the order of `ext`.
inline LatticePermutation rowmotion_slow(const Lattice& l, const CoverLabelling& g, std::span<const Label> ext) {
  require_linear_extension(g, ext);
  std::vector<Element> f(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    Element y = x;
    for (auto lab : ext) y = flip(g, y, lab);
    f[x] = y;
  }
  return LatticePermutation::from_map(std::move(f));
}

inline LatticePermutation rowmotion_slow(const Lattice& l, const CoverLabelling& g) {
  auto ext = canonical_linear_extension(g.label_poset());
  std::vector<Label> e(ext.begin(), ext.end());
  return rowmotion_slow(l, g, e);
}

}  // namespace trimlat
