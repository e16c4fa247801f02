#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trimlat/bitset.hpp"
#include "trimlat/errors.hpp"
#include "trimlat/ideals.hpp"
#include "trimlat/lattice.hpp"
#include "trimlat/poset.hpp"

namespace trimlat {

// Labels are 0-based internally; label i is displayed as i+1.
using Label = std::size_t;
inline constexpr std::size_t no_label = static_cast<std::size_t>(-1);

// Join- and meet-irreducibles indexed along a saturated chain of maximal length.
struct IrreducibleIndexing {
  Chain chain;
  std::vector<Element> j, m;           // label -> element
  std::vector<Label> j_label, m_label;  // element -> label, or no_label

  std::size_t size() const noexcept { return j.size(); }
};

inline IrreducibleIndexing index_irreducibles(const Lattice& l, const Chain& chain) {
  if (!is_extremal(l)) throw Error(ErrorKind::NotExtremal, "irreducible indexing requires an extremal lattice");
  const std::size_t n = chain.length();
  if (n != length(l) || !chain.saturated || chain.elements.front() != l.bottom() || chain.elements.back() != l.top())
    throw Error(ErrorKind::InvalidInput, "indexing chain must be a saturated chain of maximal length");
  IrreducibleIndexing idx;
  idx.chain = chain;
  idx.j.assign(n, 0);
  idx.m.assign(n, 0);
  idx.j_label.assign(l.size(), no_label);
  idx.m_label.assign(l.size(), no_label);
  const auto& x = chain.elements;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t found_j = 0, found_m = 0;
    l.join_irreducibles().for_each([&](std::size_t e) {
      auto el = static_cast<Element>(e);
      if (l.leq(el, x[i + 1]) && !l.leq(el, x[i])) {
        idx.j[i] = el;
        ++found_j;
      }
    });
    l.meet_irreducibles().for_each([&](std::size_t e) {
      auto el = static_cast<Element>(e);
      if (l.leq(x[i], el) && !l.leq(x[i + 1], el)) {
        idx.m[i] = el;
        ++found_m;
      }
    });
    if (found_j != 1 || found_m != 1)
      throw Error(ErrorKind::NotExtremal, "chain step " + std::to_string(i + 1) + " does not isolate one irreducible");
    idx.j_label[idx.j[i]] = i;
    idx.m_label[idx.m[i]] = i;
  }
  return idx;
}

inline IrreducibleIndexing index_irreducibles(const Lattice& l) {
  return index_irreducibles(l, maximal_length_chain(l));
}

// Directed graph on labels 0..n-1 with edges only from larger to smaller labels.
class GaloisGraph {
public:
  GaloisGraph() = default;
  explicit GaloisGraph(std::size_t n) : out_(n, Bitset(n)), in_(n, Bitset(n)) {}

  // Edges as 0-based (i, k) pairs with i > k.
  static GaloisGraph from_edges(std::size_t n, std::span<const std::pair<Label, Label>> edges) {
    GaloisGraph g(n);
    for (auto [i, k] : edges) {
      if (i >= n || k >= n)
        throw Error(ErrorKind::InvalidInput,
                    "edge " + std::to_string(i + 1) + "->" + std::to_string(k + 1) + " out of range");
      if (i <= k)
        throw Error(ErrorKind::InvalidInput,
                    "edge " + std::to_string(i + 1) + "->" + std::to_string(k + 1) + " does not decrease");
      g.out_[i].set(k);
      g.in_[k].set(i);
    }
    return g;
  }

  std::size_t size() const noexcept { return out_.size(); }
  bool has_edge(Label i, Label k) const noexcept { return out_[i].test(k); }
  const Bitset& out(Label i) const noexcept { return out_[i]; }
  const Bitset& in(Label k) const noexcept { return in_[k]; }

  std::vector<std::pair<Label, Label>> edges() const {
    std::vector<std::pair<Label, Label>> e;
    for (Label i = 0; i < size(); ++i) out_[i].for_each([&](std::size_t k) { e.emplace_back(i, k); });
    return e;
  }
  std::size_t edge_count() const noexcept {
    std::size_t c = 0;
    for (auto& o : out_) c += o.count();
    return c;
  }

  // Vertices in `keep`, renumbered in increasing order.
  GaloisGraph induced(const Bitset& keep) const {
    std::vector<Label> newid(size(), no_label);
    std::size_t m = 0;
    keep.for_each([&](std::size_t v) { newid[v] = m++; });
    GaloisGraph g(m);
    for (auto [i, k] : edges())
      if (keep.test(i) && keep.test(k)) {
        g.out_[newid[i]].set(newid[k]);
        g.in_[newid[k]].set(newid[i]);
      }
    return g;
  }

  friend bool operator==(const GaloisGraph& a, const GaloisGraph& b) { return a.out_ == b.out_; }

private:
  std::vector<Bitset> out_, in_;
};

inline GaloisGraph galois_graph(const Lattice& l, const IrreducibleIndexing& idx) {
  const std::size_t n = idx.size();
  std::vector<std::pair<Label, Label>> e;
  for (Label i = 0; i < n; ++i)
    for (Label k = 0; k < n; ++k)
      if (i != k && !l.leq(idx.j[i], idx.m[k])) {
        if (i < k) throw Error(ErrorKind::InvalidInput, "indexing produced an increasing Galois edge");
        e.emplace_back(i, k);
      }
  return GaloisGraph::from_edges(n, e);
}

inline GaloisGraph galois_graph(const Lattice& l) { return galois_graph(l, index_irreducibles(l)); }

// Transitive closure of the graph, with k below i whenever i -> k.
inline Poset galois_poset(const GaloisGraph& g) {
  std::vector<Relation> rel;
  for (auto [i, k] : g.edges()) rel.emplace_back(static_cast<Element>(k), static_cast<Element>(i));
  return Poset::from_relations(g.size(), rel);
}

// A pair of disjoint label sets with no edge from X to Y, each maximal.
struct MaxOrthPair {
  Bitset X, Y;
  friend bool operator==(const MaxOrthPair&, const MaxOrthPair&) = default;
};

// Largest Y orthogonal to X.
inline Bitset orth_right(const GaloisGraph& g, const Bitset& X) {
  Bitset blocked = X;
  X.for_each([&](std::size_t i) { blocked |= g.out(i); });
  return ~blocked;
}

// Largest X orthogonal to Y.
inline Bitset orth_left(const GaloisGraph& g, const Bitset& Y) {
  Bitset blocked = Y;
  Y.for_each([&](std::size_t k) { blocked |= g.in(k); });
  return ~blocked;
}

inline MaxOrthPair complete_left(const GaloisGraph& g, const Bitset& X) {
  Bitset Y = orth_right(g, X);
  return MaxOrthPair{orth_left(g, Y), Y};
}

inline MaxOrthPair complete_right(const GaloisGraph& g, const Bitset& Y) {
  Bitset X = orth_left(g, Y);
  return MaxOrthPair{X, orth_right(g, X)};
}

// All maximal orthogonal pairs, sorted by X. Enumerated as the closed sets of
// X -> orth_left(orth_right(X)) in lectic order.
inline std::vector<MaxOrthPair> max_orth_pairs(const GaloisGraph& g, std::size_t cap = default_element_cap) {
  const std::size_t n = g.size();
  std::vector<MaxOrthPair> out;
  MaxOrthPair cur = complete_left(g, Bitset(n));
  while (true) {
    if (out.size() >= cap) throw SizeLimitExceeded(cap, "too many maximal orthogonal pairs");
    out.push_back(cur);
    // Next closed set after cur.X in lectic order.
    bool advanced = false;
    for (std::size_t t = n; t-- > 0;) {
      if (cur.X.test(t)) continue;
      Bitset base = cur.X;
      for (std::size_t s = t + 1; s < n; ++s) base.reset(s);
      base.set(t);
      MaxOrthPair next = complete_left(g, base);
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s)
        if (next.X.test(s) && !cur.X.test(s)) ok = false;
      if (ok) {
        cur = std::move(next);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end(), [](const MaxOrthPair& a, const MaxOrthPair& b) { return a.X < b.X; });
  return out;
}

// The lattice of maximal orthogonal pairs, ordered by inclusion of X.
struct PairLattice {
  GaloisGraph graph;
  std::vector<MaxOrthPair> pairs;  // element -> pair
  Lattice lattice;

  std::optional<Element> find(const Bitset& X) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), X,
                               [](const MaxOrthPair& p, const Bitset& x) { return p.X < x; });
    if (it == pairs.end() || !(it->X == X)) return std::nullopt;
    return static_cast<Element>(it - pairs.begin());
  }
};

inline PairLattice lattice_from_graph(const GaloisGraph& g, std::size_t cap = default_element_cap) {
  PairLattice r;
  r.graph = g;
  r.pairs = max_orth_pairs(g, cap);
  std::unordered_map<Bitset, Element, BitsetHash> index;
  for (Element e = 0; e < r.pairs.size(); ++e) index.emplace(r.pairs[e].X, e);
  // Upper covers of X are the minimal closures of X + {i}.
  std::vector<Relation> covers;
  std::vector<Element> cand;
  for (Element e = 0; e < r.pairs.size(); ++e) {
    const Bitset& X = r.pairs[e].X;
    cand.clear();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (X.test(i)) continue;
      Bitset Xi = X;
      Xi.set(i);
      cand.push_back(index.at(complete_left(g, Xi).X));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (auto c : cand) {
      bool minimal = true;
      for (auto d : cand)
        if (d != c && r.pairs[d].X.is_subset_of(r.pairs[c].X)) minimal = false;
      if (minimal) covers.emplace_back(e, c);
    }
  }
  r.lattice = Lattice::from_relations(r.pairs.size(), covers);
  return r;
}

// (x_J, x_M) = ({i : j_i <= x}, {k : m_k >= x}).
inline MaxOrthPair element_pair(const Lattice& l, const IrreducibleIndexing& idx, Element x) {
  const std::size_t n = idx.size();
  MaxOrthPair p{Bitset(n), Bitset(n)};
  for (Label i = 0; i < n; ++i) {
    if (l.leq(idx.j[i], x)) p.X.set(i);
    if (l.leq(x, idx.m[i])) p.Y.set(i);
  }
  return p;
}

// Everything derived from an extremal lattice and one indexing chain.
struct ExtremalData {
  IrreducibleIndexing indexing;
  GaloisGraph graph;
  std::vector<MaxOrthPair> pairs;  // element -> pair

  std::size_t labels() const noexcept { return indexing.size(); }
};

inline ExtremalData extremal_data(const Lattice& l, const Chain& chain) {
  ExtremalData d;
  d.indexing = index_irreducibles(l, chain);
  d.graph = galois_graph(l, d.indexing);
  d.pairs.reserve(l.size());
  for (Element x = 0; x < l.size(); ++x) d.pairs.push_back(element_pair(l, d.indexing, x));
  return d;
}

inline ExtremalData extremal_data(const Lattice& l) { return extremal_data(l, maximal_length_chain(l)); }

inline void require_cover(const Lattice& l, Element y, Element z) {
  if (y >= l.size() || z >= l.size() || !l.is_cover(y, z))
    throw Error(ErrorKind::NotACover, std::to_string(y) + " is not covered by " + std::to_string(z));
}

// y_M & z_J for a cover y < z.
inline Bitset overlap(const Lattice& l, const ExtremalData& d, Element y, Element z) {
  require_cover(l, y, z);
  return d.pairs[y].Y & d.pairs[z].X;
}

inline bool is_overlapping(const Lattice& l, const ExtremalData& d, Element y, Element z) {
  return overlap(l, d, y, z).any();
}

// The single label in y_M & z_J, or nullopt if the intersection is not a singleton.
inline std::optional<Label> overlap_label(const Lattice& l, const ExtremalData& d, Element y, Element z) {
  Bitset o = overlap(l, d, y, z);
  if (o.count() != 1) return std::nullopt;
  return o.first();
}

inline std::optional<Relation> non_overlapping_cover(const Lattice& l, const ExtremalData& d) {
  for (auto [y, z] : l.covers())
    if (!is_overlapping(l, d, y, z)) return Relation{y, z};
  return std::nullopt;
}

// Extremal with every cover overlapping.
inline bool is_trim(const Lattice& l) {
  if (!is_extremal(l)) return false;
  return !non_overlapping_cover(l, extremal_data(l)).has_value();
}

// Extremal and left modular, checked directly.
inline bool is_trim_by_definition(const Lattice& l) { return is_extremal(l) && left_modular_chain(l).has_value(); }

// The two parts [bottom, m_1] and [j_1, top] of a trim lattice.
struct Decomposition {
  SubLattice lower;  // below m_1
  SubLattice upper;  // above j_1
};

inline Decomposition decompose(const Lattice& l) {
  if (!is_trim(l)) throw Error(ErrorKind::NotTrim, "decomposition requires a trim lattice");
  if (l.size() == 1) throw Error(ErrorKind::InvalidInput, "the one-element lattice has no decomposition");
  auto idx = index_irreducibles(l);
  return Decomposition{interval(l, l.bottom(), idx.m[0]), interval(l, idx.j[0], l.top())};
}

// Isomorphism of directed graphs by backtracking; small graphs only.
inline std::optional<std::vector<Label>> find_digraph_isomorphism(const GaloisGraph& a, const GaloisGraph& b) {
  const std::size_t n = a.size();
  if (b.size() != n || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<Label> phi(n, no_label);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, Label v) -> bool {
    if (v == n) return true;
    for (Label w = 0; w < n; ++w) {
      if (used[w] || a.out(v).count() != b.out(w).count() || a.in(v).count() != b.in(w).count()) continue;
      bool ok = true;
      for (Label u = 0; u < v && ok; ++u)
        ok = a.has_edge(u, v) == b.has_edge(phi[u], w) && a.has_edge(v, u) == b.has_edge(w, phi[u]);
      if (!ok) continue;
      used[w] = 1;
      phi[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return phi;
}

}  // namespace trimlat
