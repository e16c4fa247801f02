#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "trimlat/bitset.hpp"
#include "trimlat/errors.hpp"
#include "trimlat/galois.hpp"
#include "trimlat/ideals.hpp"
#include "trimlat/lattice.hpp"
#include "trimlat/poset.hpp"

namespace trimlat {

struct LabelledEdge {
  Element other;
  Label label;
};

// Labels on the covers of a lattice, normally distinct around each element.
class CoverLabelling {
public:
  CoverLabelling() = default;

  // `label_of(y, z)` is called once per cover y < z. Pass distinct = false
  // for chain labellings of non-extremal lattices, where labels may repeat.
  static CoverLabelling build(const Lattice& l, std::size_t n_labels, Poset label_poset,
                              const std::function<Label(Element, Element)>& label_of, bool distinct = true) {
    if (label_poset.size() != n_labels)
      throw Error(ErrorKind::InvalidInput, "label poset size does not match the label count");
    CoverLabelling c;
    c.n_labels_ = n_labels;
    c.label_poset_ = std::move(label_poset);
    c.up_.assign(l.size(), {});
    c.down_.assign(l.size(), {});
    c.labels_.reserve(l.covers().size());
    for (auto [y, z] : l.covers()) {
      Label lab = label_of(y, z);
      if (lab >= n_labels)
        throw Error(ErrorKind::InvalidInput, "label " + std::to_string(lab + 1) + " out of range on cover " +
                                                 std::to_string(y) + "<" + std::to_string(z));
      c.labels_.push_back(lab);
      c.up_[y].push_back({z, lab});
      c.down_[z].push_back({y, lab});
    }
    c.covers_ = l.covers();
    auto by_label = [](const LabelledEdge& a, const LabelledEdge& b) { return a.label < b.label; };
    for (Element x = 0; x < l.size(); ++x) {
      std::sort(c.up_[x].begin(), c.up_[x].end(), by_label);
      std::sort(c.down_[x].begin(), c.down_[x].end(), by_label);
      if (!distinct) continue;
      Bitset seen(n_labels);
      for (auto& e : c.up_[x]) {
        if (seen.test(e.label)) c.throw_repeat(x, e.label);
        seen.set(e.label);
      }
      for (auto& e : c.down_[x]) {
        if (seen.test(e.label)) c.throw_repeat(x, e.label);
        seen.set(e.label);
      }
    }
    return c;
  }

  std::size_t label_count() const noexcept { return n_labels_; }
  const Poset& label_poset() const noexcept { return label_poset_; }

  Label label(Element y, Element z) const {
    auto it = std::lower_bound(covers_.begin(), covers_.end(), Relation{y, z});
    if (it == covers_.end() || *it != Relation{y, z})
      throw Error(ErrorKind::NotACover, std::to_string(y) + " is not covered by " + std::to_string(z));
    return labels_[static_cast<std::size_t>(it - covers_.begin())];
  }

  const std::vector<LabelledEdge>& up(Element x) const noexcept { return up_[x]; }
  const std::vector<LabelledEdge>& down(Element x) const noexcept { return down_[x]; }
  const std::vector<Relation>& covers() const noexcept { return covers_; }
  const std::vector<Label>& cover_labels() const noexcept { return labels_; }  // parallel to covers()

  Bitset down_labels(Element x) const {
    Bitset b(n_labels_);
    for (auto& e : down_[x]) b.set(e.label);
    return b;
  }
  Bitset up_labels(Element x) const {
    Bitset b(n_labels_);
    for (auto& e : up_[x]) b.set(e.label);
    return b;
  }

private:
  [[noreturn]] void throw_repeat(Element x, Label lab) const {
    throw Error(ErrorKind::InvalidInput,
                "label " + std::to_string(lab + 1) + " repeats around element " + std::to_string(x));
  }

  std::size_t n_labels_ = 0;
  Poset label_poset_;
  std::vector<Relation> covers_;
  std::vector<Label> labels_;
  std::vector<std::vector<LabelledEdge>> up_, down_;
};

inline Poset antichain_poset(std::size_t n) { return Poset::from_relations(n, {}); }

struct LabelSets {
  std::vector<Bitset> down, up;
};

inline LabelSets down_up_labels(const Lattice& l, const CoverLabelling& g) {
  LabelSets s;
  for (Element x = 0; x < l.size(); ++x) {
    s.down.push_back(g.down_labels(x));
    s.up.push_back(g.up_labels(x));
  }
  return s;
}

inline bool is_descriptive(const Lattice& l, const CoverLabelling& g) {
  auto s = down_up_labels(l, g);
  std::unordered_set<Bitset, BitsetHash> downs(s.down.begin(), s.down.end()), ups(s.up.begin(), s.up.end());
  return downs.size() == l.size() && ups.size() == l.size() && downs == ups;
}

// The labelling of J(q) by the element of q added along each cover.
inline CoverLabelling ideal_labelling(const IdealLattice& j) {
  return CoverLabelling::build(j.lattice, j.base.size(), j.base, [&](Element y, Element z) { return j.added(y, z); });
}

// Three label formulas along a left-modular chain, for one cover.
struct LeftModularLabels {
  Label by_joins, by_chain, by_meets;
};

// beta_J(j) = min{i : j <= x_i} and beta_M(m) = max{i : m >= x_{i-1}}, as 0-based labels.
inline LeftModularLabels left_modular_labels(const Lattice& l, const Chain& chain, Element y, Element z) {
  const auto& x = chain.elements;
  const std::size_t r = chain.length();
  auto beta_j = [&](Element j) {
    for (std::size_t i = 1; i <= r; ++i)
      if (l.leq(j, x[i])) return i - 1;
    return no_label;
  };
  auto beta_m = [&](Element m) {
    for (std::size_t i = r; i >= 1; --i)
      if (l.leq(x[i - 1], m)) return i - 1;
    return no_label;
  };
  LeftModularLabels out{no_label, no_label, no_label};
  l.join_irreducibles().for_each([&](std::size_t e) {
    auto j = static_cast<Element>(e);
    if (l.join(y, j) == z) out.by_joins = std::min(out.by_joins, beta_j(j));
  });
  for (std::size_t i = 1; i <= r; ++i)
    if (l.join(y, l.meet(x[i], z)) == z) {
      out.by_chain = i - 1;
      break;
    }
  l.meet_irreducibles().for_each([&](std::size_t e) {
    auto m = static_cast<Element>(e);
    if (l.meet(z, m) == y) {
      Label b = beta_m(m);
      if (out.by_meets == no_label || b > out.by_meets) out.by_meets = b;
    }
  });
  return out;
}

// Labels covers by the three agreeing formulas along a left-modular chain.
// For extremal lattices the labels also have to match the overlap label and
// the label poset is the Galois poset; otherwise it is an antichain.
inline CoverLabelling left_modular_labelling(const Lattice& l, const Chain& chain) {
  const std::size_t r = chain.length();
  std::optional<ExtremalData> ext;
  if (is_extremal(l)) ext = extremal_data(l, chain);
  Poset lp = ext ? galois_poset(ext->graph) : antichain_poset(r);
  return CoverLabelling::build(l, r, std::move(lp), [&](Element y, Element z) {
    auto t = left_modular_labels(l, chain, y, z);
    if (t.by_joins != t.by_chain || t.by_chain != t.by_meets || t.by_joins == no_label)
      throw Error(ErrorKind::ThreeWayMismatch, "cover " + std::to_string(y) + "<" + std::to_string(z) +
                                                   " has labels " + std::to_string(t.by_joins + 1) + "," +
                                                   std::to_string(t.by_chain + 1) + "," +
                                                   std::to_string(t.by_meets + 1));
    if (ext) {
      auto o = overlap_label(l, *ext, y, z);
      if (!o || *o != t.by_joins)
        throw Error(ErrorKind::ThreeWayMismatch,
                    "cover " + std::to_string(y) + "<" + std::to_string(z) + " disagrees with its overlap label");
    }
    return t.by_joins;
  }, ext.has_value());
}

// Trim lattices only: every maximal-length chain is left modular.
inline CoverLabelling left_modular_labelling(const Lattice& l) {
  if (!is_trim(l)) throw Error(ErrorKind::NotTrim, "left-modular labelling needs a trim lattice or a chain");
  return left_modular_labelling(l, maximal_length_chain(l));
}

// The saturated chain from x to z that takes the smallest label at each step.
// Labels around an element are distinct, so this is the lexicographically
// first chain.
inline std::vector<Element> greedy_chain(const Lattice& l, const CoverLabelling& g, Element x, Element z) {
  std::vector<Element> c{x};
  while (x != z) {
    for (auto& e : g.up(x))
      if (l.leq(e.other, z)) {
        x = e.other;
        break;
      }
    c.push_back(x);
  }
  return c;
}

inline bool increasing_along(const CoverLabelling& g, const std::vector<Element>& c) {
  for (std::size_t i = 2; i < c.size(); ++i)
    if (g.label(c[i - 2], c[i - 1]) >= g.label(c[i - 1], c[i])) return false;
  return true;
}

// Every interval has exactly one increasing saturated chain and it is the
// lexicographically first one.
inline bool is_EL(const Lattice& l, const CoverLabelling& g) {
  const std::size_t n = l.size();
  const auto& covers = g.covers();
  // Covers into each element, as indices into `covers`.
  std::vector<std::vector<std::size_t>> into(n);
  for (std::size_t e = 0; e < covers.size(); ++e) into[covers[e].second].push_back(e);
  const auto& topo = l.poset().topological_order();
  std::vector<unsigned char> ways(covers.size());  // saturates at 2
  for (Element x = 0; x < n; ++x) {
    std::fill(ways.begin(), ways.end(), 0);
    for (auto a : topo) {
      if (!l.leq(x, a)) continue;
      for (auto& up : g.up(a)) {
        auto e = static_cast<std::size_t>(
            std::lower_bound(covers.begin(), covers.end(), Relation{a, up.other}) - covers.begin());
        unsigned w = (a == x) ? 1 : 0;
        for (auto f : into[a])
          if (g.cover_labels()[f] < up.label) w += ways[f];
        ways[e] = static_cast<unsigned char>(std::min(w, 2u));
      }
    }
    for (Element z = 0; z < n; ++z) {
      if (!l.less(x, z)) continue;
      unsigned count = 0;
      for (auto f : into[z]) count += ways[f];
      if (count != 1) return false;
      if (!increasing_along(g, greedy_chain(l, g, x, z))) return false;
    }
  }
  return true;
}

// For every x < y < z of covers: either the labels increase, or the increasing
// chain from x to z starts with label(y, z) and ends with label(x, y).
inline bool is_interpolating(const Lattice& l, const CoverLabelling& g) {
  for (auto [x, y] : l.covers()) {
    Label a = g.label(x, y);
    for (auto& e : g.up(y)) {
      if (a < e.label) continue;
      auto c = greedy_chain(l, g, x, e.other);
      if (!increasing_along(g, c)) return false;
      if (g.label(c[0], c[1]) != e.label || g.label(c[c.size() - 2], c.back()) != a) return false;
    }
  }
  return true;
}

// gamma_J, gamma_M per cover (parallel to l.covers()) and kappa per join-irreducible.
struct SemidistributiveLabels {
  std::vector<Element> gamma_j, gamma_m;
  std::vector<Element> kappa;  // indexed by element; meaningful on join-irreducibles
  std::vector<Element> join_irreducibles;  // sorted
};

namespace detail {

// The unique least element of `s` (given as a predicate), if it exists.
template <class Pred>
std::optional<Element> least_in(const Lattice& l, Pred in_set) {
  Element cand = l.top();
  bool any = false;
  for (Element z = 0; z < l.size(); ++z)
    if (in_set(z)) {
      cand = any ? l.meet(cand, z) : z;
      any = true;
    }
  if (!any || !in_set(cand)) return std::nullopt;
  return cand;
}

template <class Pred>
std::optional<Element> greatest_in(const Lattice& l, Pred in_set) {
  Element cand = l.bottom();
  bool any = false;
  for (Element z = 0; z < l.size(); ++z)
    if (in_set(z)) {
      cand = any ? l.join(cand, z) : z;
      any = true;
    }
  if (!any || !in_set(cand)) return std::nullopt;
  return cand;
}

}  // namespace detail

inline SemidistributiveLabels semidistributive_labelling(const Lattice& l) {
  SemidistributiveLabels s;
  auto fail = [](const std::string& what) { throw Error(ErrorKind::NotSemidistributive, what); };
  for (auto [x, y] : l.covers()) {
    auto gj = detail::least_in(l, [&](Element z) { return l.join(x, z) == y; });
    if (!gj) fail("no least z with " + std::to_string(x) + " v z = " + std::to_string(y));
    auto gm = detail::greatest_in(l, [&](Element z) { return l.meet(z, y) == x; });
    if (!gm) fail("no greatest z with z ^ " + std::to_string(y) + " = " + std::to_string(x));
    s.gamma_j.push_back(*gj);
    s.gamma_m.push_back(*gm);
  }
  s.kappa.assign(l.size(), l.top());
  l.join_irreducibles().for_each([&](std::size_t e) {
    auto j = static_cast<Element>(e);
    s.join_irreducibles.push_back(j);
    Element lower = l.lower_covers(j).front();
    auto k = detail::greatest_in(l, [&](Element z) { return l.leq(lower, z) && !l.leq(j, z); });
    if (!k) fail("kappa is undefined at " + std::to_string(j));
    s.kappa[j] = *k;
  });
  return s;
}

// The gamma_J labelling. Labels are the Galois indices when the lattice is
// extremal, and otherwise the positions of join-irreducibles in index order.
inline CoverLabelling semidistributive_cover_labelling(const Lattice& l, const SemidistributiveLabels& s) {
  std::vector<Label> label_of_j(l.size(), no_label);
  std::optional<Poset> lp;
  if (is_extremal(l)) {
    auto d = extremal_data(l);
    for (Label i = 0; i < d.labels(); ++i) label_of_j[d.indexing.j[i]] = i;
    lp = galois_poset(d.graph);
  } else {
    for (Label i = 0; i < s.join_irreducibles.size(); ++i) label_of_j[s.join_irreducibles[i]] = i;
    lp = antichain_poset(s.join_irreducibles.size());
  }
  const auto& covers = l.covers();
  return CoverLabelling::build(l, s.join_irreducibles.size(), std::move(*lp), [&](Element y, Element z) {
    auto e = std::lower_bound(covers.begin(), covers.end(), Relation{y, z}) - covers.begin();
    return label_of_j[s.gamma_j[static_cast<std::size_t>(e)]];
  });
}

inline CoverLabelling semidistributive_cover_labelling(const Lattice& l) {
  return semidistributive_cover_labelling(l, semidistributive_labelling(l));
}

// gamma_J of the covers below x, as a set of elements.
inline Bitset canonical_join_rep(const Lattice& l, const SemidistributiveLabels& s, Element x) {
  Bitset out(l.size());
  const auto& covers = l.covers();
  for (auto y : l.lower_covers(x)) {
    auto e = std::lower_bound(covers.begin(), covers.end(), Relation{y, x}) - covers.begin();
    out.set(s.gamma_j[static_cast<std::size_t>(e)]);
  }
  return out;
}

// kappa of the gamma_J labels of the covers above x, i.e. gamma_M of those covers.
inline Bitset canonical_meet_rep(const Lattice& l, const SemidistributiveLabels& s, Element x) {
  Bitset out(l.size());
  const auto& covers = l.covers();
  for (auto y : l.upper_covers(x)) {
    auto e = std::lower_bound(covers.begin(), covers.end(), Relation{x, y}) - covers.begin();
    out.set(s.kappa[s.gamma_j[static_cast<std::size_t>(e)]]);
  }
  return out;
}

inline Bitset canonical_join_rep(const Lattice& l, Element x) {
  return canonical_join_rep(l, semidistributive_labelling(l), x);
}
inline Bitset canonical_meet_rep(const Lattice& l, Element x) {
  return canonical_meet_rep(l, semidistributive_labelling(l), x);
}

}  // namespace trimlat
