#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "trimlat/bitset.hpp"
#include "trimlat/errors.hpp"
#include "trimlat/poset.hpp"

namespace trimlat {

// Strictly increasing sequence of elements; saturated when every step is a cover.
struct Chain {
  std::vector<Element> elements;
  bool saturated = false;

  std::size_t length() const noexcept { return elements.empty() ? 0 : elements.size() - 1; }
  friend bool operator==(const Chain&, const Chain&) = default;
};

// A finite lattice with precomputed meet and join tables.
class Lattice {
public:
  Lattice() = default;

  static Lattice from_poset(Poset p) {
    const std::size_t n = p.size();
    if (n == 0) throw Error(ErrorKind::InvalidInput, "a lattice must be nonempty");
    Lattice l;
    l.n_ = n;
    // Up/down sets re-indexed by topological rank, so the least upper bound
    // candidate is the first member of (up(x) & up(y)).
    const auto& topo = p.topological_order();
    std::vector<Bitset> up_rank(n, Bitset(n)), down_rev(n, Bitset(n));
    for (Element x = 0; x < n; ++x) {
      p.up_set(x).for_each([&](std::size_t y) { up_rank[x].set(p.rank_in_topological_order(static_cast<Element>(y))); });
      p.down_set(x).for_each(
          [&](std::size_t y) { down_rev[x].set(n - 1 - p.rank_in_topological_order(static_cast<Element>(y))); });
    }
    l.join_.assign(n * n, 0);
    l.meet_.assign(n * n, 0);
    for (Element x = 0; x < n; ++x) {
      l.join_[x * n + x] = x;
      l.meet_[x * n + x] = x;
      for (Element y = x + 1; y < n; ++y) {
        Bitset ub = up_rank[x] & up_rank[y];
        std::size_t r = ub.first();
        if (r == n || !ub.is_subset_of(up_rank[topo[r]]))
          throw NotALattice(x, y, "elements " + std::to_string(x) + " and " + std::to_string(y) + " have no join");
        l.join_[x * n + y] = l.join_[y * n + x] = topo[r];
        Bitset lb = down_rev[x] & down_rev[y];
        r = lb.first();
        if (r == n || !lb.is_subset_of(down_rev[topo[n - 1 - r]]))
          throw NotALattice(x, y, "elements " + std::to_string(x) + " and " + std::to_string(y) + " have no meet");
        l.meet_[x * n + y] = l.meet_[y * n + x] = topo[n - 1 - r];
      }
    }
    l.bottom_ = topo.front();
    l.top_ = topo.back();
    if (p.up_set(l.bottom_).count() != n) throw NotALattice(l.bottom_, l.bottom_, "no least element");
    if (p.down_set(l.top_).count() != n) throw NotALattice(l.top_, l.top_, "no greatest element");
    l.join_irr_ = Bitset(n);
    l.meet_irr_ = Bitset(n);
    for (Element x = 0; x < n; ++x) {
      if (p.lower_covers(x).size() == 1) l.join_irr_.set(x);
      if (p.upper_covers(x).size() == 1) l.meet_irr_.set(x);
    }
    l.poset_ = std::move(p);
    return l;
  }

  static Lattice from_relations(std::size_t n, std::span<const Relation> relations) {
    return from_poset(Poset::from_relations(n, relations));
  }

  std::size_t size() const noexcept { return n_; }
  const Poset& poset() const noexcept { return poset_; }

  Element meet(Element x, Element y) const noexcept { return meet_[x * n_ + y]; }
  Element join(Element x, Element y) const noexcept { return join_[x * n_ + y]; }
  bool leq(Element x, Element y) const noexcept { return poset_.leq(x, y); }
  bool less(Element x, Element y) const noexcept { return poset_.less(x, y); }

  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  const Bitset& join_irreducibles() const noexcept { return join_irr_; }
  const Bitset& meet_irreducibles() const noexcept { return meet_irr_; }
  bool is_join_irreducible(Element x) const noexcept { return join_irr_.test(x); }
  bool is_meet_irreducible(Element x) const noexcept { return meet_irr_.test(x); }

  const std::vector<Element>& upper_covers(Element x) const noexcept { return poset_.upper_covers(x); }
  const std::vector<Element>& lower_covers(Element x) const noexcept { return poset_.lower_covers(x); }
  const std::vector<Relation>& covers() const noexcept { return poset_.covers(); }
  bool is_cover(Element x, Element y) const noexcept { return poset_.is_cover(x, y); }

  Element join_all(std::span<const Element> xs) const noexcept {
    Element r = bottom_;
    for (auto x : xs) r = join(r, x);
    return r;
  }
  Element meet_all(std::span<const Element> xs) const noexcept {
    Element r = top_;
    for (auto x : xs) r = meet(r, x);
    return r;
  }

private:
  std::size_t n_ = 0;
  Poset poset_;
  std::vector<Element> meet_, join_;
  Element bottom_ = 0, top_ = 0;
  Bitset join_irr_, meet_irr_;
};

// Longest-path distances in the Hasse diagram.
struct ChainProfile {
  std::vector<std::size_t> from_bottom;  // longest chain bottom..x
  std::vector<std::size_t> to_top;       // longest chain x..top
  std::size_t length = 0;
};

inline ChainProfile chain_profile(const Lattice& l) {
  const auto& topo = l.poset().topological_order();
  ChainProfile cp;
  cp.from_bottom.assign(l.size(), 0);
  cp.to_top.assign(l.size(), 0);
  for (auto x : topo)
    for (auto y : l.upper_covers(x)) cp.from_bottom[y] = std::max(cp.from_bottom[y], cp.from_bottom[x] + 1);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (auto y : l.upper_covers(*it)) cp.to_top[*it] = std::max(cp.to_top[*it], cp.to_top[y] + 1);
  cp.length = cp.from_bottom[l.top()];
  return cp;
}

inline std::size_t length(const Lattice& l) { return chain_profile(l).length; }

// Saturated bottom-to-top chain of maximal length; at each step the
// smallest-index upper cover that stays on a maximal-length chain.
inline Chain maximal_length_chain(const Lattice& l) {
  auto cp = chain_profile(l);
  Chain c{{l.bottom()}, true};
  Element cur = l.bottom();
  while (cur != l.top()) {
    for (auto y : l.upper_covers(cur)) {
      if (cp.from_bottom[y] == cp.from_bottom[cur] + 1 && cp.from_bottom[y] + cp.to_top[y] == cp.length) {
        cur = y;
        break;
      }
    }
    c.elements.push_back(cur);
  }
  return c;
}

// Every saturated chain of maximal length (for chain-independence checks on
// small lattices).
inline std::vector<Chain> all_maximal_length_chains(const Lattice& l, std::size_t limit = 100000) {
  auto cp = chain_profile(l);
  std::vector<Chain> out;
  std::vector<Element> cur{l.bottom()};
  auto rec = [&](auto&& self, Element x) -> void {
    if (out.size() >= limit) return;
    if (x == l.top()) {
      out.push_back(Chain{cur, true});
      return;
    }
    for (auto y : l.upper_covers(x)) {
      if (cp.from_bottom[y] == cp.from_bottom[x] + 1 && cp.from_bottom[y] + cp.to_top[y] == cp.length) {
        cur.push_back(y);
        self(self, y);
        cur.pop_back();
      }
    }
  };
  rec(rec, l.bottom());
  return out;
}

struct Triple {
  Element x, y, z;
};

// A triple with x ^ (y v z) != (x ^ y) v (x ^ z), if any.
inline std::optional<Triple> distributive_failure(const Lattice& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = y + 1; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return Triple{x, y, z};
  return std::nullopt;
}

inline bool is_distributive(const Lattice& l) { return !distributive_failure(l).has_value(); }

inline bool is_extremal(const Lattice& l) {
  auto len = length(l);
  return l.join_irreducibles().count() == len && l.meet_irreducibles().count() == len;
}

struct LeftModularWitness {
  Element y, z;  // the cover y < z where (y v x) ^ z != y v (x ^ z)
};

// Checks the left-modular identity on every cover y < z; it is enough to test
// covers.
inline std::optional<LeftModularWitness> left_modular_failure(const Lattice& l, Element x) {
  for (auto [y, z] : l.covers())
    if (l.meet(l.join(y, x), z) != l.join(y, l.meet(x, z))) return LeftModularWitness{y, z};
  return std::nullopt;
}

inline bool is_left_modular_element(const Lattice& l, Element x) { return !left_modular_failure(l, x).has_value(); }

// A saturated bottom-to-top chain of left-modular elements, if one exists.
// Depth-first through the left-modular elements, smallest index first.
inline std::optional<Chain> left_modular_chain(const Lattice& l) {
  const std::size_t n = l.size();
  std::vector<char> lm(n);
  for (Element x = 0; x < n; ++x) lm[x] = is_left_modular_element(l, x);
  if (!lm[l.bottom()] || !lm[l.top()]) return std::nullopt;
  std::vector<char> dead(n, 0);
  std::vector<Element> path{l.bottom()};
  auto rec = [&](auto&& self, Element x) -> bool {
    if (x == l.top()) return true;
    for (auto y : l.upper_covers(x)) {
      if (!lm[y] || dead[y]) continue;
      path.push_back(y);
      if (self(self, y)) return true;
      path.pop_back();
    }
    dead[x] = 1;
    return false;
  };
  if (!rec(rec, l.bottom())) return std::nullopt;
  return Chain{path, true};
}

inline bool is_left_modular_lattice(const Lattice& l) { return left_modular_chain(l).has_value(); }

struct SemidistributiveWitness {
  Element x, y, z;
  bool join_law;  // true: join-semidistributivity fails; false: the meet law
};

inline std::optional<SemidistributiveWitness> semidistributive_failure(const Lattice& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = y + 1; z < n; ++z) {
        auto xy = l.join(x, y);
        if (xy == l.join(x, z) && l.join(x, l.meet(y, z)) != xy) return SemidistributiveWitness{x, y, z, true};
        auto mxy = l.meet(x, y);
        if (mxy == l.meet(x, z) && l.meet(x, l.join(y, z)) != mxy) return SemidistributiveWitness{x, y, z, false};
      }
  return std::nullopt;
}

inline bool is_semidistributive(const Lattice& l) { return !semidistributive_failure(l).has_value(); }

// A lattice together with the map from its elements to another lattice's.
struct SubLattice {
  Lattice lattice;
  std::vector<Element> to_parent;

  std::optional<Element> from_parent(Element x) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), x);
    if (it == to_parent.end() || *it != x) return std::nullopt;
    return static_cast<Element>(it - to_parent.begin());
  }
};

// The induced sublattice on a subset closed under meet and join.
inline SubLattice induced_sublattice(const Lattice& l, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SubLattice{Lattice::from_poset(l.poset().induced(members)), std::move(members)};
}

inline SubLattice interval(const Lattice& l, Element a, Element b) {
  if (!l.leq(a, b))
    throw Error(ErrorKind::NotComparable, std::to_string(a) + " is not below " + std::to_string(b));
  Bitset members = l.poset().up_set(a) & l.poset().down_set(b);
  std::vector<Element> keep;
  members.for_each([&](std::size_t x) { keep.push_back(static_cast<Element>(x)); });
  return induced_sublattice(l, std::move(keep));
}

// Elements on some chain of maximal length. Defined for extremal lattices.
inline std::vector<Element> spine(const Lattice& l) {
  if (!is_extremal(l)) throw Error(ErrorKind::NotExtremal, "spine requires an extremal lattice");
  auto cp = chain_profile(l);
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x)
    if (cp.from_bottom[x] + cp.to_top[x] == cp.length) out.push_back(x);
  return out;
}

// A partition of the elements, given as a class id per element.
struct Congruence {
  std::vector<std::size_t> class_of;

  static Congruence discrete(std::size_t n) {
    Congruence c;
    c.class_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) c.class_of[i] = i;
    return c;
  }
  static Congruence total(std::size_t n) { return Congruence{std::vector<std::size_t>(n, 0)}; }
};

// Throws NotACongruence with a witness if the partition is incompatible with
// meet or join.
inline void validate_congruence(const Lattice& l, const Congruence& c) {
  const auto n = static_cast<Element>(l.size());
  if (c.class_of.size() != n) throw Error(ErrorKind::InvalidInput, "partition size does not match the lattice");
  // Compatibility with each operation in one argument suffices.
  for (Element x1 = 0; x1 < n; ++x1)
    for (Element x2 = x1 + 1; x2 < n; ++x2) {
      if (c.class_of[x1] != c.class_of[x2]) continue;
      for (Element y = 0; y < n; ++y) {
        if (c.class_of[l.join(x1, y)] != c.class_of[l.join(x2, y)])
          throw NotACongruence(x1, x2, y, "join with " + std::to_string(y) + " separates " + std::to_string(x1) +
                                              " and " + std::to_string(x2));
        if (c.class_of[l.meet(x1, y)] != c.class_of[l.meet(x2, y)])
          throw NotACongruence(x1, x2, y, "meet with " + std::to_string(y) + " separates " + std::to_string(x1) +
                                              " and " + std::to_string(x2));
      }
    }
}

struct Quotient {
  Lattice lattice;
  std::vector<Element> class_of;  // element of l -> element of the quotient
};

// Classes are numbered by their smallest member.
inline Quotient quotient(const Lattice& l, const Congruence& c) {
  validate_congruence(l, c);
  const auto n = static_cast<Element>(l.size());
  std::unordered_map<std::size_t, Element> id;
  std::vector<Element> rep, class_of(n);
  for (Element x = 0; x < n; ++x) {
    auto [it, fresh] = id.try_emplace(c.class_of[x], static_cast<Element>(rep.size()));
    if (fresh) rep.push_back(x);
    class_of[x] = it->second;
  }
  const std::size_t k = rep.size();
  std::vector<Relation> rel;
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b)
      if (a != b && class_of[l.join(rep[a], rep[b])] == b) rel.emplace_back(a, b);
  return Quotient{Lattice::from_relations(k, rel), std::move(class_of)};
}

// An isomorphism of Hasse diagrams a -> b, if one exists. Elements of `a` are
// assigned in topological order, so all lower covers are placed before an
// element and the check is local.
inline std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (b.size() != n || a.covers().size() != b.covers().size()) return std::nullopt;
  auto signature = [](const Poset& p, Element x) {
    return std::array<std::size_t, 4>{p.up_set(x).count(), p.down_set(x).count(), p.upper_covers(x).size(),
                                      p.lower_covers(x).size()};
  };
  std::vector<std::array<std::size_t, 4>> sig_a(n), sig_b(n);
  for (Element x = 0; x < n; ++x) {
    sig_a[x] = signature(a, x);
    sig_b[x] = signature(b, x);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const auto& order = a.topological_order();
  std::vector<Element> phi(n, 0);
  std::vector<char> used(n, 0);
  std::vector<Element> image;
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return true;
    Element x = order[pos];
    image.clear();
    for (auto c : a.lower_covers(x)) image.push_back(phi[c]);
    std::sort(image.begin(), image.end());
    std::vector<Element> candidates;
    if (image.empty()) {
      for (Element y = 0; y < n; ++y)
        if (b.lower_covers(y).empty()) candidates.push_back(y);
    } else {
      // Candidates are the common upper covers of the images of x's lower covers.
      for (auto y : b.upper_covers(image.front()))
        if (b.lower_covers(y) == image) candidates.push_back(y);
    }
    for (auto y : candidates) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      used[y] = 1;
      phi[x] = y;
      if (self(self, pos + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return phi;
}

inline bool are_isomorphic(const Lattice& a, const Lattice& b) {
  return find_isomorphism(a.poset(), b.poset()).has_value();
}

}  // namespace trimlat
