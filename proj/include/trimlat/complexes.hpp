#pragma once

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "trimlat/bitset.hpp"
#include "trimlat/errors.hpp"
#include "trimlat/galois.hpp"
#include "trimlat/ideals.hpp"
#include "trimlat/labelling.hpp"
#include "trimlat/lattice.hpp"

namespace trimlat {

// Undirected loop-free graph on vertices 0..n-1.
class SimpleGraph {
public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n, Bitset(n)) {}

  std::size_t size() const noexcept { return adj_.size(); }
  void add_edge(Label a, Label b) {
    if (a == b) throw Error(ErrorKind::InvalidInput, "loop at vertex " + std::to_string(a + 1));
    adj_[a].set(b);
    adj_[b].set(a);
  }
  bool has_edge(Label a, Label b) const noexcept { return adj_[a].test(b); }
  const Bitset& neighbours(Label a) const noexcept { return adj_[a]; }

  // Edges (a, b) with a < b, sorted.
  std::vector<std::pair<Label, Label>> edges() const {
    std::vector<std::pair<Label, Label>> e;
    for (Label a = 0; a < size(); ++a)
      adj_[a].for_each([&](std::size_t b) {
        if (a < b) e.emplace_back(a, b);
      });
    return e;
  }
  std::size_t edge_count() const noexcept {
    std::size_t c = 0;
    for (auto& a : adj_) c += a.count();
    return c / 2;
  }

  SimpleGraph complement() const {
    SimpleGraph g(size());
    for (Label a = 0; a < size(); ++a)
      for (Label b = a + 1; b < size(); ++b)
        if (!has_edge(a, b)) g.add_edge(a, b);
    return g;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.adj_ == b.adj_; }

private:
  std::vector<Bitset> adj_;
};

inline SimpleGraph undirected(const GaloisGraph& g) {
  SimpleGraph s(g.size());
  for (auto [i, k] : g.edges()) s.add_edge(i, k);
  return s;
}

// A family of faces on vertices 0..n-1, closed under subsets.
struct SimplicialComplex {
  std::size_t vertices = 0;
  std::vector<Bitset> faces;  // sorted by (size, members)

  bool contains(const Bitset& f) const { return std::binary_search(faces.begin(), faces.end(), f); }

  SimpleGraph one_skeleton() const {
    SimpleGraph g(vertices);
    for (auto& f : faces)
      if (f.count() == 2) {
        auto m = f.members();
        g.add_edge(m[0], m[1]);
      }
    return g;
  }

  bool is_closed() const {
    if (faces.empty() || faces.front().any()) return false;
    for (auto& f : faces) {
      bool ok = true;
      f.for_each([&](std::size_t v) {
        Bitset g = f;
        g.reset(v);
        if (!contains(g)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

inline SimplicialComplex make_complex(std::size_t vertices, std::vector<Bitset> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return SimplicialComplex{vertices, std::move(faces)};
}

// Faces are the down-label sets of the left-modular labelling.
inline SimplicialComplex independence_complex(const Lattice& l, const CoverLabelling& g) {
  auto s = down_up_labels(l, g);
  auto c = make_complex(g.label_count(), s.down);
  auto u = make_complex(g.label_count(), s.up);
  if (!(c == u)) throw Error(ErrorKind::NotDescriptive, "down-label and up-label families differ");
  if (!c.is_closed()) throw Error(ErrorKind::InvalidInput, "down-label sets are not closed under subsets");
  return c;
}

inline SimplicialComplex independence_complex(const Lattice& l) {
  if (!is_trim(l)) throw Error(ErrorKind::NotTrim, "independence complex requires a trim lattice");
  return independence_complex(l, left_modular_labelling(l));
}

// All independent sets, sorted by (size, members).
inline std::vector<Bitset> independent_sets(const SimpleGraph& g, std::size_t cap = default_element_cap) {
  const std::size_t n = g.size();
  std::vector<Bitset> out;
  Bitset cur(n), blocked(n);
  auto rec = [&](auto&& self, Label start) -> void {
    if (out.size() >= cap) throw SizeLimitExceeded(cap, "too many independent sets");
    out.push_back(cur);
    for (Label v = start; v < n; ++v) {
      if (blocked.test(v)) continue;
      Bitset saved = blocked;
      cur.set(v);
      blocked |= g.neighbours(v);
      self(self, v + 1);
      blocked = saved;
      cur.reset(v);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Every clique of the 1-skeleton is a face.
inline bool is_flag(const SimplicialComplex& c) {
  auto g = c.one_skeleton();
  const std::size_t n = c.vertices;
  bool ok = true;
  Bitset cur(n);
  auto rec = [&](auto&& self, Label start, const Bitset& allowed) -> void {
    if (!ok) return;
    if (!c.contains(cur)) {
      ok = false;
      return;
    }
    for (Label v = start; v < n; ++v) {
      if (!allowed.test(v)) continue;
      cur.set(v);
      self(self, v + 1, allowed & g.neighbours(v));
      cur.reset(v);
    }
  };
  rec(rec, 0, Bitset::full(n));
  return ok;
}

// The undirected Galois graph and the independence graph split the complete graph.
inline bool complement_check(const Lattice& l) {
  if (!is_trim(l)) throw Error(ErrorKind::NotTrim, "complement check requires a trim lattice");
  auto gal = undirected(galois_graph(l));
  auto ind = independence_complex(l).one_skeleton();
  const std::size_t n = gal.size();
  for (Label a = 0; a < n; ++a)
    for (Label b = a + 1; b < n; ++b)
      if (gal.has_edge(a, b) == ind.has_edge(a, b)) return false;
  return true;
}

// Pairs of irreducible labels that form a canonical join representation.
inline SimpleGraph canonical_join_graph(const Lattice& l) {
  if (!is_extremal(l)) throw Error(ErrorKind::NotExtremal, "canonical join graph requires an extremal lattice");
  if (!is_semidistributive(l))
    throw Error(ErrorKind::NotSemidistributive, "canonical join graph requires a semidistributive lattice");
  auto s = semidistributive_labelling(l);
  auto idx = index_irreducibles(l);
  SimpleGraph g(idx.size());
  for (Element x = 0; x < l.size(); ++x) {
    auto rep = canonical_join_rep(l, s, x).members();
    for (std::size_t a = 0; a < rep.size(); ++a)
      for (std::size_t b = a + 1; b < rep.size(); ++b)
        g.add_edge(idx.j_label[rep[a]], idx.j_label[rep[b]]);
  }
  return g;
}

// Same graph for any semidistributive lattice, on the join-irreducibles in
// increasing element order.
inline SimpleGraph canonical_join_graph_on_irreducibles(const Lattice& l) {
  auto s = semidistributive_labelling(l);
  std::vector<Label> pos(l.size(), no_label);
  for (Label i = 0; i < s.join_irreducibles.size(); ++i) pos[s.join_irreducibles[i]] = i;
  SimpleGraph g(s.join_irreducibles.size());
  for (Element x = 0; x < l.size(); ++x) {
    auto rep = canonical_join_rep(l, s, x).members();
    for (std::size_t a = 0; a < rep.size(); ++a)
      for (std::size_t b = a + 1; b < rep.size(); ++b) g.add_edge(pos[rep[a]], pos[rep[b]]);
  }
  return g;
}

// Faces not containing v, with v removed from the vertex numbering.
inline SimplicialComplex deletion(const SimplicialComplex& c, Label v) {
  std::vector<Bitset> faces;
  for (auto& f : c.faces) {
    if (f.test(v)) continue;
    Bitset g(c.vertices - 1);
    f.for_each([&](std::size_t u) { g.set(u < v ? u : u - 1); });
    faces.push_back(g);
  }
  return make_complex(c.vertices - 1, std::move(faces));
}

// Faces F with v not in F and F + v a face. Keeps only vertices of the link,
// renumbered in increasing order.
inline SimplicialComplex link(const SimplicialComplex& c, Label v) {
  Bitset verts(c.vertices);
  std::vector<Bitset> raw;
  for (auto& f : c.faces) {
    if (f.test(v)) continue;
    Bitset g = f;
    g.set(v);
    if (!c.contains(g)) continue;
    raw.push_back(f);
    verts |= f;
  }
  std::vector<Label> newid(c.vertices, no_label);
  std::size_t m = 0;
  verts.for_each([&](std::size_t u) { newid[u] = m++; });
  std::vector<Bitset> faces;
  for (auto& f : raw) {
    Bitset g(m);
    f.for_each([&](std::size_t u) { g.set(newid[u]); });
    faces.push_back(g);
  }
  return make_complex(m, std::move(faces));
}

// Brute-force isomorphism of simple graphs.
inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  const std::size_t n = a.size();
  if (b.size() != n || a.edge_count() != b.edge_count()) return false;
  std::vector<Label> phi(n, no_label);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, Label v) -> bool {
    if (v == n) return true;
    for (Label w = 0; w < n; ++w) {
      if (used[w] || a.neighbours(v).count() != b.neighbours(w).count()) continue;
      bool ok = true;
      for (Label u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(phi[u], w);
      if (!ok) continue;
      used[w] = 1;
      phi[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace trimlat
