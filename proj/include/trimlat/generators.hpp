#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trimlat/errors.hpp"
#include "trimlat/ideals.hpp"
#include "trimlat/lattice.hpp"
#include "trimlat/poset.hpp"

namespace trimlat {

inline Poset antichain(std::size_t n) { return Poset::from_relations(n, {}); }

inline Poset chain_poset(std::size_t n) {
  std::vector<Relation> rel;
  for (Element i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_relations(n, rel);
}

// Product of chains [d_1] x ... x [d_k], elements in mixed-radix order.
inline Poset chain_product_poset(const std::vector<std::size_t>& dims) {
  std::size_t n = 1;
  for (auto d : dims) {
    if (d == 0) throw Error(ErrorKind::InvalidInput, "chain lengths must be positive");
    n *= d;
  }
  std::vector<Relation> rel;
  std::size_t stride = 1;
  for (std::size_t axis = dims.size(); axis-- > 0;) {
    for (std::size_t e = 0; e < n; ++e)
      if ((e / stride) % dims[axis] + 1 < dims[axis])
        rel.emplace_back(static_cast<Element>(e), static_cast<Element>(e + stride));
    stride *= dims[axis];
  }
  return Poset::from_relations(n, rel);
}

// Subsets of {0..n-1} ordered by inclusion, indexed by bitmask.
inline Poset boolean_poset(std::size_t n) {
  std::vector<Relation> rel;
  for (Element s = 0; s < (Element{1} << n); ++s)
    for (std::size_t i = 0; i < n; ++i)
      if (!(s >> i & 1)) rel.emplace_back(s, s | (Element{1} << i));
  return Poset::from_relations(std::size_t{1} << n, rel);
}

// Positive roots e_i - e_j (1 <= i < j <= n+1) of type A_n, ordered by
// height and then by i. The root (i, j) lies below (i', j') when i' <= i and j <= j'.
inline Poset root_poset_A(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "root_poset_A needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> roots;
  for (std::size_t h = 1; h <= n; ++h)
    for (std::size_t i = 1; i + h <= n + 1; ++i) roots.emplace_back(i, i + h);
  std::vector<Relation> rel;
  for (Element a = 0; a < roots.size(); ++a)
    for (Element b = 0; b < roots.size(); ++b)
      if (a != b && roots[b].first <= roots[a].first && roots[a].second <= roots[b].second) rel.emplace_back(a, b);
  return Poset::from_relations(roots.size(), rel);
}

inline IdealLattice boolean_lattice(std::size_t n, std::size_t cap = default_element_cap) {
  return order_ideals(antichain(n), cap);
}

inline IdealLattice chain_product(std::size_t a, std::size_t b, std::size_t cap = default_element_cap) {
  return order_ideals(chain_product_poset({a, b}), cap);
}

// Cells (i, j) of the a x b rectangle (column i < b, row j < a) that lie
// above the diagonal, with (i, j) requiring (i-1, j) and (i, j+1). Its order
// ideals are the rational Dyck paths.
inline Poset rational_dyck_poset(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0 || std::gcd(a, b) != 1) throw Error(ErrorKind::InvalidInput, "rational_dyck needs coprime a, b");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < a; ++j)
      if (j * b >= a * (i + 1)) cells.emplace_back(i, j);
  auto find = [&](std::size_t i, std::size_t j) -> std::optional<Element> {
    auto it = std::find(cells.begin(), cells.end(), std::pair{i, j});
    if (it == cells.end()) return std::nullopt;
    return static_cast<Element>(it - cells.begin());
  };
  std::vector<Relation> rel;
  for (Element c = 0; c < cells.size(); ++c) {
    auto [i, j] = cells[c];
    if (i > 0)
      if (auto d = find(i - 1, j)) rel.emplace_back(*d, c);
    if (auto d = find(i, j + 1)) rel.emplace_back(*d, c);
  }
  return Poset::from_relations(cells.size(), rel);
}

inline IdealLattice rational_dyck(std::size_t a, std::size_t b, std::size_t cap = default_element_cap) {
  return order_ideals(rational_dyck_poset(a, b), cap);
}

struct NamedLattice {
  Lattice lattice;
  std::vector<std::string> names;
};

namespace detail {

inline std::vector<std::string> binary_trees(std::size_t n) {
  std::vector<std::vector<std::string>> memo{{"."}};
  while (memo.size() <= n) {
    std::size_t k = memo.size();
    std::vector<std::string> out;
    for (std::size_t left = 0; left < k; ++left)
      for (auto& a : memo[left])
        for (auto& b : memo[k - 1 - left]) out.push_back("(" + a + b + ")");
    memo.push_back(std::move(out));
  }
  return memo[n];
}

// Length of the subtree starting at s[pos].
inline std::size_t subtree_end(const std::string& s, std::size_t pos) {
  if (s[pos] == '.') return pos + 1;
  std::size_t depth = 0;
  for (std::size_t p = pos;; ++p) {
    if (s[p] == '(') ++depth;
    if (s[p] == ')' && --depth == 0) return p + 1;
  }
}

// All trees reachable by one rotation ((A B) C) -> (A (B C)).
inline std::vector<std::string> rotations(const std::string& t) {
  std::vector<std::string> out;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (t[p] != '(' || t[p + 1] != '(') continue;
    std::size_t a0 = p + 2, a1 = subtree_end(t, a0);
    std::size_t b1 = subtree_end(t, a1);
    std::size_t c0 = b1 + 1, c1 = subtree_end(t, c0);
    std::string r = t.substr(0, p) + "(" + t.substr(a0, a1 - a0) + "(" + t.substr(a1, b1 - a1) +
                    t.substr(c0, c1 - c0) + "))" + t.substr(c1 + 1);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

// Binary trees with n internal nodes under right rotation. Trees are written
// as "(LR)" with "." for a leaf; elements are sorted by that string.
inline NamedLattice tamari(std::size_t n, std::size_t cap = default_element_cap) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "tamari needs n >= 1");
  // Catalan(n) elements; refuse before enumerating if it is clearly too many.
  std::size_t cat = 1;
  for (std::size_t k = 0; k < n; ++k) {
    cat = cat * 2 * (2 * k + 1) / (k + 2);
    if (cat > cap) throw SizeLimitExceeded(cap, "tamari(" + std::to_string(n) + ") is too large");
  }
  auto trees = detail::binary_trees(n);
  std::sort(trees.begin(), trees.end());
  std::unordered_map<std::string, Element> id;
  for (Element i = 0; i < trees.size(); ++i) id.emplace(trees[i], i);
  std::vector<Relation> rel;
  for (Element i = 0; i < trees.size(); ++i)
    for (auto& r : detail::rotations(trees[i])) rel.emplace_back(i, id.at(r));
  return NamedLattice{Lattice::from_relations(trees.size(), rel), trees};
}

// Permutations of 1..n in lexicographic order, ordered by inclusion of
// inversion sets (right weak order).
inline NamedLattice weak_order_S(std::size_t n, std::size_t max_n = 7) {
  if (n == 0 || n > max_n) throw SizeLimitExceeded(max_n, "weak_order_S(" + std::to_string(n) + ")");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Element> id;
  for (Element i = 0; i < perms.size(); ++i) id.emplace(perms[i], i);
  std::vector<Relation> rel;
  std::vector<std::string> names;
  for (Element i = 0; i < perms.size(); ++i) {
    std::string name;
    for (auto v : perms[i]) name += std::to_string(v);
    names.push_back(name);
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (perms[i][k] < perms[i][k + 1]) {
        auto q = perms[i];
        std::swap(q[k], q[k + 1]);
        rel.emplace_back(i, id.at(q));
      }
  }
  return NamedLattice{Lattice::from_relations(perms.size(), rel), names};
}

inline std::vector<std::string> ideal_names(const IdealLattice& j) {
  std::vector<std::string> names;
  for (auto& I : j.ideals) {
    std::string s = "{";
    bool first = true;
    I.for_each([&](std::size_t q) {
      if (!first) s += ",";
      s += std::to_string(q + 1);
      first = false;
    });
    names.push_back(s + "}");
  }
  return names;
}

// Fixture directory: $TRIMLAT_FIXTURES, else the compiled-in default.
inline std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("TRIMLAT_FIXTURES"); env && *env) return env;
#ifdef TRIMLAT_FIXTURE_DIR
  return TRIMLAT_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

}  // namespace trimlat
