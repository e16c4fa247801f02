#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "trimlat/galois.hpp"
#include "trimlat/generators.hpp"
#include "trimlat/io.hpp"

using namespace trimlat;
using helpers::chain_lattice;
using helpers::graph;

namespace {

using Edges = std::set<std::pair<std::size_t, std::size_t>>;  // 1-based

Edges edges_of(const GaloisGraph& g) {
  Edges e;
  for (auto [i, k] : g.edges()) e.emplace(i + 1, k + 1);
  return e;
}

Bitset labels(std::size_t n, std::initializer_list<std::size_t> one_based) {
  Bitset b(n);
  for (auto i : one_based) b.set(i - 1);
  return b;
}

Element named(const LoadedLattice& l, const std::string& s) {
  return static_cast<Element>(std::find(l.names.begin(), l.names.end(), s) - l.names.begin());
}

}  // namespace

TEST(Indexing, ThreeChain) {
  auto l = chain_lattice(3);
  auto idx = index_irreducibles(l);
  EXPECT_EQ(idx.j, (std::vector<Element>{1, 2}));
  EXPECT_EQ(idx.m, (std::vector<Element>{0, 1}));
}

TEST(Indexing, ChainJoinsAndMeets) {
  for (auto& [name, l] : helpers::sample_lattices()) {
    if (!is_extremal(l)) continue;
    auto idx = index_irreducibles(l);
    const auto& x = idx.chain.elements;
    const std::size_t n = idx.size();
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<Element> js(idx.j.begin(), idx.j.begin() + i), ms(idx.m.begin() + i, idx.m.end());
      ASSERT_EQ(l.join_all(js), x[i]) << name;
      ASSERT_EQ(l.meet_all(ms), x[i]) << name;
    }
    for (auto e : idx.j) ASSERT_TRUE(l.is_join_irreducible(e));
    for (auto e : idx.m) ASSERT_TRUE(l.is_meet_irreducible(e));
  }
}

TEST(Indexing, Fig4MatchesDrawing) {
  auto f = fixture("fig4");
  auto idx = index_irreducibles(f.lattice);
  std::vector<std::string> j, m;
  for (auto e : idx.j) j.push_back(f.name(e));
  for (auto e : idx.m) m.push_back(f.name(e));
  EXPECT_EQ(j, (std::vector<std::string>{"x1", "x2", "j3", "x4", "j5", "j6"}));
  EXPECT_EQ(m, (std::vector<std::string>{"m1", "m2", "m3", "x3", "m5", "x5"}));
}

TEST(Indexing, DistributiveMatchesPrincipalIdeals) {
  auto j = order_ideals(root_poset_A(2));
  auto idx = index_irreducibles(j.lattice);
  for (Label i = 0; i < idx.size(); ++i) {
    Element q = static_cast<Element>((j.ideals[idx.j[i]] - j.ideals[j.lattice.lower_covers(idx.j[i])[0]]).first());
    EXPECT_EQ(j.ideals[idx.j[i]], j.base.down_set(q));
    EXPECT_EQ(j.ideals[idx.m[i]], ~j.base.up_set(q));
  }
}

TEST(Indexing, NotExtremal) { EXPECT_THROW(index_irreducibles(fixture("fig3_right").lattice), Error); }

TEST(GaloisGraph, Examples) {
  EXPECT_EQ(edges_of(galois_graph(fixture("fig1").lattice)), (Edges{{3, 1}, {3, 2}}));
  EXPECT_EQ(galois_graph(fixture("fig4").lattice).edge_count(), 9u);
  auto c = galois_graph(chain_lattice(5));
  EXPECT_EQ(c.edge_count(), 6u);
  for (Label i = 0; i < 4; ++i)
    for (Label k = 0; k < i; ++k) EXPECT_TRUE(c.has_edge(i, k));
}

TEST(GaloisGraph, MatchesDefinition) {
  for (auto& [name, l] : helpers::sample_lattices()) {
    if (!is_extremal(l)) continue;
    auto idx = index_irreducibles(l);
    auto g = galois_graph(l, idx);
    for (Label i = 0; i < idx.size(); ++i)
      for (Label k = 0; k < idx.size(); ++k)
        ASSERT_EQ(g.has_edge(i, k), i != k && !l.leq(idx.j[i], idx.m[k])) << name;
  }
}

TEST(GaloisGraph, RejectsUpwardEdge) {
  std::vector<std::pair<Label, Label>> e{{0, 1}};
  EXPECT_THROW(GaloisGraph::from_edges(2, e), Error);
}

TEST(GaloisPoset, Examples) {
  auto a = galois_poset(graph(3, {}));
  EXPECT_TRUE(a.covers().empty());
  auto v = galois_poset(graph(3, {{2, 0}, {2, 1}}));
  EXPECT_TRUE(v.less(0, 2) && v.less(1, 2) && !v.comparable(0, 1));
  auto f6 = galois_poset(galois_graph(fixture("fig4").lattice));
  EXPECT_EQ(f6.size(), 6u);
}

TEST(MaxOrthPairs, Edgeless) {
  auto p = max_orth_pairs(graph(3, {}));
  EXPECT_EQ(p.size(), 8u);
  for (auto& q : p) EXPECT_EQ(q.Y, ~q.X);
  EXPECT_TRUE(is_distributive(lattice_from_graph(graph(3, {})).lattice));
}

TEST(MaxOrthPairs, PathHasNine) {
  auto g = fixture_graph("fig7_left");
  EXPECT_EQ(edges_of(g), (Edges{{2, 1}, {3, 2}, {4, 3}}));
  EXPECT_EQ(max_orth_pairs(g).size(), 9u);
}

TEST(MaxOrthPairs, CompleteGraphGivesChain) {
  std::vector<std::pair<Label, Label>> e;
  for (Label i = 0; i < 4; ++i)
    for (Label k = 0; k < i; ++k) e.emplace_back(i, k);
  auto p = max_orth_pairs(GaloisGraph::from_edges(4, e));
  ASSERT_EQ(p.size(), 5u);
  for (std::size_t i = 0; i <= 4; ++i) EXPECT_EQ(p[i].X.count(), i);
}

TEST(MaxOrthPairs, MatchBruteForceOnAllSmallGraphs) {
  for (auto& g : oracle::galois_graphs_up_to(5)) {
    auto got = max_orth_pairs(g);
    std::vector<oracle::Pair> mine;
    for (auto& p : got) mine.push_back({oracle::to_mask(p.X), oracle::to_mask(p.Y)});
    std::sort(mine.begin(), mine.end());
    ASSERT_EQ(mine, oracle::max_orth_pairs(g));
  }
}

TEST(MaxOrthPairs, CapExceeded) { EXPECT_THROW(max_orth_pairs(graph(12, {}), 100), SizeLimitExceeded); }

TEST(LatticeFromGraph, Examples) {
  EXPECT_TRUE(
      are_isomorphic(lattice_from_graph(graph(3, {{2, 0}, {2, 1}})).lattice, order_ideals(root_poset_A(2)).lattice));
  EXPECT_TRUE(are_isomorphic(lattice_from_graph(fixture_graph("fig7_left")).lattice, fixture("fig7_left").lattice));
  auto gt = lattice_from_graph(fixture_graph("fig9_grid_tamari")).lattice;
  EXPECT_EQ(gt.size(), 42u);
}

TEST(LatticeFromGraph, AlwaysExtremalAndOrderedByX) {
  for (auto& g : oracle::galois_graphs_up_to(5)) {
    auto pl = lattice_from_graph(g);
    const auto& l = pl.lattice;
    ASSERT_TRUE(is_extremal(l));
    ASSERT_EQ(length(l), g.size());
    for (Element a = 0; a < l.size(); ++a)
      for (Element b = 0; b < l.size(); ++b) {
        ASSERT_EQ(l.leq(a, b), pl.pairs[a].X.is_subset_of(pl.pairs[b].X));
        ASSERT_EQ(l.leq(a, b), pl.pairs[b].Y.is_subset_of(pl.pairs[a].Y));
      }
    // Joins intersect the second terms.
    for (Element a = 0; a < l.size(); ++a)
      for (Element b = 0; b < l.size(); ++b)
        ASSERT_EQ(pl.pairs[l.join(a, b)], complete_right(g, pl.pairs[a].Y & pl.pairs[b].Y));
  }
}

TEST(LatticeFromGraph, GraphRoundTrip) {
  // The reconstructed lattice gives back the same graph up to renumbering.
  for (auto& g : oracle::galois_graphs_up_to(4)) {
    auto l = lattice_from_graph(g).lattice;
    ASSERT_TRUE(find_digraph_isomorphism(galois_graph(l), g));
  }
}

TEST(ElementPair, Examples) {
  auto f = fixture("fig4");
  auto d = extremal_data(f.lattice);
  EXPECT_EQ(d.pairs[f.lattice.bottom()].X.count(), 0u);
  EXPECT_EQ(d.pairs[f.lattice.bottom()].Y, Bitset::full(6));
  auto x3 = d.pairs[named(f, "x3")];
  EXPECT_EQ(x3.X, labels(6, {1, 2, 3}));
  EXPECT_EQ(x3.Y, labels(6, {4, 5, 6}));
  auto j5 = d.pairs[named(f, "j5")];
  EXPECT_EQ(j5.X, labels(6, {5}));
  EXPECT_EQ(j5.Y, labels(6, {1, 3, 6}));
}

TEST(ElementPair, PairsAreMaximalOrthogonal) {
  for (auto& [name, l] : helpers::sample_lattices()) {
    if (!is_extremal(l)) continue;
    auto d = extremal_data(l);
    for (Element x = 0; x < l.size(); ++x) {
      ASSERT_EQ(complete_left(d.graph, d.pairs[x].X), d.pairs[x]) << name;
      ASSERT_EQ(complete_right(d.graph, d.pairs[x].Y), d.pairs[x]) << name;
    }
  }
}

TEST(ElementPair, SpineIsWhereXAndYCoverAllLabels) {
  for (auto& [name, l] : helpers::sample_lattices()) {
    if (!is_extremal(l)) continue;
    auto d = extremal_data(l);
    auto s = spine(l);
    for (Element x = 0; x < l.size(); ++x) {
      bool on = std::count(s.begin(), s.end(), x) > 0;
      ASSERT_EQ(on, (d.pairs[x].X | d.pairs[x].Y) == Bitset::full(d.labels())) << name;
    }
  }
}

TEST(Overlap, Fig7NonOverlapping) {
  auto l = fixture("fig7_left").lattice;
  auto d = extremal_data(l);
  auto bad = non_overlapping_cover(l, d);
  ASSERT_TRUE(bad);
  EXPECT_EQ(d.pairs[bad->first].Y, labels(4, {1, 2}));
  EXPECT_EQ(d.pairs[bad->second].X, labels(4, {3, 4}));
  EXPECT_FALSE(is_overlapping(l, d, bad->first, bad->second));
}

TEST(Overlap, Fig4LabelsMatchDrawing) {
  auto f = fixture("fig4");
  auto d = extremal_data(f.lattice);
  const auto& covers = f.lattice.covers();
  ASSERT_TRUE(f.labels);
  for (std::size_t c = 0; c < covers.size(); ++c) {
    auto lab = overlap_label(f.lattice, d, covers[c].first, covers[c].second);
    ASSERT_TRUE(lab);
    EXPECT_EQ(*lab, (*f.labels)[c]);
  }
}

TEST(Overlap, NotACover) {
  auto l = fixture("fig4").lattice;
  auto d = extremal_data(l);
  try {
    is_overlapping(l, d, l.bottom(), l.top());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACover);
  }
}

TEST(Overlap, DistributiveCoversOverlapInOneLabel) {
  for (auto& q : oracle::natural_posets_up_to(4)) {
    auto l = order_ideals(q.poset()).lattice;
    auto d = extremal_data(l);
    for (auto [y, z] : l.covers()) ASSERT_TRUE(overlap_label(l, d, y, z));
  }
}

TEST(ChainIndependence, GraphsAgreeUpToRenumbering) {
  for (auto& [name, l] : helpers::sample_lattices()) {
    if (!is_extremal(l) || l.size() > 50) continue;
    auto base = galois_graph(l);
    auto chains = all_maximal_length_chains(l, 200);
    for (auto& c : chains) {
      auto g = galois_graph(l, index_irreducibles(l, c));
      auto phi = find_digraph_isomorphism(g, base);
      ASSERT_TRUE(phi) << name;
    }
  }
}

TEST(Decompose, Examples) {
  auto c = decompose(chain_lattice(4));
  EXPECT_EQ(c.lower.lattice.size(), 1u);
  EXPECT_EQ(c.upper.lattice.size(), 3u);
  auto b = decompose(boolean_lattice(2).lattice);
  EXPECT_EQ(b.lower.lattice.size(), 2u);
  EXPECT_EQ(b.upper.lattice.size(), 2u);
  auto f = decompose(fixture("fig4").lattice);
  EXPECT_EQ(f.lower.lattice.size() + f.upper.lattice.size(), 14u);
  EXPECT_EQ(f.lower.lattice.size(), 4u);
  EXPECT_THROW(decompose(fixture("fig7_left").lattice), Error);
}

TEST(Decompose, PartitionAndGraphs) {
  for (auto& [name, l] : helpers::sample_lattices()) {
    if (!is_trim(l) || l.size() == 1) continue;
    auto d = decompose(l);
    std::vector<int> hits(l.size(), 0);
    for (auto x : d.lower.to_parent) ++hits[x];
    for (auto x : d.upper.to_parent) ++hits[x];
    for (auto h : hits) ASSERT_EQ(h, 1) << name;

    auto g = galois_graph(l);
    const std::size_t n = g.size();
    Bitset no1 = Bitset::full(n);
    no1.reset(0);
    ASSERT_TRUE(find_digraph_isomorphism(galois_graph(d.upper.lattice), g.induced(no1))) << name;
    Bitset low = no1 - g.in(0);
    if (d.lower.lattice.size() == 1) {
      ASSERT_TRUE(low.none()) << name;
    } else {
      ASSERT_TRUE(find_digraph_isomorphism(galois_graph(d.lower.lattice), g.induced(low))) << name;
    }
  }
}

TEST(Trim, OverlapTestAgreesWithDefinitionOnAllSmallGraphs) {
  for (auto& g : oracle::galois_graphs_up_to(5)) {
    auto l = lattice_from_graph(g).lattice;
    ASSERT_EQ(is_trim(l), is_trim_by_definition(l));
  }
}
