#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trimlat/complexes.hpp"
#include "trimlat/galois.hpp"
#include "trimlat/generators.hpp"
#include "trimlat/io.hpp"
#include "trimlat/labelling.hpp"
#include "trimlat/lattice.hpp"
#include "trimlat/rowmotion.hpp"

namespace trimlat {

struct FigureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace figures {

using EdgeList = std::set<std::pair<std::size_t, std::size_t>>;  // 1-based

inline Element by_name(const LoadedLattice& l, const std::string& name) {
  auto it = std::find(l.names.begin(), l.names.end(), name);
  if (it == l.names.end()) throw Error(ErrorKind::InvalidInput, "no element named " + name);
  return static_cast<Element>(it - l.names.begin());
}

inline EdgeList edge_set(const GaloisGraph& g) {
  EdgeList e;
  for (auto [i, k] : g.edges()) e.emplace(i + 1, k + 1);
  return e;
}

inline EdgeList edge_set(const SimpleGraph& g) {
  EdgeList e;
  for (auto [a, b] : g.edges()) e.emplace(a + 1, b + 1);
  return e;
}

inline std::string show(const EdgeList& e, const char* arrow) {
  std::string s;
  for (auto [a, b] : e) s += (s.empty() ? "" : " ") + std::to_string(a) + arrow + std::to_string(b);
  return s;
}

inline std::string show(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

class Recorder {
public:
  void check(std::string name, bool pass, std::string detail = {}) {
    out_.push_back({std::move(name), pass, std::move(detail)});
  }
  // Runs `body`; an exception counts as a failure of `name`.
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }
  std::vector<FigureCheck> take() { return std::move(out_); }

private:
  std::vector<FigureCheck> out_;
};

inline bool labels_match(const LoadedLattice& f, const CoverLabelling& g) {
  return f.labels && *f.labels == g.cover_labels();
}

inline void fig1(Recorder& r) {
  r.guard("fig1", [&] {
    auto f = fixture("fig1");
    const auto& l = f.lattice;
    r.check("fig1: 5 elements", l.size() == 5, std::to_string(l.size()));
    r.check("fig1: isomorphic to ideals of the A2 root poset",
            are_isomorphic(l, order_ideals(root_poset_A(2)).lattice));
    auto g = left_modular_labelling(l);
    r.check("fig1: edge labels as drawn", labels_match(f, g));
    auto gal = edge_set(galois_graph(l));
    r.check("fig1: Galois graph 3->1, 3->2", gal == EdgeList{{3, 1}, {3, 2}}, show(gal, "->"));
    auto e12 = by_name(f, "{1,2}");
    r.check("fig1: D({1,2}) = {1,2}, U({1,2}) = {3}",
            g.down_labels(e12) == Bitset(3, {0, 1}) && g.up_labels(e12) == Bitset(3, {2}));
    auto row = rowmotion_global(l, g);
    auto bot = by_name(f, "{}"), top = by_name(f, "{1,2,3}"), a = by_name(f, "{1}"), b = by_name(f, "{2}");
    r.check("fig1: orbits {} -> {1,2,3} -> {1,2} -> {} and {1} <-> {2}",
            row(bot) == top && row(top) == e12 && row(e12) == bot && row(a) == b && row(b) == a);
    auto o = orbits(row);
    r.check("fig1: cycle type [3,2], order 6", o.cycle_type == std::vector<std::size_t>{3, 2} && o.order == 6,
            show(o.cycle_type) + " order " + std::to_string(o.order));
    r.check("fig1: flip({}, 1) = {1}", flip(g, bot, 0) == a);
    std::vector<Label> ext{0, 1, 2};
    auto t = slow_trace(g, ext, bot);
    r.check("fig1: slow walk from {} passes {1}, {1,2}, {1,2,3}",
            t.size() == 3 && t[0].element == a && t[1].element == e12 && t[2].element == top);
  });
}

inline void fig2(Recorder& r) {
  r.guard("fig2", [&] {
    auto f = fixture("fig2");
    const auto& l = f.lattice;
    r.check("fig2: pentagon with 5 elements, not distributive", l.size() == 5 && !is_distributive(l));
    r.check("fig2: isomorphic to tamari(3)", are_isomorphic(l, tamari(3).lattice));
    r.check("fig2: trim", is_trim(l) && is_trim_by_definition(l));
    auto g = left_modular_labelling(l);
    r.check("fig2: edge labels as drawn", labels_match(f, g));
    auto o = orbits(rowmotion_global(l, g));
    r.check("fig2: cycle type [3,2], order 6 = 2h", o.cycle_type == std::vector<std::size_t>{3, 2} && o.order == 6,
            show(o.cycle_type));
    r.check("fig2: EL and interpolating", is_EL(l, g) && is_interpolating(l, g));
  });
}

inline void fig3(Recorder& r) {
  r.guard("fig3", [&] {
    auto left = fixture("fig3_left");
    const auto& l = left.lattice;
    r.check("fig3 left: 7 elements, trim", l.size() == 7 && is_trim(l) && is_trim_by_definition(l));
    r.check("fig3 left: not semidistributive", !is_semidistributive(l));
    r.check("fig3 left: edge labels as drawn", labels_match(left, left_modular_labelling(l)));
    auto right = fixture("fig3_right");
    const auto& h = right.lattice;
    r.check("fig3 right: semidistributive", is_semidistributive(h));
    r.check("fig3 right: not extremal", !is_extremal(h));
    r.check("fig3 right: not left modular", !is_left_modular_lattice(h));
    r.check("fig3 right: length 3", length(h) == 3);
    r.check("fig3 right: weak order on S3", are_isomorphic(h, weak_order_S(3).lattice));
  });
}

inline void fig4(Recorder& r) {
  r.guard("fig4", [&] {
    auto f = fixture("fig4");
    const auto& l = f.lattice;
    r.check("fig4: 14 elements, length 6", l.size() == 14 && length(l) == 6);
    auto chain = maximal_length_chain(l);
    bool chain_ok = chain.elements.size() == 7;
    for (std::size_t i = 0; chain_ok && i < 7; ++i) chain_ok = f.names[chain.elements[i]] == "x" + std::to_string(i);
    r.check("fig4: deterministic chain is x0..x6", chain_ok);
    auto d = extremal_data(l);
    std::vector<std::string> js, ms;
    for (auto e : d.indexing.j) js.push_back(f.names[e]);
    for (auto e : d.indexing.m) ms.push_back(f.names[e]);
    r.check("fig4: join-irreducibles j1..j6", js == std::vector<std::string>{"x1", "x2", "j3", "x4", "j5", "j6"});
    r.check("fig4: meet-irreducibles m1..m6", ms == std::vector<std::string>{"m1", "m2", "m3", "x3", "m5", "x5"});
    auto gal = edge_set(d.graph);
    EdgeList want_gal{{5, 4}, {5, 2}, {6, 3}, {4, 2}, {2, 1}, {6, 4}, {4, 3}, {3, 1}, {4, 1}};
    r.check("fig4/6: Galois graph has the 9 drawn edges", gal == want_gal, show(gal, "->"));
    auto g = left_modular_labelling(l);
    r.check("fig4: edge labels as drawn", labels_match(f, g));
    auto ind = independence_complex(l, g).one_skeleton();
    EdgeList want_ind{{5, 6}, {2, 3}, {1, 6}, {1, 5}, {2, 6}, {3, 5}};
    r.check("fig4/6: independence graph has the 6 drawn edges", edge_set(ind) == want_ind,
            show(edge_set(ind), "-"));
    r.check("fig4/6: the two graphs partition K6", complement_check(l));
    auto x3 = d.pairs[by_name(f, "x3")], j5 = d.pairs[by_name(f, "j5")];
    r.check("fig4: x3 = ({1,2,3}, {4,5,6})", x3.X == Bitset(6, {0, 1, 2}) && x3.Y == Bitset(6, {3, 4, 5}));
    r.check("fig4: j5 = ({5}, {1,3,6})", j5.X == Bitset(6, {4}) && j5.Y == Bitset(6, {0, 2, 5}));
    bool overl = true;
    for (auto [y, z] : l.covers()) overl = overl && overlap_label(l, d, y, z) == g.label(y, z);
    r.check("fig4: every cover overlaps in its label", overl);
    std::vector<Label> ext{0, 1, 2, 3, 4, 5};
    r.check("fig4: slow motion along 1..6 equals rowmotion", rowmotion_slow(l, g, ext) == rowmotion_global(l, g));
    r.check("fig4: 14 independent sets", independent_sets(undirected(d.graph)).size() == 14);
  });
}

inline void fig7(Recorder& r) {
  r.guard("fig7", [&] {
    auto f = fixture("fig7_left");
    const auto& l = f.lattice;
    r.check("fig7 left: 9 elements, extremal", l.size() == 9 && is_extremal(l));
    r.check("fig7 left: not left modular", !is_left_modular_lattice(l));
    r.check("fig7 left: not trim", !is_trim(l) && !is_trim_by_definition(l));
    auto d = extremal_data(l);
    auto gal = edge_set(d.graph);
    r.check("fig7 left: Galois graph 2->1, 3->2, 4->3", gal == EdgeList{{2, 1}, {3, 2}, {4, 3}}, show(gal, "->"));
    Element x = by_name(f, "f"), y = by_name(f, "b"), z = by_name(f, "g");
    r.check("fig7 left: y < z is a cover", l.is_cover(y, z));
    r.check("fig7 left: x fails left modularity on y < z",
            l.meet(l.join(y, x), z) != l.join(y, l.meet(x, z)) && !is_left_modular_element(l, x));
    r.check("fig7 left: y_M = {1,2}, z_J = {3,4}, disjoint",
            d.pairs[y].Y == Bitset(4, {0, 1}) && d.pairs[z].X == Bitset(4, {2, 3}) && !is_overlapping(l, d, y, z));
    auto n_ind = independent_sets(undirected(d.graph)).size();
    r.check("fig7 left: 9 elements but 8 independent sets", n_ind == 8 && n_ind != l.size(),
            std::to_string(n_ind));
    r.check("fig7 left: 9 maximal orthogonal pairs", max_orth_pairs(d.graph).size() == 9);
    auto m3 = fixture("fig7_right").lattice;
    r.check("fig7 right: left modular", is_left_modular_lattice(m3));
    r.check("fig7 right: not extremal", !is_extremal(m3));
  });
}

inline void fig8(Recorder& r) {
  r.guard("fig8", [&] {
    auto f = fixture("fig8");
    const auto& l = f.lattice;
    r.check("fig8: trim and semidistributive", is_trim(l) && is_semidistributive(l));
    auto g = left_modular_labelling(l);
    r.check("fig8: edge labels as drawn", labels_match(f, g));
    auto sd = semidistributive_cover_labelling(l);
    r.check("fig8: semidistributive labels as drawn", f.labels && *f.labels == sd.cover_labels());
    auto cj = edge_set(canonical_join_graph(l));
    r.check("fig8: canonical join graph is the single edge 1-4", cj == EdgeList{{1, 4}}, show(cj, "-"));
    r.check("fig8: canonical join graph is the complement of the Galois graph",
            canonical_join_graph(l) == undirected(galois_graph(l)).complement());
    // The same graph for the other small semidistributive lattices.
    SimpleGraph one_edge(4);
    one_edge.add_edge(0, 1);
    bool same = are_isomorphic(canonical_join_graph_on_irreducibles(fixture("fig3_right").lattice), one_edge) &&
                are_isomorphic(canonical_join_graph_on_irreducibles(chain_product(2, 2).lattice), one_edge) &&
                are_isomorphic(canonical_join_graph_on_irreducibles(l), one_edge);
    r.check("fig8: hexagon and J([2]x[2]) share the canonical join graph", same);
  });
}

inline void fig9(Recorder& r) {
  r.guard("fig9", [&] {
    auto gt = fixture("fig9_grid_tamari");
    r.check("fig9 left: 10 vertices, 25 edges",
            gt.source_graph->size() == 10 && gt.source_graph->edge_count() == 25);
    r.check("fig9 left: 42 elements", gt.lattice.size() == 42, std::to_string(gt.lattice.size()));
    r.check("fig9 left: trim", is_trim(gt.lattice));
    auto cam = fixture("fig9_2cambrian");
    auto o = orbits(rowmotion_global(cam.lattice, left_modular_labelling(cam.lattice)));
    r.check("fig9 right: rowmotion order 9 = (m+1)h", o.order == 9, std::to_string(o.order));
  });
}

}  // namespace figures

inline std::vector<FigureCheck> verify_figures() {
  figures::Recorder r;
  figures::fig1(r);
  figures::fig2(r);
  figures::fig3(r);
  figures::fig4(r);
  figures::fig7(r);
  figures::fig8(r);
  figures::fig9(r);
  return r.take();
}

}  // namespace trimlat
