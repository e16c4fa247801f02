#pragma once

#include <vector>

#include "oracles.hpp"
#include "trimlat/generators.hpp"
#include "trimlat/io.hpp"
#include "trimlat/lattice.hpp"

namespace helpers {

inline trimlat::Poset poset(std::size_t n, std::vector<trimlat::Relation> r) {
  return trimlat::Poset::from_relations(n, r);
}

inline trimlat::Lattice lattice(std::size_t n, std::vector<trimlat::Relation> r) {
  return trimlat::Lattice::from_relations(n, r);
}

inline trimlat::GaloisGraph graph(std::size_t n, std::vector<std::pair<trimlat::Label, trimlat::Label>> e) {
  return trimlat::GaloisGraph::from_edges(n, e);
}

inline trimlat::Lattice chain_lattice(std::size_t n) {
  std::vector<trimlat::Relation> r;
  for (trimlat::Element i = 0; i + 1 < n; ++i) r.emplace_back(i, i + 1);
  return trimlat::Lattice::from_relations(n, r);
}

// The lattices the property tests sweep over: every fixture lattice, all
// J(Q) for |Q| <= 4, tamari(n <= 4).
inline std::vector<std::pair<std::string, trimlat::Lattice>> sample_lattices() {
  std::vector<std::pair<std::string, trimlat::Lattice>> out;
  for (auto name : {"fig1", "fig2", "fig3_left", "fig3_right", "fig4", "fig7_left", "fig7_right", "fig8",
                    "fig9_grid_tamari", "fig9_2cambrian"})
    out.emplace_back(name, trimlat::fixture(name).lattice);
  std::size_t i = 0;
  for (auto& q : oracle::natural_posets_up_to(4))
    out.emplace_back("J(Q" + std::to_string(i++) + ")", trimlat::order_ideals(q.poset()).lattice);
  for (std::size_t n = 1; n <= 4; ++n) out.emplace_back("tamari" + std::to_string(n), trimlat::tamari(n).lattice);
  out.emplace_back("weak3", trimlat::weak_order_S(3).lattice);
  return out;
}

}  // namespace helpers
