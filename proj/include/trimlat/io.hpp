#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "trimlat/complexes.hpp"
#include "trimlat/errors.hpp"
#include "trimlat/galois.hpp"
#include "trimlat/generators.hpp"
#include "trimlat/ideals.hpp"
#include "trimlat/labelling.hpp"
#include "trimlat/lattice.hpp"

namespace trimlat {

using json = nlohmann::json;

// A lattice with optional element names and optional cover labels (0-based,
// parallel to lattice.covers()).
struct LoadedLattice {
  Lattice lattice;
  std::vector<std::string> names;
  std::optional<std::vector<Label>> labels;
  std::optional<GaloisGraph> source_graph;  // set when built from a Galois graph
  std::optional<IdealLattice> ideals;       // set for order-ideal families
  std::string description;

  std::string name(Element x) const { return x < names.size() ? names[x] : std::to_string(x); }
};

inline json read_json_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, where + ": " + e.what());
  }
}

inline json read_json_file(const std::filesystem::path& p) {
  std::string text;
  if (p == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(p);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + p.string());
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return read_json_text(text, p.string());
}

namespace detail {

inline std::size_t get_count(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw Error(ErrorKind::InvalidInput, std::string("missing or invalid \"") + key + "\"");
  return j[key].get<std::size_t>();
}

inline const json& get_array(const json& j, const char* key) {
  static const json empty = json::array();
  if (!j.contains(key)) return empty;
  if (!j[key].is_array()) throw Error(ErrorKind::InvalidInput, std::string("\"") + key + "\" must be an array");
  return j[key];
}

inline std::size_t entry(const json& row, std::size_t i) {
  if (!row.is_array() || row.size() <= i || !row[i].is_number_unsigned())
    throw Error(ErrorKind::InvalidInput, "malformed entry " + row.dump());
  return row[i].get<std::size_t>();
}

}  // namespace detail

inline bool is_galois_json(const json& j) { return j.is_object() && j.contains("edges"); }

// {"n": N, "covers": [[a, b], ...]}; any relations are accepted and reduced.
inline Poset poset_from_json(const json& j) {
  const std::size_t n = detail::get_count(j, "n");
  std::vector<Relation> rel;
  for (auto& row : detail::get_array(j, "covers"))
    rel.emplace_back(static_cast<Element>(detail::entry(row, 0)), static_cast<Element>(detail::entry(row, 1)));
  return Poset::from_relations(n, rel);
}

// Same format; a third entry per cover is a 1-based label.
inline LoadedLattice lattice_from_json(const json& j, std::size_t cap = default_element_cap) {
  const std::size_t n = detail::get_count(j, "n");
  if (n > cap) throw SizeLimitExceeded(cap, "lattice has " + std::to_string(n) + " elements");
  std::vector<Relation> rel;
  std::vector<std::pair<Relation, Label>> labelled;
  const auto& covers = detail::get_array(j, "covers");
  for (auto& row : covers) {
    Relation r{static_cast<Element>(detail::entry(row, 0)), static_cast<Element>(detail::entry(row, 1))};
    rel.push_back(r);
    if (row.size() >= 3) {
      std::size_t lab = detail::entry(row, 2);
      if (lab == 0) throw Error(ErrorKind::InvalidInput, "labels are 1-based");
      labelled.emplace_back(r, lab - 1);
    }
  }
  LoadedLattice out;
  out.lattice = Lattice::from_relations(n, rel);
  if (j.contains("names")) {
    for (auto& s : j["names"]) out.names.push_back(s.get<std::string>());
    if (out.names.size() != n) throw Error(ErrorKind::InvalidInput, "names must list every element");
  }
  if (!labelled.empty()) {
    const auto& cov = out.lattice.covers();
    if (labelled.size() != cov.size())
      throw Error(ErrorKind::InvalidInput, "labels must be given on every cover or on none");
    std::vector<Label> labels(cov.size(), no_label);
    for (auto& [r, lab] : labelled) {
      auto it = std::lower_bound(cov.begin(), cov.end(), r);
      if (it == cov.end() || *it != r)
        throw Error(ErrorKind::NotACover, "labelled pair " + std::to_string(r.first) + "<" +
                                              std::to_string(r.second) + " is not a cover");
      labels[static_cast<std::size_t>(it - cov.begin())] = lab;
    }
    out.labels = std::move(labels);
  }
  return out;
}

// {"n": N, "edges": [[i, k], ...]} with 1-based labels and i > k.
inline GaloisGraph galois_from_json(const json& j) {
  const std::size_t n = detail::get_count(j, "n");
  if (!j.contains("edges")) throw Error(ErrorKind::InvalidInput, "a Galois graph needs an \"edges\" array");
  std::vector<std::pair<Label, Label>> edges;
  for (auto& row : detail::get_array(j, "edges")) {
    std::size_t i = detail::entry(row, 0), k = detail::entry(row, 1);
    if (i == 0 || k == 0) throw Error(ErrorKind::InvalidInput, "Galois graph vertices are 1-based");
    edges.emplace_back(i - 1, k - 1);
  }
  return GaloisGraph::from_edges(n, edges);
}

inline std::string label_set_name(const Bitset& b) {
  std::ostringstream os;
  print_set(os, b, 1);
  return os.str();
}

inline LoadedLattice lattice_from_galois(const GaloisGraph& g, std::size_t cap = default_element_cap) {
  auto pl = lattice_from_graph(g, cap);
  LoadedLattice out;
  for (auto& p : pl.pairs) out.names.push_back(label_set_name(p.X));
  out.lattice = std::move(pl.lattice);
  out.source_graph = g;
  return out;
}

inline LoadedLattice load_any(const json& j, std::size_t cap = default_element_cap) {
  if (is_galois_json(j)) return lattice_from_galois(galois_from_json(j), cap);
  return lattice_from_json(j, cap);
}

inline LoadedLattice from_ideals(IdealLattice il) {
  LoadedLattice out;
  out.names = ideal_names(il);
  out.lattice = il.lattice;
  out.ideals = std::move(il);
  return out;
}

inline std::filesystem::path fixture_path(const std::string& name) { return fixture_dir() / (name + ".json"); }

inline LoadedLattice fixture(const std::string& name, std::size_t cap = default_element_cap) {
  auto p = fixture_path(name);
  if (!std::filesystem::exists(p)) throw Error(ErrorKind::InvalidInput, "unknown fixture " + name);
  auto out = load_any(read_json_file(p), cap);
  out.description = "fixture " + name;
  return out;
}

inline GaloisGraph fixture_graph(const std::string& name) {
  auto j = read_json_file(fixture_path(name));
  if (!is_galois_json(j)) return galois_graph(lattice_from_json(j).lattice);
  return galois_from_json(j);
}

inline json manifest() { return read_json_file(fixture_dir() / "manifest.json"); }

// Families ------------------------------------------------------------------

enum class Family {
  boolean,
  chain_product,
  order_ideals,
  root_poset_A,
  tamari,
  rational_dyck,
  weak_order_S,
  from_galois_file,
  fixture,
};

struct FamilySpec {
  Family family;
  std::vector<std::size_t> params;
  std::string path;  // for order_ideals, from_galois_file and fixture

  // Coxeter number where the family has one.
  std::optional<std::size_t> coxeter_number() const {
    switch (family) {
      case Family::root_poset_A: return params.at(0) + 1;
      case Family::tamari: return params.at(0);
      case Family::weak_order_S: return params.at(0);
      case Family::chain_product:
        if (params.size() == 2) return params[0] + params[1];
        return std::nullopt;
      default: return std::nullopt;
    }
  }

  std::string describe() const {
    static const char* names[] = {"boolean",       "chain-product", "ideals", "root-ideals", "tamari",
                                  "rational-dyck", "weak-order",    "galois", "fixture"};
    std::string s = names[static_cast<int>(family)];
    for (auto p : params) s += " " + std::to_string(p);
    if (!path.empty()) s += " " + path;
    return s;
  }
};

// Parses "tamari 4", "chain-product 2 3", "fixture fig1", "ideals q.json", ...
inline FamilySpec parse_family(const std::vector<std::string>& words) {
  if (words.empty()) throw Error(ErrorKind::InvalidInput, "empty family specification");
  static const std::vector<std::pair<std::string, Family>> table = {
      {"boolean", Family::boolean},
      {"chain-product", Family::chain_product},
      {"ideals", Family::order_ideals},
      {"root-ideals", Family::root_poset_A},
      {"tamari", Family::tamari},
      {"rational-dyck", Family::rational_dyck},
      {"weak-order", Family::weak_order_S},
      {"galois", Family::from_galois_file},
      {"fixture", Family::fixture},
  };
  FamilySpec spec{Family::boolean, {}, {}};
  bool found = false;
  for (auto& [name, f] : table)
    if (words[0] == name) {
      spec.family = f;
      found = true;
    }
  if (!found) throw Error(ErrorKind::InvalidInput, "unknown family " + words[0]);
  const bool takes_path =
      spec.family == Family::order_ideals || spec.family == Family::from_galois_file || spec.family == Family::fixture;
  if (takes_path) {
    if (words.size() != 2) throw Error(ErrorKind::InvalidInput, words[0] + " takes one argument");
    spec.path = words[1];
    return spec;
  }
  for (std::size_t i = 1; i < words.size(); ++i) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(words[i], &used);
      if (used != words[i].size() || v < 0) throw std::invalid_argument("");
      spec.params.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidInput, "bad parameter " + words[i]);
    }
  }
  std::size_t want = 1;
  if (spec.family == Family::rational_dyck) want = 2;
  if (spec.family == Family::chain_product) {
    if (spec.params.empty()) throw Error(ErrorKind::InvalidInput, "chain-product needs at least one length");
    return spec;
  }
  if (spec.params.size() != want)
    throw Error(ErrorKind::InvalidInput, words[0] + " takes " + std::to_string(want) + " parameter(s)");
  return spec;
}

inline LoadedLattice generate(const FamilySpec& s, std::size_t cap = default_element_cap) {
  LoadedLattice out;
  switch (s.family) {
    case Family::boolean:
      if (s.params[0] > 16) throw SizeLimitExceeded(cap, "boolean lattice too large");
      out = from_ideals(boolean_lattice(s.params[0], cap));
      break;
    case Family::chain_product: out = from_ideals(order_ideals(chain_product_poset(s.params), cap)); break;
    case Family::order_ideals: out = from_ideals(order_ideals(poset_from_json(read_json_file(s.path)), cap)); break;
    case Family::root_poset_A: out = from_ideals(order_ideals(root_poset_A(s.params[0]), cap)); break;
    case Family::rational_dyck: out = from_ideals(rational_dyck(s.params[0], s.params[1], cap)); break;
    case Family::tamari: {
      auto t = tamari(s.params[0], cap);
      out.lattice = std::move(t.lattice);
      out.names = std::move(t.names);
      break;
    }
    case Family::weak_order_S: {
      auto w = weak_order_S(s.params[0]);
      if (w.lattice.size() > cap) throw SizeLimitExceeded(cap, "weak order too large");
      out.lattice = std::move(w.lattice);
      out.names = std::move(w.names);
      break;
    }
    case Family::from_galois_file: out = lattice_from_galois(galois_from_json(read_json_file(s.path)), cap); break;
    case Family::fixture: out = fixture(s.path, cap); break;
  }
  out.description = s.describe();
  return out;
}

// Output ---------------------------------------------------------------------

inline json lattice_to_json(const Lattice& l, const std::vector<std::string>& names,
                            const CoverLabelling* labels = nullptr) {
  json j;
  j["n"] = l.size();
  json covers = json::array();
  for (auto [a, b] : l.covers()) {
    json row = {a, b};
    if (labels) row.push_back(labels->label(a, b) + 1);
    covers.push_back(row);
  }
  j["covers"] = covers;
  if (!names.empty()) j["names"] = names;
  return j;
}

inline json galois_to_json(const GaloisGraph& g) {
  json edges = json::array();
  for (auto [i, k] : g.edges()) edges.push_back({i + 1, k + 1});
  return json{{"n", g.size()}, {"edges", edges}};
}

inline json faces_to_json(const SimplicialComplex& c) {
  json faces = json::array();
  for (auto& f : c.faces) {
    json face = json::array();
    f.for_each([&](std::size_t v) { face.push_back(v + 1); });
    faces.push_back(face);
  }
  return json{{"vertices", c.vertices}, {"faces", faces}};
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string hasse_dot(const Lattice& l, const std::vector<std::string>& names,
                             const CoverLabelling* labels = nullptr) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (Element x = 0; x < l.size(); ++x)
    os << "  " << x << " [label=" << dot_quote(x < names.size() ? names[x] : std::to_string(x)) << "];\n";
  for (auto [a, b] : l.covers()) {
    os << "  " << a << " -> " << b;
    if (labels) os << " [label=\"" << labels->label(a, b) + 1 << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string galois_dot(const GaloisGraph& g) {
  std::ostringstream os;
  os << "digraph galois {\n";
  for (Label i = 0; i < g.size(); ++i) os << "  " << i + 1 << ";\n";
  for (auto [i, k] : g.edges()) os << "  " << i + 1 << " -> " << k + 1 << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string graph_dot(const SimpleGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Label i = 0; i < g.size(); ++i) os << "  " << i + 1 << ";\n";
  for (auto [a, b] : g.edges()) os << "  " << a + 1 << " -- " << b + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace trimlat
