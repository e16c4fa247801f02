#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "trimlat/complexes.hpp"
#include "trimlat/figures.hpp"
#include "trimlat/galois.hpp"
#include "trimlat/io.hpp"
#include "trimlat/labelling.hpp"
#include "trimlat/lattice.hpp"
#include "trimlat/rowmotion.hpp"

using namespace trimlat;

namespace {

enum Exit { ok = 0, mismatch = 1, input_error = 2, size_cap = 3 };

// Raised for a failed self-check; exits with status 1.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::size_t max_elements = default_element_cap;
  unsigned jobs = 1;
  std::vector<std::string> words;   // positional input
  std::vector<std::string> inputs;  // repeated --input
};

// One input: a file, "-" for stdin, or a family such as "tamari 4".
LoadedLattice load_input(const std::vector<std::string>& words, std::size_t cap) {
  if (words.empty() || (words.size() == 1 && words[0] == "-")) {
    auto l = load_any(read_json_file("-"), cap);
    l.description = "stdin";
    return l;
  }
  if (words.size() == 1 && std::filesystem::exists(words[0])) {
    auto l = load_any(read_json_file(words[0]), cap);
    l.description = words[0];
    return l;
  }
  return generate(parse_family(words), cap);
}

std::vector<std::vector<std::string>> all_inputs(const Options& o) {
  std::vector<std::vector<std::string>> out;
  for (auto& s : o.inputs) {
    std::istringstream is(s);
    std::vector<std::string> w;
    for (std::string t; is >> t;) w.push_back(t);
    out.push_back(w);
  }
  if (!o.words.empty() || out.empty()) out.push_back(o.words);
  return out;
}

std::string set_string(const Bitset& b) { return label_set_name(b); }

json set_json(const Bitset& b) {
  json a = json::array();
  b.for_each([&](std::size_t i) { a.push_back(i + 1); });
  return a;
}

std::string elements_string(const LoadedLattice& l, const std::vector<Element>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + l.name(x);
  return s;
}

// Result of running a command on one input.
struct Outcome {
  std::string text;
  int code = ok;
};

using Command = std::function<void(const LoadedLattice&, std::ostream&)>;

Outcome run_one(const Options& o, const std::vector<std::string>& words, const Command& cmd) {
  std::ostringstream os;
  Outcome out;
  try {
    auto l = load_input(words, o.max_elements);
    cmd(l, os);
  } catch (const Mismatch& e) {
    os << "mismatch: " << e.what() << "\n";
    out.code = mismatch;
  } catch (const SizeLimitExceeded& e) {
    os << "error: " << e.what() << "\n";
    out.code = size_cap;
  } catch (const Error& e) {
    os << "error: " << e.what() << "\n";
    out.code = e.kind() == ErrorKind::ThreeWayMismatch ? mismatch : input_error;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << "\n";
    out.code = input_error;
  }
  out.text = os.str();
  return out;
}

// Runs `cmd` on every input, `jobs` at a time; output is printed in input order.
int run_all(const Options& o, const Command& cmd) {
  auto inputs = all_inputs(o);
  std::vector<Outcome> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < inputs.size();) results[i] = run_one(o, inputs[i], cmd);
  };
  unsigned n = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  int code = ok;
  for (auto& r : results) {
    std::cout << r.text;
    code = std::max(code, r.code);
  }
  return code;
}

// Labelling choice for rowmotion.
CoverLabelling pick_labelling(const Lattice& l, const std::string& which) {
  if (which == "lm") return left_modular_labelling(l);
  if (which == "sd") return semidistributive_cover_labelling(l);
  if (which != "auto") throw Error(ErrorKind::InvalidInput, "unknown labelling " + which);
  if (is_trim(l)) return left_modular_labelling(l);
  if (is_semidistributive(l)) return semidistributive_cover_labelling(l);
  throw Error(ErrorKind::NotDescriptive, "lattice is neither trim nor semidistributive");
}

Element parse_element(const LoadedLattice& l, const std::string& s) {
  auto it = std::find(l.names.begin(), l.names.end(), s);
  if (it != l.names.end()) return static_cast<Element>(it - l.names.begin());
  try {
    std::size_t used = 0;
    auto v = std::stoul(s, &used);
    if (used == s.size() && v < l.lattice.size()) return static_cast<Element>(v);
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorKind::InvalidInput, "no element " + s);
}

std::vector<Label> parse_ext(const std::string& s, const CoverLabelling& g) {
  if (s.empty()) {
    auto e = canonical_linear_extension(g.label_poset());
    return {e.begin(), e.end()};
  }
  std::vector<Label> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) {
    try {
      auto v = std::stoul(t);
      if (v == 0) throw std::invalid_argument("");
      out.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidInput, "bad label " + t + " in --ext");
    }
  }
  return out;
}

// gen -----------------------------------------------------------------------

void cmd_gen(const LoadedLattice& l, std::ostream& os) {
  os << lattice_to_json(l.lattice, l.names).dump() << "\n";
}

// check ---------------------------------------------------------------------

struct Property {
  std::string name;
  bool value;
  std::string witness;
  json witness_json;
};

std::vector<Property> properties(const LoadedLattice& in, bool all) {
  const auto& l = in.lattice;
  std::vector<Property> ps;
  auto nm = [&](Element x) { return in.name(x); };

  auto df = distributive_failure(l);
  ps.push_back({"distributive", !df, df ? "x=" + nm(df->x) + " y=" + nm(df->y) + " z=" + nm(df->z) : "",
                df ? json{df->x, df->y, df->z} : json()});

  auto len = length(l);
  auto nj = l.join_irreducibles().count(), nmi = l.meet_irreducibles().count();
  bool ext = nj == len && nmi == len;
  ps.push_back({"extremal", ext,
                ext ? "" : "|J|=" + std::to_string(nj) + " |M|=" + std::to_string(nmi) + " length=" + std::to_string(len),
                ext ? json() : json{{"join_irreducibles", nj}, {"meet_irreducibles", nmi}, {"length", len}}});

  auto lm = left_modular_chain(l);
  ps.push_back({"left_modular", lm.has_value(),
                lm ? (all ? "chain " + elements_string(in, lm->elements) : "") : "no chain of left-modular elements",
                lm ? json(lm->elements) : json()});

  auto sf = semidistributive_failure(l);
  std::string sw;
  if (sf)
    sw = sf->join_law ? nm(sf->x) + " v " + nm(sf->y) + " = " + nm(sf->x) + " v " + nm(sf->z) + " but not with the meet"
                      : nm(sf->x) + " ^ " + nm(sf->y) + " = " + nm(sf->x) + " ^ " + nm(sf->z) + " but not with the join";
  ps.push_back({"semidistributive", !sf, sw, sf ? json{sf->x, sf->y, sf->z} : json()});

  if (!ext) {
    ps.push_back({"trim", false, "not extremal", json("not extremal")});
  } else {
    auto d = extremal_data(l);
    auto bad = non_overlapping_cover(l, d);
    std::string w;
    json wj;
    if (bad) {
      auto [y, z] = *bad;
      w = "cover " + nm(y) + " < " + nm(z) + ": " + set_string(d.pairs[y].Y) + " ∩ " + set_string(d.pairs[z].X) +
          " = ∅";
      wj = json{{"cover", {y, z}}, {"y_M", set_json(d.pairs[y].Y)}, {"z_J", set_json(d.pairs[z].X)}};
    }
    bool trim = !bad;
    if (trim != (ext && lm.has_value()))
      throw Mismatch("overlap test and left-modular chain disagree on trimness");
    ps.push_back({"trim", trim, w, wj});
  }
  return ps;
}

Command make_check(const Options& o, bool all) {
  return [&o, all](const LoadedLattice& in, std::ostream& os) {
    auto ps = properties(in, all);
    const auto& l = in.lattice;
    if (o.json) {
      json j{{"input", in.description}, {"elements", l.size()}, {"length", length(l)}};
      for (auto& p : ps) {
        j[p.name] = p.value;
        if (!p.witness_json.is_null()) j[p.name + "_witness"] = p.witness_json;
      }
      os << j.dump() << "\n";
      return;
    }
    os << in.description << ": " << l.size() << " elements, length " << length(l) << "\n";
    for (auto& p : ps) {
      os << "  " << p.name << std::string(18 - p.name.size(), ' ') << (p.value ? "true" : "false");
      if (!p.witness.empty()) os << (p.value ? "   " : "  ") << p.witness;
      os << "\n";
    }
    if (all && is_extremal(l)) {
      auto sp = spine(l);
      os << "  spine             " << sp.size() << " elements\n";
    }
  };
}

// galois --------------------------------------------------------------------

void cmd_galois(const Options& o, const LoadedLattice& in, std::ostream& os) {
  const auto& l = in.lattice;
  auto d = extremal_data(l);
  if (o.json) {
    json j = galois_to_json(d.graph);
    std::vector<std::string> js, ms;
    for (auto e : d.indexing.j) js.push_back(in.name(e));
    for (auto e : d.indexing.m) ms.push_back(in.name(e));
    j["j"] = js;
    j["m"] = ms;
    json pairs = json::array();
    for (Element x = 0; x < l.size(); ++x)
      pairs.push_back({{"element", in.name(x)}, {"X", set_json(d.pairs[x].X)}, {"Y", set_json(d.pairs[x].Y)}});
    j["pairs"] = pairs;
    os << j.dump() << "\n";
    return;
  }
  os << "chain: " << elements_string(in, d.indexing.chain.elements) << "\n";
  for (Label i = 0; i < d.labels(); ++i)
    os << "  " << i + 1 << ": j=" << in.name(d.indexing.j[i]) << " m=" << in.name(d.indexing.m[i]) << "\n";
  os << "edges:";
  for (auto [i, k] : d.graph.edges()) os << " " << i + 1 << "->" << k + 1;
  os << "\npairs:\n";
  for (Element x = 0; x < l.size(); ++x)
    os << "  " << in.name(x) << " " << set_string(d.pairs[x].X) << " " << set_string(d.pairs[x].Y) << "\n";
}

// rowmotion -----------------------------------------------------------------

struct RowOptions {
  bool orbits = false, order = false, trace = false, slow = false;
  std::string element, ext, labelling = "auto";
};

void print_trace(const Options& o, const LoadedLattice& in, const CoverLabelling& g, const RowOptions& r,
                 std::ostream& os) {
  if (r.element.empty()) throw Error(ErrorKind::InvalidInput, "--trace needs --element");
  Element x = parse_element(in, r.element);
  auto ext = parse_ext(r.ext, g);
  auto steps = slow_trace(g, ext, x);
  if (o.json) {
    json s = json::array();
    for (auto& t : steps) s.push_back({{"label", t.label + 1}, {"element", in.name(t.element)}});
    os << json{{"start", in.name(x)}, {"steps", s}}.dump() << "\n";
    return;
  }
  os << in.name(x);
  Element cur = x;
  for (auto& t : steps) {
    os << " -" << t.label + 1 << "-> " << (t.element == cur ? "(stay) " : "") << in.name(t.element);
    cur = t.element;
  }
  os << "\n";
}

Command make_rowmotion(const Options& o, const RowOptions& r) {
  return [&o, &r](const LoadedLattice& in, std::ostream& os) {
    const auto& l = in.lattice;
    auto g = pick_labelling(l, r.labelling);
    if (r.trace) {
      print_trace(o, in, g, r, os);
      return;
    }
    auto row = rowmotion_global(l, g);
    if (r.slow || !r.ext.empty()) {
      auto ext = parse_ext(r.ext, g);
      if (!(rowmotion_slow(l, g, ext) == row)) throw Mismatch("slow motion differs from rowmotion");
    }
    auto s = orbits(row);
    if (o.json) {
      json j{{"cycle_type", s.cycle_type}, {"order", s.order}};
      if (r.orbits) {
        json cyc = json::array();
        for (auto& c : row.cycles) {
          json a = json::array();
          for (auto x : c) a.push_back(in.name(x));
          cyc.push_back(a);
        }
        j["orbits"] = cyc;
      }
      os << j.dump() << "\n";
      return;
    }
    if (r.order && !r.orbits) {
      os << s.order << "\n";
      return;
    }
    os << "cycle_type=" << figures::show(s.cycle_type) << " order=" << s.order << "\n";
    if (r.orbits)
      for (auto& c : row.cycles) os << "  (" << elements_string(in, c) << ")\n";
  };
}

// complex -------------------------------------------------------------------

void cmd_complex(const Options& o, const LoadedLattice& in, std::ostream& os) {
  const auto& l = in.lattice;
  auto c = independence_complex(l);
  auto gal = galois_graph(l);
  bool flag = is_flag(c), comp = complement_check(l);
  auto n_ind = independent_sets(undirected(gal), o.max_elements).size();
  if (!flag || !comp || n_ind != l.size()) throw Mismatch("independence complex checks failed");
  if (o.json) {
    json j = faces_to_json(c);
    j["flag"] = flag;
    j["complement_of_galois"] = comp;
    j["independent_sets"] = n_ind;
    os << j.dump() << "\n";
    return;
  }
  os << c.faces.size() << " faces on " << c.vertices << " vertices, flag=" << flag
     << ", complement of Galois graph=" << comp << ", independent sets=" << n_ind << "\n";
  for (auto& f : c.faces) os << "  " << set_string(f) << "\n";
}

// export --------------------------------------------------------------------

void cmd_export(const Options& o, const std::string& dot, const LoadedLattice& in, std::ostream& os) {
  const auto& l = in.lattice;
  if (dot == "hasse") {
    std::optional<CoverLabelling> g;
    if (is_trim(l)) g = left_modular_labelling(l);
    os << hasse_dot(l, in.names, g ? &*g : nullptr);
  } else if (dot == "galois") {
    os << galois_dot(galois_graph(l));
  } else if (dot == "indep") {
    os << graph_dot(independence_complex(l).one_skeleton(), "independence");
  } else if (dot == "canonical-join") {
    os << graph_dot(canonical_join_graph(l), "canonical_join");
  } else if (dot.empty()) {
    std::optional<CoverLabelling> g;
    if (is_trim(l)) g = left_modular_labelling(l);
    os << lattice_to_json(l, in.names, g ? &*g : nullptr).dump() << "\n";
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown export kind " + dot);
  }
  (void)o;
}

int cmd_verify_figures(const Options& o) {
  auto checks = verify_figures();
  int failed = 0;
  for (auto& c : checks) {
    if (!c.pass) ++failed;
    if (o.json) {
      std::cout << json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}}.dump() << "\n";
    } else {
      std::cout << (c.pass ? "ok    " : "FAIL  ") << c.name;
      if (!c.pass && !c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
  }
  if (!o.json) std::cout << checks.size() - failed << "/" << checks.size() << " figure checks passed\n";
  return failed ? mismatch : ok;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("source", o.words, "JSON file, - for stdin, or a family such as: tamari 4");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattices: trimness, Galois graphs, labellings and rowmotion"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON-lines output");
  app.add_option("--max-elements", o.max_elements, "element cap")->capture_default_str();
  app.add_option("--jobs", o.jobs, "parallel jobs for several inputs")->capture_default_str();
  app.add_option("-i,--input", o.inputs, "input (repeatable), same forms as the positional source");

  auto* gen = app.add_subcommand("gen", "generate a family and print it as JSON");
  add_input(gen, o);

  bool check_all = false;
  auto* check = app.add_subcommand("check", "structural properties with witnesses");
  check->add_flag("--all", check_all, "include the left-modular chain and spine");
  add_input(check, o);

  auto* galois = app.add_subcommand("galois", "irreducible indexing, Galois graph and orthogonal pairs");
  add_input(galois, o);

  RowOptions r;
  auto* row = app.add_subcommand("rowmotion", "rowmotion orbits, order and slow-motion traces");
  row->add_flag("--orbits", r.orbits, "list the orbits");
  row->add_flag("--order", r.order, "print only the order");
  row->add_flag("--trace", r.trace, "step-by-step flips from --element");
  row->add_flag("--slow", r.slow, "also compute by flips and compare");
  row->add_option("--element", r.element, "element index or name");
  row->add_option("--ext", r.ext,
                  "comma-separated labels, a linear extension of the label poset (label 1, a sink of the "
                  "Galois graph, comes first; for fig4 e.g. 1,2,3,4,5,6)");
  row->add_option("--labelling", r.labelling, "auto, lm (left modular) or sd (semidistributive)")
      ->capture_default_str();
  add_input(row, o);

  auto* trace = app.add_subcommand("trace", "same as rowmotion --trace");
  trace->add_option("--element", r.element, "element index or name")->required();
  trace->add_option("--ext", r.ext, "comma-separated label sequence");
  trace->add_option("--labelling", r.labelling, "auto, lm or sd");
  add_input(trace, o);

  auto* complex = app.add_subcommand("complex", "independence complex and its checks");
  add_input(complex, o);

  std::string dot;
  auto* exp = app.add_subcommand("export", "DOT or JSON export");
  exp->add_option("--dot", dot, "hasse, galois, indep or canonical-join (default: labelled JSON)");
  add_input(exp, o);

  app.add_subcommand("verify-figures", "replay the figure checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? ok : input_error;
  }

  if (app.got_subcommand("verify-figures")) return cmd_verify_figures(o);
  if (app.got_subcommand(gen)) return run_all(o, cmd_gen);
  if (app.got_subcommand(check)) return run_all(o, make_check(o, check_all));
  if (app.got_subcommand(galois))
    return run_all(o, [&](const LoadedLattice& in, std::ostream& os) { cmd_galois(o, in, os); });
  if (app.got_subcommand(row)) return run_all(o, make_rowmotion(o, r));
  if (app.got_subcommand(trace)) {
    r.trace = true;
    return run_all(o, make_rowmotion(o, r));
  }
  if (app.got_subcommand(complex))
    return run_all(o, [&](const LoadedLattice& in, std::ostream& os) { cmd_complex(o, in, os); });
  if (app.got_subcommand(exp))
    return run_all(o, [&](const LoadedLattice& in, std::ostream& os) { cmd_export(o, dot, in, os); });
  return ok;
}
