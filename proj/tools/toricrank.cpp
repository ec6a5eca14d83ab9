#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toricrank/complex.hpp"
#include "toricrank/graph.hpp"
#include "toricrank/ideal.hpp"
#include "toricrank/invariants.hpp"
#include "toricrank/json_io.hpp"

using namespace toric;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string file;
  std::optional<int> kn;
  std::vector<int> kmn;
  std::optional<int> cycle;
  std::optional<int> max_degree;
  std::optional<int> max_cycle_len;
  std::string j = "0,1";
  std::string json_path;
  std::uint64_t seed = 1;
  std::vector<int> degree;
  int circuit_cap = 24;
};

Graph load_graph(const Args& a) {
  const int sources = !a.file.empty() + a.kn.has_value() + !a.kmn.empty() + a.cycle.has_value();
  if (sources != 1) throw UsageError("give exactly one of <file>, --kn, --kmn, --cycle");
  if (!a.file.empty()) return read_graph_file(a.file);
  if (a.kn) {
    if (*a.kn < 2) throw UsageError("--kn needs n >= 2");
    return complete_graph(*a.kn);
  }
  if (!a.kmn.empty()) {
    if (a.kmn[0] < 1 || a.kmn[1] < 1) throw UsageError("--kmn needs positive part sizes");
    return complete_bipartite_graph(a.kmn[0], a.kmn[1]);
  }
  if (*a.cycle < 3) throw UsageError("--cycle needs length >= 3");
  return cycle_graph(*a.cycle);
}

std::set<int> parse_j(const std::string& text, const DeltaComplex& d) {
  if (text == "omega") return omega(d);
  std::set<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw UsageError("bad --j entry: " + item);
      dims.insert(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad --j entry: " + item);
    }
  }
  if (dims.empty()) throw UsageError("--j is empty");
  return dims;
}

std::string format_set(const std::set<int>& s) {
  std::string out = "{";
  for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

std::string format_interval(const Interval& i) {
  if (i.exact()) return std::to_string(i.lo);
  return "[" + std::to_string(i.lo) + ", " + std::to_string(i.hi) + "]";
}

std::string format_support(const Graph& g, const SupportSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + g.variable_name(s[k]);
  return out + "}";
}

std::string format_face(const Face& f) {
  std::string out = "{";
  for (std::size_t k = 0; k < f.size(); ++k) out += (k ? "," : "") + ("E" + std::to_string(f[k] + 1));
  return out + "}";
}

void write_json(const Args& a, const char* kind, Json payload) {
  if (a.json_path.empty()) return;
  std::ofstream out(a.json_path);
  if (!out) throw Error("cannot write " + a.json_path);
  out << document(kind, std::move(payload)).dump(2) << '\n';
}

AnalysisOptions analysis_options(const Args& a) {
  AnalysisOptions o;
  o.degree_bound = a.max_degree;
  o.circuit_cap = a.circuit_cap;
  return o;
}

GenerationOptions generation_options(const Args& a) {
  GenerationOptions o;
  o.degree_bound = a.max_degree;
  o.circuit_cap = a.circuit_cap;
  return o;
}

void print_report(const InvariantReport& r) {
  std::cout << "m: " << r.m << '\n'
            << "n: " << r.n << '\n'
            << "bipartite: " << (r.bipartite ? "yes" : "no") << '\n'
            << "quadratic_generated: " << (r.quadratic_generated ? "yes" : "no") << '\n'
            << "height: " << r.height << '\n'
            << "mu: " << r.mu << (r.mu_bound_relative ? " (relative to degree bound " + std::to_string(r.degree_bound) + ")" : "")
            << '\n'
            << "delta01: " << r.delta01 << '\n'
            << "deltaOmega: " << r.delta_omega << '\n'
            << "bar: " << format_interval(r.bar) << '\n'
            << "araG: " << format_interval(r.ara_g) << '\n'
            << "ara_bracket: [" << r.ara_bracket.lo << ", " << r.ara_bracket.hi << "]\n"
            << "complete_intersection: " << (r.complete_intersection ? "yes" : "no") << '\n'
            << "components: edge=" << r.component_census.edges << " two_simplex=" << r.component_census.two_simplices
            << " other=" << r.component_census.other << '\n'
            << "indispensable: " << r.indispensable_count << '\n'
            << "c_min: " << r.c_min_count << '\n';
}

int cmd_analyze(const Args& a) {
  Graph g = load_graph(a);
  InvariantReport r = report(g, analysis_options(a));
  print_report(r);
  write_json(a, "analyze", to_json(r));
  return 0;
}

int cmd_circuits(const Args& a) {
  Graph g = load_graph(a);
  auto cs = circuits_bruteforce(g.incidence_columns(), a.circuit_cap);
  std::cout << "circuits: " << cs.size() << '\n';
  for (const auto& c : cs) std::cout << "  " << to_string(g, binomial_from_circuit(c)) << '\n';
  write_json(a, "circuits", circuits_to_json(g, cs));
  return 0;
}

int cmd_cycles(const Args& a) {
  Graph g = load_graph(a);
  auto cs = enumerate_even_cycles(g, a.max_cycle_len);
  std::cout << "even cycles: " << cs.size() << '\n';
  for (const auto& c : cs) {
    std::cout << "  ";
    for (std::size_t k = 0; k < c.vertices.size(); ++k) std::cout << (k ? "-" : "") << c.vertices[k];
    std::cout << (cycle_has_chord(g, c) ? "  chord" : "  chordless") << "  " << to_string(g, binomial_from_cycle(g, c)) << '\n';
  }
  write_json(a, "cycles", cycles_to_json(g, cs));
  return 0;
}

int cmd_complex(const Args& a) {
  Graph g = load_graph(a);
  BuildOptions o;
  o.circuit_cap = a.circuit_cap;
  DeltaComplex d = build_delta(g, o);
  std::cout << "vertices: " << d.vertices.size() << '\n';
  for (std::size_t k = 0; k < d.vertices.size(); ++k) std::cout << "  E" << k + 1 << " = " << format_support(g, d.vertices[k]) << '\n';
  std::cout << "dimension: " << d.dimension() << '\n';
  std::cout << "faces:";
  for (const auto& f : d.faces)
    if (f.size() > 1) std::cout << ' ' << format_face(f);
  std::cout << '\n';
  auto comps = delta_components(d);
  std::cout << "components: " << comps.size() << '\n';
  for (const auto& c : comps) std::cout << "  " << format_face(c.vertices) << ' ' << to_string(classify_component(c)) << '\n';
  std::vector<std::set<int>> js;
  if (!d.vertices.empty()) {
    js.push_back(parse_j(a.j, d));
    for (int j : js.front())
      if (j > d.dimension()) throw UsageError("--j dimension " + std::to_string(j) + " exceeds dim = " + std::to_string(d.dimension()));
    DeltaValue v = delta_value(d, js.front());
    std::cout << "delta_" << format_set(js.front()) << ": " << v.value << "  witness {";
    for (std::size_t k = 0; k < v.witness.faces.size(); ++k) std::cout << (k ? "," : "") << format_face(v.witness.faces[k]);
    std::cout << "}\n";
  }
  write_json(a, "complex", complex_to_json(d, js));
  return 0;
}

int cmd_fibers(const Args& a) {
  Graph g = load_graph(a);
  if (a.degree.size() != static_cast<std::size_t>(g.vertex_count()))
    throw UsageError("--degree needs " + std::to_string(g.vertex_count()) + " comma-separated entries");
  for (int x : a.degree)
    if (x < 0) throw UsageError("--degree entries must be nonnegative");
  GeneratingSet gs = minimal_generating_set(g, generation_options(a));
  Fiber f = fiber_graph(enumerate_fiber(g, GDegree{a.degree}), gs.binomials);
  std::cout << "fiber size: " << f.size() << '\n';
  for (const auto& mon : f.members) std::cout << "  " << to_string(g, mon) << '\n';
  std::cout << "connected under generators: " << (f.connected ? "yes" : "no") << " (" << f.component_count << " components)\n";
  Json j{{"degree", a.degree}, {"members", fiber_to_json(f)}, {"connected", f.connected}, {"components", f.component_count}};
  write_json(a, "fibers", std::move(j));
  return 0;
}

int cmd_generators(const Args& a) {
  Graph g = load_graph(a);
  GeneratingSet gs = minimal_generating_set(g, generation_options(a));
  std::cout << "mu: " << gs.mu() << (gs.bound_relative ? " (relative to degree bound " + std::to_string(gs.degree_bound) + ")" : "") << '\n';
  for (std::size_t k = 0; k < gs.mu(); ++k)
    std::cout << "  " << to_string(g, gs.binomials[k]) << (gs.indispensable[k] ? "  indispensable" : "") << '\n';
  Json j{{"degree_bound", gs.degree_bound}, {"bound_relative", gs.bound_relative},
         {"binomials", binomials_to_json(g, gs.binomials, gs.indispensable)}};
  write_json(a, "generators", std::move(j));
  return 0;
}

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

int cmd_selftest(const Args& a) {
  Graph g = load_graph(a);
  Analysis an = analyze(g, analysis_options(a));
  const InvariantReport& r = an.report;
  std::vector<Check> checks;
  auto expect = [&](const std::string& name, long got, long want) {
    checks.push_back({name, got == want, std::to_string(got) + " vs " + std::to_string(want)});
  };
  if (a.kn) {
    KnExpected e = kn_expected(*a.kn);
    expect("mu", r.mu, e.mu);
    expect("height", r.height, e.height);
    expect("vertices", r.c_min_count, e.vertices);
    expect("components", r.component_census.two_simplices, e.components);
    expect("indispensable", r.indispensable_count, e.indispensable);
    expect("bar", r.bar.exact() ? r.bar.lo : -1, e.bar);
    expect("araG", r.ara_g.exact() ? r.ara_g.lo : -1, e.ara_g);
  }
  checks.push_back({"extremality", extremality_check(g), ""});
  bool sound = true;
  for (const auto& b : an.generators.processed_degrees) sound = sound && fiber_graph(enumerate_fiber(g, b), an.generators.binomials).connected;
  checks.push_back({"fibers connected", sound, std::to_string(an.generators.processed_degrees.size()) + " degrees"});
  if (r.bipartite) expect("chordless cycles", r.mu, static_cast<long>(chordless_cycle_binomials(g).size()));
  int sampled = 0;
  bool sample_ok = true;
  for (const auto& c : enumerate_even_cycles(g, 4)) {
    if (induced_subgraph(g, c.vertices).graph.edge_count() == 6) continue;
    sample_ok = sample_ok && sample_multiple_divisibility(g, c, 20, a.seed + static_cast<std::uint64_t>(sampled));
    ++sampled;
  }
  if (sampled > 0) checks.push_back({"multiple divisibility", sample_ok, std::to_string(sampled) + " cycles"});

  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
    all = all && c.ok;
  }
  std::cout << (all ? "PASS" : "FAIL") << '\n';
  Json j = Json::array();
  for (const auto& c : checks) j.push_back(Json{{"check", c.name}, {"pass", c.ok}, {"detail", c.detail}});
  write_json(a, "selftest", Json{{"pass", all}, {"checks", j}});
  return all ? 0 : 1;
}

void add_common(CLI::App* sub, Args& a) {
  sub->add_option("file", a.file, "edge-list file");
  sub->add_option("--kn", a.kn, "complete graph K_n");
  sub->add_option("--kmn", a.kmn, "complete bipartite graph K_{a,b}")->expected(2);
  sub->add_option("--cycle", a.cycle, "cycle graph C_L");
  sub->add_option("--max-degree", a.max_degree, "generator degree bound D")->check(CLI::PositiveNumber);
  sub->add_option("--max-cycle-len", a.max_cycle_len, "longest even cycle to list")->check(CLI::PositiveNumber);
  sub->add_option("--j", a.j, "face dimensions for delta: 0,1 or omega");
  sub->add_option("--json", a.json_path, "write JSON output to PATH");
  sub->add_option("--seed", a.seed, "random seed");
  sub->add_option("--degree", a.degree, "G-degree b1,...,bn")->delimiter(',');
  sub->add_option("--circuit-cap", a.circuit_cap, "largest edge count for circuit enumeration")->check(CLI::Range(1, 64));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric ideals of graphs: generators, circuits, and arithmetical rank bounds"};
  app.require_subcommand(1, 1);
  Args args;
  std::vector<std::pair<CLI::App*, int (*)(const Args&)>> verbs;
  auto verb = [&](const char* name, const char* help, int (*fn)(const Args&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, args);
    verbs.emplace_back(sub, fn);
  };
  verb("analyze", "invariant report", cmd_analyze);
  verb("circuits", "circuits of the incidence configuration", cmd_circuits);
  verb("cycles", "even cycles with chord flags", cmd_cycles);
  verb("complex", "the complex of minimal circuit supports and its delta values", cmd_complex);
  verb("fibers", "fiber of a G-degree (needs --degree)", cmd_fibers);
  verb("generators", "minimal generating set", cmd_generators);
  verb("selftest", "consistency checks; closed forms with --kn", cmd_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    for (auto& [sub, fn] : verbs)
      if (sub->parsed()) return fn(args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
