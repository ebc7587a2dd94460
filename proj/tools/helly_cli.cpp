#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "helly/automorphism.hpp"
#include "helly/cliques.hpp"
#include "helly/error.hpp"
#include "helly/helly.hpp"
#include "helly/hull.hpp"
#include "helly/io.hpp"
#include "helly/lattice.hpp"
#include "helly/linear.hpp"
#include "helly/periodic.hpp"

using namespace helly;
using helly::io::json;

namespace {

struct Options {
  std::string input;
  std::string format = "json";
  bool skip_helly = false;
  int level = 1;
  // classify / fixed-distance
  std::string automorphism;
  std::string gens_g;
  std::string gens_h;
  long resolution = 2;
  // lattice and periodic actions
  int lattice = 0;
  std::vector<int> perm;
  std::vector<int> signs;
  std::vector<long> shift;
  std::string periodic;
  int dim_bound = 1;
  long window = 4;
  int estimate = 0;
};

struct Output {
  json payload = json::object();
  std::vector<std::string> diagnostics;
  std::optional<std::string> text;  // DOT output replaces the JSON envelope
};

Graph load_graph(const Options& o) { return io::parse_graph(io::read_json_file(o.input)); }

void helly_gate(const Graph& g, const Options& o, Output& out) {
  if (o.skip_helly)
    out.diagnostics.push_back("helly:unverified");
  else
    require_helly(g);
}

bool has_lattice(const Options& o) { return o.lattice > 0; }

AffineAutomorphism lattice_action(const Options& o) {
  const std::size_t n = static_cast<std::size_t>(o.lattice);
  AffineAutomorphism a;
  if (o.perm.empty()) {
    for (int i = 0; i < o.lattice; ++i) a.perm.push_back(i);
  } else {
    for (int p : o.perm) a.perm.push_back(p - 1);
  }
  a.signs = o.signs.empty() ? std::vector<int>(n, 1) : o.signs;
  a.shift = o.shift.empty() ? std::vector<long>(n, 0) : o.shift;
  if (a.perm.size() != n || a.signs.size() != n || a.shift.size() != n)
    throw Error("--perm, --signs and --shift must each have " + std::to_string(n) + " entries");
  validate(a);
  return a;
}

PeriodicGraph periodic_input(const Options& o) { return io::parse_periodic(io::read_json_file(o.periodic)); }

std::string classify_length(const Rational& tau) { return tau == 0 ? "elliptic" : "hyperbolic"; }

void cmd_check(const Options& o, Output& out) {
  Graph g = load_graph(o);
  HellyResult r = is_helly(g);
  out.payload["helly"] = r.helly;
  if (r.witness) {
    json w = json::array();
    for (const Ball& b : *r.witness) w.push_back(io::to_json(g, b));
    out.payload["witness"] = std::move(w);
  }
}

void cmd_cliques(const Options& o, Output& out) {
  Graph g = load_graph(o);
  helly_gate(g, o, out);
  out.payload = io::to_json(g, round_cliques(g, false));
  json maximal = json::array();
  auto maxes = maximal_cliques(g);
  std::sort(maxes.begin(), maxes.end(), canonical_less);
  for (const auto& c : maxes) maximal.push_back(io::vertex_set_json(g, c));
  out.payload["maximal_cliques"] = std::move(maximal);
}

void emit_graph(const SubdivisionGraph& s, const Options& o, Output& out) {
  if (o.format == "dot")
    out.text = io::to_dot(s.graph);
  else
    out.payload = io::to_json(s);
}

void cmd_subdivide(const Options& o, Output& out) {
  Graph g = load_graph(o);
  helly_gate(g, o, out);
  emit_graph(o.level == 1 ? first_subdivision(g, false) : grid_graph(g, o.level, false), o, out);
}

void cmd_dimension(const Options& o, Output& out) {
  Graph g = load_graph(o);
  helly_gate(g, o, out);
  out.payload["dimension"] = combinatorial_dimension(g, false);
}

void cmd_hull(const Options& o, Output& out) {
  Graph g = load_graph(o);
  helly_gate(g, o, out);
  if (o.format == "dot") {
    emit_graph(grid_graph(g, o.level, false), o, out);
    return;
  }
  json vertices = json::array();
  for (const auto& f : hull_grid_vertices(g, o.level, false)) vertices.push_back(io::to_json(g, f));
  out.payload["level"] = o.level;
  out.payload["resolution"] = grid_resolution(o.level);
  out.payload["vertices"] = std::move(vertices);
}

void cmd_classify(const Options& o, Output& out) {
  if (has_lattice(o)) {
    Rational tau = affine_translation_length(lattice_action(o));
    out.payload = {{"class", classify_length(tau)}, {"length", io::rational_json(tau)}};
    return;
  }
  if (!o.periodic.empty()) {
    Rational tau = deck_translation_length(periodic_input(o), o.dim_bound);
    out.payload = {{"class", classify_length(tau)}, {"length", io::rational_json(tau)}};
    return;
  }
  if (o.input.empty()) throw CLI::ValidationError("classify needs a graph file, --lattice or --periodic");
  Graph g = load_graph(o);
  helly_gate(g, o, out);
  std::vector<Automorphism> gens =
      o.automorphism.empty() ? enumerate_automorphisms(g) : io::parse_generators(g, io::read_json_file(o.automorphism));
  auto w = elliptic_witness(g, gens, false);
  out.payload["class"] = w ? "elliptic" : "unknown";
  if (w) out.payload["witness"] = io::vertex_set_json(g, w->members);
}

void cmd_fixed_distance(const Options& o, Output& out) {
  Graph g = load_graph(o);
  helly_gate(g, o, out);
  auto gens_g = io::parse_generators(g, io::read_json_file(o.gens_g));
  auto gens_h = io::parse_generators(g, io::read_json_file(o.gens_h));
  FixedSetDistance r = fixed_set_distance(g, gens_g, gens_h, o.resolution, false);
  out.payload = {{"dist", io::rational_json(r.dist)},
                 {"witness_G", io::to_json(g, r.witness_g)},
                 {"witness_H", io::to_json(g, r.witness_h)},
                 {"resolution", r.resolution}};
}

void cmd_translation_length(const Options& o, Output& out) {
  if (has_lattice(o)) {
    AffineAutomorphism a = lattice_action(o);
    Rational tau = affine_translation_length(a);
    out.payload = {{"class", classify_length(tau)}, {"length", io::rational_json(tau)}};
    if (o.estimate > 0) out.payload["estimate"] = io::rationals_json(affine_length_estimate(a, o.estimate));
    return;
  }
  if (o.periodic.empty()) throw CLI::ValidationError("translation-length needs --lattice or --periodic");
  Rational tau = deck_translation_length(periodic_input(o), o.dim_bound);
  out.payload = {{"class", classify_length(tau)}, {"length", io::rational_json(tau)}};
}

void cmd_axis(const Options& o, Output& out) {
  if (has_lattice(o)) {
    auto axis = lattice_axis_vertex(lattice_action(o), o.level);
    if (!axis) {
      out.payload["axis"] = nullptr;
      out.diagnostics.push_back("no axis vertex found at level " + std::to_string(o.level));
      return;
    }
    out.payload["axis"] = {{"point", io::rationals_json(axis->point)},
                           {"exponent", axis->exponent},
                           {"length", io::rational_json(axis->length)},
                           {"steps", axis->steps},
                           {"translation_length", io::rational_json(axis->translation_length)}};
    return;
  }
  if (o.periodic.empty()) throw CLI::ValidationError("axis needs --lattice or --periodic");
  auto axis = periodic_axis_vertex(periodic_input(o), o.level, o.window);
  if (!axis) {
    out.payload["axis"] = nullptr;
    out.diagnostics.push_back("no axis vertex found within window " + std::to_string(o.window));
    return;
  }
  out.payload["axis"] = {{"clique", axis->members},
                         {"exponent", axis->exponent},
                         {"length", io::rational_json(axis->length)},
                         {"steps", axis->steps},
                         {"translation_length", io::rational_json(axis->translation_length)}};
  out.diagnostics.push_back("helly:assumed (periodic cover)");
}

void cmd_solve_pm1(const Options& o, Output& out) {
  json j = io::read_json_file(o.input);
  if (!j.is_object() || !j.contains("A") || !j.contains("y")) throw Error("solve-pm1 input must be {\"A\": [[...]], \"y\": [...]}");
  auto a = j.at("A").get<std::vector<std::vector<int>>>();
  auto y = j.at("y").get<std::vector<long>>();
  Pm1Solution s = solve_pm1_system(a, y);
  out.payload = {{"x", io::rationals_json(s.x)},
                 {"determinant", io::rational_json(s.determinant)},
                 {"denominators_divide_factorial", s.denominators_divide_factorial}};
}

void print(const std::string& status, const json& payload, const std::vector<std::string>& diagnostics) {
  json result = {{"status", status}, {"payload", payload}, {"diagnostics", diagnostics}};
  std::cout << result.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Helly graph toolkit: recognition, round cliques, injective hulls, automorphisms"};
  app.require_subcommand(1);
  Options o;

  auto graph_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", o.input, "Graph JSON file ('-' for stdin)")->required();
    sub->add_flag("--skip-helly-check", o.skip_helly, "Do not verify the Helly precondition");
    return sub;
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output encoding for graphs")->check(CLI::IsMember({"json", "dot"}));
  };
  auto add_level = [&](CLI::App* sub) {
    sub->add_option("--level", o.level, "Subdivision level N")->check(CLI::Range(1, 12));
  };
  auto add_lattice = [&](CLI::App* sub) {
    sub->add_option("--lattice", o.lattice, "Dimension n of the king lattice Z^n")->check(CLI::PositiveNumber);
    sub->add_option("--perm", o.perm, "1-based coordinate permutation, e.g. 2,3,1")->delimiter(',');
    sub->add_option("--signs", o.signs, "Coordinate signs, e.g. 1,-1,1")->delimiter(',');
    sub->add_option("--shift", o.shift, "Integer translation, e.g. 1,0,0")->delimiter(',');
    sub->add_option("--periodic", o.periodic, "Periodic graph JSON file");
    sub->add_option("--dim-bound", o.dim_bound, "Upper bound on the combinatorial dimension")->check(CLI::PositiveNumber);
  };

  CLI::App* check = app.add_subcommand("check", "Decide whether a graph is Helly");
  check->add_option("graph", o.input, "Graph JSON file ('-' for stdin)")->required();

  CLI::App* cliques = graph_command("cliques", "Maximal and round cliques with the inclusion poset");
  CLI::App* subdivide = graph_command("subdivide", "Helly subdivision (level 1 from round cliques)");
  add_format(subdivide);
  add_level(subdivide);
  CLI::App* dimension = graph_command("dimension", "Combinatorial dimension");
  CLI::App* hull = graph_command("hull", "Grid vertices of the injective hull at a level");
  add_format(hull);
  add_level(hull);

  CLI::App* classify = app.add_subcommand("classify", "Elliptic or hyperbolic");
  classify->add_option("graph", o.input, "Graph JSON file ('-' for stdin)");
  classify->add_option("--auto", o.automorphism, "Permutation map or list of maps (default: whole group)");
  classify->add_flag("--skip-helly-check", o.skip_helly, "Do not verify the Helly precondition");
  add_lattice(classify);

  CLI::App* fixed = graph_command("fixed-distance", "Distance between fixed-point sets of two subgroups");
  fixed->add_option("--G", o.gens_g, "Generators of G (JSON)")->required();
  fixed->add_option("--H", o.gens_h, "Generators of H (JSON)")->required();
  fixed->add_option("--resolution", o.resolution, "Grid denominator (even)")->check(CLI::PositiveNumber);

  CLI::App* length = app.add_subcommand("translation-length", "Exact translation length");
  add_lattice(length);
  length->add_option("--estimate", o.estimate, "Also print d(0, g^n 0)/n for n = 1..k")->check(CLI::PositiveNumber);

  CLI::App* axis = app.add_subcommand("axis", "Combinatorial axis vertex of a hyperbolic action");
  add_lattice(axis);
  add_level(axis);
  axis->add_option("--window", o.window, "Search window in layers")->check(CLI::PositiveNumber);

  CLI::App* solve = app.add_subcommand("solve-pm1", "Solve Ax = y for a {-1,0,1} matrix");
  solve->add_option("input", o.input, "JSON {\"A\": [[...]], \"y\": [...]}")->required();

  const std::vector<std::pair<CLI::App*, void (*)(const Options&, Output&)>> commands{
      {check, cmd_check},         {cliques, cmd_cliques},
      {subdivide, cmd_subdivide}, {dimension, cmd_dimension},
      {hull, cmd_hull},           {classify, cmd_classify},
      {fixed, cmd_fixed_distance}, {length, cmd_translation_length},
      {axis, cmd_axis},           {solve, cmd_solve_pm1}};

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    print("error", {{"message", e.what()}, {"kind", "usage"}}, {});
    return 2;
  }

  Output out;
  try {
    for (const auto& [sub, run] : commands)
      if (sub->parsed()) run(o, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    print("error", {{"message", e.what()}, {"kind", "usage"}}, {});
    return 2;
  } catch (const Error& e) {
    print("error", {{"message", e.what()}}, out.diagnostics);
    return 1;
  } catch (const json::exception& e) {
    print("error", {{"message", std::string("malformed input: ") + e.what()}}, out.diagnostics);
    return 1;
  }
  if (out.text) {
    std::cout << *out.text;
    for (const auto& d : out.diagnostics) std::cerr << "diagnostic: " << d << "\n";
  } else {
    print("ok", out.payload, out.diagnostics);
  }
  return 0;
}
