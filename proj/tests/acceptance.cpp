// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "helly/automorphism.hpp"
#include "helly/cliques.hpp"
#include "helly/error.hpp"
#include "helly/helly.hpp"
#include "helly/hull.hpp"
#include "helly/lattice.hpp"
#include "helly/linear.hpp"
#include "helly/mean_cycle.hpp"
#include "oracles.hpp"

using namespace helly;
using namespace helly::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 when untimed
  std::function<Outcome()> run;
};

std::vector<NamedGraph> g_corpus;
std::vector<const NamedGraph*> g_helly;

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

Outcome helly_recognition() {
  Outcome o;
  int helly = 0;
  for (const auto& ng : g_corpus) {
    const Graph& g = ng.graph;
    const int family = static_cast<int>(distinct_balls(g).size());
    const bool fast = is_helly(g).helly;
    const bool slow = is_helly_bruteforce(g, family, 16);
    if (fast != slow) fail(o, ng.name + ": triple criterion says " + (fast ? "Helly" : "not Helly"));
    helly += fast;
  }
  if (o.pass)
    o.detail = std::to_string(g_corpus.size()) + " graphs, " + std::to_string(helly) + " Helly, all agree";
  return o;
}

Outcome bijection() {
  Outcome o;
  std::size_t cliques = 0;
  for (const auto* ng : g_helly) {
    const Graph& g = ng->graph;
    std::vector<MetricFunction> images;
    for (const auto& c : round_cliques(g).elements) {
      MetricFunction f = clique_to_extremal(g, c);
      if (!(extremal_to_clique(g, f) == c)) fail(o, ng->name + ": round trip fails on " + clique_label(g, c.members));
      images.push_back(f);
      ++cliques;
    }
    std::sort(images.begin(), images.end());
    auto grid = hull_grid_vertices(g, 1);
    if (images != grid) fail(o, ng->name + ": {f_A} differs from the level-1 grid");
    for (const auto& f : grid)
      if (!(clique_to_extremal(g, extremal_to_clique(g, f)) == f)) fail(o, ng->name + ": grid round trip fails");
  }
  if (o.pass) o.detail = std::to_string(g_helly.size()) + " Helly graphs, " + std::to_string(cliques) + " round cliques";
  return o;
}

Outcome subdivision_consistency() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto* ng : g_helly) {
    const Graph& g = ng->graph;
    SubdivisionGraph sub = first_subdivision(g);
    auto grid = hull_grid_vertices(g, 1);
    auto cliques = round_cliques(g).elements;
    if (cliques.size() != grid.size()) {
      fail(o, ng->name + ": vertex count mismatch");
      continue;
    }
    std::vector<int> at_grid;
    for (const auto& c : cliques)
      at_grid.push_back(static_cast<int>(std::lower_bound(grid.begin(), grid.end(), clique_to_extremal(g, c)) - grid.begin()));
    for (std::size_t i = 0; i < cliques.size(); ++i)
      for (std::size_t j = 0; j < cliques.size(); ++j) {
        const bool sub_edge = sub.graph.adjacent(sub.graph.index_of(clique_label(g, cliques[i].members)),
                                                 sub.graph.index_of(clique_label(g, cliques[j].members)));
        const bool grid_edge = i != j && sup_distance(grid[at_grid[i]], grid[at_grid[j]]) == make_rational(1, 2);
        if (sub_edge != grid_edge) fail(o, ng->name + ": edge sets differ");
      }
    for (int u = 0; u < g.size(); ++u)
      for (int v = 0; v < g.size(); ++v) {
        const int su = sub.graph.index_of("{" + g.id(u) + "}");
        const int sv = sub.graph.index_of("{" + g.id(v) + "}");
        if (sub.graph.distance(su, sv) != 2 * g.distance(u, v)) fail(o, ng->name + ": distance not doubled");
        ++pairs;
      }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " vertex pairs doubled, edge sets equal";
  return o;
}

Outcome subdivision_helly() {
  Outcome o;
  int checked = 0;
  for (const auto* ng : g_helly) {
    if (ng->graph.size() > 6) continue;
    if (!is_helly(first_subdivision(ng->graph).graph).helly) fail(o, ng->name + ": subdivision not Helly");
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " subdivisions Helly";
  return o;
}

Outcome dimension_values() {
  Outcome o;
  int checked = 0;
  auto expect = [&](const std::string& name, const Graph& g, int want) {
    const int got = combinatorial_dimension(g);
    if (got != want) fail(o, name + ": dimension " + std::to_string(got) + ", expected " + std::to_string(want));
    ++checked;
  };
  expect("single vertex", Graph::from_indices(1, {}), 0);
  for (int n = 2; n <= 10; ++n)
    for (const Graph& t : trees(n)) expect("tree on " + std::to_string(n), t, 1);
  for (int n = 2; n <= 6; ++n) expect("K" + std::to_string(n), complete_graph(n), 1);
  for (int k = 3; k <= 4; ++k) expect("king" + std::to_string(k) + "x" + std::to_string(k), king_window(k, k), 2);
  if (o.pass) o.detail = std::to_string(checked) + " graphs (trees to 10, K2..K6, 3x3 and 4x4 king windows)";
  return o;
}

Outcome cyclic_shift_example() {
  Outcome o;
  AffineAutomorphism g{{1, 2, 0}, {1, 1, 1}, {1, 0, 0}};
  const Rational tau = affine_translation_length(g);
  const Rational est = affine_length_estimate(g, 30).back();
  if (tau != make_rational(1, 3)) fail(o, "translation length " + to_string(tau));
  if (abs(est - tau) > make_rational(1, 30)) fail(o, "estimate at 30 is " + to_string(est));
  if (o.pass) o.detail = "length " + to_string(tau) + ", estimate(30) " + to_string(est);
  return o;
}

Outcome denominator_bound() {
  Outcome o;
  std::mt19937 rng(20240601);
  const int trials = 10000;
  int hyperbolic = 0;
  for (int t = 0; t < trials; ++t) {
    AffineAutomorphism a = random_affine(rng, 6, 4);
    const Rational tau = affine_translation_length(a);
    if (denominator(tau) > 2 * a.dim()) fail(o, "denominator of " + to_string(tau) + " in dimension " + std::to_string(a.dim()));
    hyperbolic += tau != 0;
  }
  if (o.pass) o.detail = std::to_string(trials) + " automorphisms, " + std::to_string(hyperbolic) + " hyperbolic";
  return o;
}

Outcome mean_cycles() {
  Outcome o;
  std::mt19937 rng(77);
  int cyclic = 0, total = 0;
  while (cyclic < 1000) {
    WeightedDigraph d = random_digraph(rng, 8, 5);
    ++total;
    auto want = brute_min_mean(d);
    if (!want) {
      bool threw = false;
      try {
        min_mean_cycle(d);
      } catch (const Error&) {
        threw = true;
      }
      if (!threw) fail(o, "acyclic digraph accepted");
      continue;
    }
    ++cyclic;
    if (min_mean_cycle(d).mean != *want) fail(o, "mismatch on digraph #" + std::to_string(total));
  }
  if (o.pass) o.detail = std::to_string(cyclic) + " cyclic digraphs agree (" + std::to_string(total - cyclic) + " acyclic rejected)";
  return o;
}

Outcome elliptic_and_chains() {
  Outcome o;
  std::size_t autos = 0, chains_fixed = 0;
  for (const auto* ng : g_helly) {
    const Graph& g = ng->graph;
    CliquePoset p = round_cliques(g);
    const int m = static_cast<int>(p.elements.size());
    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    std::function<void(int)> grow = [&](int top) {
      if (!chain.empty()) chains.push_back(chain);
      for (int j = 0; j < m; ++j)
        if (top < 0 || p.elements[top].members.is_proper_subset_of(p.elements[j].members)) {
          chain.push_back(j);
          grow(j);
          chain.pop_back();
        }
    };
    grow(-1);
    for (const auto& a : enumerate_automorphisms(g)) {
      ++autos;
      auto w = elliptic_witness(g, {a}, false);
      if (!w || !(a.apply(w->members) == w->members)) fail(o, ng->name + ": no stabilized round clique");
      auto induced = induced_on_round_cliques(a, p);
      for (const auto& c : chains) {
        std::set<int> members(c.begin(), c.end()), image;
        for (int i : c) image.insert(induced[i]);
        if (image != members) continue;
        ++chains_fixed;
        for (int i : c)
          if (induced[i] != i) fail(o, ng->name + ": stabilized chain not fixed pointwise");
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(autos) + " automorphisms elliptic, " + std::to_string(chains_fixed) + " stabilized chains fixed";
  return o;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Outcome fixed_sets(double& worst) {
  Outcome o;
  int instances = 0;
  for (const auto* ng : g_helly) {
    const Graph& g = ng->graph;
    if (g.size() > 4 || g.size() < 2) continue;
    const int big_n = combinatorial_dimension(g) + 1;
    const long modulus = 2 * factorial(2 * big_n);
    auto group = enumerate_automorphisms(g);
    // Cyclic subgroups, paired with each other and with the whole group.
    std::vector<std::vector<Automorphism>> subgroups;
    for (const auto& a : group) subgroups.push_back({a});
    subgroups.push_back(group);
    for (std::size_t i = 0; i < subgroups.size(); ++i)
      for (std::size_t j = i; j < subgroups.size(); ++j) {
        const auto start = Clock::now();
        std::vector<Rational> values;
        for (long res : {2L, 4L, 48L}) values.push_back(fixed_set_distance(g, subgroups[i], subgroups[j], res).dist);
        worst = std::max(worst, std::chrono::duration<double>(Clock::now() - start).count());
        ++instances;
        if (values[1] != values[2]) fail(o, ng->name + ": value moves from 1/4 to 1/48");
        if (modulus % denominator(values[2]).get_si() != 0) fail(o, ng->name + ": denominator does not divide 2(2N)!");
      }
  }
  if (o.pass) o.detail = std::to_string(instances) + " subgroup pairs stable";
  return o;
}

Outcome pm1_denominators() {
  Outcome o;
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> entry(-1, 1), dim(1, 7), rhs(-5, 5);
  int solved = 0, violations = 0;
  std::string first;
  while (solved < 10000) {
    const int n = dim(rng);
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    std::vector<long> y(n);
    for (auto& row : a)
      for (int& v : row) v = entry(rng);
    for (long& v : y) v = rhs(rng);
    Pm1Solution s;
    try {
      s = solve_pm1_system(a, y);
    } catch (const Error&) {
      continue;
    }
    ++solved;
    if (!s.denominators_divide_factorial) {
      if (violations++ == 0) {
        std::ostringstream os;
        os << "n=" << n << " det=" << to_string(s.determinant) << " x=(";
        for (std::size_t i = 0; i < s.x.size(); ++i) os << (i ? "," : "") << to_string(s.x[i]);
        os << ")";
        first = os.str();
      }
    }
  }
  o.pass = violations == 0;
  o.detail = std::to_string(solved) + " systems, " + std::to_string(violations) + " with a denominator not dividing n!";
  if (!o.pass) o.detail += "; first: " + first;
  return o;
}

}  // namespace

int main() {
  auto start = Clock::now();
  g_corpus = acceptance_corpus(7);
  for (const auto& ng : g_corpus)
    if (is_helly(ng.graph).helly) g_helly.push_back(&ng);
  std::printf("corpus: %zu graphs (%zu Helly), built in %.2fs\n", g_corpus.size(), g_helly.size(),
              std::chrono::duration<double>(Clock::now() - start).count());

  double worst_instance = 0;
  std::vector<Criterion> criteria{
      {1, "Helly recognition agrees with brute force", 300, helly_recognition},
      {2, "round cliques and half-integer extremal functions correspond", 120, bijection},
      {3, "first subdivision equals the level-1 grid graph; distances double", 0, subdivision_consistency},
      {4, "first subdivision is Helly (<= 6 vertices)", 0, subdivision_helly},
      {5, "combinatorial dimension values", 0, dimension_values},
      {6, "translation length of the cyclic shift on Z^3 is 1/3", 1, cyclic_shift_example},
      {7, "translation length denominators <= 2n on Z^n", 60, denominator_bound},
      {8, "minimum mean cycle agrees with cycle enumeration", 0, mean_cycles},
      {9, "automorphisms are elliptic; stabilized chains fixed", 0, elliptic_and_chains},
      {10, "fixed-set distance stable under refinement", 0, [&] { return fixed_sets(worst_instance); }},
      {11, "{-1,0,1} system denominators divide n!", 0, pm1_denominators},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    if (c.id == 10 && worst_instance > 600) {
      o.pass = false;
      o.detail += " (instance over 10 minutes)";
    }
    failed += !o.pass;
    std::printf("%s %2d %s [%.2fs]: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
