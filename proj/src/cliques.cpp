#include "helly/cliques.hpp"

#include <algorithm>
#include <set>

#include "helly/error.hpp"
#include "helly/helly.hpp"
#include "helly/hull.hpp"

namespace helly {

int CliquePoset::index_of(const VertexSet& members) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), RoundClique{members});
  if (it == elements.end() || it->members != members) return -1;
  return static_cast<int>(it - elements.begin());
}

namespace {

std::vector<int> degeneracy_order(const Graph& g) {
  const int n = g.size();
  std::vector<int> degree(n);
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || degree[v] < degree[best])) best = v;
    removed[best] = true;
    order.push_back(best);
    for (int w : g.adjacency_list(best))
      if (!removed[w]) --degree[w];
  }
  return order;
}

class CliqueEnumerator {
 public:
  CliqueEnumerator(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

  void expand(VertexSet r, VertexSet p, VertexSet x) {
    if (p.none() && x.none()) {
      if (out.size() >= cap_)
        throw Error("maximal clique enumeration exceeded the output cap of " + std::to_string(cap_));
      out.push_back(std::move(r));
      return;
    }
    // Pivot maximizing |P ∩ N(u)|.
    const VertexSet px = p | x;
    std::size_t pivot = px.find_first();
    std::size_t best = 0;
    for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
      std::size_t c = (p & g_.neighbors(static_cast<int>(u))).count();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
    VertexSet candidates = p - g_.neighbors(static_cast<int>(pivot));
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
      const auto& nv = g_.neighbors(static_cast<int>(v));
      VertexSet r2 = r;
      r2.set(v);
      expand(std::move(r2), p & nv, x & nv);
      p.reset(v);
      x.set(v);
    }
  }

  std::vector<VertexSet> out;

 private:
  const Graph& g_;
  std::size_t cap_;
};

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t cap) {
  CliqueEnumerator e(g, cap);
  const int n = g.size();
  std::vector<int> order = degeneracy_order(g);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    VertexSet p = g.empty_set(), x = g.empty_set();
    for (int w : g.adjacency_list(v)) (position[w] > i ? p : x).set(w);
    e.expand(make_set(n, {v}), std::move(p), std::move(x));
  }
  std::sort(e.out.begin(), e.out.end(), canonical_less);
  return std::move(e.out);
}

CliquePoset round_cliques(const Graph& g, bool check_helly) {
  g.distances();
  if (check_helly) require_helly(g);
  const int n = g.size();

  std::set<VertexSet> found;
  std::vector<VertexSet> frontier = maximal_cliques(g);
  for (const auto& c : frontier) found.insert(c);
  // Closure under pairwise intersection, to a fixed point.
  while (!frontier.empty()) {
    std::vector<VertexSet> fresh;
    std::vector<VertexSet> snapshot(found.begin(), found.end());
    for (const auto& a : frontier)
      for (const auto& b : snapshot) {
        VertexSet c = a & b;
        if (c.any() && !found.count(c)) {
          found.insert(c);
          fresh.push_back(std::move(c));
        }
      }
    frontier = std::move(fresh);
  }
  for (int v = 0; v < n; ++v) found.insert(make_set(n, {v}));

  CliquePoset poset;
  for (const auto& s : found) poset.elements.push_back({s});
  std::sort(poset.elements.begin(), poset.elements.end());

  const auto& el = poset.elements;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j || !el[i].members.is_proper_subset_of(el[j].members)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < el.size() && cover; ++k)
        if (el[i].members.is_proper_subset_of(el[k].members) && el[k].members.is_proper_subset_of(el[j].members))
          cover = false;
      if (cover) poset.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return poset;
}

bool is_round(const Graph& g, const VertexSet& s) {
  if (s.none()) return false;
  if (!is_clique(g, s)) return false;
  const auto& d = g.distances();
  const auto in = members_of(s);
  VertexSet hull = g.full_set();
  for (int z = 0; z < g.size(); ++z) {
    int r = 0;
    for (int y : in) r = std::max(r, d(z, y));
    for (int x = 0; x < g.size(); ++x)
      if (d(z, x) > r) hull.reset(x);
  }
  return hull == s;
}

std::string clique_label(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : members_of(s)) {
    if (!first) out += ",";
    out += g.id(v);
    first = false;
  }
  return out + "}";
}

SubdivisionGraph first_subdivision(const Graph& g, bool check_helly) {
  const CliquePoset poset = round_cliques(g, check_helly);
  const auto& el = poset.elements;
  std::vector<std::string> labels;
  for (const auto& c : el) labels.push_back(clique_label(g, c.members));
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j)
      if (el[i].members.intersects(el[j].members) && is_clique(g, el[i].members | el[j].members))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return {Graph::from_indices(std::move(labels), edges), make_rational(1, 2)};
}

int combinatorial_dimension(const Graph& g, bool check_helly) {
  const CliquePoset poset = round_cliques(g, check_helly);
  const auto& el = poset.elements;
  // Longest chain ending at each element, processed by increasing size.
  std::vector<std::size_t> order(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return el[a].members.count() < el[b].members.count(); });
  std::vector<int> longest(el.size(), 0);
  int best = 0;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (el[order[b]].members.is_proper_subset_of(el[order[a]].members)) {
        longest[order[a]] = std::max(longest[order[a]], longest[order[b]] + 1);
        best = std::max(best, longest[order[a]]);
      }
  return best;
}

MetricFunction clique_to_extremal(const Graph& g, const RoundClique& a) {
  const int n = g.size();
  if (a.members.size() != static_cast<std::size_t>(n)) throw Error("round clique over a different vertex set");
  if (!is_round(g, a.members)) throw Error("clique_to_extremal: " + clique_label(g, a.members) + " is not round");
  const auto& d = g.distances();
  const auto in = members_of(a.members);
  MetricFunction f;
  f.values.resize(n);
  if (in.size() == 1) {
    for (int x = 0; x < n; ++x) f.values[x] = d(in[0], x);
  } else {
    for (int x = 0; x < n; ++x) {
      if (a.members[x]) {
        f.values[x] = make_rational(1, 2);
        continue;
      }
      int lo = d(x, in[0]), hi = lo;
      for (int y : in) {
        lo = std::min(lo, d(x, y));
        hi = std::max(hi, d(x, y));
      }
      f.values[x] = hi == lo ? Rational(lo) : Rational(make_rational(2 * lo + 1, 2));
    }
  }
  if (!is_admissible(g, f) || !is_extremal(g, f))
    throw Error("clique_to_extremal: function for " + clique_label(g, a.members) + " is not extremal");
  return f;
}

RoundClique extremal_to_clique(const Graph& g, const MetricFunction& f) {
  const int n = g.size();
  if (f.size() != n) throw Error("extremal_to_clique: function domain does not match the graph");
  for (int x = 0; x < n; ++x)
    if (f[x] < 0 || Rational(2 * f[x]).get_den() != 1)
      throw Error("extremal_to_clique: value at '" + g.id(x) + "' is not in (1/2)N");
  if (!is_admissible(g, f)) throw Error("extremal_to_clique: function is not admissible");
  if (!is_extremal(g, f)) throw Error("extremal_to_clique: function is not extremal");
  const auto& d = g.distances();
  VertexSet s = g.full_set();
  for (int x = 0; x < n; ++x) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), f[x].get_num_mpz_t(), f[x].get_den_mpz_t());
    const long radius = c.get_si();
    for (int y = 0; y < n; ++y)
      if (d(x, y) > radius) s.reset(y);
  }
  if (s.none()) throw Error("extremal_to_clique: empty ball intersection (graph not Helly?)");
  return {s};
}

}  // namespace helly
