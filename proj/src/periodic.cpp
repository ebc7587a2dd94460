#include "helly/periodic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "helly/cliques.hpp"
#include "helly/error.hpp"
#include "helly/helly.hpp"
#include "helly/hull.hpp"

namespace helly {

namespace {

long max_voltage(const PeriodicGraph& p) {
  long m = 0;
  for (const auto& e : p.edges) m = std::max(m, std::labs(e.voltage));
  return m;
}

// Incident lifts: from quotient vertex u, step to (v, t + delta).
std::vector<std::vector<std::pair<int, long>>> lift_steps(const PeriodicGraph& p) {
  std::vector<std::vector<std::pair<int, long>>> steps(p.size());
  for (const auto& e : p.edges) {
    steps[e.u].emplace_back(e.v, e.voltage);
    steps[e.v].emplace_back(e.u, -e.voltage);
  }
  return steps;
}

// Breadth-first distances from (source, 0) within layers [lo, hi]; -1 when
// unreachable inside the window.
std::vector<long> window_bfs(const PeriodicGraph& p, int source, long lo, long hi) {
  const int q = p.size();
  const auto steps = lift_steps(p);
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1) * q;
  std::vector<long> dist(count, -1);
  auto at = [&](int v, long t) { return static_cast<std::size_t>(t - lo) * q + v; };
  std::deque<std::pair<int, long>> queue{{source, 0}};
  dist[at(source, 0)] = 0;
  while (!queue.empty()) {
    auto [u, t] = queue.front();
    queue.pop_front();
    const long du = dist[at(u, t)];
    for (auto [v, delta] : steps[u]) {
      const long s = t + delta;
      if (s < lo || s > hi) continue;
      auto& dv = dist[at(v, s)];
      if (dv < 0) {
        dv = du + 1;
        queue.emplace_back(v, s);
      }
    }
  }
  return dist;
}

int quotient_diameter_bound(const PeriodicGraph& p) { return p.size(); }

// Exact distances from (source, 0) to every (v, t), t in [lo, hi] (lo <= 0 <= hi).
std::vector<long> exact_profile(const PeriodicGraph& p, int source, long lo, long hi) {
  const long vmax = std::max(1L, max_voltage(p));
  long margin = (hi - lo) * (1 + vmax) + quotient_diameter_bound(p) + 2;
  const int q = p.size();
  for (;;) {
    const long wlo = lo - margin, whi = hi + margin;
    auto dist = window_bfs(p, source, wlo, whi);
    long worst = 0;
    bool reached = true;
    for (long t = lo; t <= hi && reached; ++t)
      for (int v = 0; v < q; ++v) {
        long d = dist[static_cast<std::size_t>(t - wlo) * q + v];
        if (d < 0) {
          reached = false;
          break;
        }
        worst = std::max(worst, d);
      }
    if (!reached) {
      margin *= 2;
      continue;
    }
    // Every path of length <= worst from layer 0 stays within worst * vmax
    // layers, so this window holds every shortest path to the targets.
    const long need = worst * vmax;
    const long elo = std::min(lo, -need), ehi = std::max(hi, need);
    auto exact = window_bfs(p, source, elo, ehi);
    std::vector<long> out(static_cast<std::size_t>(hi - lo + 1) * q);
    for (long t = lo; t <= hi; ++t)
      for (int v = 0; v < q; ++v)
        out[static_cast<std::size_t>(t - lo) * q + v] = exact[static_cast<std::size_t>(t - elo) * q + v];
    return out;
  }
}

}  // namespace

void validate(const PeriodicGraph& p) {
  const int q = p.size();
  if (q == 0) throw Error("periodic graph with empty quotient");
  std::set<std::string> names(p.vertices.begin(), p.vertices.end());
  if (static_cast<int>(names.size()) != q) throw Error("periodic graph: duplicate quotient vertex identifier");
  std::set<std::tuple<int, int, long>> lifts;
  for (const auto& e : p.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= q || e.v >= q) throw Error("periodic graph: edge endpoint out of range");
    if (e.u == e.v && e.voltage == 0)
      throw Error("periodic graph: loop of voltage 0 at '" + p.vertices[e.u] + "' lifts to self-loops");
    auto key = e.u < e.v ? std::make_tuple(e.u, e.v, e.voltage)
               : e.u > e.v ? std::make_tuple(e.v, e.u, -e.voltage)
                           : std::make_tuple(e.u, e.u, std::labs(e.voltage));
    if (!lifts.insert(key).second)
      throw Error("periodic graph: duplicate lift of edge {" + p.vertices[e.u] + "," + p.vertices[e.v] + "}");
  }
  // Potentials along a spanning forest; cycle voltages must generate Z.
  std::vector<long> potential(q, 0);
  std::vector<bool> seen(q, false);
  const auto steps = lift_steps(p);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [v, delta] : steps[u])
      if (!seen[v]) {
        seen[v] = true;
        potential[v] = potential[u] + delta;
        queue.push_back(v);
      }
  }
  for (int v = 0; v < q; ++v)
    if (!seen[v]) throw Error("periodic graph: quotient is not connected ('" + p.vertices[v] + "' unreachable)");
  long g = 0;
  for (const auto& e : p.edges) g = std::gcd(g, std::labs(potential[e.u] + e.voltage - potential[e.v]));
  if (g != 1)
    throw Error("periodic graph: cover is not connected (cycle voltages generate " + std::to_string(g) + "Z)");
}

CoverWindow cover_window(const PeriodicGraph& p, long lo, long hi) {
  validate(p);
  if (hi < lo) throw Error("cover_window: empty layer range");
  const int q = p.size();
  CoverWindow w;
  w.lo = lo;
  w.hi = hi;
  std::vector<std::string> ids;
  for (long t = lo; t <= hi; ++t)
    for (int v = 0; v < q; ++v) ids.push_back(p.vertices[v] + "@" + std::to_string(t));
  std::vector<Graph::Edge> edges;
  for (const auto& e : p.edges)
    for (long t = lo; t <= hi; ++t) {
      const long s = t + e.voltage;
      if (s < lo || s > hi) continue;
      edges.emplace_back(w.index(e.u, t, q), w.index(e.v, s, q));
    }
  w.graph = Graph::from_indices(std::move(ids), edges);
  if (!w.graph.connected()) w.diagnostics.push_back("window disconnected (window too small)");
  return w;
}

CoverWindow cover_window(const PeriodicGraph& p, long k) {
  if (k < 1) throw Error("cover_window: k must be at least 1");
  return cover_window(p, -k, k);
}

long cover_distance(const PeriodicGraph& p, int u, int v, long layer) {
  validate(p);
  if (u < 0 || v < 0 || u >= p.size() || v >= p.size()) throw Error("cover_distance: unknown quotient vertex");
  const long lo = std::min(0L, layer), hi = std::max(0L, layer);
  auto profile = exact_profile(p, u, lo, hi);
  return profile[static_cast<std::size_t>(layer - lo) * p.size() + v];
}

WeightedDigraph voltage_digraph(const PeriodicGraph& p) {
  WeightedDigraph d{p.size(), {}};
  for (const auto& e : p.edges) {
    d.arcs.push_back({e.u, e.v, Rational(-e.voltage)});
    d.arcs.push_back({e.v, e.u, Rational(e.voltage)});
  }
  return d;
}

Rational deck_translation_length(const PeriodicGraph& p, int dim_bound) {
  validate(p);
  if (dim_bound < 1) throw Error("deck_translation_length: dim_bound must be at least 1");
  // Any closed walk gaining n layers splits into cycles each gaining at most
  // `gain` layers per step, so d((v,0),(v,n)) >= n / gain for every n.
  const Rational gain = -min_mean_cycle(voltage_digraph(p)).mean;
  if (gain <= 0) throw Error("deck_translation_length: deck transformation has bounded orbits");
  const Rational lower = 1 / gain;
  Rational upper;
  std::optional<Rational> pinned;
  const long max_den = 2L * dim_bound;
  constexpr long kMaxShift = 1L << 14;
  for (long n = 1; n <= kMaxShift; n *= 2) {
    // Subadditive, so every d_n / n bounds the limit from above.
    Rational estimate = make_rational(cover_distance(p, 0, 0, n), n);
    if (n == 1 || estimate < upper) upper = estimate;
    std::set<Rational> candidates;
    for (long q = 1; q <= max_den; ++q) {
      mpz_class first, last;
      Rational lq = lower * q, uq = upper * q;
      mpz_cdiv_q(first.get_mpz_t(), lq.get_num_mpz_t(), lq.get_den_mpz_t());
      mpz_fdiv_q(last.get_mpz_t(), uq.get_num_mpz_t(), uq.get_den_mpz_t());
      for (mpz_class k = first; k <= last; ++k) {
        Rational c(k, q);
        c.canonicalize();
        candidates.insert(c);
      }
    }
    if (candidates.empty())
      throw Error("deck_translation_length: bracket [" + to_string(lower) + ", " + to_string(upper) +
                  "] holds no rational with denominator <= " + std::to_string(max_den) + " (dim_bound too small?)");
    if (candidates.size() == 1) pinned = *candidates.begin();
  }
  if (pinned) return *pinned;
  throw Error("deck_translation_length: bracket [" + to_string(lower) + ", " + to_string(upper) +
              "] did not isolate a candidate within the window budget");
}

namespace {

// Exact distances between cover vertices, by layer offset.
class CoverMetric {
 public:
  CoverMetric(const PeriodicGraph& p, long reach) : p_(p), reach_(reach) {
    for (int u = 0; u < p.size(); ++u) profiles_.push_back(exact_profile(p, u, -reach, reach));
  }

  long operator()(int u, long s, int v, long t) const {
    const long delta = t - s;
    if (delta < -reach_ || delta > reach_) throw Error("cover metric queried outside its reach");
    return profiles_[u][static_cast<std::size_t>(delta + reach_) * p_.size() + v];
  }

 private:
  const PeriodicGraph& p_;
  long reach_;
  std::vector<std::vector<long>> profiles_;
};

using CoverVertex = std::pair<int, long>;

// Doubled value 2 f_sigma(x) of the half-integer extremal function of a
// round clique of the cover.
long doubled_value(const CoverMetric& d, const std::vector<CoverVertex>& sigma, int v, long t) {
  if (sigma.size() == 1) return 2 * d(sigma[0].first, sigma[0].second, v, t);
  long lo = -1, hi = 0;
  for (auto [u, s] : sigma) {
    const long duv = d(u, s, v, t);
    if (duv == 0) return 1;
    lo = lo < 0 ? duv : std::min(lo, duv);
    hi = std::max(hi, duv);
  }
  return hi == lo ? 2 * lo : 2 * lo + 1;
}

}  // namespace

std::optional<PeriodicAxis> periodic_axis_vertex(const PeriodicGraph& p, int level, long window) {
  validate(p);
  if (window < 1) throw Error("periodic_axis_vertex: window must be at least 1");
  const Rational tau = deck_translation_length(p, level);
  if (tau == 0) throw Error("no axis: automorphism is elliptic");
  const int q = p.size();
  const long vmax = std::max(1L, max_voltage(p));
  const long max_exp = 2L * level;

  // Candidate round cliques meeting layer 0, from a window wide enough that
  // radius-1 balls around them are complete.
  const long r = window + 2 * vmax;
  const CoverWindow w = cover_window(p, -r, r);
  std::vector<std::vector<CoverVertex>> candidates;
  for (int v = 0; v < q; ++v) candidates.push_back({{v, 0}});
  if (w.graph.connected()) {
    for (const auto& c : round_cliques(w.graph, false).elements) {
      const auto in = members_of(c.members);
      if (in.size() < 2) continue;
      bool meets_zero = false, interior = true;
      std::vector<CoverVertex> sigma;
      for (int i : in) {
        const long t = w.lo + i / q;
        meets_zero = meets_zero || t == 0;
        interior = interior && std::labs(t) + 2 * vmax <= r;
        sigma.emplace_back(i % q, t);
      }
      // Roundness is decided by radius-1 balls, hence only near the centre.
      if (!meets_zero || !interior) continue;
      VertexSet hull = w.graph.full_set();
      for (int z = 0; z < w.graph.size(); ++z)
        if ((c.members - w.graph.neighbors(z)).count() == (c.members[z] ? 1u : 0u))
          hull &= w.graph.neighbors(z) | make_set(w.graph.size(), {z});
      if (hull == c.members) candidates.push_back(std::move(sigma));
    }
  }

  const long span = 3 * max_exp * (vmax + 1) + window;
  const CoverMetric metric(p, 2 * span + window);
  for (long a = 1; a <= max_exp; ++a) {
    const Rational step = a * tau;
    for (const auto& sigma : candidates) {
      bool axis = true;
      for (long k = 1; k <= 3 && axis; ++k) {
        const long shift = a * k;
        long best = 0;
        if (sigma.size() == 1) {
          best = 2 * metric(sigma[0].first, 0, sigma[0].first, shift);
        } else {
          std::vector<CoverVertex> moved;
          for (auto [u, s] : sigma) moved.emplace_back(u, s + shift);
          for (long t = -window - shift; t <= window + 2 * shift; ++t)
            for (int v = 0; v < q; ++v)
              best = std::max(best, std::labs(doubled_value(metric, sigma, v, t) - doubled_value(metric, moved, v, t)));
        }
        axis = make_rational(best, 2) == k * step;
      }
      if (axis) {
        PeriodicAxis out{{}, static_cast<int>(a), step, tau, Rational(step * grid_resolution(level)).get_num().get_si()};
        for (auto [u, s] : sigma) out.members.push_back(p.vertices[u] + "@" + std::to_string(s));
        return out;
      }
    }
  }
  return std::nullopt;
}

std::vector<bool> window_helly_evidence(const PeriodicGraph& p, long radius) {
  std::vector<bool> out;
  for (long k = 1; k <= radius; ++k) {
    const CoverWindow w = cover_window(p, k);
    out.push_back(w.graph.connected() && is_helly(w.graph).helly);
  }
  return out;
}

}  // namespace helly
