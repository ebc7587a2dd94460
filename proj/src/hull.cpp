#include "helly/hull.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

#include "helly/error.hpp"
#include "helly/helly.hpp"

namespace helly {

std::uint64_t default_search_budget() {
  if (const char* env = std::getenv("HELLY_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100'000'000ULL;
}

long grid_resolution(int level) {
  if (level < 1) throw Error("subdivision level must be at least 1");
  if (level > 12) throw Error("subdivision level " + std::to_string(level) + " is too large");
  long f = 1;
  for (int i = 2; i <= level; ++i) f *= i;
  return 2 * f;
}

MetricFunction distance_function(const Graph& g, int x) {
  MetricFunction f;
  for (int y = 0; y < g.size(); ++y) f.values.emplace_back(g.distance(x, y));
  return f;
}

namespace {

void check_domain(const Graph& g, const MetricFunction& f) {
  if (f.size() != g.size())
    throw Error("metric function has " + std::to_string(f.size()) + " values but the graph has " +
                std::to_string(g.size()) + " vertices");
}

}  // namespace

bool is_admissible(const Graph& g, const MetricFunction& f) {
  check_domain(g, f);
  const auto& d = g.distances();
  for (int x = 0; x < g.size(); ++x)
    for (int y = x; y < g.size(); ++y) {
      if (f[x] + f[y] < d(x, y)) return false;
      if (abs(f[x] - f[y]) > d(x, y)) return false;
    }
  return true;
}

bool is_extremal(const Graph& g, const MetricFunction& f) {
  if (!is_admissible(g, f)) throw Error("is_extremal: function is not admissible");
  const auto& d = g.distances();
  for (int x = 0; x < g.size(); ++x) {
    Rational best = -f[x];
    for (int y = 0; y < g.size(); ++y) best = std::max(best, Rational(d(x, y) - f[y]));
    if (best != f[x]) return false;
  }
  return true;
}

Rational sup_distance(const MetricFunction& f, const MetricFunction& h) {
  if (f.size() != h.size()) throw Error("sup_distance: functions have different domains");
  Rational best = 0;
  for (int x = 0; x < f.size(); ++x) best = std::max(best, Rational(abs(f[x] - h[x])));
  return best;
}

namespace {

// Depth-first search over integer-scaled grid values.
class GridSearch {
 public:
  GridSearch(const Graph& g, long resolution, const std::vector<int>& orbit_rep, std::uint64_t budget)
      : g_(g), n_(g.size()), res_(resolution), budget_(budget) {
    const auto& d = g.distances();
    // Breadth-first order from vertex 0 keeps each new vertex adjacent to an
    // assigned one, so Lipschitz pruning bites early.
    std::vector<bool> seen(n_, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      order_.push_back(u);
      for (int w : g.adjacency_list(u))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    scaled_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) scaled_[static_cast<std::size_t>(x) * n_ + y] = res_ * d(x, y);
    cap_.resize(n_);
    for (int x = 0; x < n_; ++x) cap_[x] = res_ * g.eccentricity(x);
    forced_by_.assign(n_, -1);
    if (!orbit_rep.empty()) {
      if (static_cast<int>(orbit_rep.size()) != n_) throw Error("orbit map does not match the graph");
      std::vector<int> first(n_, -1);
      for (int x : order_) {
        int r = orbit_rep[x];
        if (first[r] < 0)
          first[r] = x;
        else
          forced_by_[x] = first[r];
      }
    }
    value_.assign(n_, 0);
  }

  std::vector<std::vector<long>> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  long dist(int x, int y) const { return scaled_[static_cast<std::size_t>(x) * n_ + y]; }

  void tick() {
    if (++visited_ > budget_)
      throw BudgetExceeded("grid search budget of " + std::to_string(budget_) +
                           " nodes exhausted; try a smaller level, resolution or graph (or raise HELLY_BUDGET)");
  }

  void descend(int depth) {
    tick();
    if (depth == n_) {
      if (extremal()) found_.push_back(value_);
      return;
    }
    const int x = order_[depth];
    long lo = 0, hi = cap_[x];
    for (int k = 0; k < depth; ++k) {
      const int y = order_[k];
      const long dxy = dist(x, y);
      lo = std::max({lo, value_[y] - dxy, dxy - value_[y]});
      hi = std::min(hi, value_[y] + dxy);
    }
    if (forced_by_[x] >= 0) {
      lo = std::max(lo, value_[forced_by_[x]]);
      hi = std::min(hi, value_[forced_by_[x]]);
    }
    if (depth == n_ - 1) {
      // Extremality pins the last value: f(x) = max(0, max_y d(x,y) - f(y)).
      long pinned = 0;
      for (int k = 0; k < depth; ++k) pinned = std::max(pinned, dist(x, order_[k]) - value_[order_[k]]);
      lo = std::max(lo, pinned);
      hi = std::min(hi, pinned);
    }
    for (long a = lo; a <= hi; ++a) {
      value_[x] = a;
      descend(depth + 1);
    }
  }

  bool extremal() const {
    for (int x = 0; x < n_; ++x) {
      long best = -value_[x];
      for (int y = 0; y < n_; ++y) best = std::max(best, dist(x, y) - value_[y]);
      if (best != value_[x]) return false;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  long res_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<int> order_;
  std::vector<long> scaled_;
  std::vector<long> cap_;
  std::vector<int> forced_by_;
  std::vector<long> value_;
  std::vector<std::vector<long>> found_;
};

}  // namespace

std::vector<MetricFunction> extremal_grid_functions(const Graph& g, long resolution, const std::vector<int>& orbit_rep,
                                                    std::uint64_t budget) {
  if (resolution < 1) throw Error("grid resolution must be positive");
  g.distances();
  GridSearch search(g, resolution, orbit_rep, budget);
  std::vector<MetricFunction> out;
  for (const auto& raw : search.run()) {
    MetricFunction f;
    f.values.reserve(raw.size());
    for (long v : raw) f.values.push_back(make_rational(v, resolution));
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MetricFunction> hull_grid_vertices(const Graph& g, int level, bool check_helly, std::uint64_t budget) {
  const long res = grid_resolution(level);
  g.distances();
  if (check_helly) require_helly(g);
  return extremal_grid_functions(g, res, {}, budget);
}

std::string function_label(const MetricFunction& f) {
  std::string out = "(";
  for (int i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += to_string(f[i]);
  }
  return out + ")";
}

SubdivisionGraph grid_graph(const Graph& g, int level, bool check_helly, std::uint64_t budget) {
  const auto vertices = hull_grid_vertices(g, level, check_helly, budget);
  const Rational step = make_rational(1, grid_resolution(level));
  std::vector<std::string> labels;
  for (const auto& f : vertices) labels.push_back(function_label(f));
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (sup_distance(vertices[i], vertices[j]) == step)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return {Graph::from_indices(std::move(labels), edges), step};
}

OrthoschemePoint make_point(int level, std::vector<std::pair<MetricFunction, Rational>> support) {
  const Rational step = make_rational(1, grid_resolution(level));
  if (support.empty()) throw Error("orthoscheme point with empty support");
  Rational total = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i].second < 0) throw Error("orthoscheme point with a negative weight");
    if (support[i].first.size() != support[0].first.size())
      throw Error("orthoscheme point support functions have different domains");
    total += support[i].second;
    for (std::size_t j = 0; j < i; ++j) {
      if (support[i].first == support[j].first) throw Error("orthoscheme point support vertices are not distinct");
      if (sup_distance(support[i].first, support[j].first) > step)
        throw Error("orthoscheme point support does not span a simplex at level " + std::to_string(level));
    }
  }
  if (total != 1) throw Error("orthoscheme point weights sum to " + to_string(total) + ", not 1");
  return {level, std::move(support)};
}

Rational point_eval(const OrthoschemePoint& p, int x) {
  Rational acc = 0;
  for (const auto& [f, t] : p.support) {
    if (x < 0 || x >= f.size()) throw Error("point_eval: unknown vertex index " + std::to_string(x));
    acc += t * f[x];
  }
  return acc;
}

Rational point_distance(const OrthoschemePoint& p, const OrthoschemePoint& q, const Graph& g) {
  if (p.level != q.level) throw Error("point_distance: points live at different subdivision levels");
  Rational best = 0;
  for (int x = 0; x < g.size(); ++x) {
    Rational acc = 0;
    for (const auto& [f, t] : p.support)
      for (const auto& [h, s] : q.support) {
        if (f.size() != g.size() || h.size() != g.size())
          throw Error("point_distance: support function domain does not match the graph");
        acc += t * s * abs(f[x] - h[x]);
      }
    best = std::max(best, acc);
  }
  return best;
}

}  // namespace helly
