#include "helly/helly.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "helly/error.hpp"

namespace helly {

Ball ball(const Graph& g, int center, int radius) {
  if (center < 0 || center >= g.size()) throw Error("unknown vertex index " + std::to_string(center));
  if (radius < 0) throw Error("negative ball radius");
  const auto& d = g.distances();
  Ball b{center, radius, g.empty_set()};
  for (int y = 0; y < g.size(); ++y)
    if (d(center, y) <= radius) b.members.set(y);
  return b;
}

std::vector<Ball> distinct_balls(const Graph& g) {
  std::vector<Ball> out;
  std::set<VertexSet> seen;
  const int diam = g.diameter();
  for (int r = 0; r <= diam; ++r)
    for (int c = 0; c < g.size(); ++c) {
      Ball b = ball(g, c, r);
      if (seen.insert(b.members).second) out.push_back(std::move(b));
    }
  return out;
}

namespace {

VertexSet intersection_of(const Graph& g, const std::vector<Ball>& family) {
  VertexSet acc = g.full_set();
  for (const auto& b : family) acc &= b.members;
  return acc;
}

std::vector<Ball> shrink_witness(const Graph& g, std::vector<Ball> family) {
  for (std::size_t i = 0; i < family.size();) {
    std::vector<Ball> trial = family;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (intersection_of(g, trial).none())
      family = std::move(trial);
    else
      ++i;
  }
  return family;
}

}  // namespace

HellyResult is_helly(const Graph& g) {
  const int n = g.size();
  g.distances();
  const std::vector<Ball> balls = distinct_balls(g);

  // pair_core[a][b]: intersection of every ball containing both a and b.
  std::vector<std::vector<VertexSet>> pair_core(n, std::vector<VertexSet>(n, g.full_set()));
  for (const auto& b : balls) {
    auto in = members_of(b.members);
    for (std::size_t i = 0; i < in.size(); ++i)
      for (std::size_t j = i + 1; j < in.size(); ++j) {
        pair_core[in[i]][in[j]] &= b.members;
        pair_core[in[j]][in[i]] &= b.members;
      }
  }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if ((pair_core[a][b] & pair_core[a][c] & pair_core[b][c]).any()) continue;
        std::vector<Ball> family;
        for (const auto& ball : balls) {
          int hits = ball.members[a] + ball.members[b] + ball.members[c];
          if (hits >= 2) family.push_back(ball);
        }
        return {false, shrink_witness(g, std::move(family))};
      }
  return {true, std::nullopt};
}

namespace {

struct BruteForce {
  std::vector<std::uint64_t> balls;
  int limit;
  // For each ball, the set (as bitmask over ball indices) of balls meeting it.
  std::vector<std::vector<bool>> meets;

  // chosen balls are pairwise intersecting with running intersection
  // `inter`; `candidates` lists later balls meeting every chosen ball.
  bool counterexample(std::uint64_t inter, const std::vector<int>& candidates, int depth) const {
    if (inter == 0) return true;
    if (limit > 0 && depth >= limit) return false;
    // Some vertex of the running intersection lies in every candidate: no
    // extension can become empty.
    std::uint64_t common = inter;
    for (int c : candidates) common &= balls[c];
    if (common != 0) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const int c = candidates[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (meets[c][candidates[j]]) next.push_back(candidates[j]);
      if (counterexample(inter & balls[c], next, depth + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool is_helly_bruteforce(const Graph& g, int max_family_size, int size_cap) {
  if (g.size() > std::min(size_cap, 64))
    throw Error("brute-force Helly check refuses graphs with more than " + std::to_string(std::min(size_cap, 64)) +
                " vertices");
  g.distances();
  BruteForce bf;
  bf.limit = max_family_size;
  for (const auto& b : distinct_balls(g)) {
    std::uint64_t mask = 0;
    for (int v : members_of(b.members)) mask |= std::uint64_t{1} << v;
    bf.balls.push_back(mask);
  }
  const std::size_t m = bf.balls.size();
  bf.meets.assign(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) bf.meets[i][j] = (bf.balls[i] & bf.balls[j]) != 0;
  std::vector<int> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<int>(i);
  const std::uint64_t full = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
  return !bf.counterexample(full, all, 0);
}

namespace {

std::string describe(const Graph& g, const std::vector<Ball>& family) {
  std::string out = "graph is not Helly; witness balls:";
  for (const auto& b : family) out += " B(" + g.id(b.center) + "," + std::to_string(b.radius) + ")";
  return out;
}

}  // namespace

NotHelly::NotHelly(const Graph& g, std::vector<Ball> witness)
    : Error(describe(g, witness)), witness_(std::move(witness)) {}

void require_helly(const Graph& g) {
  auto r = is_helly(g);
  if (!r.helly) throw NotHelly(g, std::move(*r.witness));
}

bool is_clique(const Graph& g, const VertexSet& s) {
  if (s.none()) throw Error("is_clique: empty vertex set");
  auto in = members_of(s);
  for (std::size_t i = 0; i < in.size(); ++i)
    for (std::size_t j = i + 1; j < in.size(); ++j)
      if (!g.adjacent(in[i], in[j])) return false;
  return true;
}

bool is_helly_witness(const Graph& g, const std::vector<Ball>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!family[i].members.intersects(family[j].members)) return false;
  return intersection_of(g, family).none();
}

}  // namespace helly
