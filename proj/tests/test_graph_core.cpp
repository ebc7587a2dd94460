#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "helly/error.hpp"
#include "helly/helly.hpp"
#include "support.hpp"

using namespace helly;
using namespace helly::testing;

namespace {

// Independent check that a family is a Helly violation: pairwise meeting,
// empty total intersection, and every proper subfamily still meets.
bool violation_oracle(const Graph& g, const std::vector<Ball>& family) {
  if (family.size() < 2) return false;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!family[i].members.intersects(family[j].members)) return false;
  VertexSet all = g.full_set();
  for (const Ball& b : family) all &= b.members;
  if (all.any()) return false;
  for (std::size_t skip = 0; skip < family.size(); ++skip) {
    VertexSet rest = g.full_set();
    for (std::size_t i = 0; i < family.size(); ++i)
      if (i != skip) rest &= family[i].members;
    if (rest.none()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("distances") {
  Graph one = Graph::from_indices(1, {});
  CHECK(one.distance(0, 0) == 0);

  Graph p = path_graph(3);
  CHECK(p.distance(p.index_of("a"), p.index_of("c")) == 2);

  Graph king = king_window(3, 3);
  CHECK(king.distance(king.index_of("(0,0)"), king.index_of("(2,2)")) == 2);
  CHECK(king.diameter() == 2);
}

TEST_CASE("distances match Floyd-Warshall on the small corpus") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      auto oracle = floyd_warshall(g);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) REQUIRE(g.distance(u, v) == oracle[u][v]);
    }
}

TEST_CASE("disconnected graph names an unreachable pair") {
  Graph g = named({"a", "b", "c"}, {{"a", "b"}});
  CHECK_FALSE(g.connected());
  try {
    g.distances();
    FAIL("expected an error");
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("graph not connected") != std::string::npos);
    CHECK(msg.find("'c'") != std::string::npos);
  }
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(named({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(named({"a", "b"}, {{"a", "z"}}), Error);
  CHECK_THROWS_AS(named({"a", "b"}, {{"a", "a"}}), Error);
  CHECK_THROWS_AS(named({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_WITH_AS(path_graph(3).index_of("q"), doctest::Contains("unknown vertex"), Error);
}

TEST_CASE("balls") {
  Graph k3 = complete_graph(3);
  CHECK(ball(k3, 0, 0).members == set_of(k3, {"a"}));
  Graph p = path_graph(3);
  CHECK(ball(p, 0, 1).members == set_of(p, {"a", "b"}));
  Graph c4 = cycle_graph(4);
  CHECK(ball(c4, 0, 1).members == set_of(c4, {"3", "0", "1"}));
  CHECK_THROWS_AS(ball(c4, 7, 1), Error);
}

TEST_CASE("is_helly examples") {
  CHECK(is_helly(complete_graph(3)).helly);
  CHECK(is_helly(path_graph(4)).helly);
  CHECK_FALSE(is_helly(path_graph(4)).witness);

  Graph c4 = cycle_graph(4);
  HellyResult r = is_helly(c4);
  REQUIRE_FALSE(r.helly);
  REQUIRE(r.witness);
  REQUIRE(r.witness->size() == 4);
  std::vector<VertexSet> expected, got;
  for (int v = 0; v < 4; ++v) expected.push_back(ball(c4, v, 1).members);
  for (const Ball& b : *r.witness) got.push_back(b.members);
  std::sort(expected.begin(), expected.end(), canonical_less);
  std::sort(got.begin(), got.end(), canonical_less);
  CHECK(got == expected);
  CHECK(violation_oracle(c4, *r.witness));
  CHECK(is_helly_witness(c4, *r.witness));
}

TEST_CASE("brute force examples") {
  CHECK(is_helly_bruteforce(complete_graph(3), 2));
  CHECK(is_helly_bruteforce(complete_graph(3), 10));
  CHECK_FALSE(is_helly_bruteforce(cycle_graph(4), 4));
  CHECK_FALSE(is_helly_bruteforce(cycle_graph(6), 3));
  CHECK_THROWS_AS(is_helly_bruteforce(king_window(4, 4), 16), Error);
  CHECK(is_helly_bruteforce(king_window(4, 4), 16, 16));
}

TEST_CASE("require_helly carries the witness") {
  try {
    require_helly(cycle_graph(5));
    FAIL("expected NotHelly");
  } catch (const NotHelly& e) {
    CHECK(violation_oracle(cycle_graph(5), e.witness()));
  }
  CHECK_NOTHROW(require_helly(star_graph(4)));
}

TEST_CASE("is_clique") {
  Graph p = path_graph(3);
  CHECK(is_clique(p, set_of(p, {"b"})));
  CHECK(is_clique(p, set_of(p, {"a", "b"})));
  CHECK_FALSE(is_clique(p, set_of(p, {"a", "c"})));
  CHECK_THROWS_AS(is_clique(p, p.empty_set()), Error);
}

TEST_CASE("triple criterion agrees with brute force up to 6 vertices") {
  int helly = 0, total = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      HellyResult r = is_helly(g);
      REQUIRE(r.helly == is_helly_bruteforce(g, n * (g.diameter() + 1)));
      if (!r.helly) REQUIRE(violation_oracle(g, *r.witness));
      helly += r.helly;
      ++total;
    }
  CHECK(total == 1 + 1 + 2 + 6 + 21 + 112);
  CHECK(helly > 0);
}

TEST_CASE("trees, complete graphs and king windows are Helly; long cycles are not") {
  for (int n = 2; n <= 9; ++n)
    for (const Graph& t : trees(n)) CHECK(is_helly(t).helly);
  for (int n = 1; n <= 6; ++n) CHECK(is_helly(complete_graph(n)).helly);
  for (int n = 4; n <= 8; ++n) CHECK_FALSE(is_helly(cycle_graph(n)).helly);
  CHECK(is_helly(cycle_graph(3)).helly);
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) CHECK(is_helly(king_window(r, c)).helly);
}

TEST_CASE("Helly is invariant under relabelling") {
  std::mt19937 rng(7);
  for (const Graph& g : connected_graphs(5)) {
    std::vector<int> perm(5);
    for (int i = 0; i < 5; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Graph::Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    Graph h = Graph::from_indices(5, edges);
    CHECK(is_helly(g).helly == is_helly(h).helly);
  }
}
