// Partition frames and funky-edge statistics: symmetry invariance of the
// report, the Lemma-3 domination property, the closed-form claim bounds on
// constructed instances, and the pair-sum feasibility bound.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "c5/blowup.hpp"
#include "c5/funky.hpp"
#include "c5/graph.hpp"
#include "c5/placements.hpp"
#include "doctest.h"

using namespace c5;

namespace {

colored_graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> red;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) red.push_back({u, v});
  return make_graph(n, red);
}

partition5 random_partition(int n, std::mt19937_64& rng) {
  partition5 p;
  p.part_of.resize(n);
  for (;;) {
    for (int& x : p.part_of) x = int(rng() % 5);
    auto sz = p.sizes();
    if (*std::min_element(sz.begin(), sz.end()) > 0) return p;
  }
}

}  // namespace

TEST_CASE("frame colors: red at cycle distance 2 and 3") {
  for (int i = 0; i < 5; ++i) {
    CHECK(!frame_red(i, i));
    CHECK(!frame_red(i, (i + 1) % 5));
    CHECK(frame_red(i, (i + 2) % 5));
    CHECK(frame_red(i, (i + 3) % 5));
    CHECK(!frame_red(i, (i + 4) % 5));
  }
}

TEST_CASE("report on a blow-up with one flipped cross pair") {
  colored_graph g = materialize(10);
  const auto layout = build_blowup(balanced_sizes(10));
  const partition5& p = layout.parts;
  CHECK(funky_report(g, p).funky_edges.empty());

  // vertices 0 and 2 sit in parts 0 and 1 (sizes 2,2,2,2,2, consecutive)
  toggle_red(g, 0, 2);
  const auto r = funky_report(g, p);
  REQUIRE(r.funky_edges.size() == 1);
  CHECK(r.funky_edges[0] == std::pair<int, int>{0, 2});
  CHECK(r.f == bigrat(1, 45));
  CHECK(r.d == 0);  // both endpoints have funky degree 1
  CHECK(r.d_f[0] == 1);
  CHECK(r.d_f[2] == 1);
  CHECK(r.r_f[0] + r.b_f[0] == 1);

  partition5 bad;
  bad.part_of.assign(10, 0);
  CHECK_THROWS_AS((void)funky_report(g, bad), std::invalid_argument);
}

TEST_CASE("funky count is invariant under the frame symmetry group") {
  // distance-preserving position maps keep the graph; distance-flipping
  // (pentagram) maps pair with the color swap
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 8 + int(rng() % 5);
    const colored_graph g = random_graph(n, rng);
    const partition5 p = random_partition(n, rng);
    const std::size_t base = funky_report(g, p).funky_edges.size();
    for (const pos_map& m : frame_symmetries()) {
      partition5 q;
      q.part_of.resize(n);
      for (int v = 0; v < n; ++v) q.part_of[v] = m[p.part_of[v]];
      const bool preserves = frame_red(m[0], m[1]) == frame_red(0, 1);
      const std::size_t moved = preserves
                                    ? funky_report(g, q).funky_edges.size()
                                    : funky_report(complement(g), q).funky_edges.size();
      CHECK(moved == base);
    }
  }
}

TEST_CASE("Lemma 3 bounds dominate brute-force through-counts") {
  std::mt19937_64 rng(2025);
  int instances = 0;
  while (instances < 1050) {
    const int n = 6 + int(rng() % 11);
    const colored_graph g = random_graph(n, rng);
    // case 1: single vertex, red/blue split of its degree
    const int x = int(rng() % n);
    int r = 0;
    for (int u = 0; u < n; ++u)
      if (u != x && g.is_red(x, u)) ++r;
    CHECK(bigrat(count_induced_c5_through(g, {x})) <= lemma3_bound(1, n, r, n - 1 - r));
    // case 2: a pair
    const int y = (x + 1 + int(rng() % (n - 1))) % n;
    CHECK(bigrat(count_induced_c5_through(g, {x, y})) <= lemma3_bound(2, n));
    // case 3: a triple
    std::vector<int> t{x, y, -1};
    do t[2] = int(rng() % n);
    while (t[2] == x || t[2] == y);
    CHECK(bigrat(count_induced_c5_through(g, t)) <= lemma3_bound(3, n));
    instances += 3;
  }
  CHECK_THROWS_AS((void)lemma3_bound(1, 10, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)lemma3_bound(4, 10), std::invalid_argument);
}

TEST_CASE("claim bounds on single-funky-edge blow-ups") {
  const cycle_table table(20);
  for (int n = 10; n <= 16; ++n) {
    colored_graph g = materialize(n);
    const std::uint64_t pure = count_induced_c5(g);
    const auto layout = build_blowup(balanced_sizes(n));
    const partition5& p = layout.parts;
    // flip one pair between parts 0 and 1 (frame-blue, so the flip is funky)
    int u = -1, v = -1;
    for (int a = 0; a < n && u < 0; ++a)
      if (p.part_of[a] == 0) u = a;
    for (int a = 0; a < n && v < 0; ++a)
      if (p.part_of[a] == 1) v = a;
    toggle_red(g, u, v);
    const auto r = funky_report(g, p);
    REQUIRE(r.funky_edges.size() == 1);
    const bigrat f = r.f, d = r.d;
    CHECK(d == 0);

    std::array<bigrat, 5> y;
    {
      auto sz = balanced_sizes(n);
      std::sort(sz.begin(), sz.end(), std::greater<>());
      for (int i = 0; i < 5; ++i) y[i] = bigrat(sz[i], n);
    }
    // one funky edge: no pair of distinct funky edges, bounds close at zero
    CHECK(claim1_bound(n, f, d, y) == 0);
    CHECK(claim2_bound(n, f, d, y[0]) >= 0);
    // unflipping regains at least the Claim 3 expression
    const bigrat gain = bigrat(pure) - bigrat(count_induced_c5(g));
    CHECK(gain >= claim3_bound(n, f, d, y[2], y[3], y[4]));
    CHECK(claim3_bound(n, f, d, y[2], y[3], y[4]) > 0);
  }
}

TEST_CASE("optimal partitions meet the pair-sum feasibility bound") {
  // exhaustive optimizer regime: score / n^2 >= rhs(C(n*)) on blow-ups with
  // up to two flipped pairs
  const cycle_table table(12);
  std::mt19937_64 rng(5);
  for (int n = 9; n <= 12; ++n) {
    colored_graph g = materialize(n);
    for (int flips = 0; flips <= 2; ++flips) {
      if (flips > 0) {
        const int u = int(rng() % n);
        int v = int(rng() % n);
        while (v == u) v = int(rng() % n);
        toggle_red(g, u, v);
      }
      const partition5 p = optimize_partition(g);
      const auto r = funky_report(g, p);
      long long cross = 0;
      const auto sz = p.sizes();
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) cross += (long long)sz[i] * sz[j];
      const bigrat score(cross - (long long)r.funky_edges.size(), (long long)n * n);
      CHECK(score >= numfunky_rhs(table.cstar(n)));
    }
  }
}

TEST_CASE("optimizer recovers the natural partition of a blow-up") {
  const colored_graph g = materialize(12);
  const partition5 p = optimize_partition(g);
  CHECK(funky_report(g, p).funky_edges.empty());
  auto sz = p.sizes();
  std::sort(sz.begin(), sz.end());
  auto want = balanced_sizes(12);
  std::sort(want.begin(), want.end());
  CHECK(sz == want);
}
