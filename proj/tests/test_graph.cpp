// Graph core: counting oracle cross-checks, self-complementarity, graph6
// round-trips, and the pair-pattern family.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "c5/canon.hpp"
#include "c5/cbb.hpp"
#include "c5/graph.hpp"
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

// independent C5 predicate: try all 12 cyclic orders of the 5 vertices
bool is_c5_by_orders(const colored_graph& g, std::array<int, 5> v) {
  std::sort(v.begin() + 1, v.end());
  do {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = i + 1; j < 5 && ok; ++j) {
        const bool cyc = (j - i == 1) || (j - i == 4);
        ok = g.is_red(v[i], v[j]) == cyc;
      }
    if (ok) return true;
  } while (std::next_permutation(v.begin() + 1, v.end()));
  return false;
}

std::uint64_t plain_count(const colored_graph& g) {
  std::uint64_t cnt = 0;
  std::array<int, 5> v{};
  for (v[0] = 0; v[0] < g.n; ++v[0])
    for (v[1] = v[0] + 1; v[1] < g.n; ++v[1])
      for (v[2] = v[1] + 1; v[2] < g.n; ++v[2])
        for (v[3] = v[2] + 1; v[3] < g.n; ++v[3])
          for (v[4] = v[3] + 1; v[4] < g.n; ++v[4])
            if (is_c5_by_orders(g, v)) ++cnt;
  return cnt;
}

}  // namespace

TEST_CASE("C5 itself and small named graphs") {
  const colored_graph c5g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(count_induced_c5(c5g) == 1);
  CHECK(count_induced_c5(complement(c5g)) == 1);

  const colored_graph ml = mobius_ladder8();
  CHECK(count_induced_c5(ml) == 8);
  CHECK(count_induced_c5(complement(ml)) == 8);

  // C7 has no chords, so no induced C5
  std::vector<std::pair<int, int>> e7;
  for (int i = 0; i < 7; ++i) e7.push_back({i, (i + 1) % 7});
  CHECK(count_induced_c5(make_graph(7, e7)) == 0);
}

TEST_CASE("counting agrees with the plain cyclic-order oracle") {
  std::mt19937_64 rng(2024);
  for (int n : {5, 7, 9, 12, 16, 20}) {
    for (int rep = 0; rep < 4; ++rep) {
      const colored_graph g = random_graph(n, rng);
      CHECK(count_induced_c5(g) == plain_count(g));
    }
  }
}

TEST_CASE("self-complementarity on every class with n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const colored_graph& g : enumerate_graphs(n))
      CHECK(count_induced_c5(g) == count_induced_c5(complement(g)));
}

TEST_CASE("self-complementarity on random larger graphs") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 60; ++rep) {
    const colored_graph g = random_graph(8 + int(rng() % 13), rng);
    CHECK(count_induced_c5(g) == count_induced_c5(complement(g)));
  }
}

TEST_CASE("through-counts decompose the total") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 8 + int(rng() % 6);
    const colored_graph g = random_graph(n, rng);
    const std::uint64_t total = count_induced_c5(g);
    std::uint64_t via_vertices = 0;
    for (int v = 0; v < n; ++v) via_vertices += count_induced_c5_through(g, {v});
    CHECK(via_vertices == 5 * total);
    std::uint64_t via_pairs = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) via_pairs += count_induced_c5_through(g, {u, v});
    CHECK(via_pairs == 10 * total);  // C(5,2) pairs per cycle
    CHECK(count_induced_c5_through(g, {0, 1, 2}) <= total);
    CHECK_THROWS_AS((void)count_induced_c5_through(g, {0, 1, 2, 3}), std::invalid_argument);
  }
}

TEST_CASE("graph6 round-trip") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 1 + int(rng() % 30);
    const colored_graph g = random_graph(n, rng);
    const colored_graph h = from_graph6(to_graph6(g));
    CHECK(h.n == g.n);
    CHECK(h.red == g.red);
  }
  // reference value cross-checked against networkx's graph6 writer
  CHECK(to_graph6(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == "Dhc");
  CHECK_THROWS_AS((void)from_graph6(""), std::invalid_argument);
}

TEST_CASE("pair-pattern family: six graphs on 7 vertices, four C5s each") {
  const auto fam = cbb_family();
  CHECK(fam.size() == 6);
  std::set<canonical_key> keys;
  for (const colored_graph& g : fam) {
    CHECK(g.n == 7);
    CHECK(count_induced_c5(g) == 4);
    keys.insert(canonical_form(g));
  }
  CHECK(keys.size() == 6);  // pairwise non-isomorphic
}

TEST_CASE("membership counting matches plain enumeration") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 8; ++rep) {
    const int n = 7 + int(rng() % 4);
    const colored_graph g = random_graph(n, rng);
    // plain: 7-subsets inducing a family member
    std::uint64_t plain = 0;
    std::vector<int> idx(7);
    for (int i = 0; i < 7; ++i) idx[i] = i;
    while (true) {
      std::vector<std::pair<int, int>> red;
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
          if (g.is_red(idx[i], idx[j])) red.push_back({i, j});
      const canonical_key k = canonical_form(make_graph(7, red));
      for (const colored_graph& f : cbb_family())
        if (k == canonical_form(f)) {
          ++plain;
          break;
        }
      int i = 6;
      while (i >= 0 && idx[i] == n - 7 + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < 7; ++j) idx[j] = idx[j - 1] + 1;
    }
    CHECK(count_cbb(g) == plain);
  }
}

TEST_CASE("density estimate converges on a known graph") {
  const colored_graph g = from_graph6(to_graph6(mobius_ladder8()));
  // exact density: 8 / C(8,5) = 1/7
  const auto est = estimate_c5_density(g, 200000, 5);
  CHECK(est.samples == 200000);
  CHECK(std::abs(est.density - 1.0 / 7.0) < 5 * est.std_error + 1e-9);
}
