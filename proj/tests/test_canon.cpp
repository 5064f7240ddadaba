// Canonical forms: relabeling invariance, class enumeration against the
// known unlabeled-graph counts, and the swap-closed variant.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "c5/canon.hpp"
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

colored_graph relabel(const colored_graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> red;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.is_red(u, v)) red.push_back({perm[u], perm[v]});
  return make_graph(g.n, red);
}

}  // namespace

TEST_CASE("canonical form is relabeling-invariant") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + int(rng() % 8);
    const colored_graph g = random_graph(n, rng);
    const canonical_key k = canonical_form(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 3; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(g, perm)) == k);
    }
  }
}

TEST_CASE("class counts match the unlabeled-graph sequence") {
  // 1, 2, 4, 11, 34, 156, 1044 unlabeled graphs on 1..7 vertices
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    const auto classes = enumerate_graphs(n);
    CHECK(classes.size() == expected[n - 1]);
    std::set<canonical_key> keys;
    for (const colored_graph& g : classes) {
      CHECK(g.n == n);
      keys.insert(canonical_form(g));
    }
    CHECK(keys.size() == classes.size());  // pairwise distinct
  }
}

TEST_CASE("emitted classes survive relabel-then-canonicalize") {
  std::mt19937_64 rng(23);
  for (const colored_graph& g : enumerate_graphs(6)) {
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(g, perm)) == canonical_form(g));
  }
}

TEST_CASE("canonical key reconstructs its graph") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 + int(rng() % 9);
    const colored_graph g = random_graph(n, rng);
    const canonical_key k = canonical_form(g);
    const colored_graph h = from_canonical(k);
    CHECK(h.n == n);
    CHECK(canonical_form(h) == k);
  }
}

TEST_CASE("swap-closed variant identifies complements") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 2 + int(rng() % 8);
    const colored_graph g = random_graph(n, rng);
    CHECK(canonical_form(g, true) == canonical_form(complement(g), true));
  }
  // C5 is self-complementary already at the plain level
  const colored_graph c5g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(canonical_form(c5g) == canonical_form(complement(c5g)));
}
