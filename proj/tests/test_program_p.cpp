// Program (P): exact objective values, the medium-range survivor scan, the
// symmetry expansion of survivors, and funky-edge budgets.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <iterator>
#include <random>
#include <set>

#include "c5/program_p.hpp"
#include "doctest.h"

using namespace c5;

namespace {

double as_double(const bigrat& q) { return q.convert_to<double>(); }

struct frozen_survivor {
  int n;
  y_tuple y;
  double objective;
  int budget;
};

// independently recomputed reference values for the scan over 9 <= n <= 22
const frozen_survivor k_frozen[] = {
    {9, {2, 2, 2, 2, 1}, -2.334008910e+01, 6},
    {9, {3, 2, 2, 1, 1}, -2.404537410e+01, 5},
    {9, {3, 3, 1, 1, 1}, -1.176238395e+01, 4},
    {9, {4, 2, 1, 1, 1}, -9.475481429e+00, 3},
    {11, {3, 2, 2, 2, 2}, -6.493112138e+00, 3},
    {12, {3, 3, 2, 2, 2}, -3.577365644e+01, 6},
    {12, {3, 3, 3, 2, 1}, -1.340600322e+01, 5},
    {12, {4, 2, 2, 2, 2}, -3.056664192e+01, 5},
    {12, {4, 3, 2, 2, 1}, -7.603044036e+00, 4},
    {13, {3, 3, 3, 2, 2}, -4.516881983e+01, 6},
    {13, {3, 3, 3, 3, 1}, -1.532692680e+01, 5},
    {13, {4, 3, 2, 2, 2}, -4.332408664e+01, 5},
    {13, {4, 3, 3, 2, 1}, -8.775251411e+00, 4},
    {13, {5, 2, 2, 2, 2}, -7.736947315e+00, 3},
    {14, {3, 3, 3, 3, 2}, -8.044741159e+00, 5},
    {14, {4, 3, 3, 2, 2}, -1.511983635e+00, 4},
    {17, {4, 4, 3, 3, 3}, -2.703338976e+01, 6},
    {17, {5, 3, 3, 3, 3}, -4.969771992e+00, 5},
    {18, {4, 4, 4, 3, 3}, -2.302228468e+01, 6},
    {18, {5, 4, 3, 3, 3}, -1.199039644e+01, 5},
};

}  // namespace

TEST_CASE("objective spot values") {
  const cycle_table table(40);
  const auto balanced = objective_p(10, {2, 2, 2, 2, 2}, table);
  REQUIRE(balanced.objective.has_value());
  CHECK(balanced.feasible);
  CHECK(as_double(*balanced.objective) ==
        doctest::Approx(4.844798387036e-01).epsilon(1e-10));

  const auto split = objective_p(9, {3, 3, 1, 1, 1}, table);
  REQUIRE(split.objective.has_value());
  CHECK(as_double(*split.objective) ==
        doctest::Approx(-1.176238395454e+01).epsilon(1e-10));

  // pair-sum too small: infeasible even with zero funky edges
  const auto skew = objective_p(10, {6, 1, 1, 1, 1}, table);
  CHECK(!skew.feasible);
  CHECK(!skew.objective.has_value());

  CHECK_THROWS_AS((void)objective_p(10, {2, 2, 2, 2, 1}, table), std::invalid_argument);
  CHECK_THROWS_AS((void)objective_p(10, {2, 2, 2, 1, 2}, table), std::invalid_argument);
}

TEST_CASE("medium scan reproduces the frozen survivor list") {
  const cycle_table table(25);
  const scan_result res = scan_medium(9, 22, table);
  CHECK(res.n_lo == 9);
  CHECK(res.n_hi == 22);
  CHECK(res.tuples_evaluated > 0);
  REQUIRE(res.survivors.size() == std::size(k_frozen));
  for (std::size_t i = 0; i < res.survivors.size(); ++i) {
    const auto& got = res.survivors[i];
    const auto& want = k_frozen[i];
    CHECK(got.n == want.n);
    CHECK(got.y_counts == want.y);
    REQUIRE(got.objective.has_value());
    CHECK(*got.objective < 0);
    CHECK(as_double(*got.objective) ==
          doctest::Approx(want.objective).epsilon(1e-8));
    const auto budget = max_funky_edges(got.y_counts, got.n, table);
    CHECK(budget.feasible);
    CHECK(budget.max_edges == want.budget);
  }
  // survivor n values: nothing between 19 and 22
  std::set<int> ns;
  for (const auto& s : res.survivors) ns.insert(s.n);
  CHECK(ns == std::set<int>{9, 11, 12, 13, 14, 17, 18});
}

TEST_CASE("scan is deterministic across worker counts") {
  const cycle_table table(25);
  const scan_result one = scan_medium(9, 18, table, 1);
  const scan_result two = scan_medium(9, 18, table, 2);
  CHECK(one.tuples_evaluated == two.tuples_evaluated);
  REQUIRE(one.survivors.size() == two.survivors.size());
  for (std::size_t i = 0; i < one.survivors.size(); ++i) {
    CHECK(one.survivors[i].n == two.survivors[i].n);
    CHECK(one.survivors[i].y_counts == two.survivors[i].y_counts);
    CHECK(*one.survivors[i].objective == *two.survivors[i].objective);
  }
}

TEST_CASE("scan range validation") {
  const cycle_table table(25);
  CHECK_THROWS_AS((void)scan_medium(8, 10, table), std::invalid_argument);
  CHECK_THROWS_AS((void)scan_medium(9, 26, table), std::invalid_argument);
}

TEST_CASE("the gap band: first reappearance at n = 873") {
  const cycle_table table(1000);
  CHECK(scan_medium(872, 872, table).survivors.empty());
  const scan_result res = scan_medium(873, 873, table);
  REQUIRE(res.survivors.size() >= 1);
  const auto& first = res.survivors.front();
  CHECK(first.y_counts == y_tuple{176, 175, 174, 174, 174});
  CHECK(as_double(*first.objective) ==
        doctest::Approx(-850474.2371463338).epsilon(1e-10));
}

TEST_CASE("symmetry expansion of a survivor tuple") {
  const auto reps = expand_to_x({3, 3, 1, 1, 1});
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == x_tuple{1, 1, 1, 3, 3});
  CHECK(reps[1] == x_tuple{1, 1, 3, 1, 3});
  // the pentagram map merges the two into one class
  CHECK(color_swap_classes(reps).size() == 1);
  // balanced tuple has a single arrangement
  CHECK(expand_to_x({2, 2, 2, 2, 2}).size() == 1);
}

TEST_CASE("orbit minima are invariant on the orbit") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    x_tuple t;
    for (int& v : t) v = 1 + int(rng() % 5);
    const x_tuple d = detail::d10_min(t);
    CHECK(detail::d10_min(detail::rotate_x(t)) == d);
    CHECK(detail::d10_min(detail::reflect_x(t)) == d);
    const x_tuple f = detail::f20_min(t);
    CHECK(detail::f20_min(detail::swap_x(t)) == f);
    CHECK(f <= d);
  }
}

TEST_CASE("survivor expansion against the appendix list") {
  const cycle_table table(25);
  const scan_result res = scan_medium(9, 22, table);
  std::set<x_tuple> ours;
  for (const auto& s : res.survivors)
    for (const auto& x : expand_to_x(s.y_counts)) ours.insert(x);
  CHECK(ours.size() == 45);

  std::set<x_tuple> appendix;
  for (const auto& x : appendix_x_tuples()) appendix.insert(detail::d10_min(x));
  CHECK(appendix_x_tuples().size() == 23);
  CHECK(appendix.size() == 23);  // entries are pairwise D10-inequivalent

  std::set<x_tuple> common, ours_only, appendix_only;
  std::set_intersection(ours.begin(), ours.end(), appendix.begin(), appendix.end(),
                        std::inserter(common, common.end()));
  std::set_difference(ours.begin(), ours.end(), appendix.begin(), appendix.end(),
                      std::inserter(ours_only, ours_only.end()));
  std::set_difference(appendix.begin(), appendix.end(), ours.begin(), ours.end(),
                      std::inserter(appendix_only, appendix_only.end()));
  CHECK(common.size() == 20);
  CHECK(ours_only.size() == 25);
  CHECK(appendix_only ==
        std::set<x_tuple>{{3, 3, 3, 3, 4}, {4, 4, 4, 5, 5}, {4, 4, 5, 4, 5}});

  // class count handed to the placement stage
  std::vector<x_tuple> all(ours.begin(), ours.end());
  CHECK(color_swap_classes(all).size() == 26);
}

TEST_CASE("funky budgets") {
  const cycle_table table(25);
  CHECK(max_funky_edges({2, 2, 2, 2, 2}, 10, table).max_edges == 0);
  const auto skew = max_funky_edges({6, 1, 1, 1, 1}, 10, table);
  CHECK(!skew.feasible);
  CHECK(skew.max_edges == 0);
  CHECK_THROWS_AS((void)max_funky_edges({2, 2, 2, 2, 2}, 11, table), std::invalid_argument);
  // budgets are permutation-invariant in the tuple
  CHECK(max_funky_edges({1, 1, 1, 3, 3}, 9, table).max_edges ==
        max_funky_edges({3, 3, 1, 1, 1}, 9, table).max_edges);
}
