// Balance verification for blow-up part sizes, the density threshold gates,
// and the large-n induction chain for the optimal-density bound.
#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "c5/blowup.hpp"

namespace c5 {

// ---- balance of part sizes ----

struct balance_report {
  bool ok = true;
  int n_max = 0;
  int witness_n = -1;             // first n with a violation
  std::array<int, 5> witness{};   // offending composition
};

namespace detail {

inline bigrat rat_pow(const bigrat& base, int e) {
  bigrat r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// max product of `parts` integers in [1, cap] summing to rem; requires
// parts <= rem <= cap * parts (as equal as possible, never exceeding cap)
inline long long best_split_product(int rem, int parts, int cap) {
  (void)cap;  // feasibility guarantees the balanced split respects the cap
  const int q = rem / parts, r = rem % parts;
  long long p = 1;
  for (int i = 0; i < parts; ++i) p *= (i < r) ? q + 1 : q;
  return p;
}

}  // namespace detail

// For every 5 <= n <= n_max, the balanced composition uniquely maximizes
// partition_cycle_count over sorted 5-part compositions of n.  Prefix
// pruning: a partial composition is abandoned when even the best completion
// (balanced product split, all counts at the largest allowed part) cannot
// reach the table count.
inline balance_report verify_balance_small(int n_max, const cycle_table& table) {
  balance_report rep;
  rep.n_max = n_max;
  std::vector<long long> cnt(n_max + 1);
  for (int i = 0; i <= n_max; ++i) cnt[i] = table.count(i).convert_to<long long>();
  for (int n = 5; n <= n_max; ++n) {
    const long long target = cnt[n];
    auto bal = balanced_sizes(n);
    std::sort(bal.begin(), bal.end(), std::greater<int>());
    if (partition_cycle_count(bal, table) != target) {
      rep.ok = false;
      rep.witness_n = n;
      rep.witness = bal;
      return rep;
    }
    // prefix value and prune bound after fixing c1 >= ... >= cj
    auto prune = [&](long long prefix_prod, long long prefix_cnt, int rem, int parts,
                     int cap) {
      const long long ub_prod = prefix_prod * detail::best_split_product(rem, parts, cap);
      const long long ub_cnt = prefix_cnt + parts * cnt[std::min(cap, rem - (parts - 1))];
      return ub_prod + ub_cnt < target;
    };
    for (int c1 = (n + 4) / 5; c1 <= n - 4; ++c1) {
      if (prune(c1, cnt[c1], n - c1, 4, c1)) continue;
      for (int c2 = (n - c1 + 3) / 4; c2 <= std::min(c1, n - c1 - 3); ++c2) {
        if (prune((long long)c1 * c2, cnt[c1] + cnt[c2], n - c1 - c2, 3, c2)) continue;
        for (int c3 = (n - c1 - c2 + 2) / 3; c3 <= std::min(c2, n - c1 - c2 - 2); ++c3) {
          const int rem = n - c1 - c2 - c3;
          const long long pp = (long long)c1 * c2 * c3;
          const long long pc = cnt[c1] + cnt[c2] + cnt[c3];
          if (prune(pp, pc, rem, 2, c3)) continue;
          for (int c4 = (rem + 1) / 2; c4 <= std::min(c3, rem - 1); ++c4) {
            const int c5 = rem - c4;
            const long long v = pp * c4 * c5 + pc + cnt[c4] + cnt[c5];
            const std::array<int, 5> c{c1, c2, c3, c4, c5};
            if (v > target || (v == target && c != bal)) {
              rep.ok = false;
              rep.witness_n = n;
              rep.witness = c;
              return rep;
            }
          }
        }
      }
    }
  }
  return rep;
}

// ---- density threshold gates ----

struct threshold_report {
  bool ok = true;
  int witness_n = -1;          // first violating n, if any
  int min_small_n = 0;         // argmin of C(n*) over [9, 100)
  bigrat min_small;
  int min_large_n = 0;         // argmin of C(n*) over [1000, 5000]
  bigrat min_large;
  bigrat floor_bound_100;      // 5!((n-4)/(5n))^5 at n = 100
  bigrat c166;
};

// C(n*) > 0.03 on 9 <= n < 100, C(n*) > 0.0384609 on 1000 <= n <= 5000,
// the closed-form floor bound at n = 100, and C(166) <= 0.04086
inline threshold_report verify_cstar_thresholds(const cycle_table& table) {
  threshold_report rep;
  auto gate = [&](int lo, int hi, const bigrat& bound, int& argmin, bigrat& minval) {
    for (int n = lo; n <= hi; ++n) {
      const bigrat v = table.cstar(n);
      if (argmin == 0 || v < minval) {
        argmin = n;
        minval = v;
      }
      if (!(v > bound) && rep.witness_n < 0) {
        rep.ok = false;
        rep.witness_n = n;
      }
    }
  };
  gate(9, 99, constants::c5_threshold(), rep.min_small_n, rep.min_small);
  gate(1000, 5000, constants::cstar_large(), rep.min_large_n, rep.min_large);
  rep.floor_bound_100 = bigrat(120) * detail::rat_pow(bigrat(96, 500), 5);
  if (!(rep.floor_bound_100 > bigrat(31, 1000))) {
    rep.ok = false;
    if (rep.witness_n < 0) rep.witness_n = 100;
  }
  rep.c166 = table.density(166);
  if (!(rep.c166 <= constants::c166_bound())) {
    rep.ok = false;
    if (rep.witness_n < 0) rep.witness_n = 166;
  }
  return rep;
}

// ---- induction chain ----

struct proposition_report {
  bool ok = true;
  int witness_n = -1, witness_i = -1;  // first chain violation
  int worst_n = 0, worst_i = 0;        // smallest margin
  bigrat worst_margin;
  bool rhs_exceeds_at_1000 = false;    // chain RHS > 0.0384609 for n=1000, all i
};

// chain RHS (n/(5n+i))^5 (120 + 5C + 120 i/n) with C = min(C(n*), C((n+1)*))
inline bigrat proposition_chain_rhs(int n, int i, const cycle_table& table) {
  const bigrat c = std::min(table.cstar(n), table.cstar(n + 1));
  const int nn = 5 * n + i;
  return detail::rat_pow(bigrat(n, nn), 5) * (bigrat(120) + bigrat(5) * c + bigrat(120 * i, n));
}

// C((5n+i)*) >= chain RHS for every n in [n_lo, n_hi], i in 0..4, exactly
inline proposition_report verify_proposition_step(const cycle_table& table,
                                                  int n_lo = 1000, int n_hi = 5000) {
  proposition_report rep;
  bool first = true;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int i = 0; i < 5; ++i) {
      const bigrat margin = table.cstar(5 * n + i) - proposition_chain_rhs(n, i, table);
      if (margin < 0 && rep.witness_n < 0) {
        rep.ok = false;
        rep.witness_n = n;
        rep.witness_i = i;
      }
      if (first || margin < rep.worst_margin) {
        first = false;
        rep.worst_n = n;
        rep.worst_i = i;
        rep.worst_margin = margin;
      }
    }
  rep.rhs_exceeds_at_1000 = true;
  for (int i = 0; i < 5; ++i)
    if (!(proposition_chain_rhs(1000, i, table) > constants::cstar_large()))
      rep.rhs_exceeds_at_1000 = false;
  return rep;
}

// ---- large-n constant ----

// 0.166^3 - (8 c166 / 5!) 0.234^3, positive when c166 <= 0.04086
inline bigrat claim4_large_constant(const bigrat& c166) {
  return detail::rat_pow(constants::box_lo(), 3) -
         bigrat(8, 120) * c166 * detail::rat_pow(constants::box_hi(), 3);
}

inline bigrat claim4_large_constant(const cycle_table& table) {
  return claim4_large_constant(table.density(166));
}

}  // namespace c5
