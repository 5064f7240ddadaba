// Medium-range scan of program (P): exact objective for candidate part-size
// tuples, symmetry expansion of the survivors, and funky-edge budgets.
//
// A tuple of part sizes (c1 >= ... >= c5, sum n) survives when the objective
// is strictly negative; survivors are the only candidates that could beat the
// balanced blow-up and are handed to the exact placement stage.
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "c5/constants.hpp"

namespace c5 {

using y_tuple = std::array<int, 5>;

// ---- objective ----

// Outcome of program (P) on one tuple.  objective is present only when the
// derived funky fraction f is strictly positive; f < 0 means the tuple
// violates the Lemma-2 feasibility bound even with zero funky edges and is
// reported infeasible, f = 0 closes the case without an objective.
struct p_outcome {
  int n = 0;
  y_tuple y_counts{};  // n*y_i, descending
  std::optional<bigrat> objective;
  bool feasible = true;
};

namespace detail {

inline void check_y_tuple(int n, const y_tuple& c) {
  long long sum = 0;
  for (int i = 0; i < 5; ++i) {
    if (c[i] < 0) throw std::invalid_argument("y tuple: negative part");
    if (i > 0 && c[i] > c[i - 1]) throw std::invalid_argument("y tuple: not descending");
    sum += c[i];
  }
  if (sum != n) throw std::invalid_argument("y tuple: parts do not sum to n");
}

inline bigint sum_pair_products(const y_tuple& c) {
  bigint s = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) s += bigint(c[i]) * c[j];
  return s;
}

}  // namespace detail

// Exact objective of program (P).  f and d are tied to the tuple:
//   f = sum_{i<j} y_i y_j - numfunky_rhs(C(n*)),   d = (f*binom(n,2) - 1)/n,
// and the objective compares the bounded gain of f*binom(n,2) funky edges
// against the cycle deficit count(n) - (prod c_i + sum count(c_i)).
inline p_outcome objective_p(int n, const y_tuple& c, const cycle_table& table) {
  detail::check_y_tuple(n, c);
  const bigrat r = numfunky_rhs(table.cstar(n));
  const bigint nn = bigint(n) * n;
  const bigrat f = bigrat(detail::sum_pair_products(c), nn) - r;
  p_outcome out;
  out.n = n;
  out.y_counts = c;
  if (f < 0) {
    out.feasible = false;
    return out;
  }
  if (f == 0) return out;  // closed with zero funky edges
  const bigint b2 = bigint(n) * (n - 1) / 2;
  const bigrat d = (f * b2 - 1) / n;
  std::array<bigrat, 5> y;
  for (int i = 0; i < 5; ++i) y[i] = bigrat(c[i], n);
  const bigrat ys = y[0] + y[1] + (y[2] + y[3] + y[4]) / 2;
  const bigrat core = y[2] * y[3] * y[4]
                    - bigrat(3, 8) * d * y[2] * y[3]
                    - bigrat(1, 8) * f * y[2]
                    - bigrat(1, 4) * (f - (f + d) / n - bigrat(1, nn)) * ys
                    - bigrat(9, 32) * (d + bigrat(2, n)) * y[0] * y[0];
  bigint prod = 1, tail = 0;
  for (int i = 0; i < 5; ++i) {
    prod *= c[i];
    tail += table.count(c[i]);
  }
  out.objective = f * b2 * nn * n * core + bigrat(table.count(n) - prod - tail);
  return out;
}

// ---- integer scan core ----

namespace detail {

// Per-n integer data for sign-only evaluation.  With S = n + 3120 count(n),
//   C(n*) = S / (26 n^5),   numfunky_rhs = P/Q,
//   Q = 21*10^15*S,         P = 20 b S - 52 a n^5,
// where A = a/10^15 and B = b/10^14 are the decimal constants.  Then
// f = F/(n^2 Q) with F = (sum_{i<j} c_i c_j) Q - P n^2, and clearing all
// denominators from the objective gives an integer N with obj = N/(32 D1^2),
// D1 = n^2 Q.  Survivor iff N < 0.
struct scan_ctx {
  int n = 0;
  bigint count_n;
  bigint q, p;
  bigint d1;       // n^2 Q
  bigint d1sq32;   // 32 D1^2
  long long b2 = 0;
  long long sqmax = 0;  // f > 0  iff  sum c_i^2 <= sqmax
};

inline scan_ctx make_scan_ctx(int n, const cycle_table& table) {
  scan_ctx cx;
  cx.n = n;
  cx.count_n = table.count(n);
  const bigint s = n + 3120 * cx.count_n;
  const bigint n2 = bigint(n) * n;
  const bigint n5 = n2 * n2 * n;
  cx.q = 21 * constants::pow10(15) * s;
  cx.p = 20 * bigint("875407592662244") * s - 52 * bigint("175431374077117") * n5;
  cx.d1 = n2 * cx.q;
  cx.d1sq32 = 32 * cx.d1 * cx.d1;
  cx.b2 = (long long)n * (n - 1) / 2;
  // sum c^2 Q < n^2 (Q - 2P)  <=>  sum c^2 <= floor((n^2(Q-2P) - 1)/Q)
  const bigint thr = n2 * (cx.q - 2 * cx.p);
  if (thr <= 0) throw std::logic_error("scan_ctx: nonpositive feasibility threshold");
  cx.sqmax = ((thr - 1) / cx.q).convert_to<long long>();
  return cx;
}

// Integer numerator N of the objective (obj = N / (32 D1^2)); requires f > 0.
// counts64 holds count(m) for all m up to n (fits in 64 bits well past the
// scan range).  Writing F = f n^2 Q, K = F B2, G = K - D1, the cleared form is
//   N = K (32 c3 c4 c5 D1 - 12 G c3 c4 - 4 F c3 n^2 - 4 K W
//          - 9 (G + 2 D1) c1^2) + 32 T D1^2,
// with W = 2c1 + 2c2 + c3 + c4 + c5 and T = count(n) - prod c - sum count(c_i).
inline bigint objective_numerator(const scan_ctx& cx, const y_tuple& c,
                                  const std::vector<long long>& counts64) {
  const bigint n2 = bigint(cx.n) * cx.n;
  const bigint f = sum_pair_products(c) * cx.q - cx.p * n2;
  const bigint k = f * cx.b2;
  const bigint g = k - cx.d1;
  const long long w = 2LL * c[0] + 2 * c[1] + c[2] + c[3] + c[4];
  long long prod = 1, tail = 0;
  for (int i = 0; i < 5; ++i) {
    prod *= c[i];
    tail += counts64[c[i]];
  }
  const long long t = counts64[cx.n] - prod - tail;
  const bigint inner = 32 * bigint(c[2]) * c[3] * c[4] * cx.d1
                     - 12 * g * c[2] * c[3]
                     - 4 * f * c[2] * n2
                     - 4 * k * w
                     - 9 * (g + 2 * cx.d1) * bigint(c[0]) * c[0];
  return k * inner + t * cx.d1sq32;
}

}  // namespace detail

// ---- medium scan ----

struct scan_result {
  int n_lo = 0, n_hi = 0;
  std::vector<p_outcome> survivors;       // objective < 0, sorted by (n, tuple)
  std::uint64_t tuples_evaluated = 0;     // tuples passing the f > 0 gate
};

namespace detail {

// Enumerate descending tuples with sum n and sum of squares <= cx.sqmax
// (the f > 0 feasibility gate), evaluating the integer numerator on each.
// The partial-tuple prune uses the minimal square completion: the most
// balanced split of the remaining sum.
template <class Fn>
inline std::uint64_t for_each_feasible(const scan_ctx& cx, Fn&& fn) {
  const int n = cx.n;
  std::uint64_t evaluated = 0;
  y_tuple c{};
  auto min_squares = [](int total, int parts) -> long long {
    const long long q = total / parts, r = total % parts;
    return r * (q + 1) * (q + 1) + (parts - r) * q * q;
  };
  // depth-first over c[0] >= c[1] >= ... >= c[4] >= 1
  const auto rec = [&](auto&& self, int depth, int rem, long long sq) -> void {
    if (depth == 4) {
      c[4] = rem;
      const long long total = sq + (long long)rem * rem;
      if (rem >= 1 && rem <= c[3] && total <= cx.sqmax) {
        ++evaluated;
        fn(c);
      }
      return;
    }
    const int parts_left = 5 - depth;
    const int hi = std::min(depth == 0 ? n : c[depth - 1], rem - (parts_left - 1));
    const int lo = (rem + parts_left - 1) / parts_left;
    for (int v = hi; v >= lo; --v) {
      const long long sq2 = sq + (long long)v * v;
      if (sq2 + min_squares(rem - v, parts_left - 1) > cx.sqmax) continue;
      c[depth] = v;
      self(self, depth + 1, rem - v, sq2);
    }
  };
  rec(rec, 0, n, 0);
  return evaluated;
}

}  // namespace detail

// Scan all part-size tuples for n in [n_lo, n_hi], returning the survivors
// (strictly negative objective) with their exact objective values.  The hot
// loop works on cleared-denominator integers; survivors are re-evaluated
// through objective_p so the reported rational comes from the literal form.
inline scan_result scan_medium(int n_lo, int n_hi, const cycle_table& table,
                               int workers = 1) {
  if (n_lo < 9) throw std::invalid_argument("scan_medium: n_lo below Lemma-1 regime");
  if (n_hi > table.n_max()) throw std::invalid_argument("scan_medium: table too small");
  if (workers < 1) workers = 1;
  std::vector<long long> counts64(n_hi + 1);
  for (int m = 0; m <= n_hi; ++m) counts64[m] = table.count(m).convert_to<long long>();

  struct shard {
    std::vector<p_outcome> survivors;
    std::uint64_t evaluated = 0;
  };
  std::vector<shard> shards(workers);
  std::atomic<int> next{n_lo};
  auto work = [&](shard& sh) {
    for (;;) {
      const int n = next.fetch_add(1);
      if (n > n_hi) break;
      const detail::scan_ctx cx = detail::make_scan_ctx(n, table);
      sh.evaluated += detail::for_each_feasible(cx, [&](const y_tuple& c) {
        if (detail::objective_numerator(cx, c, counts64) < 0)
          sh.survivors.push_back(objective_p(n, c, table));
      });
    }
  };
  if (workers == 1) {
    work(shards[0]);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work, std::ref(shards[i]));
    for (auto& th : pool) th.join();
  }

  scan_result res;
  res.n_lo = n_lo;
  res.n_hi = n_hi;
  for (auto& sh : shards) {
    res.tuples_evaluated += sh.evaluated;
    res.survivors.insert(res.survivors.end(), sh.survivors.begin(), sh.survivors.end());
  }
  std::sort(res.survivors.begin(), res.survivors.end(),
            [](const p_outcome& a, const p_outcome& b) {
              if (a.n != b.n) return a.n < b.n;
              return a.y_counts < b.y_counts;
            });
  return res;
}

// ---- symmetry expansion ----

using x_tuple = std::array<int, 5>;

namespace detail {

inline x_tuple rotate_x(const x_tuple& t) {
  return {t[1], t[2], t[3], t[4], t[0]};
}
inline x_tuple reflect_x(const x_tuple& t) {
  return {t[4], t[3], t[2], t[1], t[0]};
}
// color swap sends the frame to its pentagram; positions map by i -> 2i mod 5
inline x_tuple swap_x(const x_tuple& t) {
  return {t[0], t[2], t[4], t[1], t[3]};
}

inline x_tuple d10_min(x_tuple t) {
  x_tuple best = t;
  for (int r = 0; r < 5; ++r) {
    best = std::min({best, t, reflect_x(t)});
    t = rotate_x(t);
  }
  return best;
}

inline x_tuple f20_min(const x_tuple& t) {
  x_tuple best = d10_min(t);
  best = std::min(best, d10_min(swap_x(best)));
  return best;
}

}  // namespace detail

// All assignments of the y values to cycle positions, deduplicated under
// rotation and reflection of the frame; lex-min representatives, sorted.
// (The appendix list is written at this level: the pentagram map of a color
// swap would further merge some of its entries, see color_swap_classes.)
inline std::vector<x_tuple> expand_to_x(const y_tuple& y) {
  x_tuple v = y;
  std::sort(v.begin(), v.end());
  std::set<x_tuple> reps;
  do {
    reps.insert(detail::d10_min(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return {reps.begin(), reps.end()};
}

// Group rotation/reflection representatives into classes modulo the color
// swap of the frame; returns the distinct class minima, sorted.
inline std::vector<x_tuple> color_swap_classes(const std::vector<x_tuple>& xs) {
  std::set<x_tuple> reps;
  for (const auto& t : xs) reps.insert(detail::f20_min(t));
  return {reps.begin(), reps.end()};
}

// ---- funky-edge budget ----

struct funky_budget {
  int max_edges = 0;
  bool feasible = true;
};

// Largest number of funky edges consistent with the Lemma-2 bound for an
// x-tuple on n vertices: |E_f| <= n^2 (sum_{i<j} x_i x_j - numfunky_rhs).
// A tuple violating the bound even at zero funky edges is infeasible.
inline funky_budget max_funky_edges(const x_tuple& x, int n, const cycle_table& table) {
  long long sum = 0;
  for (int v : x) {
    if (v < 0) throw std::invalid_argument("max_funky_edges: negative part");
    sum += v;
  }
  if (sum != n) throw std::invalid_argument("max_funky_edges: parts do not sum to n");
  const bigrat r = numfunky_rhs(table.cstar(n));
  bigint scc = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) scc += bigint(x[i]) * x[j];
  const bigrat diff = bigrat(scc, bigint(n) * n) - r;
  if (diff < 0) return {0, false};
  const bigrat m = diff * n * n;
  return {(numerator(m) / denominator(m)).convert_to<int>(), true};
}

// ---- appendix reference list ----

// The 23 x-tuples of the appendix, verbatim (rotation/reflection level).
inline const std::vector<x_tuple>& appendix_x_tuples() {
  static const std::vector<x_tuple> list = {
      {1, 1, 1, 3, 3}, {1, 3, 1, 1, 3}, {1, 1, 2, 2, 3}, {1, 2, 3, 2, 1},
      {1, 2, 3, 1, 2}, {1, 2, 2, 1, 3}, {1, 2, 2, 2, 2}, {2, 2, 2, 2, 3},
      {2, 2, 2, 2, 4}, {2, 2, 2, 3, 3}, {2, 3, 2, 2, 3}, {1, 3, 3, 3, 3},
      {2, 2, 2, 3, 4}, {2, 2, 3, 3, 3}, {2, 3, 2, 3, 3}, {2, 3, 3, 3, 3},
      {3, 3, 3, 3, 4}, {3, 3, 3, 4, 4}, {3, 4, 3, 3, 4}, {3, 3, 4, 4, 4},
      {3, 4, 3, 4, 4}, {4, 4, 4, 5, 5}, {4, 5, 4, 4, 5},
  };
  return list;
}

}  // namespace c5
