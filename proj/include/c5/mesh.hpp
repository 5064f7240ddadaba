// Dynamic-mesh branch-and-bound verifiers for the two funky-density
// programs: the 4-variable part-size program at d = 0.2 and the 9-variable
// vertex-split program at n = 1000.
//
// All arithmetic is IEEE double with a 0.0001 acceptance slack; cell bounds
// under-estimate the objective by construction (endpoint worst cases), so a
// positive verdict certifies positivity of the true objective.  Counters are
// deterministic for a fixed configuration.
#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "c5/constants.hpp"

namespace c5 {

// ---- shared constants (exact doubles, frozen) ----

namespace mesh_detail {

// 2(-A + B c*)/(21 c*) at the large-n density threshold c* = 0.0384609
inline constexpr double rhs = 0.39931280792185114;
// (2000/999)(2/5 - rhs): the constraint maximum of the funky density f
inline constexpr double fmax = 0.0013757599162139576;
inline constexpr double slack = 0.0001;
inline constexpr double inf = std::numeric_limits<double>::infinity();

}  // namespace mesh_detail

// ---- report ----

struct verifier_report {
  bool verdict = false;        // every cell certified above the slack
  long long objective_calls = 0;
  long long cells_refined = 0;  // cells split into children
  long long pruned_order = 0;
  long long pruned_feasibility = 0;
  long long max_stack = 0;
  int max_depth = 0;
  double min_bound = mesh_detail::inf;  // smallest accepted cell bound
};

// ---- 4-variable program (d = 0.2) ----

struct pprime_cell {
  std::array<double, 4> t{};  // bases of y1..y4; y5 dependent
  double eps = 0.0;
  int depth = 0;
};

namespace mesh_detail {

inline constexpr double d_low = 0.2;

// Eq-level cell lower bound of the reduced objective: endpoints t_i and
// t_i + eps placed per sign of each term
inline double pprime_obj2(double t1, double t2, double t3, double t4, double eps,
                          double f = fmax, double d = d_low) {
  const double t5 = 1.0 - t1 - t2 - t3 - t4;
  return ((t3 + eps) * (t4 + eps) * (t5 - 4.0 * eps)
          - 0.375 * d * (t3 + eps) * (t4 + eps)
          - 0.125 * f * (t3 + eps)
          - 0.25 * f * (t1 + t2 + 0.5 * (t3 + t4 + t5) + eps)
          - 0.28125 * d * (t1 + eps) * (t1 + eps)
          - (9.0 / 16000.0) * (t1 + eps) * (t1 + eps));
}

// can the cell contain an ordered point y1 >= ... >= y5 >= 0?
inline bool pprime_order_ok(double t1, double t2, double t3, double t4, double eps) {
  const double t5 = 1.0 - t1 - t2 - t3 - t4;
  return t1 + eps >= t2 && t2 + eps >= t3 && t3 + eps >= t4 &&
         t4 + eps >= t5 - 4.0 * eps && t5 >= 0.0;
}

// generous pair-sum feasibility (funky density 0 side of the constraint)
inline bool pprime_feasible(double t1, double t2, double t3, double t4, double eps) {
  const double t5 = 1.0 - t1 - t2 - t3 - t4;
  double s = t5 * (1.0 - t5);
  const double ts[4] = {t1, t2, t3, t4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) s += (ts[i] + eps) * (ts[j] + eps);
  return s >= rhs;
}

}  // namespace mesh_detail

// certified lower bound of the reduced objective over the cell; +inf when
// the cell contains no ordered point or generously fails the pair-sum
// constraint (prune sentinel)
inline double pprime_cell_bound(const pprime_cell& c) {
  const auto [t1, t2, t3, t4] = c.t;
  if (!mesh_detail::pprime_order_ok(t1, t2, t3, t4, c.eps)) return mesh_detail::inf;
  if (!mesh_detail::pprime_feasible(t1, t2, t3, t4, c.eps)) return mesh_detail::inf;
  return mesh_detail::pprime_obj2(t1, t2, t3, t4, c.eps);
}

// reduced objective at an exact point (independent of the cell machinery;
// used by the soundness property checks)
inline double pprime_point_objective(double y1, double y2, double y3, double y4,
                                     double f = mesh_detail::fmax,
                                     double d = mesh_detail::d_low) {
  const double y5 = 1.0 - y1 - y2 - y3 - y4;
  return (y3 * y4 * y5 - 0.375 * d * y3 * y4 - 0.125 * f * y3
          - 0.25 * f * (y1 + y2 + 0.5 * (y3 + y4 + y5))
          - 0.28125 * d * y1 * y1 - (9.0 / 16000.0) * y1 * y1);
}

// Depth-first refinement over the box [0.166, 0.234]^4: cells bounded below
// the slack are halved into 2^4 children until every survivor clears it.
inline verifier_report run_pprime(int max_depth = 40) {
  using namespace mesh_detail;
  verifier_report rep;
  std::vector<pprime_cell> stack{{{0.166, 0.166, 0.166, 0.166}, 0.234 - 0.166, 0}};
  rep.max_stack = 1;
  while (!stack.empty()) {
    rep.max_stack = std::max(rep.max_stack, (long long)stack.size());
    const pprime_cell c = stack.back();
    stack.pop_back();
    rep.max_depth = std::max(rep.max_depth, c.depth);
    if (c.depth > max_depth) return rep;  // verdict stays negative
    const auto [t1, t2, t3, t4] = c.t;
    if (!pprime_order_ok(t1, t2, t3, t4, c.eps)) {
      ++rep.pruned_order;
      continue;
    }
    if (!pprime_feasible(t1, t2, t3, t4, c.eps)) {
      ++rep.pruned_feasibility;
      continue;
    }
    const double v = pprime_obj2(t1, t2, t3, t4, c.eps);
    ++rep.objective_calls;
    if (v < slack) {
      ++rep.cells_refined;
      const double h = c.eps * 0.5;
      for (int mask = 0; mask < 16; ++mask)
        stack.push_back({{(mask & 1) ? t1 + h : t1, (mask & 2) ? t2 + h : t2,
                          (mask & 4) ? t3 + h : t3, (mask & 8) ? t4 + h : t4},
                         h, c.depth + 1});
    } else if (v < rep.min_bound) {
      rep.min_bound = v;
    }
  }
  rep.verdict = true;
  return rep;
}

// ---- 9-variable program (n = 1000) ----

struct pdp_cell {
  std::array<double, 4> xb{};  // bases of x2..x5; x1 dependent
  std::array<double, 5> rb{};  // bases of r1..r5
  double eps = 0.0;
  int depth = 0;
};

namespace mesh_detail {

// funky term weight f * binom(n,2) / n^2 at n = 1000
inline const double fb = fmax * 0.4995;
// pair-sum feasibility threshold (2/5 in exact arithmetic)
inline const double feas_threshold = rhs + fmax * (999.0 / 2000.0);

// clipped per-variable ranges of a cell, 1-indexed; empty when the cell
// misses the box or generously fails any program constraint
struct pdp_ranges {
  std::array<double, 6> xlo{}, xhi{}, rlo{}, rhi{}, blo{}, bhi{};
};

inline bool clip_pdp_cell(const pdp_cell& c, pdp_ranges& rg) {
  for (int i = 2; i <= 5; ++i) {
    const double lo = std::max(c.xb[i - 2], 0.166);
    const double hi = std::min(c.xb[i - 2] + c.eps, 0.234);
    if (lo > hi) return false;
    rg.xlo[i] = lo;
    rg.xhi[i] = hi;
  }
  const double s_lo = rg.xlo[2] + rg.xlo[3] + rg.xlo[4] + rg.xlo[5];
  const double s_hi = rg.xhi[2] + rg.xhi[3] + rg.xhi[4] + rg.xhi[5];
  rg.xlo[1] = std::max(1.0 - s_hi, 0.166);
  rg.xhi[1] = std::min(1.0 - s_lo, 0.234);
  if (rg.xlo[1] > rg.xhi[1]) return false;
  for (int i = 1; i <= 5; ++i) {
    const double lo = std::max(c.rb[i - 1], 0.0);
    const double hi = std::min(c.rb[i - 1] + c.eps, rg.xhi[i]);
    if (lo > hi) return false;
    rg.rlo[i] = lo;
    rg.rhi[i] = hi;
    rg.blo[i] = std::max(rg.xlo[i] - rg.rhi[i], 0.0);
    rg.bhi[i] = rg.xhi[i] - rg.rlo[i];
  }
  double su = 0.0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) su += rg.xhi[i] * rg.xhi[j];
  if (su < feas_threshold) return false;
  // the split vertex has funky degree above 0.1 (the d > 0.2 subcase)
  if (rg.bhi[2] + rg.rhi[3] + rg.rhi[4] + rg.bhi[5] <= 0.1) return false;
  // the partition maximizes non-funky edges, so keeping the vertex in its
  // part beats the four alternatives; prune cells where some alternative
  // certainly wins
  const double keep_hi = rg.rhi[2] + rg.bhi[3] + rg.bhi[4] + rg.rhi[5];
  const double alts_lo[4] = {
      rg.rlo[1] + rg.blo[2] + rg.blo[3] + rg.rlo[4],
      rg.rlo[3] + rg.blo[4] + rg.blo[5] + rg.rlo[1],
      rg.rlo[4] + rg.blo[5] + rg.blo[1] + rg.rlo[2],
      rg.rlo[5] + rg.blo[1] + rg.blo[2] + rg.rlo[3]};
  for (const double alt : alts_lo)
    if (keep_hi < alt) return false;
  return true;
}

// the 30 bilinear expressions of the M3 maximum; factor = (list, index),
// list 0 = r, list 1 = b
struct m3_factor {
  int src;
  int idx;
};
using m3_term = std::array<m3_factor, 2>;

inline const std::vector<std::vector<m3_term>>& m3_table() {
  static const std::vector<std::vector<m3_term>> table = {
      {{{{1, 1}, {1, 2}}}, {{{1, 1}, {1, 5}}}, {{{1, 3}, {1, 2}}}},
      {{{{0, 5}, {1, 2}}}, {{{0, 2}, {1, 2}}}},
      {{{{1, 1}, {0, 3}}}, {{{1, 1}, {0, 1}}}},
      {{{{1, 2}, {1, 3}}}, {{{1, 2}, {1, 1}}}, {{{1, 4}, {1, 3}}}},
      {{{{0, 1}, {1, 3}}}, {{{0, 3}, {1, 3}}}},
      {{{{1, 2}, {0, 4}}}, {{{1, 2}, {0, 2}}}},
      {{{{1, 3}, {1, 4}}}, {{{1, 3}, {1, 2}}}, {{{1, 5}, {1, 4}}}},
      {{{{0, 2}, {1, 4}}}, {{{0, 4}, {1, 4}}}},
      {{{{1, 3}, {0, 5}}}, {{{1, 3}, {0, 3}}}},
      {{{{1, 4}, {1, 5}}}, {{{1, 4}, {1, 3}}}, {{{1, 1}, {1, 5}}}},
      {{{{0, 3}, {1, 5}}}, {{{0, 5}, {1, 5}}}},
      {{{{1, 4}, {0, 1}}}, {{{1, 4}, {0, 4}}}},
      {{{{1, 5}, {1, 1}}}, {{{1, 5}, {1, 4}}}, {{{1, 2}, {1, 1}}}},
      {{{{0, 4}, {1, 1}}}, {{{0, 1}, {1, 1}}}},
      {{{{1, 5}, {0, 2}}}, {{{1, 5}, {0, 5}}}},
      {{{{0, 1}, {0, 3}}}, {{{0, 5}, {0, 3}}}, {{{0, 1}, {0, 4}}}},
      {{{{1, 4}, {0, 3}}}, {{{1, 3}, {0, 3}}}},
      {{{{1, 5}, {0, 1}}}, {{{1, 1}, {0, 1}}}},
      {{{{0, 2}, {0, 4}}}, {{{0, 1}, {0, 4}}}, {{{0, 2}, {0, 5}}}},
      {{{{1, 5}, {0, 4}}}, {{{1, 4}, {0, 4}}}},
      {{{{1, 1}, {0, 2}}}, {{{1, 2}, {0, 2}}}},
      {{{{0, 3}, {0, 5}}}, {{{0, 2}, {0, 5}}}, {{{0, 3}, {0, 1}}}},
      {{{{1, 1}, {0, 5}}}, {{{1, 5}, {0, 5}}}},
      {{{{1, 2}, {0, 3}}}, {{{1, 3}, {0, 3}}}},
      {{{{0, 4}, {0, 1}}}, {{{0, 3}, {0, 1}}}, {{{0, 4}, {0, 2}}}},
      {{{{1, 2}, {0, 1}}}, {{{1, 1}, {0, 1}}}},
      {{{{1, 3}, {0, 4}}}, {{{1, 4}, {0, 4}}}},
      {{{{0, 5}, {0, 2}}}, {{{0, 4}, {0, 2}}}, {{{0, 5}, {0, 3}}}},
      {{{{1, 3}, {0, 2}}}, {{{1, 2}, {0, 2}}}},
      {{{{1, 4}, {0, 5}}}, {{{1, 5}, {0, 5}}}},
  };
  return table;
}

inline double m3_value(const std::array<double, 6>& r, const std::array<double, 6>& b) {
  double best = -inf;
  for (const auto& term : m3_table()) {
    double s = 0.0;
    for (const auto& [f1, f2] : term) {
      const double v1 = f1.src ? b[f1.idx] : r[f1.idx];
      const double v2 = f2.src ? b[f2.idx] : r[f2.idx];
      s += v1 * v2;
    }
    best = std::max(best, s);
  }
  return best;
}

// M1/M2/M3 assembly from the clipped ranges; every subtracted term is a
// product of nonnegative factors, so upper endpoints give its maximum,
// while the kept M1 product takes lower endpoints
inline double pdp_bound_from_ranges(const pdp_ranges& rg) {
  const auto& bhi = rg.bhi;
  double m1 = -inf;
  for (int i = 1; i <= 5; ++i) {
    double p = 1.0;
    for (int j = 1; j <= 5; ++j)
      if (j != i) p *= rg.xlo[j];
    double mp = 0.0;
    for (int j = 1; j <= 5; ++j) {
      if (j == i) continue;
      for (int l = j + 1; l <= 5; ++l) {
        if (l == i) continue;
        mp = std::max(mp, rg.xhi[j] * rg.xhi[l]);
      }
    }
    m1 = std::max(m1, p - fb * mp);
  }
  const auto& rhi = rg.rhi;
  const double m2 =
      (rhi[1] * bhi[2] * bhi[3] * rhi[4] + rhi[2] * bhi[3] * bhi[4] * rhi[5]
       + rhi[3] * bhi[4] * bhi[5] * rhi[1] + rhi[4] * bhi[5] * bhi[1] * rhi[2]
       + rhi[5] * bhi[1] * bhi[2] * rhi[3]
       + 0.0625 * (rhi[2] * rhi[2] * bhi[2] * bhi[2] + rhi[3] * rhi[3] * bhi[3] * bhi[3]
                   + rhi[4] * rhi[4] * bhi[4] * bhi[4]
                   + rhi[5] * rhi[5] * bhi[5] * bhi[5]));
  const double m3 = m3_value(rhi, bhi);
  return m1 - m2 - (0.125 + 0.5 * m3) * fb;
}

}  // namespace mesh_detail

// maximum of the 30 bilinear crossing expressions (0-indexed five-vectors)
inline double m3_terms(const std::array<double, 5>& r, const std::array<double, 5>& b) {
  std::array<double, 6> r1{}, b1{};
  for (int i = 0; i < 5; ++i) {
    r1[i + 1] = r[i];
    b1[i + 1] = b[i];
  }
  return mesh_detail::m3_value(r1, b1);
}

// certified lower bound of the normalized objective over the 9-dimensional
// cell; +inf when the cell misses the box or fails the pair-sum constraint
inline double pdoubleprime_cell_bound(const pdp_cell& c) {
  mesh_detail::pdp_ranges rg;
  if (!mesh_detail::clip_pdp_cell(c, rg)) return mesh_detail::inf;
  return mesh_detail::pdp_bound_from_ranges(rg);
}

// exact normalized objective at a point (soundness reference)
inline double pdoubleprime_point_objective(const std::array<double, 6>& x,
                                           const std::array<double, 6>& r) {
  using namespace mesh_detail;
  std::array<double, 6> b{};
  for (int i = 1; i <= 5; ++i) b[i] = x[i] - r[i];
  double m1 = -inf;
  for (int i = 1; i <= 5; ++i) {
    double p = 1.0;
    for (int j = 1; j <= 5; ++j)
      if (j != i) p *= x[j];
    double mp = 0.0;
    for (int j = 1; j <= 5; ++j) {
      if (j == i) continue;
      for (int l = j + 1; l <= 5; ++l) {
        if (l == i) continue;
        mp = std::max(mp, x[j] * x[l]);
      }
    }
    m1 = std::max(m1, p - fb * mp);
  }
  const double m2 =
      (r[1] * b[2] * b[3] * r[4] + r[2] * b[3] * b[4] * r[5] + r[3] * b[4] * b[5] * r[1]
       + r[4] * b[5] * b[1] * r[2] + r[5] * b[1] * b[2] * r[3]
       + 0.0625 * (r[2] * r[2] * b[2] * b[2] + r[3] * r[3] * b[3] * b[3]
                   + r[4] * r[4] * b[4] * b[4] + r[5] * r[5] * b[5] * b[5]));
  const double m3 = m3_value(r, b);
  return m1 - m2 - (0.125 + 0.5 * m3) * fb;
}

// Depth-first refinement over x2..x5 in the box and r1..r5 in [0, x_i]:
// cells bounded below the slack are halved into 2^9 children.  The optional
// hook observes the running counters (diagnostics only).
inline verifier_report run_pdoubleprime(
    int max_depth = 40, void (*progress)(const verifier_report&, const pdp_cell&) = nullptr) {
  using namespace mesh_detail;
  verifier_report rep;
  std::vector<pdp_cell> stack{
      {{0.166, 0.166, 0.166, 0.166}, {0.0, 0.0, 0.0, 0.0, 0.0}, 0.234, 0}};
  rep.max_stack = 1;
  while (!stack.empty()) {
    rep.max_stack = std::max(rep.max_stack, (long long)stack.size());
    const pdp_cell c = stack.back();
    stack.pop_back();
    rep.max_depth = std::max(rep.max_depth, c.depth);
    if (c.depth > max_depth) return rep;
    pdp_ranges rg;
    if (!clip_pdp_cell(c, rg)) {
      ++rep.pruned_feasibility;
      continue;
    }
    const double v = pdp_bound_from_ranges(rg);
    ++rep.objective_calls;
    if (progress && (rep.objective_calls & ((1 << 24) - 1)) == 0) progress(rep, c);
    if (v < slack) {
      ++rep.cells_refined;
      const double h = c.eps * 0.5;
      for (int mask = 0; mask < 512; ++mask) {
        pdp_cell child;
        for (int i = 0; i < 4; ++i)
          child.xb[i] = (mask & (1 << i)) ? c.xb[i] + h : c.xb[i];
        for (int i = 0; i < 5; ++i)
          child.rb[i] = (mask & (1 << (4 + i))) ? c.rb[i] + h : c.rb[i];
        child.eps = h;
        child.depth = c.depth + 1;
        stack.push_back(child);
      }
    } else if (v < rep.min_bound) {
      rep.min_bound = v;
    }
  }
  rep.verdict = true;
  return rep;
}

// ---- strict mode ----

// The 4-variable run re-done in exact rational arithmetic: every branch
// decision and the final certificates are free of rounding.  Counters may
// differ from the floating-point run where a bound straddles an ulp.
inline verifier_report run_pprime_exact(int max_depth = 40) {
  struct cell {
    std::array<bigrat, 4> t;
    bigrat eps;
    int depth;
  };
  const bigrat rhs_q = numfunky_rhs(constants::cstar_large());
  const bigrat f_q = bigrat(2000, 999) * (bigrat(2, 5) - rhs_q);
  const bigrat d_q = constants::d_split();
  const bigrat slack_q(1, 10000);
  verifier_report rep;
  bigrat min_accepted;
  bool have_min = false;
  const bigrat lo = constants::box_lo();
  std::vector<cell> stack{{{lo, lo, lo, lo}, constants::box_hi() - lo, 0}};
  rep.max_stack = 1;
  while (!stack.empty()) {
    rep.max_stack = std::max(rep.max_stack, (long long)stack.size());
    const cell c = stack.back();
    stack.pop_back();
    rep.max_depth = std::max(rep.max_depth, c.depth);
    if (c.depth > max_depth) return rep;
    const bigrat &t1 = c.t[0], &t2 = c.t[1], &t3 = c.t[2], &t4 = c.t[3];
    const bigrat t5 = 1 - t1 - t2 - t3 - t4;
    const bigrat& e = c.eps;
    if (!(t1 + e >= t2 && t2 + e >= t3 && t3 + e >= t4 && t4 + e >= t5 - 4 * e &&
          t5 >= 0)) {
      ++rep.pruned_order;
      continue;
    }
    bigrat s = t5 * (1 - t5);
    const bigrat ts[4] = {t1, t2, t3, t4};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) s += (ts[i] + e) * (ts[j] + e);
    if (s < rhs_q) {
      ++rep.pruned_feasibility;
      continue;
    }
    const bigrat v = (t3 + e) * (t4 + e) * (t5 - 4 * e)
                     - bigrat(3, 8) * d_q * (t3 + e) * (t4 + e)
                     - bigrat(1, 8) * f_q * (t3 + e)
                     - bigrat(1, 4) * f_q * (t1 + t2 + bigrat(1, 2) * (t3 + t4 + t5) + e)
                     - bigrat(9, 32) * d_q * (t1 + e) * (t1 + e)
                     - bigrat(9, 16000) * (t1 + e) * (t1 + e);
    ++rep.objective_calls;
    if (v < slack_q) {
      ++rep.cells_refined;
      const bigrat h = c.eps / 2;
      for (int mask = 0; mask < 16; ++mask)
        stack.push_back({{(mask & 1) ? t1 + h : t1, (mask & 2) ? t2 + h : t2,
                          (mask & 4) ? t3 + h : t3, (mask & 8) ? t4 + h : t4},
                         h, c.depth + 1});
    } else if (!have_min || v < min_accepted) {
      min_accepted = v;
      have_min = true;
    }
  }
  rep.verdict = true;
  if (have_min) rep.min_bound = min_accepted.convert_to<double>();
  return rep;
}

}  // namespace c5
