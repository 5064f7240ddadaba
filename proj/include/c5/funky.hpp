// Partition frames, funky-edge statistics, and the closed-form counting
// bounds (Lemma 3 cases and Claims 1-3).
//
// An edge between parts X_i, X_j is funky when its color disagrees with the
// C5 frame: red at cycle distance 1, or blue at cycle distance 2.
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "c5/constants.hpp"
#include "c5/graph.hpp"

namespace c5 {

// ---- partition frame ----

struct partition5 {
  std::vector<int> part_of;  // vertex -> part index 0..4

  std::array<std::vector<int>, 5> parts() const {
    std::array<std::vector<int>, 5> out;
    for (int v = 0; v < int(part_of.size()); ++v) out[part_of[v]].push_back(v);
    return out;
  }
  std::array<int, 5> sizes() const {
    std::array<int, 5> s{};
    for (int p : part_of) ++s[p];
    return s;
  }
};

// frame color between part positions: red at cycle distance 2 or 3
inline bool frame_red(int pi, int pj) {
  int d = (pj - pi + 5) % 5;
  return d == 2 || d == 3;
}

inline bool is_funky(const colored_graph& g, const partition5& p, int u, int v) {
  int pu = p.part_of[u], pv = p.part_of[v];
  if (pu == pv) return false;
  return g.is_red(u, v) != frame_red(pu, pv);
}

// ---- funky report ----

struct funky_report_t {
  std::vector<std::pair<int, int>> funky_edges;
  bigrat f;                 // |E_f| / binom(n,2)
  bigrat d;                 // scaled average incident funky degree
  std::vector<int> d_f;     // per-vertex funky degree
  std::vector<int> r_f;     // red funky edges at v
  std::vector<int> b_f;     // blue funky edges at v
};

inline funky_report_t funky_report(const colored_graph& g, const partition5& p) {
  if (int(p.part_of.size()) != g.n)
    throw std::invalid_argument("funky_report: partition does not cover V");
  auto sz = p.sizes();
  for (int s : sz)
    if (s == 0) throw std::invalid_argument("funky_report: empty part, frame undefined");
  funky_report_t r;
  r.d_f.assign(g.n, 0);
  r.r_f.assign(g.n, 0);
  r.b_f.assign(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (is_funky(g, p, u, v)) {
        r.funky_edges.emplace_back(u, v);
        ++r.d_f[u];
        ++r.d_f[v];
        if (g.is_red(u, v)) {
          ++r.r_f[u];
          ++r.r_f[v];
        } else {
          ++r.b_f[u];
          ++r.b_f[v];
        }
      }
  bigint b2 = bigint(g.n) * (g.n - 1) / 2;
  r.f = bigrat(bigint(r.funky_edges.size()), b2);
  // d f binom(n,2) n = sum over funky edges of (d_f(x) + d_f(y) - 2)
  bigint incident = 0;
  for (auto [u, v] : r.funky_edges) incident += r.d_f[u] + r.d_f[v] - 2;
  if (!r.funky_edges.empty())
    r.d = bigrat(incident, bigint(r.funky_edges.size()) * g.n);
  return r;
}

// ---- partition optimization ----

// score = cross pairs minus funky edges; maximized exactly for n <= 12,
// by multi-restart single-vertex-move local search above
namespace detail {

inline long long partition_score(const colored_graph& g, const std::vector<int>& a) {
  long long cross = 0, funky = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (a[u] != a[v]) {
        ++cross;
        if (g.is_red(u, v) != frame_red(a[u], a[v])) ++funky;
      }
  return cross - funky;
}

struct partition_search {
  const colored_graph* g;
  int n;
  std::vector<int> a, best_a;
  long long score, best_score;

  void dfs(int v) {
    if (v == n) {
      if (score > best_score) {
        best_score = score;
        best_a = a;
      }
      return;
    }
    // optimistic completion: every remaining pair cross and non-funky
    long long rem = n - v;
    long long ub = score + rem * (rem - 1) / 2 + rem * v;
    if (ub < best_score || (ub == best_score && !best_a.empty())) return;
    for (int p = 0; p < 5; ++p) {
      long long delta = 0;
      for (int u = 0; u < v; ++u)
        if (a[u] != p) delta += 1 - int(g->is_red(u, v) != frame_red(a[u], p));
      a[v] = p;
      score += delta;
      dfs(v + 1);
      score -= delta;
      if (v == 0) break;  // frame rotations act transitively: fix vertex 0 in part 0
    }
    a[v] = -1;
  }
};

}  // namespace detail

inline partition5 optimize_partition(const colored_graph& g, std::uint64_t seed = 1) {
  if (g.n < 5) throw std::invalid_argument("optimize_partition: n < 5");
  if (g.n <= 12) {
    detail::partition_search s;
    s.g = &g;
    s.n = g.n;
    s.a.assign(g.n, -1);
    s.score = 0;
    s.best_score = -1;
    s.dfs(0);
    return partition5{s.best_a};
  }
  // local search: best-improvement single-vertex moves, multi-restart
  std::mt19937_64 rng(seed);
  std::vector<int> best_a;
  long long best_score = -1;
  for (int restart = 0; restart < 20; ++restart) {
    std::vector<int> a(g.n);
    for (int v = 0; v < g.n; ++v) a[v] = int(rng() % 5);
    long long sc = detail::partition_score(g, a);
    bool improved = true;
    while (improved) {
      improved = false;
      for (int v = 0; v < g.n; ++v) {
        int p0 = a[v];
        int bestp = p0;
        long long bestsc = sc;
        for (int p = 0; p < 5; ++p) {
          if (p == p0) continue;
          long long delta = 0;
          for (int u = 0; u < g.n; ++u) {
            if (u == v) continue;
            if (a[u] != p0) delta -= 1 - int(g.is_red(u, v) != frame_red(a[u], p0));
            if (a[u] != p) delta += 1 - int(g.is_red(u, v) != frame_red(a[u], p));
          }
          if (sc + delta > bestsc) {
            bestsc = sc + delta;
            bestp = p;
          }
        }
        if (bestp != p0) {
          a[v] = bestp;
          sc = bestsc;
          improved = true;
        }
      }
    }
    if (sc > best_score || (sc == best_score && a < best_a)) {
      best_score = sc;
      best_a = a;
    }
  }
  return partition5{best_a};
}

// ---- closed-form bounds ----

// Lemma 3: cycles through 1, 2, or 3 fixed vertices
inline bigrat lemma3_bound(int which, int n, int r = 0, int b = 0) {
  switch (which) {
    case 1:
      if (r + b != n - 1) throw std::invalid_argument("lemma3_bound: case 1 needs r+b = n-1");
      return bigrat(bigint(r) * r * b * b, 16);
    case 2:
      return bigrat(bigint(n - 2) * (n - 2) * (n - 2), 27);
    case 3:
      return bigrat(bigint(n - 3) * (n - 3), 4);
    default:
      throw std::invalid_argument("lemma3_bound: case must be 1..3");
  }
}

// Claim 1: cycles through two non-incident funky edges
inline bigrat claim1_bound(int n, const bigrat& f, const bigrat& d, const std::array<bigrat, 5>& y) {
  bigrat b2(bigint(n) * (n - 1), 2);
  bigrat ys = y[0] + y[1] + bigrat(1, 2) * (y[2] + y[3] + y[4]);
  return bigrat(1, 2) * f * b2 * (f * b2 - d * n - 1) * (ys * n - 2);
}

// Claim 2: cycles through incident funky pairs, no two non-incident
inline bigrat claim2_bound(int n, const bigrat& f, const bigrat& d, const bigrat& y1) {
  bigrat b2(bigint(n) * (n - 1), 2);
  return bigrat(9, 32) * (d * n + 2) * f * b2 * y1 * y1 * n * n;
}

// Claim 3: lower bound on cycles gained by unflipping funky edges
inline bigrat claim3_bound(int n, const bigrat& f, const bigrat& d, const bigrat& y3,
                           const bigrat& y4, const bigrat& y5) {
  bigrat b2(bigint(n) * (n - 1), 2);
  bigrat nn(n);
  return f * b2 * nn * nn * nn * (y3 * y4 * y5 - bigrat(3, 8) * d * y3 * y4 - bigrat(1, 8) * f * y3);
}

}  // namespace c5
