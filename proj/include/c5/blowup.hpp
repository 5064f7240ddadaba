// Iterated balanced blow-ups of C5: construction, the partition cycle-count
// formula, the C(G_1) density, and blow-up recognition.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "c5/constants.hpp"
#include "c5/funky.hpp"
#include "c5/graph.hpp"

namespace c5 {

// ---- construction ----

// balanced child sizes of n = 5k+a: a parts of k+1 first, then k
inline std::array<int, 5> balanced_sizes(int n) {
  int k = n / 5, a = n % 5;
  std::array<int, 5> s;
  for (int i = 0; i < 5; ++i) s[i] = k + (i < a ? 1 : 0);
  return s;
}

namespace detail {

// color the pairs of [lo, lo+size) as the iterated balanced blow-up;
// interiors below 5 vertices stay all blue
inline void materialize_range(colored_graph& g, int lo, int size) {
  if (size < 5) return;
  auto s = balanced_sizes(size);
  std::array<int, 6> start;
  start[0] = lo;
  for (int i = 0; i < 5; ++i) start[i + 1] = start[i] + s[i];
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (frame_red(i, j))
        for (int u = start[i]; u < start[i + 1]; ++u)
          for (int v = start[j]; v < start[j + 1]; ++v) {
            g.red[u] |= std::uint64_t(1) << v;
            g.red[v] |= std::uint64_t(1) << u;
          }
  for (int i = 0; i < 5; ++i) materialize_range(g, start[i], s[i]);
}

}  // namespace detail

// the iterated balanced blow-up of C5 on n vertices
inline colored_graph materialize(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("materialize: n out of range");
  colored_graph g;
  g.n = n;
  g.red.assign(n, 0);
  detail::materialize_range(g, 0, n);
  return g;
}

// single-level blow-up with given part sizes, frame colors across parts,
// all-blue interiors; parts occupy consecutive vertex ranges
struct blowup_layout {
  colored_graph g;
  partition5 parts;
};

inline blowup_layout build_blowup(const std::array<int, 5>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  blowup_layout out;
  out.g.n = n;
  out.g.red.assign(n, 0);
  out.parts.part_of.assign(n, 0);
  std::array<int, 6> start;
  start[0] = 0;
  for (int i = 0; i < 5; ++i) start[i + 1] = start[i] + sizes[i];
  for (int i = 0; i < 5; ++i)
    for (int u = start[i]; u < start[i + 1]; ++u) out.parts.part_of[u] = i;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (frame_red(out.parts.part_of[u], out.parts.part_of[v])) {
        out.g.red[u] |= std::uint64_t(1) << v;
        out.g.red[v] |= std::uint64_t(1) << u;
      }
  return out;
}

inline void toggle_red(colored_graph& g, int u, int v) {
  g.red[u] ^= std::uint64_t(1) << v;
  g.red[v] ^= std::uint64_t(1) << u;
}

// ---- counting formulas ----

// n1 n2 n3 n4 n5 + sum of interior counts: cycles in a C5-pattern blow-up
// with iterated-optimal interiors
inline bigint partition_cycle_count(const std::array<int, 5>& sizes, const cycle_table& table) {
  bigint prod = 1;
  bigint total = 0;
  for (int s : sizes) {
    prod *= s;
    total += table.count(s);
  }
  return prod + total;
}

// C(G_1) density for part sizes summing to n
inline bigrat g1_cycle_density(const std::array<int, 5>& sizes, int n, const cycle_table& table) {
  int sum = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("g1_cycle_density: parts must be non-empty");
    sum += s;
  }
  if (sum != n) throw std::invalid_argument("g1_cycle_density: sizes must sum to n");
  return bigrat(partition_cycle_count(sizes, table), binom5(n));
}

// ---- recognition ----

namespace detail {

struct blowup_search {
  const colored_graph* g;
  int n;
  std::vector<int> pos;  // vertex -> frame position, -1 unassigned

  bool consistent(int v, int p) const {
    for (int u = 0; u < v; ++u) {
      if (pos[u] == p) continue;
      if (g->is_red(u, v) != frame_red(pos[u], p)) return false;
    }
    return true;
  }

  bool dfs(int v) {
    if (v == n) {
      std::array<int, 5> cnt{};
      for (int u = 0; u < n; ++u) ++cnt[pos[u]];
      for (int c : cnt)
        if (c == 0) return false;  // witness must be a genuine 5-partition
      return true;
    }
    for (int p = 0; p < 5; ++p) {
      if (!consistent(v, p)) continue;
      pos[v] = p;
      if (dfs(v + 1)) return true;
      pos[v] = -1;
      if (v == 0) break;  // rotations: vertex 0 may sit in part 0
    }
    return false;
  }
};

}  // namespace detail

// witness 5-partition with zero funky edges (intra edges unconstrained)
inline std::optional<partition5> is_blowup_of_c5(const colored_graph& g) {
  if (g.n < 5) return std::nullopt;
  detail::blowup_search s;
  s.g = &g;
  s.n = g.n;
  s.pos.assign(g.n, -1);
  if (!s.dfs(0)) return std::nullopt;
  return partition5{s.pos};
}

}  // namespace c5
