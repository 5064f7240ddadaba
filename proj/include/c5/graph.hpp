// Two-colored complete graphs as red-adjacency bitmasks, exact induced-C5
// counting, and graph6 serialization (graph6 edge set = red relation).
//
// Blue is the absence of red; C5 is self-complementary, so every count here
// is color-symmetric.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace c5 {

// ---- colored graph ----

struct colored_graph {
  int n = 0;
  std::vector<std::uint64_t> red;  // red[v] = bitmask of red neighbors

  bool is_red(int u, int v) const { return (red[u] >> v) & 1u; }
  bool is_blue(int u, int v) const { return u != v && !is_red(u, v); }
};

inline colored_graph make_graph(int n, const std::vector<std::pair<int, int>>& red_pairs) {
  if (n < 1 || n > 64) throw std::invalid_argument("make_graph: n out of range");
  colored_graph g;
  g.n = n;
  g.red.assign(n, 0);
  for (auto [u, v] : red_pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("make_graph: vertex out of range");
    if (u == v) throw std::invalid_argument("make_graph: self-loop");
    if (g.is_red(u, v)) throw std::invalid_argument("make_graph: duplicate pair");
    g.red[u] |= std::uint64_t(1) << v;
    g.red[v] |= std::uint64_t(1) << u;
  }
  return g;
}

inline colored_graph complement(const colored_graph& g) {
  colored_graph h;
  h.n = g.n;
  h.red.assign(g.n, 0);
  std::uint64_t all = (g.n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << g.n) - 1);
  for (int v = 0; v < g.n; ++v) h.red[v] = (~g.red[v] & all) & ~(std::uint64_t(1) << v);
  return h;
}

// the exceptional 8-vertex extremal graph: cycle 0..7 plus the four diagonals
inline colored_graph mobius_ladder8() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) e.emplace_back(i, i + 4);
  return make_graph(8, e);
}

// ---- induced C5 counting ----

// 5-point red graph is a C5 iff 2-regular and connected
inline bool is_c5_local(const std::uint32_t deg_masks[5]) {
  for (int i = 0; i < 5; ++i)
    if (__builtin_popcount(deg_masks[i]) != 2) return false;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int i = 0; i < 5; ++i)
      if ((frontier >> i) & 1u) next |= deg_masks[i];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == 31u;
}

inline bool induces_c5(const colored_graph& g, const int v[5]) {
  std::uint32_t m[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (g.is_red(v[i], v[j])) {
        m[i] |= 1u << j;
        m[j] |= 1u << i;
      }
  return is_c5_local(m);
}

inline std::uint64_t count_induced_c5(const colored_graph& g) {
  std::uint64_t cnt = 0;
  int v[5];
  for (v[0] = 0; v[0] < g.n - 4; ++v[0])
    for (v[1] = v[0] + 1; v[1] < g.n - 3; ++v[1])
      for (v[2] = v[1] + 1; v[2] < g.n - 2; ++v[2])
        for (v[3] = v[2] + 1; v[3] < g.n - 1; ++v[3])
          for (v[4] = v[3] + 1; v[4] < g.n; ++v[4])
            if (induces_c5(g, v)) ++cnt;
  return cnt;
}

// induced C5s whose vertex set contains all of X, 1 <= |X| <= 3
inline std::uint64_t count_induced_c5_through(const colored_graph& g, const std::vector<int>& x) {
  if (x.size() < 1 || x.size() > 3)
    throw std::invalid_argument("count_induced_c5_through: |X| must be 1..3");
  std::vector<int> rest;
  std::uint64_t in_x = 0;
  for (int u : x) in_x |= std::uint64_t(1) << u;
  for (int u = 0; u < g.n; ++u)
    if (!((in_x >> u) & 1u)) rest.push_back(u);
  int need = 5 - int(x.size());
  std::uint64_t cnt = 0;
  std::vector<int> idx(need);
  int v[5];
  for (size_t i = 0; i < x.size(); ++i) v[i] = x[i];
  // choose `need` vertices from rest
  for (int i = 0; i < need; ++i) idx[i] = i;
  if (int(rest.size()) < need) return 0;
  while (true) {
    for (int i = 0; i < need; ++i) v[x.size() + i] = rest[idx[i]];
    if (induces_c5(g, v)) ++cnt;
    int i = need - 1;
    while (i >= 0 && idx[i] == int(rest.size()) - need + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
  }
  return cnt;
}

// ---- Monte Carlo density estimate (beyond the exact regime) ----

struct c5_density_estimate {
  double density = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
};

inline c5_density_estimate estimate_c5_density(const colored_graph& g, std::uint64_t samples,
                                               std::uint64_t seed = 12345) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, g.n - 1);
  std::uint64_t hits = 0;
  int v[5];
  for (std::uint64_t s = 0; s < samples; ++s) {
    int have = 0;
    while (have < 5) {
      int u = pick(rng);
      bool dup = false;
      for (int i = 0; i < have; ++i) dup |= (v[i] == u);
      if (!dup) v[have++] = u;
    }
    if (induces_c5(g, v)) ++hits;
  }
  c5_density_estimate e;
  e.samples = samples;
  e.density = double(hits) / double(samples);
  e.std_error = std::sqrt(e.density * (1.0 - e.density) / double(samples));
  return e;
}

// ---- graph6 ----

// standard graph6 with the red relation as the edge set; n <= 62
inline std::string to_graph6(const colored_graph& g) {
  if (g.n > 62) throw std::invalid_argument("to_graph6: n > 62");
  std::string s;
  s.push_back(char(g.n + 63));
  int bit = 0;
  unsigned cur = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | unsigned(g.is_red(i, j));
      if (++bit == 6) {
        s.push_back(char(cur + 63));
        bit = 0;
        cur = 0;
      }
    }
  if (bit > 0) s.push_back(char((cur << (6 - bit)) + 63));
  return s;
}

inline colored_graph from_graph6(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("from_graph6: empty");
  int n = s[0] - 63;
  if (n < 1 || n > 62) throw std::invalid_argument("from_graph6: unsupported size");
  colored_graph g;
  g.n = n;
  g.red.assign(n, 0);
  size_t pos = 1;
  int bit = 6;
  unsigned cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bit == 6) {
        if (pos >= s.size()) throw std::invalid_argument("from_graph6: truncated");
        cur = unsigned(s[pos++]) - 63;
        bit = 0;
      }
      if ((cur >> (5 - bit)) & 1u) {
        g.red[i] |= std::uint64_t(1) << j;
        g.red[j] |= std::uint64_t(1) << i;
      }
      ++bit;
    }
  return g;
}

}  // namespace c5
