// The C** family: the six balanced blow-ups of C5 on 7 vertices, and
// counting induced family members among 7-subsets of a host graph.
#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "c5/canon.hpp"
#include "c5/graph.hpp"

namespace c5 {

// ---- family construction ----

// Two doubled parts (adjacent {0,1} or non-adjacent {0,2} in the cycle
// frame) times three colorings of the two intra pairs: bb, br, rr.
inline std::vector<colored_graph> cbb_family() {
  std::vector<colored_graph> out;
  const std::array<std::array<int, 2>, 2> doubled = {{{0, 1}, {0, 2}}};
  const std::array<std::array<bool, 2>, 3> intra_red = {{{false, false}, {false, true}, {true, true}}};
  for (auto dbl : doubled) {
    for (auto reds : intra_red) {
      // part sizes: doubled positions get 2 vertices
      std::vector<int> part_of;  // vertex -> position
      std::vector<std::vector<int>> members(5);
      for (int p = 0; p < 5; ++p) {
        int sz = (p == dbl[0] || p == dbl[1]) ? 2 : 1;
        for (int s = 0; s < sz; ++s) {
          members[p].push_back(int(part_of.size()));
          part_of.push_back(p);
        }
      }
      std::vector<std::pair<int, int>> red_pairs;
      int n = int(part_of.size());
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          int pu = part_of[u], pv = part_of[v];
          if (pu == pv) continue;  // intra handled below
          int d = (pv - pu + 5) % 5;
          if (d == 2 || d == 3) red_pairs.emplace_back(u, v);
        }
      for (int which = 0; which < 2; ++which)
        if (reds[which])
          red_pairs.emplace_back(members[dbl[which]][0], members[dbl[which]][1]);
      out.push_back(make_graph(n, red_pairs));
    }
  }
  return out;
}

// ---- membership counting ----

namespace detail {

struct cbb_keys {
  std::set<std::uint64_t> keys;
  std::set<int> red_counts;  // cheap pre-filter on red edge count
  cbb_keys() {
    for (const auto& g : cbb_family()) {
      keys.insert(min_encoding(g));
      int reds = 0;
      for (int v = 0; v < g.n; ++v) reds += __builtin_popcountll(g.red[v]);
      red_counts.insert(reds / 2);
    }
  }
};

inline const cbb_keys& family_keys() {
  static const cbb_keys k;
  return k;
}

}  // namespace detail

// number of 7-subsets of g inducing a member of the family; 0 below 7 vertices
inline std::uint64_t count_cbb(const colored_graph& g) {
  if (g.n < 7) return 0;
  const auto& fam = detail::family_keys();
  std::uint64_t cnt = 0;
  int v[7];
  colored_graph sub;
  sub.n = 7;
  sub.red.assign(7, 0);
  for (v[0] = 0; v[0] < g.n - 6; ++v[0])
    for (v[1] = v[0] + 1; v[1] < g.n - 5; ++v[1])
      for (v[2] = v[1] + 1; v[2] < g.n - 4; ++v[2])
        for (v[3] = v[2] + 1; v[3] < g.n - 3; ++v[3])
          for (v[4] = v[3] + 1; v[4] < g.n - 2; ++v[4])
            for (v[5] = v[4] + 1; v[5] < g.n - 1; ++v[5])
              for (v[6] = v[5] + 1; v[6] < g.n; ++v[6]) {
                int reds = 0;
                for (int i = 0; i < 7; ++i) {
                  sub.red[i] = 0;
                  for (int j = 0; j < 7; ++j)
                    if (i != j && g.is_red(v[i], v[j])) sub.red[i] |= std::uint64_t(1) << j;
                  reds += __builtin_popcountll(sub.red[i]);
                }
                if (!fam.red_counts.count(reds / 2)) continue;
                if (fam.keys.count(detail::min_encoding(sub))) ++cnt;
              }
  return cnt;
}

}  // namespace c5
