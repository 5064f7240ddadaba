// Funky-edge placements on survivor arrangements: canonical configuration
// classes, potential C5 counts, exact intra-coloring maxima, and the
// survivor elimination report.
//
// A placement fixes concrete endpoints for each funky edge; classes are
// deduplicated under the arrangement's frame symmetries combined with
// within-part vertex permutations (restricted to WL refinement cells).
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "c5/blowup.hpp"
#include "c5/program_p.hpp"

namespace c5 {

// ---- frame symmetries ----

using pos_map = std::array<int, 5>;

// the 20 position maps of the frame symmetry group: rotations, reflections,
// and the pentagram map of the color swap, closed under composition
inline const std::vector<pos_map>& frame_symmetries() {
  static const std::vector<pos_map> maps = [] {
    const pos_map rot{1, 2, 3, 4, 0}, refl{4, 3, 2, 1, 0}, swp{2, 4, 1, 3, 0};
    std::set<pos_map> elems{{0, 1, 2, 3, 4}};
    std::vector<pos_map> frontier{{0, 1, 2, 3, 4}};
    while (!frontier.empty()) {
      pos_map g = frontier.back();
      frontier.pop_back();
      for (const pos_map& h : {rot, refl, swp}) {
        pos_map c;
        for (int i = 0; i < 5; ++i) c[i] = h[g[i]];
        if (elems.insert(c).second) frontier.push_back(c);
      }
    }
    if (elems.size() != 20) throw std::logic_error("frame symmetry closure != 20");
    return std::vector<pos_map>(elems.begin(), elems.end());
  }();
  return maps;
}

// symmetries fixing the size arrangement positionwise
inline std::vector<pos_map> arrangement_stabilizer(const x_tuple& sizes) {
  std::vector<pos_map> out;
  for (const auto& g : frame_symmetries()) {
    bool ok = true;
    for (int i = 0; i < 5; ++i) ok = ok && sizes[g[i]] == sizes[i];
    if (ok) out.push_back(g);
  }
  return out;
}

// ---- configurations ----

using part_vertex = std::pair<int, int>;                  // (part, index)
using placed_edge = std::pair<part_vertex, part_vertex>;  // endpoints sorted

struct funky_config {
  x_tuple x_sizes{};
  std::vector<placed_edge> placed_edges;  // sorted
};

namespace detail {

inline std::vector<part_vertex> part_vertices(const x_tuple& sizes) {
  std::vector<part_vertex> vs;
  for (int p = 0; p < 5; ++p)
    for (int a = 0; a < sizes[p]; ++a) vs.push_back({p, a});
  return vs;
}

// cycle relation between cross parts: adjacent frame positions
inline bool frame_cross_adjacent(int p, int q) {
  int d = (p - q) % 5;
  if (d < 0) d += 5;
  return d == 1 || d == 4;
}

// Canonical encoding of a configuration: minimum edge list over the
// stabilizer and all within-part orderings of used vertices that respect
// the cells of a WL color refinement of the funky-edge graph.
inline std::vector<placed_edge> canon_placement(const std::vector<pos_map>& stab,
                                                const std::vector<placed_edge>& config) {
  std::vector<placed_edge> best;
  bool have = false;
  for (const auto& g : stab) {
    int inv[5];
    for (int i = 0; i < 5; ++i) inv[g[i]] = i;
    std::vector<placed_edge> edges;
    edges.reserve(config.size());
    for (const auto& [u, v] : config) {
      part_vertex a{inv[u.first], u.second}, b{inv[v.first], v.second};
      if (b < a) std::swap(a, b);
      edges.push_back({a, b});
    }
    std::vector<part_vertex> used;
    for (const auto& [a, b] : edges) {
      used.push_back(a);
      used.push_back(b);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    const int m = int(used.size());
    auto uidx = [&](const part_vertex& v) {
      return int(std::lower_bound(used.begin(), used.end(), v) - used.begin());
    };
    std::vector<std::vector<int>> adj(m);
    for (const auto& [a, b] : edges) {
      adj[uidx(a)].push_back(uidx(b));
      adj[uidx(b)].push_back(uidx(a));
    }
    // WL refinement, initial color = part
    std::vector<int> col(m);
    for (int i = 0; i < m; ++i) col[i] = used[i].first;
    for (;;) {
      std::vector<std::pair<int, std::vector<int>>> sig(m);
      for (int i = 0; i < m; ++i) {
        std::vector<int> nb;
        nb.reserve(adj[i].size());
        for (int w : adj[i]) nb.push_back(col[w]);
        std::sort(nb.begin(), nb.end());
        sig[i] = {col[i], std::move(nb)};
      }
      std::map<std::pair<int, std::vector<int>>, int> ranks;
      for (const auto& s : sig) ranks.emplace(s, 0);
      int r = 0;
      for (auto& [key, rank] : ranks) rank = r++;
      std::vector<int> nc(m);
      for (int i = 0; i < m; ++i) nc[i] = ranks[sig[i]];
      if (nc == col) break;
      col = std::move(nc);
    }
    // cells: per part in part order, grouped by color in color order;
    // canonical index runs within the part across its cells
    struct cell_t {
      std::vector<int> members;
      int base = 0;
    };
    std::vector<cell_t> cells;
    for (int p = 0; p < 5; ++p) {
      std::map<int, std::vector<int>> by_col;
      for (int i = 0; i < m; ++i)
        if (used[i].first == p) by_col[col[i]].push_back(i);
      int base = 0;
      for (auto& [c, mem] : by_col) {
        cells.push_back({std::move(mem), base});
        base += int(cells.back().members.size());
      }
    }
    std::vector<int> assign(m);
    auto eval = [&] {
      std::vector<placed_edge> e2;
      e2.reserve(edges.size());
      for (const auto& [a, b] : edges) {
        part_vertex ca{a.first, assign[uidx(a)]}, cb{b.first, assign[uidx(b)]};
        if (cb < ca) std::swap(ca, cb);
        e2.push_back({ca, cb});
      }
      std::sort(e2.begin(), e2.end());
      if (!have || e2 < best) {
        best = std::move(e2);
        have = true;
      }
    };
    auto rec = [&](auto&& self, std::size_t ci) -> void {
      if (ci == cells.size()) {
        eval();
        return;
      }
      std::vector<int> mem = cells[ci].members;
      std::sort(mem.begin(), mem.end());
      do {
        for (std::size_t j = 0; j < mem.size(); ++j)
          assign[mem[j]] = cells[ci].base + int(j);
        self(self, ci + 1);
      } while (std::next_permutation(mem.begin(), mem.end()));
    };
    rec(rec, 0);
  }
  return best;
}

}  // namespace detail

// All configurations of up to k_max funky edges with concrete endpoints,
// deduplicated under frame symmetries and within-part vertex permutations.
// levels[k] holds the canonical classes with exactly k edges; level 0 is
// the single empty configuration.
inline std::vector<std::vector<funky_config>> enumerate_placements(const x_tuple& sizes,
                                                                   int k_max) {
  if (k_max < 0 || k_max > 6)
    throw std::invalid_argument("enumerate_placements: k_max out of range");
  const auto stab = arrangement_stabilizer(sizes);
  const auto verts = detail::part_vertices(sizes);
  std::vector<placed_edge> slots;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (verts[i].first != verts[j].first) slots.push_back({verts[i], verts[j]});

  std::vector<std::vector<funky_config>> levels(k_max + 1);
  levels[0].push_back({sizes, {}});
  std::vector<std::vector<placed_edge>> cur = {{}};
  for (int k = 1; k <= k_max; ++k) {
    std::set<std::vector<placed_edge>> keys;
    for (const auto& rep : cur) {
      for (const auto& s : slots) {
        if (std::binary_search(rep.begin(), rep.end(), s)) continue;
        std::vector<placed_edge> child = rep;
        child.insert(std::upper_bound(child.begin(), child.end(), s), s);
        keys.insert(detail::canon_placement(stab, child));
      }
    }
    cur.assign(keys.begin(), keys.end());
    levels[k].reserve(cur.size());
    for (const auto& r : cur) levels[k].push_back({sizes, r});
  }
  return levels;
}

// ---- potential counting ----

namespace detail {

// pair index over subset positions 0..4, combination order
inline int pair_idx(int i, int j) {
  static constexpr int tab[5][5] = {{-1, 0, 1, 2, 3},
                                    {0, -1, 4, 5, 6},
                                    {1, 4, -1, 7, 8},
                                    {2, 5, 7, -1, 9},
                                    {3, 6, 8, 9, -1}};
  return tab[i][j];
}

// the 12 labeled 5-cycles as 10-bit masks over pair indices
inline const std::vector<unsigned>& cycle_masks() {
  static const std::vector<unsigned> masks = [] {
    std::set<unsigned> out;
    std::array<int, 5> p{0, 1, 2, 3, 4};
    do {
      unsigned m = 0;
      for (int i = 0; i < 5; ++i) m |= 1u << pair_idx(p[i], p[(i + 1) % 5]);
      out.insert(m);
    } while (std::next_permutation(p.begin(), p.end()));
    if (out.size() != 12) throw std::logic_error("labeled C5 mask count != 12");
    return std::vector<unsigned>(out.begin(), out.end());
  }();
  return masks;
}

inline bool completes_to_c5(unsigned in_cycle, unsigned off_cycle) {
  for (unsigned h : cycle_masks())
    if ((in_cycle & ~h) == 0 && (off_cycle & h) == 0) return true;
  return false;
}

inline bool edge_in_config(const std::vector<placed_edge>& edges, part_vertex u,
                           part_vertex v) {
  if (v < u) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), placed_edge{u, v});
}

// could the 5-subset induce a C5 for some choice of intra colors?
inline bool could_induce(const std::array<part_vertex, 5>& s,
                         const std::vector<placed_edge>& edges) {
  unsigned in_cycle = 0, off_cycle = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (s[i].first == s[j].first) continue;  // intra: free
      const bool adj = frame_cross_adjacent(s[i].first, s[j].first) !=
                       edge_in_config(edges, s[i], s[j]);
      if (adj) in_cycle |= 1u << pair_idx(i, j);
      else off_cycle |= 1u << pair_idx(i, j);
    }
  return completes_to_c5(in_cycle, off_cycle);
}

}  // namespace detail

// Number of 5-subsets that could induce a C5 under some intra coloring,
// conflicts between subsets ignored.  Delta form over the funky-free
// baseline prod(sizes) + sum count(size): only subsets containing both
// endpoints of some funky edge can change status.
inline long long potential_c5_count(const funky_config& cfg, const cycle_table& table) {
  long long base = 1;
  for (int s : cfg.x_sizes) base *= s;
  for (int s : cfg.x_sizes) base += table.count(s).convert_to<long long>();
  if (cfg.placed_edges.empty()) return base;

  const auto verts = detail::part_vertices(cfg.x_sizes);
  std::set<std::array<part_vertex, 5>> cand;
  for (const auto& [u, v] : cfg.placed_edges) {
    std::vector<part_vertex> rest;
    for (const auto& w : verts)
      if (w != u && w != v) rest.push_back(w);
    const int r = int(rest.size());
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        for (int c = b + 1; c < r; ++c) {
          std::array<part_vertex, 5> s{u, v, rest[a], rest[b], rest[c]};
          std::sort(s.begin(), s.end());
          cand.insert(s);
        }
  }
  long long delta = 0;
  for (const auto& s : cand) {
    std::set<int> parts;
    for (const auto& v : s) parts.insert(v.first);
    const bool baseline = parts.size() == 5 || parts.size() == 1;
    delta += (detail::could_induce(s, cfg.placed_edges) ? 1 : 0) - (baseline ? 1 : 0);
  }
  return base + delta;
}

// ---- exact best intra coloring ----

struct intra_report {
  long long best = -1;        // max induced-C5 total over intra colorings
  long long best_funky = -1;  // max funky-using count among maximizing colorings
  long long max_funky = -1;   // max funky-using count over all colorings
  std::vector<std::uint32_t> argmax_masks;
};

namespace detail {

struct intra_workspace {
  std::vector<part_vertex> verts;
  std::vector<std::uint32_t> cross_adj;          // cycle relation, funky flips applied
  std::vector<std::pair<int, int>> intra_pairs;  // vertex id pairs
  std::vector<std::pair<int, int>> funky_ids;    // funky edges as vertex ids
};

inline intra_workspace make_intra_workspace(const funky_config& cfg) {
  intra_workspace w;
  w.verts = part_vertices(cfg.x_sizes);
  const int n = int(w.verts.size());
  auto vid = [&](const part_vertex& v) {
    return int(std::lower_bound(w.verts.begin(), w.verts.end(), v) - w.verts.begin());
  };
  w.cross_adj.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (w.verts[i].first == w.verts[j].first) {
        w.intra_pairs.push_back({i, j});
        continue;
      }
      if (frame_cross_adjacent(w.verts[i].first, w.verts[j].first) !=
          edge_in_config(cfg.placed_edges, w.verts[i], w.verts[j])) {
        w.cross_adj[i] |= 1u << j;
        w.cross_adj[j] |= 1u << i;
      }
    }
  for (const auto& [u, v] : cfg.placed_edges) w.funky_ids.push_back({vid(u), vid(v)});
  return w;
}

inline bool is_c5_subset(const std::vector<std::uint32_t>& adj,
                         const std::array<int, 5>& s, std::uint32_t sm) {
  for (int v : s)
    if (std::popcount(adj[v] & sm) != 2) return false;
  std::uint32_t seen = 1u << s[0], frontier = adj[s[0]] & sm;
  while (frontier) {
    seen |= frontier;
    std::uint32_t nf = 0;
    for (int v : s)
      if ((frontier >> v) & 1) nf |= adj[v] & sm;
    frontier = nf & ~seen;
  }
  return seen == sm;
}

}  // namespace detail

// Maximum achievable induced-C5 count over all intra colorings, by Gray-code
// walk over the 2^m colorings with per-subset status maintenance.  Also
// tracks the funky-using counts and the maximizing masks (for tie analysis).
inline intra_report exact_best_intra(const funky_config& cfg,
                                     std::size_t argmax_cap = std::size_t(1) << 22) {
  auto w = detail::make_intra_workspace(cfg);
  const int n = int(w.verts.size());
  const int m = int(w.intra_pairs.size());
  if (m > 24)
    throw std::invalid_argument("exact_best_intra: intra edge budget exceeded");

  // all 5-subsets with status under the current coloring
  std::vector<std::array<int, 5>> subs;
  std::vector<std::uint32_t> subm;
  std::vector<std::uint8_t> funky_flag;
  {
    std::array<int, 5> s{};
    for (s[0] = 0; s[0] < n; ++s[0])
      for (s[1] = s[0] + 1; s[1] < n; ++s[1])
        for (s[2] = s[1] + 1; s[2] < n; ++s[2])
          for (s[3] = s[2] + 1; s[3] < n; ++s[3])
            for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
              std::uint32_t sm = 0;
              for (int v : s) sm |= 1u << v;
              std::uint8_t ff = 0;
              for (const auto& [a, b] : w.funky_ids)
                if (((sm >> a) & 1) && ((sm >> b) & 1)) {
                  ff = 1;
                  break;
                }
              subs.push_back(s);
              subm.push_back(sm);
              funky_flag.push_back(ff);
            }
  }
  // subsets affected by each intra pair
  std::vector<std::vector<int>> by_pair(m);
  for (int e = 0; e < m; ++e) {
    const auto [a, b] = w.intra_pairs[e];
    for (int si = 0; si < int(subs.size()); ++si)
      if (((subm[si] >> a) & 1) && ((subm[si] >> b) & 1)) by_pair[e].push_back(si);
  }

  std::vector<std::uint32_t> adj = w.cross_adj;
  std::vector<std::uint8_t> status(subs.size());
  long long total = 0, funky_total = 0;
  for (int si = 0; si < int(subs.size()); ++si) {
    status[si] = detail::is_c5_subset(adj, subs[si], subm[si]);
    total += status[si];
    funky_total += status[si] & funky_flag[si];
  }

  intra_report rep;
  auto consider = [&](std::uint32_t mask) {
    if (total > rep.best) {
      rep.best = total;
      rep.best_funky = funky_total;
      rep.argmax_masks.assign(1, mask);
    } else if (total == rep.best) {
      rep.best_funky = std::max(rep.best_funky, funky_total);
      if (rep.argmax_masks.size() < argmax_cap) rep.argmax_masks.push_back(mask);
    }
    rep.max_funky = std::max(rep.max_funky, funky_total);
  };
  consider(0);
  std::uint32_t gray = 0;
  for (std::uint32_t i = 1; i < (1u << m); ++i) {
    const int e = std::countr_zero(i);
    gray ^= 1u << e;
    const auto [a, b] = w.intra_pairs[e];
    adj[a] ^= 1u << b;
    adj[b] ^= 1u << a;
    for (int si : by_pair[e]) {
      const std::uint8_t ns = detail::is_c5_subset(adj, subs[si], subm[si]);
      if (ns != status[si]) {
        total += ns ? 1 : -1;
        funky_total += (ns ? 1 : -1) * funky_flag[si];
        status[si] = ns;
      }
    }
    consider(gray);
  }
  if (rep.argmax_masks.size() >= argmax_cap)
    throw std::runtime_error("exact_best_intra: maximizing coloring list overflow");
  return rep;
}

// Colored graph of a configuration under one intra coloring, in the global
// red-relation convention (red cross pairs at frame distance 2/3, flipped on
// funky edges; intra pair red iff its mask bit is clear, so red-relation
// C5 counts equal the cycle-relation counts by self-complementarity).
inline colored_graph materialize_config(const funky_config& cfg, std::uint32_t intra_mask) {
  auto w = detail::make_intra_workspace(cfg);
  const int n = int(w.verts.size());
  std::vector<std::pair<int, int>> red;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.verts[i].first != w.verts[j].first && !((w.cross_adj[i] >> j) & 1))
        red.push_back({i, j});
  for (int e = 0; e < int(w.intra_pairs.size()); ++e)
    if (!((intra_mask >> e) & 1)) red.push_back(w.intra_pairs[e]);
  return make_graph(n, red);
}

// ---- survivor elimination ----

struct placement_run {
  x_tuple x{};
  int n = 0;
  y_tuple multiset{};
  int budget = 0;
  std::vector<std::size_t> classes_per_k;      // k = 1..budget
  std::vector<long long> max_potential_per_k;  // k = 1..budget
  int escalations = 0;
  int ties = 0;            // exact == count(n), every maximizer a blow-up
  int exact_failures = 0;  // exact > count(n), or a non-blow-up tie
};

struct survivor_report {
  bool no_counterexample = true;
  int arrangements = 0;
  int total_escalations = 0;
  int total_ties = 0;
  std::vector<placement_run> runs;
  long long fig4_potential = 0;
  long long fig4_exact_total = 0;
  long long fig4_best_funky = 0;
  long long fig4_max_funky = 0;
};

namespace detail {

inline placement_run run_arrangement(const x_tuple& x, int n, const y_tuple& multiset,
                                     int budget, const cycle_table& table) {
  placement_run run;
  run.x = x;
  run.n = n;
  run.multiset = multiset;
  run.budget = budget;
  const bigint& target = table.count(n);
  const auto levels = enumerate_placements(x, budget);
  for (int k = 1; k <= budget; ++k) {
    run.classes_per_k.push_back(levels[k].size());
    long long mp = -1;
    for (const auto& cfg : levels[k]) {
      const long long pot = potential_c5_count(cfg, table);
      mp = std::max(mp, pot);
      if (pot < target) continue;
      ++run.escalations;
      const intra_report ex = exact_best_intra(cfg);
      if (ex.best < target) continue;
      if (ex.best > target) {
        ++run.exact_failures;
        continue;
      }
      bool all_blowup = true;
      for (std::uint32_t mask : ex.argmax_masks)
        if (!is_blowup_of_c5(materialize_config(cfg, mask))) {
          all_blowup = false;
          break;
        }
      if (all_blowup) ++run.ties;
      else ++run.exact_failures;
    }
    run.max_potential_per_k.push_back(mp);
  }
  return run;
}

}  // namespace detail

// Check every funky placement on every surviving x-tuple (F20 class
// representatives): potential below the table count, or escalation to the
// exact intra maximum, which must not beat the count; exact ties must have
// all maximizing colorings isomorphic to blow-ups.  n_cap restricts to the
// brute-force regime (the paper's appendix tuples all have n <= 22).
inline survivor_report verify_survivors(const scan_result& scan, const cycle_table& table,
                                        int n_cap = 22, int workers = 1) {
  std::map<x_tuple, std::pair<int, y_tuple>> reps;
  for (const auto& s : scan.survivors) {
    if (s.n > n_cap) continue;
    for (const auto& x : expand_to_x(s.y_counts))
      reps.try_emplace(detail::f20_min(x), s.n, s.y_counts);
  }
  struct job {
    x_tuple x;
    int n;
    y_tuple multiset;
    int budget;
  };
  std::vector<job> jobs;
  for (const auto& [x, nm] : reps) {
    const auto budget = max_funky_edges(x, nm.first, table);
    jobs.push_back({x, nm.first, nm.second, budget.max_edges});
  }
  std::sort(jobs.begin(), jobs.end(),
            [](const job& a, const job& b) { return std::tie(a.n, a.x) < std::tie(b.n, b.x); });

  survivor_report rep;
  rep.arrangements = int(jobs.size());
  rep.runs.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      rep.runs[i] = detail::run_arrangement(jobs[i].x, jobs[i].n, jobs[i].multiset,
                                            jobs[i].budget, table);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& run : rep.runs) {
    rep.total_escalations += run.escalations;
    rep.total_ties += run.ties;
    if (run.exact_failures > 0) rep.no_counterexample = false;
  }

  // the final remaining case: the 3-edge matching between the adjacent
  // 3-parts of (1,1,1,3,3)
  funky_config fig4{{1, 1, 1, 3, 3},
                    {{{3, 0}, {4, 0}}, {{3, 1}, {4, 1}}, {{3, 2}, {4, 2}}}};
  rep.fig4_potential = potential_c5_count(fig4, table);
  const intra_report fx = exact_best_intra(fig4);
  rep.fig4_exact_total = fx.best;
  rep.fig4_best_funky = fx.best_funky;
  rep.fig4_max_funky = fx.max_funky;
  return rep;
}

}  // namespace c5
