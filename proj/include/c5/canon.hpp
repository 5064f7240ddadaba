// Canonical forms for small colored graphs and exhaustive enumeration of
// isomorphism classes by canonical augmentation (n <= 9).
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "c5/graph.hpp"

namespace c5 {

// ---- canonical key ----

// Upper-triangle red bits (row by row, earlier neighbors first) minimized
// over all vertex orders with non-decreasing red degree; at most 36 bits
// for n <= 9, packed most-significant-first into a uint64.
struct canonical_key {
  int n = 0;
  std::uint64_t bits = 0;
  bool swap_closed = false;

  friend bool operator==(const canonical_key&, const canonical_key&) = default;
  friend auto operator<=>(const canonical_key&, const canonical_key&) = default;

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    int nbits = n * (n - 1) / 2;
    int nhex = (nbits + 3) / 4;
    if (nhex == 0) nhex = 1;
    for (int i = nhex - 1; i >= 0; --i) s.push_back(digits[(bits >> (4 * i)) & 0xf]);
    return std::to_string(n) + ":" + s;
  }
};

namespace detail {

struct canon_state {
  const colored_graph* g;
  int n;
  std::vector<int> degree;  // red degrees, the placement order filter
  std::vector<int> perm;    // position -> original vertex
  std::uint64_t used;
  std::uint64_t best;
  bool have_best;

  // bits for placing vertex v at position k against already placed perm[0..k)
  std::uint64_t row_bits(int v, int k) const {
    std::uint64_t r = 0;
    for (int j = 0; j < k; ++j) r = (r << 1) | std::uint64_t(g->is_red(v, perm[j]));
    return r;
  }

  void dfs(int k, std::uint64_t acc, int acc_len) {
    if (k == n) {
      if (!have_best || acc < best) {
        best = acc;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1u) continue;
      if (k > 0 && degree[v] < degree[perm[k - 1]]) continue;  // degree-sorted orders only
      std::uint64_t r = row_bits(v, k);
      std::uint64_t acc2 = (acc << k) | r;
      int len2 = acc_len + k;
      if (have_best) {
        // compare the partial string against best's prefix of equal length
        int total = n * (n - 1) / 2;
        std::uint64_t best_prefix = best >> (total - len2);
        if (acc2 > best_prefix) continue;
      }
      used |= std::uint64_t(1) << v;
      perm[k] = v;
      dfs(k + 1, acc2, len2);
      used &= ~(std::uint64_t(1) << v);
    }
  }
};

inline std::uint64_t min_encoding(const colored_graph& g) {
  canon_state st;
  st.g = &g;
  st.n = g.n;
  st.degree.assign(g.n, 0);
  for (int v = 0; v < g.n; ++v) st.degree[v] = __builtin_popcountll(g.red[v]);
  st.perm.assign(g.n, 0);
  st.used = 0;
  st.best = 0;
  st.have_best = false;
  st.dfs(0, 0, 0);
  return st.best;
}

}  // namespace detail

inline canonical_key canonical_form(const colored_graph& g, bool swap_closed = false) {
  if (g.n > 9) throw std::invalid_argument("canonical_form: n > 9 unsupported");
  canonical_key k;
  k.n = g.n;
  k.swap_closed = swap_closed;
  k.bits = detail::min_encoding(g);
  if (swap_closed) k.bits = std::min(k.bits, detail::min_encoding(complement(g)));
  return k;
}

// rebuild the representative graph encoded by a canonical key
inline colored_graph from_canonical(const canonical_key& k) {
  colored_graph g;
  g.n = k.n;
  g.red.assign(k.n, 0);
  int total = k.n * (k.n - 1) / 2;
  int bit = total;
  for (int i = 1; i < k.n; ++i)
    for (int j = 0; j < i; ++j) {
      --bit;
      if ((k.bits >> bit) & 1u) {
        g.red[i] |= std::uint64_t(1) << j;
        g.red[j] |= std::uint64_t(1) << i;
      }
    }
  return g;
}

// ---- enumeration ----

// one representative per color-preserving isomorphism class, by extending
// each (n-1)-class with every possible red neighborhood and deduplicating
inline std::vector<colored_graph> enumerate_graphs(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("enumerate_graphs: n must be 1..9");
  std::vector<colored_graph> reps = {make_graph(1, {})};
  for (int m = 2; m <= n; ++m) {
    std::map<std::uint64_t, colored_graph> classes;
    for (const auto& base : reps) {
      for (std::uint64_t nbhd = 0; nbhd < (std::uint64_t(1) << (m - 1)); ++nbhd) {
        colored_graph h;
        h.n = m;
        h.red = base.red;
        h.red.push_back(nbhd);
        for (int v = 0; v < m - 1; ++v)
          if ((nbhd >> v) & 1u) h.red[v] |= std::uint64_t(1) << (m - 1);
        std::uint64_t key = detail::min_encoding(h);
        auto [it, inserted] = classes.try_emplace(key, colored_graph{});
        if (inserted) it->second = from_canonical(canonical_key{m, key, false});
      }
    }
    reps.clear();
    for (auto& [key, g] : classes) reps.push_back(std::move(g));
  }
  return reps;
}

}  // namespace c5
