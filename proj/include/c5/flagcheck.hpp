// Exact bookkeeping of the two flag-algebra constants and empirical margin
// checks of the pair-density lower bound on finite blow-ups.
//
// The semidefinite certificate behind the bound is out of scope; this module
// verifies the stated rational-versus-decimal relations exactly and tests
// the inequality on materialized blow-ups (a sanity margin, not a proof).
#pragma once

#include <stdexcept>

#include "c5/blowup.hpp"
#include "c5/cbb.hpp"

namespace c5 {

// ---- rational constants ----

struct rational_constants_report {
  bool a_truncation_safe = false;  // rational A below its decimal truncation
  bool b_truncation_safe = false;  // rational B above its decimal truncation
  bool chain_at_003 = false;       // -A_rat + 0.03 B_rat > -A_dec + 0.03 B_dec
  bool ok = false;
};

// the decimal constants truncate the exact rational solution in the safe
// direction: -A_rat + c B_rat > -A_dec + c B_dec for every c > 0
inline rational_constants_report verify_rational_constants() {
  rational_constants_report rep;
  rep.a_truncation_safe = constants::a_rat() < constants::a_dec();
  rep.b_truncation_safe = constants::b_rat() > constants::b_dec();
  const bigrat c = constants::c5_threshold();
  rep.chain_at_003 = -constants::a_rat() + c * constants::b_rat() >
                     -constants::a_dec() + c * constants::b_dec();
  rep.ok = rep.a_truncation_safe && rep.b_truncation_safe && rep.chain_at_003;
  return rep;
}

// ---- empirical pair-density margins ----

struct lemma1_margin_report {
  int base_n = 0;      // vertices of the pattern graph
  int depth = 0;       // blow-up iterations applied per vertex
  int blown_n = 0;     // vertices of the materialized graph
  bigrat cstar_g;      // C(G*) from the pattern's exact C5 density
  bigrat cbb_density;  // pair-pattern density of the materialized graph
  bigrat bound;        // -A + B C(G*)
  bigrat margin;       // cbb_density - bound
};

namespace detail {

// blow up every vertex of g into an iterated balanced blow-up on `size`
// vertices; cross colors copy g, interiors get the iterated structure
inline colored_graph blowup_by_iterated(const colored_graph& g, int size) {
  const int n = g.n * size;
  if (n > 64) throw std::invalid_argument("blowup_by_iterated: exceeds 64 vertices");
  colored_graph out;
  out.n = n;
  out.red.assign(n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      if (!((g.red[u] >> v) & 1)) continue;
      for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
          const int x = u * size + a, y = v * size + b;
          out.red[x] |= std::uint64_t(1) << y;
          out.red[y] |= std::uint64_t(1) << x;
        }
    }
  for (int u = 0; u < g.n; ++u) materialize_range(out, u * size, size);
  return out;
}

}  // namespace detail

// Materialize the depth-level blow-up of g and report the pair-density
// margin against the bound -A + B C(G*).  Gate: C(G*) > 0.03 (the bound's
// regime); exact counting requires n 5^depth <= 40.
inline lemma1_margin_report empirical_lemma1(const colored_graph& g, int depth) {
  int size = 1;
  for (int i = 0; i < depth; ++i) size *= 5;
  if (g.n * size > 40)
    throw std::invalid_argument("empirical_lemma1: rejected, beyond exact regime");
  lemma1_margin_report rep;
  rep.base_n = g.n;
  rep.depth = depth;
  rep.blown_n = g.n * size;

  const bigrat c_g = g.n >= 5
                         ? bigrat(bigint(count_induced_c5(g)), binom5(g.n))
                         : bigrat(0);
  rep.cstar_g = cycle_table::c_star_of(c_g, g.n);
  if (!(rep.cstar_g > constants::c5_threshold()))
    throw std::invalid_argument("empirical_lemma1: rejected, density gate");

  const colored_graph blown = detail::blowup_by_iterated(g, size);
  bigint pairs7 = 1;
  for (int i = 0; i < 7; ++i) pairs7 *= blown.n - i;
  for (int i = 2; i <= 7; ++i) pairs7 /= i;
  rep.cbb_density = bigrat(bigint(count_cbb(blown)), pairs7);
  rep.bound = -constants::a_dec() + constants::b_dec() * rep.cstar_g;
  rep.margin = rep.cbb_density - rep.bound;
  return rep;
}

}  // namespace c5
