// Exact constants of the verification pipeline and the blow-up cycle table.
//
// All load-bearing numbers live here as exact rationals; doubles are derived
// views for reporting and for the floating-point mesh verifiers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace c5 {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// ---- constants ----

// Linear lower bound cbb >= -A + B*c5 on blow-up densities, plus the
// thresholds and box used by the downstream case analysis.
struct constants {
  // decimal forms as used in the medium-n programs
  static bigrat a_dec() { return bigrat(bigint("175431374077117"), pow10(15)); }
  static bigrat b_dec() { return bigrat(bigint("875407592662244"), pow10(14)); }
  // exact rational forms recovered from the semidefinite certificate
  static bigrat a_rat() {
    return bigrat(bigint("175431374077116112876105446118032690611106"), pow10(42));
  }
  static bigrat b_rat() {
    return bigrat(bigint("8754075926622441195046069111932573299245056"), pow10(42));
  }
  static bigrat c5_threshold() { return bigrat(3, 100); }           // 0.03 gate
  static bigrat cstar_large() { return bigrat(384609, 10000000); }  // 0.0384609
  static bigrat d_split() { return bigrat(1, 5); }                  // 0.2
  static bigrat box_lo() { return bigrat(166, 1000); }              // 0.166
  static bigrat box_hi() { return bigrat(234, 1000); }              // 0.234
  static bigrat c166_bound() { return bigrat(4086, 100000); }       // 0.04086
  static constexpr double slack = 0.0001;

  static bigint pow10(int e) {
    bigint r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
  }
};

// ---- cycle table ----

inline bigint binom5(const bigint& n) {
  if (n < 5) return 0;
  return n * (n - 1) * (n - 2) * (n - 3) * (n - 4) / 120;
}

// Exact counts of induced 5-cycles in iterated balanced blow-ups of C5,
// via the recurrence
//   count(n) = k^(5-a) (k+1)^a + (5-a) count(k) + a count(k+1),  n = 5k+a,
// which is the integer form of the density recurrence C(n).
class cycle_table {
 public:
  explicit cycle_table(int n_max) : counts_(n_max + 1, bigint(0)) {
    if (n_max < 0) throw std::invalid_argument("cycle_table: negative n_max");
    for (int n = 5; n <= n_max; ++n) {
      int k = n / 5, a = n % 5;
      bigint blocks = 1;
      for (int i = 0; i < 5 - a; ++i) blocks *= k;
      for (int i = 0; i < a; ++i) blocks *= k + 1;
      counts_[n] = blocks + (5 - a) * at(k) + a * at(k + 1);
    }
  }

  int n_max() const { return int(counts_.size()) - 1; }

  // exact C5 count of the iterated balanced blow-up on n vertices
  const bigint& count(int n) const {
    if (n < 0 || n > n_max()) throw std::out_of_range("cycle_table: n out of range");
    return counts_[n];
  }

  // density C(n) = count(n) / binom(n,5)
  bigrat density(int n) const {
    if (n < 5) return bigrat(0);
    return bigrat(count(n), binom5(n));
  }

  // C(n*) = c_star_of(C(n), n)
  bigrat cstar(int n) const { return c_star_of(density(n), n); }

  // Eq. form (n + 26 n(n-1)(n-2)(n-3)(n-4) C_G) / (26 n^5); valid for n >= 1
  // (the falling factorial vanishes below 5, leaving 1/(26 n^4)).
  static bigrat c_star_of(const bigrat& c_g, int n) {
    if (n < 1) throw std::invalid_argument("c_star_of: n < 1");
    bigint nn = n;
    bigint falling = nn * (nn - 1) * (nn - 2) * (nn - 3) * (nn - 4);
    bigrat num = bigrat(nn) + bigrat(26) * bigrat(falling) * c_g;
    return num / bigrat(26 * nn * nn * nn * nn * nn);
  }

 private:
  const bigint& at(int n) const { return counts_[n]; }
  std::vector<bigint> counts_;
};

// ---- funky-count bound ----

// RHS of the Lemma-2 feasibility bound: 2(-A + B c) / (21 c), decimal A, B.
// Only meaningful in the regime c > 0.03 where the linear bound is positive.
inline bigrat numfunky_rhs(const bigrat& cstar) {
  if (cstar <= constants::c5_threshold())
    throw std::domain_error("numfunky_rhs: cstar below 0.03 gate");
  return 2 * (-constants::a_dec() + constants::b_dec() * cstar) / (21 * cstar);
}

}  // namespace c5
