#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace hg {

// Exact rational arithmetic. All densities, tolerances and optimization
// values in this library are mpq_class; doubles appear only in display code.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline mpz_class binom_z(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::uint64_t binom_u64(unsigned n, unsigned k) {
  return binom_z(n, k).get_ui();
}

// Accepts "p", "-p", "p/q" with integer p, q (q > 0 after normalization).
std::optional<Rat> parse_rational(const std::string& s);

// Exact form "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& q);

// Fixed-point decimal with `digits` places, exact rounding half-away-from-zero.
std::string rat_decimal(const Rat& q, int digits);

inline double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace hg
