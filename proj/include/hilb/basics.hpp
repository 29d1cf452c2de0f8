#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hilb {

// Exact rational scalar. mpq_class keeps values reduced with positive
// denominator, which is exactly the canonical form we need.
using Rat = mpq_class;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Violated mathematical precondition (division by zero, bad truncation
// request, cell outside a diagram, ...).
struct domain_error : error {
  explicit domain_error(const std::string& what) : error(what) {}
};

// A truncation window was too small to hold an exactly-known term.
struct window_error : error {
  explicit window_error(const std::string& what) : error(what) {}
};

inline std::string to_string(const Rat& r) { return r.get_str(); }

// mpq_class(num, den) does not canonicalize; always build fractions here.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_of_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw domain_error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline Rat binomial(const Rat& c, unsigned long k) {
  Rat b = 1;
  for (unsigned long i = 0; i < k; ++i) b *= (c - static_cast<long>(i)) / Rat(static_cast<long>(i) + 1);
  return b;
}

inline Rat factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

}  // namespace hilb
