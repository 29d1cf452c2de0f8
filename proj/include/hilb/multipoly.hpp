#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilb/basics.hpp"

namespace hilb {

// The coefficient ring works over the fixed ordered variable set
// (t1, t2, alpha, m).  Degree-graded lexicographic order on exponent
// vectors gives every polynomial a unique normal form.
constexpr int kNumVars = 4;
constexpr int kT1 = 0, kT2 = 1, kAlpha = 2, kM = 3;

extern const char* const kVarNames[kNumVars];

struct Monomial {
  std::array<int, kNumVars> e{0, 0, 0, 0};

  int total_degree() const { return e[0] + e[1] + e[2] + e[3]; }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) {
      r.e[i] = e[i] - o.e[i];
      if (r.e[i] < 0) throw domain_error("monomial division with negative exponent");
    }
    return r;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lexicographic: compare total degree first, then exponents in
// variable order.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexLess>;

  MultiPoly() = default;
  MultiPoly(const Rat& c) {  // implicit: constants embed
    if (c != 0) terms_[Monomial{}] = c;
  }
  MultiPoly(long c) : MultiPoly(Rat(c)) {}
  static MultiPoly var(int v, int exp = 1);
  static MultiPoly term(const Monomial& mono, const Rat& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Constant term; the whole value if is_constant().
  Rat constant() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int v) const;
  bool depends_on(int v) const { return degree_in(v) > 0; }

  // Leading data in grlex order.
  const Monomial& lead_monomial() const;
  const Rat& lead_coeff() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly mul_term(const Monomial& mono, const Rat& c) const;
  MultiPoly mul_scalar(const Rat& c) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(int n) const;

  // Exact division; throws domain_error when o does not divide.
  MultiPoly operator/(const MultiPoly& o) const;
  // Division attempt without throwing.
  bool try_divide(const MultiPoly& o, MultiPoly& quotient) const;

  // Substitute a polynomial for one variable.
  MultiPoly subst_poly(int v, const MultiPoly& value) const;
  // Coefficient of var^k, a polynomial in the remaining variables.
  MultiPoly coeff_of(int v, int k) const;

  // Rational content (gcd of coefficients times sign of the grlex-leading
  // coefficient); primitive_part() = *this / content().
  Rat content() const;
  MultiPoly primitive_part() const;

  std::string str() const;

 private:
  TermMap terms_;  // no zero coefficients stored
  void add_term(const Monomial& m, const Rat& c);
  friend MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);
};

// gcd over Q[t1,t2,alpha,m], normalized primitive with positive leading
// coefficient.  gcd(0,0) = 0; unit gcds are returned as 1.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

std::string monomial_str(const Monomial& m);

}  // namespace hilb
