#pragma once

#include <string>

#include "hilb/multipoly.hpp"

namespace hilb {

// Rational function in (t1, t2, alpha, m), kept in canonical form:
// gcd(num, den) = 1 and den monic in grlex order.  Equality is plain
// structural equality of the canonical representatives.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}
  RatFunc(long c) : num_(Rat(c)), den_(1) {}
  RatFunc(const MultiPoly& p) : num_(p), den_(1) {}
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc var(int v) { return RatFunc(MultiPoly::var(v)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == MultiPoly(1); }
  bool is_constant() const { return num_.is_constant() && is_polynomial(); }
  Rat constant() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const;  // arbitrary total order for map keys

  RatFunc inverse() const;
  RatFunc pow(int n) const;

  // Exact substitution var -> value; throws naming the vanishing factor when
  // the denominator collapses to zero.
  RatFunc substitute(int v, const RatFunc& value) const;

  bool depends_on(int v) const { return num_.depends_on(v) || den_.depends_on(v); }
  // Degree of the numerator in v, asserting the denominator is free of v.
  int poly_degree_in(int v) const;

  std::string str() const;

 private:
  MultiPoly num_, den_;
  void reduce();
};

inline RatFunc operator*(const Rat& c, const RatFunc& f) { return RatFunc(c) * f; }

}  // namespace hilb
