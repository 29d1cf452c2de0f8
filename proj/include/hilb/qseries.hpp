#pragma once

#include <string>
#include <vector>

#include "hilb/ratfunc.hpp"

namespace hilb {

// Power series in q truncated at an explicit order, coefficients in
// Q(t1,t2,alpha,m).  Binary operations truncate to the smaller order.
class QSeries {
 public:
  QSeries() : order_(0), c_(1) {}
  explicit QSeries(int order) : order_(check_order(order)), c_(order + 1) {}
  QSeries(int order, const RatFunc& c0) : QSeries(order) { c_[0] = c0; }

  static QSeries q_power(int k, int order);

  int order() const { return order_; }
  // Coefficient of q^k; out-of-window access is an error, never a silent zero.
  const RatFunc& coeff(int k) const;
  void set_coeff(int k, RatFunc v);
  bool is_zero() const;

  QSeries truncated(int order) const;

  QSeries operator-() const;
  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries mul_scalar(const RatFunc& c) const;
  QSeries operator*(const Rat& c) const { return mul_scalar(RatFunc(c)); }
  bool operator==(const QSeries& o) const { return order_ == o.order_ && c_ == o.c_; }
  bool operator!=(const QSeries& o) const { return !(*this == o); }

  // exp needs constant term 0; log needs constant term 1.
  QSeries exp() const;
  QSeries log() const;
  // f^c = exp(c log f) for any coefficient-ring exponent; needs f(0) = 1.
  QSeries pow(const RatFunc& c) const;
  QSeries pow_int(int n) const;
  // Multiplicative inverse; needs invertible constant term.
  QSeries inverse() const;

  std::string str() const;

 private:
  int order_;
  std::vector<RatFunc> c_;  // c_[k] = coefficient of q^k, k = 0..order_
  static int check_order(int order);
};

// prod_{n>=0} (1 - a q^(n+j)) truncated; j >= 0, scalar a in the coefficient
// ring.  pochhammer(1, 1, N) is (q;q)_infinity.
QSeries pochhammer(const RatFunc& a, int j, int order);

}  // namespace hilb
