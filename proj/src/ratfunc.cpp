#include "hilb/ratfunc.hpp"

#include <sstream>

namespace hilb {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw domain_error("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  // normalize: denominator monic in grlex
  const Rat& lc = den_.lead_coeff();
  if (lc != 1) {
    Rat inv = 1 / lc;
    num_ = num_.mul_scalar(inv);
    den_ = den_.mul_scalar(inv);
  }
}

Rat RatFunc::constant() const {
  if (!is_constant()) throw domain_error("rational function is not constant: " + str());
  return num_.constant();
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RatFunc r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    r.reduce();
    return r;
  }
  MultiPoly g = poly_gcd(den_, o.den_);
  if (g.is_constant()) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
  } else {
    MultiPoly da = den_ / g, db = o.den_ / g;
    r.num_ = num_ * db + o.num_ * da;
    r.den_ = da * o.den_;
  }
  r.reduce();
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  MultiPoly g1 = poly_gcd(num_, o.den_);
  MultiPoly g2 = poly_gcd(o.num_, den_);
  RatFunc r;
  r.num_ = (g1.is_constant() ? num_ : num_ / g1) * (g2.is_constant() ? o.num_ : o.num_ / g2);
  r.den_ = (g2.is_constant() ? den_ : den_ / g2) * (g1.is_constant() ? o.den_ : o.den_ / g1);
  r.reduce();
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw domain_error("division by zero rational function");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  r.reduce();
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r(1), b = *this;
  while (n > 0) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

bool RatFunc::operator<(const RatFunc& o) const {
  // deterministic (but otherwise meaningless) order via canonical strings
  return str() < o.str();
}

namespace {

RatFunc eval_poly_at(const MultiPoly& p, int v, const RatFunc& value) {
  int d = p.degree_in(v);
  RatFunc r(p.coeff_of(v, d));
  for (int k = d - 1; k >= 0; --k) r = r * value + RatFunc(p.coeff_of(v, k));
  return r;
}

}  // namespace

RatFunc RatFunc::substitute(int v, const RatFunc& value) const {
  RatFunc n = eval_poly_at(num_, v, value);
  RatFunc d = eval_poly_at(den_, v, value);
  if (d.is_zero())
    throw domain_error("substitution makes denominator factor vanish: (" + den_.str() + ") at " +
                       kVarNames[v] + " = " + value.str());
  return n / d;
}

int RatFunc::poly_degree_in(int v) const {
  if (den_.depends_on(v))
    throw domain_error("denominator depends on " + std::string(kVarNames[v]) + ": " + str());
  return num_.degree_in(v);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  std::ostringstream os;
  std::string ns = num_.str(), ds = den_.str();
  bool np = num_.terms().size() > 1;
  // a/x*y would parse as (a/x)*y, so any product in the denominator needs
  // parentheses
  bool dp = den_.terms().size() > 1 || ds.find('*') != std::string::npos;
  os << (np ? "(" : "") << ns << (np ? ")" : "") << "/" << (dp ? "(" : "") << ds
     << (dp ? ")" : "");
  return os.str();
}

}  // namespace hilb
