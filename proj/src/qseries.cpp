#include "hilb/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace hilb {

int QSeries::check_order(int order) {
  if (order < 0) throw domain_error("q-series truncation order must be >= 0");
  return order;
}

QSeries QSeries::q_power(int k, int order) {
  QSeries s(order);
  if (k < 0) throw domain_error("negative q power");
  if (k <= order) s.c_[k] = RatFunc(1);
  return s;
}

const RatFunc& QSeries::coeff(int k) const {
  if (k < 0 || k > order_)
    throw window_error("q^" + std::to_string(k) + " outside truncation order " +
                       std::to_string(order_));
  return c_[k];
}

void QSeries::set_coeff(int k, RatFunc v) {
  if (k < 0 || k > order_)
    throw window_error("q^" + std::to_string(k) + " outside truncation order " +
                       std::to_string(order_));
  c_[k] = std::move(v);
}

bool QSeries::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

QSeries QSeries::truncated(int order) const {
  QSeries r(std::min(order, order_));
  for (int k = 0; k <= r.order_; ++k) r.c_[k] = c_[k];
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
  return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries r(std::min(order_, o.order_));
  for (int k = 0; k <= r.order_; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
  QSeries r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order_; ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

QSeries QSeries::mul_scalar(const RatFunc& c) const {
  QSeries r(order_);
  if (c.is_zero()) return r;
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] * c;
  return r;
}

QSeries QSeries::exp() const {
  if (!c_[0].is_zero()) throw domain_error("exp needs constant term 0, got " + c_[0].str());
  QSeries r(order_, RatFunc(1));
  QSeries p(order_, RatFunc(1));
  Rat fact = 1;
  for (int j = 1; j <= order_; ++j) {
    p = p * *this;
    fact *= j;
    r = r + p.mul_scalar(RatFunc(1 / fact));
  }
  return r;
}

QSeries QSeries::log() const {
  if (c_[0] != RatFunc(1)) throw domain_error("log needs constant term 1, got " + c_[0].str());
  QSeries u = *this - QSeries(order_, RatFunc(1));
  QSeries r(order_);
  QSeries p(order_, RatFunc(1));
  for (int j = 1; j <= order_; ++j) {
    p = p * u;
    Rat s = frac(j % 2 == 1 ? 1 : -1, j);
    r = r + p.mul_scalar(RatFunc(s));
  }
  return r;
}

QSeries QSeries::pow(const RatFunc& c) const { return log().mul_scalar(c).exp(); }

QSeries QSeries::pow_int(int n) const {
  if (n < 0) return inverse().pow_int(-n);
  QSeries r(order_, RatFunc(1));
  QSeries b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

QSeries QSeries::inverse() const {
  if (c_[0].is_zero()) throw domain_error("q-series inverse needs invertible constant term");
  RatFunc u = c_[0].inverse();
  QSeries f = mul_scalar(u);  // constant term 1
  QSeries w = QSeries(order_, RatFunc(1)) - f;
  QSeries r(order_, RatFunc(1));
  QSeries p(order_, RatFunc(1));
  for (int j = 1; j <= order_; ++j) {
    p = p * w;
    r = r + p;
  }
  return r.mul_scalar(u);
}

QSeries pochhammer(const RatFunc& a, int j, int order) {
  if (j < 0) throw domain_error("pochhammer offset must be >= 0");
  QSeries r(order, RatFunc(1));
  if (a.is_zero()) return r;
  for (int n = j; n <= order; ++n) {
    // factor 1 - a q^n; for n = 0 this is the constant 1 - a
    QSeries f(order, RatFunc(1) - (n == 0 ? a : RatFunc(0)));
    if (n > 0 && n <= order) f.set_coeff(n, -a);
    r = r * f;
  }
  return r;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    if (c_[k].is_zero()) continue;
    std::string cs = c_[k].str();
    bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
               cs.find('+') == std::string::npos && cs.find('-', 1) == std::string::npos;
    if (first) {
      first = false;
      if (neg) {
        os << "-";
        cs = cs.substr(1);
      }
    } else {
      if (neg) {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    bool wrap = cs.find(' ') != std::string::npos;
    if (k == 0) {
      os << (wrap ? "(" + cs + ")" : cs);
    } else {
      if (cs == "1") {
      } else {
        os << (wrap ? "(" + cs + ")" : cs) << "*";
      }
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " + O(q^" << (order_ + 1) << ")";
  return os.str();
}

}  // namespace hilb
