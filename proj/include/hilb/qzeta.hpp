#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilb/qseries.hpp"

namespace hilb::qzeta {

// Index of a bracket [s1,...,sl] or bi-bracket [s;r]; weight sum s + sum r,
// depth l.
struct BracketIndex {
  std::vector<int> s;
  std::vector<int> r;  // empty for plain brackets

  int depth() const { return static_cast<int>(s.size()); }
  int weight() const;
  std::string str() const;  // "[2,1]" or "[2,1;1,0]"
  bool operator<(const BracketIndex& o) const { return std::tie(s, r) < std::tie(o.s, o.r); }
  bool operator==(const BracketIndex& o) const { return s == o.s && r == o.r; }
};

// Coefficients of the Eulerian polynomial P_{s-1}(t), constant term first;
// t P_{s-1}(t)/(1-t)^s = sum_{d>=1} d^{s-1} t^d.
std::vector<Rat> eulerian_poly(int s);

// Double-sum bi-bracket, truncated: only pairs with sum u_i v_i <= q_order
// contribute.
QSeries bibracket(const std::vector<int>& s, const std::vector<int>& r, int q_order);
// Plain bracket = bi-bracket with r = 0.
QSeries bracket(const std::vector<int>& s, int q_order);

// Nested sum of Q_{s_i}(q^{n_i})/(1-q^{n_i})^{s_i} for the numerator family
// given by coefficient lists Q[s] (index = power of t, Q[s][0] = 0).
QSeries z_nested(const std::vector<std::vector<Rat>>& numerators, const std::vector<int>& s,
                 int q_order);
// Depth-one bracket through the Eulerian numerator; cross-check route.
QSeries bracket_depth1_eulerian(int s, int q_order);
// Multiple q-zeta value with the odd/even numerators; every s_i >= 2.
QSeries z_value(const std::vector<int>& s, int q_order);

struct FitResult {
  bool ok = false;
  Rat constant;                               // coefficient of 1
  std::vector<std::pair<BracketIndex, Rat>> coeffs;
  int first_bad_power = -1;                   // when inconsistent
  std::string note;
};

// Exact fit of f against the span of the candidates and the constant 1 on
// every available q-coefficient; overdetermination is the point.
FitResult fit_in_bracket_span(const QSeries& f, const std::vector<BracketIndex>& candidates,
                              int q_order);

// All bracket indices (s1 >= 2, s_i >= 1) of weight <= max_weight.
std::vector<BracketIndex> bracket_candidates_up_to(int max_weight);

// Series together with its nominal weight and depth, for weight-bound
// reporting.
struct BracketSeries {
  QSeries series;
  int weight = 0;
  int depth = 0;
};
BracketSeries bracket_with_meta(const BracketIndex& idx, int q_order);

}  // namespace hilb::qzeta
