#pragma once

#include <string>
#include <vector>

#include "hilb/partitions.hpp"
#include "hilb/qseries.hpp"

namespace hilb::traces {

enum class MMode { symbolic, zero };

// Diagonal vertex-trace weight of a fixed point: the ratio of the two cell
// products over the tangent weights; 1 at m = 0 and for the empty partition.
RatFunc a_diag(const Partition& la);

// sum_la q^{|la|} a_diag(la) prod_j (eigenvalue of ch_{k_j} at la), summed
// over all |la| <= q_order.  The partition sums run over a factored common
// denominator so that only one reduction happens per q-power.
QSeries raw_trace(const std::vector<int>& ks, int q_order, MMode mode = MMode::symbolic,
                  int jobs = 1);

// (q;q)_infinity^(-1-(m+t1+t2)m/(t1 t2))
QSeries vacuum_trace(int q_order);
RatFunc vacuum_exponent();  // 1 + (m+t1+t2)m/(t1 t2)

// raw_trace times (q;q)_infinity^(1+(m+t1+t2)m/(t1 t2))
QSeries reduced(const std::vector<int>& ks, int q_order, MMode mode = MMode::symbolic,
                int jobs = 1);

// One-point reduced series at m = 0 from the infinite-product form:
// t2^k Coeff_{z^k} 1/((1-qt)(1-tt^{-1})) (1 - (q)(qt tt^{-1} q)/((qt q)(tt^{-1} q)))
// at qt = e^{alpha z}, tt = e^z, alpha = -t1/t2.
QSeries reduced_m0_onepoint(int k, int q_order);

struct TraceCheck {
  bool pass = true;
  std::vector<std::string> mismatches;
};

// Tr q^n Gamma_-(y)^b Gamma_+(x)^a against (q;q)^{-1} (y x^{-1} q; q)^{-ab},
// formal a, b, tracked through (y x^{-1})^j for j <= uv_window.
TraceCheck gamma_trace_check(int q_order, int uv_window);

}  // namespace hilb::traces
