// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is exact symbolic equality; there are no tolerances to tune.

#include <chrono>
#include <iostream>

#include "hilb/suites.hpp"

using hilb::suites::Report;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::vector<Report>& reps) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& r : reps) {
    if (r.pass()) continue;
    ok = false;
    for (const auto& it : r.items)
      if (!it.pass && detail.empty()) detail = r.suite + ": " + it.name;
  }
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  (void)dt;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << what;
  if (!ok) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

}  // namespace

int main() {
  using namespace hilb::suites;
  const int jobs = 2;

  criterion(1, "Heisenberg commutation and normal ordering, degrees <= 8, modes <= 6",
            {heisenberg(8, 6)});
  criterion(2, "Gamma calculus identities on degree <= 4 vectors, window 5",
            {gamma_calculus(4, 5)});
  criterion(3, "Macdonald eigen-relations (|la| <= 6, <= 5) and duality (|la| <= 4)",
            {jack_eigen(6, 5, 4)});
  criterion(4, "eigen route = vertex route for ch_k (k=0,1 to degree 6; k=2 to degree 5) "
               "and the ch_2 closed display",
            {thm_1_2(0, 6), thm_1_2(1, 6), thm_1_2(2, 5), g2_display_check(6)});
  criterion(5, "leading-term probe at k=3, degrees <= 7 (report; k=2 sanity asserted)",
            {conjecture_probe_suite(3, 7)});
  criterion(6, "q-zeta identities at q-order 30 and bi-bracket reduction at q-order 12",
            {qzeta_identities(30)});
  criterion(7, "reduced one- and zero-point closed forms, q-order 10, all variables symbolic",
            {reduced_closed_forms(10, jobs)});
  criterion(8, "eigen route equals the one-point product route at m=0, k <= 4, q-order 8",
            {route_equality(4, 8, jobs)});
  criterion(9, "symmetric/homogeneous, bracket fit with top weight, and m-degree bounds",
            {thm_1_4(8, 28, 6, jobs)});
  criterion(10, "two-sided gamma trace against the product formula, q-order 10",
            {gamma_trace(10, 4)});
  criterion(11, "derivative closed form (n <= 5, degrees <= 8) and leading coefficients "
                "(n <= 3, k <= 3)",
            {derivative_closed_form(5, 8), leading_terms(3, 3)});
  criterion(12, "printed Young-diagram statistics example", {young_example()});

  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
