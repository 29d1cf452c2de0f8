#pragma once

#include <string>
#include <vector>

#include "hilb/qzeta.hpp"

namespace hilb::suites {

struct CheckItem {
  std::string name;
  std::string expected;  // empty when there is no closed-form target
  std::string got;
  bool pass = true;
};

struct Report {
  std::string suite;
  std::string params;
  std::vector<CheckItem> items;
  Report(std::string s, std::string p) : suite(std::move(s)), params(std::move(p)) {}
  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string name, std::string expected, std::string got, bool ok) {
    items.push_back(CheckItem{std::move(name), std::move(expected), std::move(got), ok});
  }
  void add_flag(std::string name, bool ok) {
    items.push_back(CheckItem{std::move(name), "pass", ok ? "pass" : "FAIL", ok});
  }
};

Report heisenberg(int degmax, int modemax);
Report young_example();
Report gamma_calculus(int degmax, int window);
Report jack_eigen(int deg_eigen, int deg_transformed, int deg_duality);
Report thm_1_2(int k, int degmax);
Report g2_display_check(int part_bound);
Report qzeta_identities(int qmax);
Report reduced_closed_forms(int qmax, int jobs);
Report route_equality(int kmax, int qmax, int jobs);
Report gamma_trace(int qmax, int window);
Report thm_1_4(int qmax_i, int qmax_fit, int qmax_m, int jobs,
               const std::vector<qzeta::BracketIndex>* fit_candidates = nullptr);
Report derivative_closed_form(int nmax, int degmax);
Report leading_terms(int nmax, int kmax);
Report conjecture_probe_suite(int k, int degmax);

// every primary criterion in order; jobs bounds worker threads
std::vector<Report> run_all(int jobs);

std::string to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace hilb::suites
