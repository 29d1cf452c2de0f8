// Batch front-end: verification suites, series/operator computations, and
// reproducible machine-readable reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "hilb/chern.hpp"
#include "hilb/qzeta.hpp"
#include "hilb/suites.hpp"
#include "hilb/traces.hpp"

using namespace hilb;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> v;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ','))
    if (!tok.empty()) v.push_back(std::stoi(tok));
  return v;
}

// optional exact rational specialization of t1, t2
QSeries specialize(const QSeries& f, const std::string& t1s, const std::string& t2s) {
  if (t1s.empty() && t2s.empty()) return f;
  QSeries out(f.order());
  for (int n = 0; n <= f.order(); ++n) {
    RatFunc c = f.coeff(n);
    if (!t1s.empty()) c = c.substitute(kT1, RatFunc(rat_of_string(t1s)));
    if (!t2s.empty()) c = c.substitute(kT2, RatFunc(rat_of_string(t2s)));
    out.set_coeff(n, c);
  }
  return out;
}

void emit_series(const QSeries& f, const std::vector<int>& ks, const std::string& route,
                 const std::string& fmt) {
  if (fmt == "csv") {
    std::cout << "q_power,coefficient\n";
    for (int n = 0; n <= f.order(); ++n) std::cout << n << ",\"" << f.coeff(n).str() << "\"\n";
    return;
  }
  if (fmt == "json") {
    nlohmann::json j;
    j["klist"] = ks;
    j["route"] = route;
    j["qmax"] = f.order();
    j["coefficients"] = nlohmann::json::array();
    for (int n = 0; n <= f.order(); ++n) j["coefficients"].push_back(f.coeff(n).str());
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << f.str() << "\n";
}

int emit_reports(const std::vector<suites::Report>& reps, const std::string& fmt) {
  bool all_pass = true;
  for (const auto& r : reps) {
    all_pass = all_pass && r.pass();
    if (fmt == "json")
      std::cout << suites::to_json(r) << "\n";
    else
      std::cout << suites::to_text(r);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact operator calculus on the Fock space model of Hilbert schemes of points"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_fmt = "text";
  int jobs = 1;
  app.add_option("--out", out_fmt, "output format: text|json|csv")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for partition sums")->capture_default_str();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, fit_candidates;
  int v_k = -1, v_degmax = -1, v_qmax = -1, v_n = -1;
  verify->add_option("suite", suite,
                     "heisenberg|gamma|jack-eigen|thm-1-2|g2|reduced-closed-forms|"
                     "route-equality|qzeta-identities|derivative|thm-1-4|conjecture-probe|all")
      ->required();
  verify->add_option("--k", v_k, "operator index");
  verify->add_option("--degmax", v_degmax, "degree bound");
  verify->add_option("--qmax", v_qmax, "q-series truncation order");
  verify->add_option("--n", v_n, "mode index");
  verify->add_option("--fit-candidates", fit_candidates,
                     "JSON list of bracket indices for thm-1-4 fits, e.g. [[2],[3],[2,1]]");

  // ---- trace / reduced ----
  auto* trace = app.add_subcommand("trace", "raw trace generating series");
  auto* reduced = app.add_subcommand("reduced", "reduced trace generating series");
  std::string ks_str, m_mode = "sym", t1_str, t2_str;
  int t_qmax = 8;
  for (auto* cmd : {trace, reduced}) {
    cmd->add_option("--k", ks_str, "comma-separated list of ch indices (empty for none)");
    cmd->add_option("--qmax", t_qmax, "q-series truncation order")->capture_default_str();
    cmd->add_option("--m", m_mode, "sym | exact rational value for m")->capture_default_str();
    cmd->add_option("--t1", t1_str, "rational value for t1 (default symbolic)");
    cmd->add_option("--t2", t2_str, "rational value for t2 (default symbolic)");
  }

  // ---- brackets ----
  auto* brackets = app.add_subcommand("brackets", "bracket / bi-bracket q-series");
  std::string s_str, r_str;
  int b_qmax = 30;
  brackets->add_option("--s", s_str, "comma-separated s indices")->required();
  brackets->add_option("--r", r_str, "comma-separated r indices (bi-bracket)");
  brackets->add_option("--qmax", b_qmax, "q-series truncation order")->capture_default_str();

  // ---- expand-op ----
  auto* expand = app.add_subcommand("expand-op", "normally ordered expansion of ch_k");
  int e_k = 1, e_degmax = 5;
  std::string e_route = "fock";
  expand->add_option("--k", e_k, "operator index")->capture_default_str();
  expand->add_option("--degmax", e_degmax, "part bound / degree bound")->capture_default_str();
  expand->add_option("--route", e_route, "fock | eigen")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are configuration errors
  }

  try {
    if (*verify) {
      std::vector<suites::Report> reps;
      if (suite == "heisenberg") {
        reps.push_back(suites::heisenberg(v_degmax < 0 ? 8 : v_degmax, 6));
        reps.push_back(suites::young_example());
      } else if (suite == "gamma") {
        reps.push_back(suites::gamma_calculus(v_degmax < 0 ? 4 : v_degmax, 5));
      } else if (suite == "jack-eigen") {
        int d = v_degmax < 0 ? 6 : v_degmax;
        reps.push_back(suites::jack_eigen(d, std::min(d, 5), std::min(d, 4)));
      } else if (suite == "thm-1-2") {
        if (v_k >= 0) {
          reps.push_back(suites::thm_1_2(v_k, v_degmax < 0 ? (v_k == 2 ? 5 : 6) : v_degmax));
        } else {
          reps.push_back(suites::thm_1_2(0, v_degmax < 0 ? 6 : v_degmax));
          reps.push_back(suites::thm_1_2(1, v_degmax < 0 ? 6 : v_degmax));
          reps.push_back(suites::thm_1_2(2, v_degmax < 0 ? 5 : std::min(v_degmax, 5)));
        }
      } else if (suite == "g2") {
        reps.push_back(suites::g2_display_check(v_degmax < 0 ? 6 : v_degmax));
      } else if (suite == "reduced-closed-forms") {
        reps.push_back(suites::reduced_closed_forms(v_qmax < 0 ? 10 : v_qmax, jobs));
      } else if (suite == "route-equality") {
        reps.push_back(suites::route_equality(v_k < 0 ? 4 : v_k, v_qmax < 0 ? 8 : v_qmax, jobs));
        reps.push_back(suites::gamma_trace(10, 4));
      } else if (suite == "qzeta-identities") {
        reps.push_back(suites::qzeta_identities(v_qmax < 0 ? 30 : v_qmax));
      } else if (suite == "derivative") {
        if (v_n >= 0 && v_k >= 0) {
          reps.push_back(suites::leading_terms(v_n, v_k));
        } else {
          reps.push_back(suites::derivative_closed_form(5, 8));
          reps.push_back(suites::leading_terms(3, 3));
        }
      } else if (suite == "thm-1-4") {
        std::vector<qzeta::BracketIndex> cands;
        if (!fit_candidates.empty()) {
          auto j = nlohmann::json::parse(fit_candidates);
          for (const auto& item : j) {
            qzeta::BracketIndex idx;
            if (item.is_array()) {
              idx.s = item.get<std::vector<int>>();
            } else {
              idx.s = item.at("s").get<std::vector<int>>();
              if (item.contains("r")) idx.r = item.at("r").get<std::vector<int>>();
            }
            cands.push_back(std::move(idx));
          }
        }
        reps.push_back(suites::thm_1_4(8, v_qmax < 0 ? 28 : v_qmax, 6, jobs,
                                       fit_candidates.empty() ? nullptr : &cands));
      } else if (suite == "conjecture-probe") {
        std::cerr << "[hilb] expanding the eigen-route operator, this is the slow part\n";
        reps.push_back(
            suites::conjecture_probe_suite(v_k < 0 ? 3 : v_k, v_degmax < 0 ? 7 : v_degmax));
      } else if (suite == "all") {
        reps = suites::run_all(jobs);
      } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
      }
      return emit_reports(reps, out_fmt);
    }

    if (*trace || *reduced) {
      auto ks = parse_int_list(ks_str);
      auto mode = m_mode == "0" ? traces::MMode::zero : traces::MMode::symbolic;
      QSeries f = *trace ? traces::raw_trace(ks, t_qmax, mode, jobs)
                         : traces::reduced(ks, t_qmax, mode, jobs);
      if (m_mode != "sym" && m_mode != "0") {
        RatFunc mval{rat_of_string(m_mode)};
        QSeries g(f.order());
        for (int n = 0; n <= f.order(); ++n) g.set_coeff(n, f.coeff(n).substitute(kM, mval));
        f = g;
      }
      emit_series(specialize(f, t1_str, t2_str), ks, *trace ? "raw" : "reduced", out_fmt);
      return 0;
    }

    if (*brackets) {
      qzeta::BracketIndex idx{parse_int_list(s_str),
                              r_str.empty() ? std::vector<int>{} : parse_int_list(r_str)};
      auto bs = qzeta::bracket_with_meta(idx, b_qmax);
      if (out_fmt == "json") {
        nlohmann::json j;
        j["index"] = idx.str();
        j["weight"] = bs.weight;
        j["depth"] = bs.depth;
        j["qmax"] = b_qmax;
        j["coefficients"] = nlohmann::json::array();
        for (int n = 0; n <= bs.series.order(); ++n)
          j["coefficients"].push_back(bs.series.coeff(n).str());
        std::cout << j.dump(2) << "\n";
      } else {
        if (out_fmt == "text")
          std::cout << idx.str() << "  (weight " << bs.weight << ", depth " << bs.depth
                    << ")\n";
        emit_series(bs.series, idx.s, idx.r.empty() ? "bracket" : "bibracket", out_fmt);
      }
      return 0;
    }

    if (*expand) {
      if (e_route == "fock") {
        std::cout << chern::gk_fock_op(e_k, e_degmax).str() << "\n";
      } else {
        auto eig = chern::gk_eigen(e_k, e_degmax);
        auto ex = expand_in_monomials(eig.mats, 0, e_k + 2, e_degmax);
        std::cout << ex.op.str() << "\n";
        if (!ex.exact) {
          std::cerr << "residual: " << ex.residual_note << "\n";
          return 1;
        }
      }
      return 0;
    }
  } catch (const window_error& e) {
    std::cerr << "window error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
