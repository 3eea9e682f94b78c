// Acceptance suite: one line per criterion, exact comparisons throughout.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "pardes/closed_form.hpp"
#include "pardes/genocchi.hpp"
#include "pardes/operators.hpp"
#include "pardes/verify.hpp"

using namespace pardes;

namespace {

int g_failures = 0;

double run_suites(const std::vector<std::pair<std::string, int>>& suites,
                  std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  int records = 0, failures = 0;
  for (const auto& [id, max_n] : suites) {
    const VerificationReport report = run_identity_suite(id, max_n);
    records += static_cast<int>(report.records.size());
    failures += report.failure_count();
    if (!report.passed()) detail += " " + id + " FAILED;";
  }
  const auto stop = std::chrono::steady_clock::now();
  detail = std::to_string(records) + " checks, " + std::to_string(failures) +
           " failures," + detail;
  if (failures > 0) ++g_failures;
  return std::chrono::duration<double>(stop - start).count();
}

void report(int criterion, const char* title, bool pass, const std::string& detail,
            double seconds, double limit_seconds) {
  const bool time_ok = limit_seconds <= 0 || seconds < limit_seconds;
  if (!time_ok && pass) ++g_failures;
  std::printf("[%s] criterion %d: %s (%s %.2fs%s)\n",
              (pass && time_ok) ? "PASS" : "FAIL", criterion, title, detail.c_str(),
              seconds, time_ok ? "" : " OVER TIME LIMIT");
}

void criterion(int index, const char* title,
               const std::vector<std::pair<std::string, int>>& suites,
               double limit_seconds) {
  const int before = g_failures;
  std::string detail;
  const double seconds = run_suites(suites, detail);
  report(index, title, g_failures == before, detail, seconds, limit_seconds);
}

}  // namespace

int main() {
  criterion(1, "generated tables match the published lists with the two misprints flagged",
            {{"paper_tables", 0}}, 1.0);

  criterion(2, "recursion equals brute force for every family, n = 1..9",
            {{"recursion_vs_brute", 9}}, 60.0);

  criterion(3, "closed forms equal recursion for every family, n = 1..50",
            {{"closed_form_vs_recursion", 50}}, 10.0);

  criterion(4, "boundary, symmetry, transfer and differential identities",
            {{"boundary_values", 50},
             {"r_odd_forms", 50},
             {"p_symmetry", 50},
             {"r_eq_p_at_z1", 39},
             {"r_split", 50},
             {"p0_p1_complement", 50},
             {"q_values", 50},
             {"m_values", 50},
             {"xi_transfer", 40},
             {"differential_forms", 40}},
            0.0);

  criterion(5, "series values, ascent/descent counts and avoidance classes agree",
            {{"genocchi", 9}}, 60.0);

  criterion(6, "all five bijections verified exhaustively through S_8",
            {{"bijection_round_trip", 8},
             {"bijection_statistics", 8},
             {"bijection_cardinality", 8}},
            120.0);

  // Criterion 7: the headline values reproduce along independent routes and
  // nothing anywhere compares with a tolerance; all records above used exact
  // integer or structural equality.
  {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    for (Family f : {Family::R, Family::P, Family::Q, Family::M}) {
      const BivariatePolynomial via_recursion = family_poly(f, 8);
      pass = pass && via_recursion == brute_distribution(8, f) &&
             via_recursion == closed_form_poly(f, 8);
    }
    pass = pass && coeff(Family::P, 1, 2, 8) == 6912 &&
           coeff(Family::R, std::nullopt, 2, 8) == 20736;
    const auto g = genocchi_sequence(6);
    pass = pass && g.values == std::vector<BigInt>{1, 1, 3, 17, 155, 2073} &&
           dumont_count(7) == 17;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!pass) ++g_failures;
    report(7, "headline values reproduce exactly on all routes; no tolerances anywhere",
           pass, "triple cross-check at n = 8,", seconds, 0.0);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
