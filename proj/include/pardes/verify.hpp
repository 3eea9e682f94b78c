// Brute-force oracle distributions and the catalog of identity checks.
#pragma once

#include <string>
#include <vector>

#include "pardes/descents.hpp"
#include "pardes/polynomial.hpp"

namespace pardes {

struct CheckRecord {
  std::string identity;
  int n = 0;  // 0 when not size-indexed
  bool pass = false;
  bool expected_deviation = false;  // known printed-table erratum, not a failure
  std::string left;                 // value the artifact computed
  std::string right;                // value it was compared against
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> records;

  /// True when every record passes (expected deviations pass by carrying the
  /// independently confirmed value).
  bool passed() const;
  int failure_count() const;
};

/// Exact distribution of the family statistic over S_n, summed permutation by
/// permutation. The oracle side of every recursion/closed-form check.
BivariatePolynomial brute_distribution(int n, Family f);

/// Eulerian numbers A(n, 0..n-1) by their own recurrence; the sanity oracle
/// for the unrestricted descent distribution.
std::vector<BigInt> eulerian_row(int n);

std::vector<std::string> registered_suites();

/// Runs one registered suite; max_n <= 0 picks the suite's default range.
/// Unknown ids throw std::invalid_argument; mismatches never throw, they
/// become failing records.
VerificationReport run_identity_suite(const std::string& suite, int max_n = 0);

}  // namespace pardes
