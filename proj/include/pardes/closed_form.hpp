// Direct big-integer evaluation of the closed-form coefficient formulas.
#pragma once

#include <optional>

#include "pardes/descents.hpp"
#include "pardes/polynomial.hpp"

namespace pardes {

/// One coefficient request: family, optional z-degree j (P and Q only),
/// x-degree k, polynomial index n.
struct CoefficientQuery {
  Family family;
  std::optional<int> j;
  int k = 0;
  int n = 1;
};

/// Exact value of the coefficient. Out-of-support (k, n) combinations
/// evaluate to 0; binomials with out-of-range arguments are 0 by convention.
BigInt coeff(const CoefficientQuery& q);
BigInt coeff(Family f, std::optional<int> j, int k, int n);

/// The alternate printed expression for coefficients that have two
/// (R odd, P z^0 odd, M even, M odd); nullopt where only one form exists.
std::optional<BigInt> coeff_alternate(Family f, std::optional<int> j, int k, int n);

/// Assembles the whole n-th polynomial from closed-form coefficients.
BivariatePolynomial closed_form_poly(Family f, int n);

BigInt factorial_big(int n);

/// Zero whenever k < 0, n < 0 or k > n.
BigInt binomial_big(int n, int k);

}  // namespace pardes
