// The seven insertion operators and the recursion drivers for R_n, P_n, Q_n, M_n.
#pragma once

#include <vector>

#include "pardes/descents.hpp"
#include "pardes/polynomial.hpp"

namespace pardes {

/// Linear operators on monomials. Delta/Gamma advance the R family,
/// Theta/Omega the P family, Phi/Psi the Q family; Xi maps P_n onto Q_n.
enum class OperatorId { Delta, Gamma, Theta, Omega, Phi, Psi, Xi };

/// Applies the operator's monomial action linearly. size_param is the size of
/// the permutations the input polynomial describes: even for Delta/Theta/Phi,
/// odd for Gamma/Omega/Psi, ignored by Xi. Delta and Gamma reject inputs with
/// z-degree above 0; the bivariate operators reject z-degree above 1.
BivariatePolynomial apply_operator(OperatorId op, int size_param,
                                   const BivariatePolynomial& poly);

/// The n-th distribution polynomial, generated by the operator recursion
/// (families R, P, Q) or assembled from P and Q (family M).
BivariatePolynomial family_poly(Family f, int n);

/// Polynomials 1..max_n for one family; index n holds the n-th polynomial
/// (index 0 is unused). One pass of the recursion, cheaper than repeated
/// family_poly calls.
std::vector<BivariatePolynomial> family_table(Family f, int max_n);

/// Runs the step n-1 -> n both by the discrete operator and by the stated
/// first-order differential form and compares exactly. f in {R, P, Q}, n >= 2.
bool differential_form_check(Family f, int n);

std::string to_string(OperatorId op);
OperatorId operator_from_string(std::string_view name);

}  // namespace pardes
