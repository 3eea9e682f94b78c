// Sparse exact polynomials in x and z over arbitrary-precision integers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>

namespace pardes {

using BigInt = boost::multiprecision::cpp_int;

struct Monomial {
  int z = 0;
  int x = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse bivariate polynomial keyed by (z-degree, x-degree), ascending.
/// Coefficients are exact integers; zero coefficients are never stored.
/// The distribution polynomials only ever carry z-degrees 0 and 1, but the
/// arithmetic is general (the differential-operator identities pass through
/// transient z^2 terms that cancel).
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;

  static BivariatePolynomial constant(BigInt c);
  static BivariatePolynomial monomial(int z, int x, BigInt c = 1);

  void add_term(int z, int x, const BigInt& c);

  /// Coefficient of z^z x^x (zero when absent).
  BigInt coeff(int z, int x) const;

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_xdeg() const;
  int max_zdeg() const;

  /// Sum of all coefficients, i.e. the value at x = z = 1.
  BigInt total() const;

  BivariatePolynomial derivative_x() const;
  BivariatePolynomial derivative_z() const;

  /// Substitutes z = z0 and merges terms, leaving z-degree 0 only.
  BivariatePolynomial eval_z(const BigInt& z0) const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    a += b;
    return a;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b);

  bool operator==(const BivariatePolynomial&) const = default;

 private:
  std::map<Monomial, BigInt> terms_;
};

/// Renders terms in (z, x) ascending key order, e.g. "4 + 8x + 8z + 4xz".
std::string to_string(const BivariatePolynomial& p);

}  // namespace pardes
