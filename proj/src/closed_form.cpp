#include "pardes/closed_form.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace pardes {

namespace {

std::mutex g_fact_mutex;
std::vector<BigInt> g_factorials = {BigInt(1)};  // g_factorials[i] = i!

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (q * den != num)
    throw std::logic_error("closed form: expected exact division, got remainder");
  return q;
}

void check_query(Family f, const std::optional<int>& j, int k, int n) {
  if (n < 1) throw std::invalid_argument("coeff: n must be >= 1");
  if (k < 0) throw std::invalid_argument("coeff: k must be >= 0");
  const bool bivariate = (f == Family::P || f == Family::Q);
  if (bivariate) {
    if (!j.has_value())
      throw std::invalid_argument("coeff: families P and Q need a z-degree j");
    if (*j != 0 && *j != 1)
      throw std::invalid_argument("coeff: j must be 0 or 1");
  } else if (j.has_value()) {
    throw std::invalid_argument("coeff: families R and M take no z-degree");
  }
}

}  // namespace

BigInt factorial_big(int n) {
  if (n < 0) throw std::invalid_argument("factorial_big: n must be >= 0");
  std::lock_guard<std::mutex> lock(g_fact_mutex);
  while (static_cast<int>(g_factorials.size()) <= n)
    g_factorials.push_back(g_factorials.back() *
                           static_cast<int>(g_factorials.size()));
  return g_factorials[static_cast<std::size_t>(n)];
}

BigInt binomial_big(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return exact_div(factorial_big(n), factorial_big(k) * factorial_big(n - k));
}

BigInt coeff(Family f, std::optional<int> j, int k, int n) {
  check_query(f, j, k, n);
  const int m = n / 2;
  const BigInt mf2 = factorial_big(m) * factorial_big(m);
  if (n % 2 == 0) {
    switch (f) {
      case Family::R:
        return binomial_big(m, k) * binomial_big(m, k) * mf2;
      case Family::P:
        if (*j == 0) return binomial_big(m - 1, k) * binomial_big(m, k) * mf2;
        return binomial_big(m - 1, k) * binomial_big(m, k + 1) * mf2;
      case Family::Q:
        if (*j == 0) return binomial_big(m - 1, k - 1) * binomial_big(m, k) * mf2;
        return binomial_big(m - 1, k) * binomial_big(m, k) * mf2;
      case Family::M:
        return binomial_big(m - 1, k) * binomial_big(m + 1, k + 1) * mf2;
    }
  } else {
    switch (f) {
      case Family::R:
        return (k + 1) * binomial_big(m, k + 1) * binomial_big(m, k + 1) * mf2 +
               (2 * m + 1 - k) * binomial_big(m, k) * binomial_big(m, k) * mf2;
      case Family::P:
        if (*j == 0)
          return (k + 1) * binomial_big(m, k) * binomial_big(m + 1, k + 1) * mf2;
        if (k > m) return 0;
        return exact_div((m + 1) * (m - k) * binomial_big(m, k) * binomial_big(m, k) * mf2,
                         BigInt(k + 1));
      case Family::Q:
        if (*j == 0) {
          if (k == 0 || k > m + 1) return 0;
          return exact_div((m + 1) * (m - k + 1) * binomial_big(m, k - 1) *
                               binomial_big(m, k - 1) * mf2,
                           BigInt(k));
        }
        return binomial_big(m, k) * binomial_big(m, k) * factorial_big(m) *
               factorial_big(m + 1);
      case Family::M:
        return binomial_big(m, k) * binomial_big(m + 1, k) * factorial_big(m) *
               factorial_big(m + 1);
    }
  }
  throw std::logic_error("unreachable");
}

BigInt coeff(const CoefficientQuery& q) { return coeff(q.family, q.j, q.k, q.n); }

std::optional<BigInt> coeff_alternate(Family f, std::optional<int> j, int k, int n) {
  check_query(f, j, k, n);
  const int m = n / 2;
  const BigInt mf2 = factorial_big(m) * factorial_big(m);
  if (f == Family::R && n % 2 == 1) {
    if (k > m) return BigInt(0);
    const BigInt nf2 = factorial_big(m + 1) * factorial_big(m + 1);
    return exact_div(binomial_big(m, k) * binomial_big(m, k) * nf2, BigInt(k + 1));
  }
  if (f == Family::P && n % 2 == 1 && *j == 0)
    return (m + 1) * binomial_big(m, k) * binomial_big(m, k) * mf2;
  if (f == Family::M && n % 2 == 0) {
    const BigInt num = (m + 1) * binomial_big(m - 1, k) * binomial_big(m, k) * mf2;
    return exact_div(num, BigInt(k + 1));
  }
  if (f == Family::M && n % 2 == 1) {
    if (k > m) return BigInt(0);
    const BigInt nf2 = factorial_big(m + 1) * factorial_big(m + 1);
    return exact_div(binomial_big(m, k) * binomial_big(m, k) * nf2, BigInt(m - k + 1));
  }
  return std::nullopt;
}

BivariatePolynomial closed_form_poly(Family f, int n) {
  if (n < 1) throw std::invalid_argument("closed_form_poly: n must be >= 1");
  BivariatePolynomial out;
  const bool bivariate = (f == Family::P || f == Family::Q);
  for (int k = 0; k <= n; ++k) {
    if (bivariate) {
      for (int j = 0; j <= 1; ++j) out.add_term(j, k, coeff(f, j, k, n));
    } else {
      out.add_term(0, k, coeff(f, std::nullopt, k, n));
    }
  }
  return out;
}

}  // namespace pardes
