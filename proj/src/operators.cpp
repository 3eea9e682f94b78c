#include "pardes/operators.hpp"

#include <stdexcept>

namespace pardes {

namespace {

struct Term {
  int z;
  int x;
  BigInt c;
};

// Monomial action of each operator: the image of z^zdeg x^k under the operator
// indexed by size m (even for Delta/Theta/Phi, odd for Gamma/Omega/Psi).
// Each action's coefficients sum to m+1, one term per insertion slot.
std::vector<Term> monomial_image(OperatorId op, int m, int zdeg, int k) {
  switch (op) {
    case OperatorId::Delta: {
      const int twon = m;
      return {{0, k - 1, k}, {0, k, twon + 1 - k}};
    }
    case OperatorId::Gamma: {
      const int twon1 = m;
      return {{0, k, k + 1}, {0, k + 1, twon1 - k}};
    }
    case OperatorId::Theta: {
      const int n = m / 2;
      if (zdeg == 0) return {{0, k, n + k + 1}, {0, k + 1, n - k}};
      return {{1, k, n + k + 1}, {0, k + 1, 1}, {1, k + 1, n - k - 1}};
    }
    case OperatorId::Omega: {
      const int n = (m - 1) / 2;
      if (zdeg == 0) return {{0, k, n + k + 1}, {1, k, 1}, {0, k + 1, n - k}};
      return {{1, k, n + k + 2}, {1, k + 1, n - k}};
    }
    case OperatorId::Phi: {
      const int n = m / 2;
      if (zdeg == 0) return {{1, k, 1}, {0, k, n + k}, {0, k + 1, n - k}};
      return {{1, k, n + k + 1}, {1, k + 1, n - k}};
    }
    case OperatorId::Psi: {
      const int n = (m - 1) / 2;
      if (zdeg == 0) return {{0, k, n + k + 1}, {0, k + 1, n - k + 1}};
      return {{1, k, n + k + 1}, {0, k + 1, 1}, {1, k + 1, n - k}};
    }
    case OperatorId::Xi: {
      if (zdeg == 0) return {{1, k, 1}};
      return {{0, k + 1, 1}};
    }
  }
  throw std::logic_error("unreachable");
}

bool needs_even_size(OperatorId op) {
  return op == OperatorId::Delta || op == OperatorId::Theta || op == OperatorId::Phi;
}

bool needs_odd_size(OperatorId op) {
  return op == OperatorId::Gamma || op == OperatorId::Omega || op == OperatorId::Psi;
}

int max_allowed_zdeg(OperatorId op) {
  return (op == OperatorId::Delta || op == OperatorId::Gamma) ? 0 : 1;
}

}  // namespace

BivariatePolynomial apply_operator(OperatorId op, int size_param,
                                   const BivariatePolynomial& poly) {
  if (op != OperatorId::Xi) {
    if (size_param < 1)
      throw std::invalid_argument("apply_operator: size_param must be >= 1");
    if (needs_even_size(op) && size_param % 2 != 0)
      throw std::invalid_argument("apply_operator: " + to_string(op) +
                                  " takes an even size_param");
    if (needs_odd_size(op) && size_param % 2 != 1)
      throw std::invalid_argument("apply_operator: " + to_string(op) +
                                  " takes an odd size_param");
  }
  const int zcap = max_allowed_zdeg(op);
  BivariatePolynomial out;
  for (const auto& [key, c] : poly.terms()) {
    if (key.z > zcap)
      throw std::domain_error("apply_operator: " + to_string(op) +
                              " is undefined on z-degree " + std::to_string(key.z));
    for (const Term& t : monomial_image(op, size_param, key.z, key.x))
      if (t.x >= 0) out.add_term(t.z, t.x, c * t.c);
  }
  return out;
}

std::vector<BivariatePolynomial> family_table(Family f, int max_n) {
  if (max_n < 1) throw std::invalid_argument("family_table: n must be >= 1");
  std::vector<BivariatePolynomial> table(static_cast<std::size_t>(max_n) + 1);
  if (f == Family::M) {
    // No operator recursion of its own: M_{k,2n} = P_{0,k,2n} + P_{1,k,2n}
    // and M_{k,2n+1} = Q_{0,k,2n+1} + Q_{1,k,2n+1}, i.e. z = 1 in P resp. Q.
    const auto p = family_table(Family::P, max_n);
    const auto q = family_table(Family::Q, max_n);
    for (int n = 1; n <= max_n; ++n)
      table[static_cast<std::size_t>(n)] =
          (n % 2 == 0 ? p : q)[static_cast<std::size_t>(n)].eval_z(1);
    return table;
  }

  BivariatePolynomial one = BivariatePolynomial::constant(1);
  switch (f) {
    case Family::R:
      table[1] = one;
      if (max_n >= 2) table[2] = one + BivariatePolynomial::monomial(0, 1);
      break;
    case Family::P:
      table[1] = one;
      if (max_n >= 2) table[2] = one + BivariatePolynomial::monomial(1, 0);
      break;
    case Family::Q:
      table[1] = BivariatePolynomial::monomial(1, 0);
      if (max_n >= 2)
        table[2] = BivariatePolynomial::monomial(1, 0) + BivariatePolynomial::monomial(0, 1);
      break;
    case Family::M:
      throw std::logic_error("unreachable");
  }
  for (int n = 3; n <= max_n; ++n) {
    OperatorId op;
    if (f == Family::R)
      op = (n % 2 == 1) ? OperatorId::Delta : OperatorId::Gamma;
    else if (f == Family::P)
      op = (n % 2 == 1) ? OperatorId::Theta : OperatorId::Omega;
    else
      op = (n % 2 == 1) ? OperatorId::Phi : OperatorId::Psi;
    table[static_cast<std::size_t>(n)] =
        apply_operator(op, n - 1, table[static_cast<std::size_t>(n) - 1]);
  }
  return table;
}

BivariatePolynomial family_poly(Family f, int n) {
  if (n < 1) throw std::invalid_argument("family_poly: n must be >= 1");
  return family_table(f, n)[static_cast<std::size_t>(n)];
}

bool differential_form_check(Family f, int n) {
  if (f == Family::M)
    throw std::invalid_argument("differential_form_check: no differential form for M");
  if (n < 2) throw std::invalid_argument("differential_form_check: n must be >= 2");

  const BivariatePolynomial prev = family_poly(f, n - 1);
  OperatorId op;
  if (f == Family::R)
    op = (n % 2 == 1) ? OperatorId::Delta : OperatorId::Gamma;
  else if (f == Family::P)
    op = (n % 2 == 1) ? OperatorId::Theta : OperatorId::Omega;
  else
    op = (n % 2 == 1) ? OperatorId::Phi : OperatorId::Psi;
  const BivariatePolynomial by_operator = apply_operator(op, n - 1, prev);

  const auto mono = [](int z, int x, BigInt c) {
    return BivariatePolynomial::monomial(z, x, std::move(c));
  };
  // x(1-x), z(1-z), x(1-z) multipliers for the first-order forms.
  const BivariatePolynomial x_one_minus_x = mono(0, 1, 1) + mono(0, 2, -1);
  const BivariatePolynomial z_one_minus_z = mono(1, 0, 1) + mono(2, 0, -1);
  const BivariatePolynomial x_one_minus_z = mono(0, 1, 1) + mono(1, 1, -1);

  BivariatePolynomial by_derivative;
  if (f == Family::R) {
    if (n % 2 == 1) {
      const int t = (n - 1) / 2;
      by_derivative = (mono(0, 0, 1) + mono(0, 1, -1)) * prev.derivative_x() +
                      mono(0, 0, 1 + 2 * t) * prev;
    } else {
      const int t = (n - 2) / 2;
      by_derivative = x_one_minus_x * prev.derivative_x() +
                      (mono(0, 0, 1) + mono(0, 1, 1 + 2 * t)) * prev;
    }
  } else if (f == Family::P) {
    if (n % 2 == 1) {
      const int t = (n - 1) / 2;
      by_derivative = x_one_minus_x * prev.derivative_x() +
                      x_one_minus_z * prev.derivative_z() +
                      (mono(0, 0, 1 + t) + mono(0, 1, t)) * prev;
    } else {
      const int t = (n - 2) / 2;
      by_derivative = x_one_minus_x * prev.derivative_x() +
                      z_one_minus_z * prev.derivative_z() +
                      (mono(0, 0, 1 + t) + mono(1, 0, 1) + mono(0, 1, t)) * prev;
    }
  } else {
    if (n % 2 == 1) {
      const int t = (n - 1) / 2;
      by_derivative = x_one_minus_x * prev.derivative_x() +
                      z_one_minus_z * prev.derivative_z() +
                      (mono(1, 0, 1) + mono(0, 0, t) + mono(0, 1, t)) * prev;
    } else {
      const int t = (n - 2) / 2;
      by_derivative = x_one_minus_x * prev.derivative_x() +
                      x_one_minus_z * prev.derivative_z() +
                      (mono(0, 0, 1 + t) + mono(0, 1, 1 + t)) * prev;
    }
  }
  return by_operator == by_derivative;
}

std::string to_string(OperatorId op) {
  switch (op) {
    case OperatorId::Delta:
      return "delta";
    case OperatorId::Gamma:
      return "gamma";
    case OperatorId::Theta:
      return "theta";
    case OperatorId::Omega:
      return "omega";
    case OperatorId::Phi:
      return "phi";
    case OperatorId::Psi:
      return "psi";
    case OperatorId::Xi:
      return "xi";
  }
  throw std::logic_error("unreachable");
}

OperatorId operator_from_string(std::string_view name) {
  if (name == "delta") return OperatorId::Delta;
  if (name == "gamma") return OperatorId::Gamma;
  if (name == "theta") return OperatorId::Theta;
  if (name == "omega") return OperatorId::Omega;
  if (name == "phi") return OperatorId::Phi;
  if (name == "psi") return OperatorId::Psi;
  if (name == "xi") return OperatorId::Xi;
  throw std::invalid_argument("unknown operator '" + std::string(name) + "'");
}

}  // namespace pardes
