#include "pardes/polynomial.hpp"

namespace pardes {

BivariatePolynomial BivariatePolynomial::constant(BigInt c) {
  return monomial(0, 0, std::move(c));
}

BivariatePolynomial BivariatePolynomial::monomial(int z, int x, BigInt c) {
  BivariatePolynomial p;
  p.add_term(z, x, c);
  return p;
}

void BivariatePolynomial::add_term(int z, int x, const BigInt& c) {
  if (c == 0) return;
  const Monomial key{z, x};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BivariatePolynomial::coeff(int z, int x) const {
  auto it = terms_.find(Monomial{z, x});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BivariatePolynomial::max_xdeg() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.x);
  return m;
}

int BivariatePolynomial::max_zdeg() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.z);
  return m;
}

BigInt BivariatePolynomial::total() const {
  BigInt s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

BivariatePolynomial BivariatePolynomial::derivative_x() const {
  BivariatePolynomial out;
  for (const auto& [k, c] : terms_)
    if (k.x > 0) out.add_term(k.z, k.x - 1, c * k.x);
  return out;
}

BivariatePolynomial BivariatePolynomial::derivative_z() const {
  BivariatePolynomial out;
  for (const auto& [k, c] : terms_)
    if (k.z > 0) out.add_term(k.z - 1, k.x, c * k.z);
  return out;
}

BivariatePolynomial BivariatePolynomial::eval_z(const BigInt& z0) const {
  BivariatePolynomial out;
  for (const auto& [k, c] : terms_) {
    BigInt factor = 1;
    for (int i = 0; i < k.z; ++i) factor *= z0;
    out.add_term(0, k.x, c * factor);
  }
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.z, k.x, c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.z + kb.z, ka.x + kb.x, ca * cb);
  return out;
}

std::string to_string(const BivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : p.terms()) {
    const bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    std::string vars;
    if (k.x == 1)
      vars += "x";
    else if (k.x > 1)
      vars += "x^" + std::to_string(k.x);
    if (k.z == 1)
      vars += "z";
    else if (k.z > 1)
      vars += "z^" + std::to_string(k.z);
    if (vars.empty()) {
      s += mag.str();
    } else {
      if (mag != 1) s += mag.str();
      s += vars;
    }
  }
  return s;
}

}  // namespace pardes
