#include <doctest.h>

#include "pardes/closed_form.hpp"
#include "pardes/operators.hpp"
#include "pardes/polynomial.hpp"

using namespace pardes;

namespace {

BivariatePolynomial from_terms(std::initializer_list<std::tuple<int, int, long long>> terms) {
  BivariatePolynomial p;
  for (const auto& [z, x, c] : terms) p.add_term(z, x, c);
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  BivariatePolynomial p = from_terms({{0, 0, 1}, {0, 1, 2}});
  CHECK(p.coeff(0, 1) == 2);
  CHECK(p.coeff(1, 0) == 0);
  CHECK(p.total() == 3);
  p.add_term(0, 1, -2);
  CHECK(p == from_terms({{0, 0, 1}}));
  CHECK(to_string(from_terms({{0, 0, 4}, {0, 1, 8}, {1, 0, 8}, {1, 1, 4}})) ==
        "4 + 8x + 8z + 4xz");
  CHECK(to_string(BivariatePolynomial{}) == "0");
  CHECK(to_string(from_terms({{0, 2, 1}, {0, 0, -3}})) == "-3 + x^2");

  const auto prod = from_terms({{0, 1, 1}, {1, 0, 1}}) * from_terms({{0, 1, 1}, {0, 0, -1}});
  CHECK(prod == from_terms({{0, 2, 1}, {0, 1, -1}, {1, 1, 1}, {1, 0, -1}}));

  CHECK(from_terms({{1, 2, 6}}).derivative_x() == from_terms({{1, 1, 12}}));
  CHECK(from_terms({{1, 2, 6}}).derivative_z() == from_terms({{0, 2, 6}}));
  CHECK(from_terms({{1, 1, 2}, {0, 1, 2}, {1, 0, 2}}).eval_z(1) ==
        from_terms({{0, 1, 4}, {0, 0, 2}}));
  CHECK(from_terms({{1, 1, 5}}).eval_z(0) == BivariatePolynomial{});
}

TEST_CASE("operator monomial actions on the published steps") {
  const auto r2 = from_terms({{0, 0, 1}, {0, 1, 1}});
  CHECK(apply_operator(OperatorId::Delta, 2, r2) == from_terms({{0, 0, 4}, {0, 1, 2}}));

  const auto r3 = from_terms({{0, 0, 4}, {0, 1, 2}});
  CHECK(apply_operator(OperatorId::Gamma, 3, r3) ==
        from_terms({{0, 0, 4}, {0, 1, 16}, {0, 2, 4}}));

  const auto p2 = from_terms({{0, 0, 1}, {1, 0, 1}});
  CHECK(apply_operator(OperatorId::Theta, 2, p2) ==
        from_terms({{0, 0, 2}, {1, 0, 2}, {0, 1, 2}}));

  const auto p3 = from_terms({{0, 0, 2}, {1, 0, 2}, {0, 1, 2}});
  CHECK(apply_operator(OperatorId::Omega, 3, p3) ==
        from_terms({{0, 0, 4}, {1, 0, 8}, {0, 1, 8}, {1, 1, 4}}));

  const auto q2 = from_terms({{1, 0, 1}, {0, 1, 1}});
  CHECK(apply_operator(OperatorId::Phi, 2, q2) ==
        from_terms({{1, 0, 2}, {0, 1, 2}, {1, 1, 2}}));

  const auto q3 = from_terms({{1, 0, 2}, {0, 1, 2}, {1, 1, 2}});
  CHECK(apply_operator(OperatorId::Psi, 3, q3) ==
        from_terms({{1, 0, 4}, {0, 1, 8}, {1, 1, 8}, {0, 2, 4}}));

  const auto p4 = from_terms({{0, 0, 4}, {1, 0, 8}, {0, 1, 8}, {1, 1, 4}});
  CHECK(apply_operator(OperatorId::Xi, 0, p4) ==
        from_terms({{1, 0, 4}, {0, 1, 8}, {1, 1, 8}, {0, 2, 4}}));
}

TEST_CASE("operator domain and parity validation") {
  const auto with_z = from_terms({{1, 0, 1}});
  CHECK_THROWS_AS(apply_operator(OperatorId::Delta, 2, with_z), std::domain_error);
  CHECK_THROWS_AS(apply_operator(OperatorId::Gamma, 3, with_z), std::domain_error);
  const auto z2 = from_terms({{2, 0, 1}});
  CHECK_THROWS_AS(apply_operator(OperatorId::Theta, 2, z2), std::domain_error);
  CHECK_THROWS_AS(apply_operator(OperatorId::Xi, 0, z2), std::domain_error);
  CHECK_THROWS_AS(apply_operator(OperatorId::Delta, 3, from_terms({{0, 0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_operator(OperatorId::Psi, 2, from_terms({{0, 0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("family polynomials match the published values") {
  CHECK(family_poly(Family::R, 8) == from_terms({{0, 0, 576},
                                                 {0, 1, 9216},
                                                 {0, 2, 20736},
                                                 {0, 3, 9216},
                                                 {0, 4, 576}}));
  CHECK(family_poly(Family::Q, 5) == from_terms({{1, 0, 12},
                                                 {0, 1, 24},
                                                 {1, 1, 48},
                                                 {0, 2, 24},
                                                 {1, 2, 12}}));
  CHECK(family_poly(Family::P, 1) == from_terms({{0, 0, 1}}));
  CHECK(family_poly(Family::M, 2) == from_terms({{0, 0, 2}}));
  CHECK_THROWS_AS(family_poly(Family::R, 0), std::invalid_argument);
}

TEST_CASE("coefficient totals are factorials") {
  for (Family f : {Family::R, Family::P, Family::Q, Family::M}) {
    const auto table = family_table(f, 40);
    for (int n = 1; n <= 40; ++n)
      CHECK(table[static_cast<std::size_t>(n)].total() == factorial_big(n));
  }
}

TEST_CASE("eval_z collapses P onto R at odd sizes") {
  CHECK(family_poly(Family::P, 5).eval_z(1) ==
        from_terms({{0, 0, 36}, {0, 1, 72}, {0, 2, 12}}));
  CHECK(BivariatePolynomial{}.eval_z(7) == BivariatePolynomial{});
  CHECK(family_poly(Family::Q, 3).eval_z(1) == from_terms({{0, 0, 2}, {0, 1, 4}}));

  const auto r = family_table(Family::R, 39);
  const auto p = family_table(Family::P, 39);
  for (int n = 1; n <= 39; n += 2)
    CHECK(r[static_cast<std::size_t>(n)] == p[static_cast<std::size_t>(n)].eval_z(1));
}

TEST_CASE("xi transfers P onto Q") {
  const auto p = family_table(Family::P, 40);
  const auto q = family_table(Family::Q, 40);
  for (int n = 1; n <= 40; ++n)
    CHECK(q[static_cast<std::size_t>(n)] ==
          apply_operator(OperatorId::Xi, 0, p[static_cast<std::size_t>(n)]));
}

TEST_CASE("differential forms agree with the discrete operators") {
  CHECK(differential_form_check(Family::R, 3));
  CHECK(differential_form_check(Family::P, 4));
  CHECK(differential_form_check(Family::Q, 5));
  for (Family f : {Family::R, Family::P, Family::Q})
    for (int n = 2; n <= 25; ++n) CHECK(differential_form_check(f, n));
  CHECK_THROWS_AS(differential_form_check(Family::M, 4), std::invalid_argument);
  CHECK_THROWS_AS(differential_form_check(Family::R, 1), std::invalid_argument);
}

TEST_CASE("coefficient symmetries of the generated tables") {
  const auto r = family_table(Family::R, 30);
  for (int n = 2; n <= 30; n += 2) {
    const int m = n / 2;
    for (int k = 0; k <= m; ++k)
      CHECK(r[static_cast<std::size_t>(n)].coeff(0, k) ==
            r[static_cast<std::size_t>(n)].coeff(0, m - k));
  }
  const auto p = family_table(Family::P, 31);
  for (int n = 3; n <= 31; n += 2) {
    const int m = n / 2;
    for (int k = 0; k <= m; ++k) {
      CHECK(p[static_cast<std::size_t>(n)].coeff(0, k) ==
            p[static_cast<std::size_t>(n)].coeff(0, m - k));
      if (k + 1 <= m)
        CHECK(p[static_cast<std::size_t>(n)].coeff(1, k) ==
              p[static_cast<std::size_t>(n)].coeff(1, m - k - 1));
    }
  }
}

TEST_CASE("operator and family string names") {
  CHECK(to_string(OperatorId::Xi) == "xi");
  CHECK(operator_from_string("delta") == OperatorId::Delta);
  CHECK_THROWS_AS(operator_from_string("nabla"), std::invalid_argument);
}
