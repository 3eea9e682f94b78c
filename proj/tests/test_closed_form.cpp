#include <doctest.h>

#include "pardes/closed_form.hpp"
#include "pardes/operators.hpp"
#include "pardes/verify.hpp"

using namespace pardes;

TEST_CASE("factorials and binomials") {
  CHECK(factorial_big(0) == 1);
  CHECK(factorial_big(5) == 120);
  CHECK(factorial_big(25) == BigInt("15511210043330985984000000"));
  CHECK(binomial_big(10, 3) == 120);
  CHECK(binomial_big(4, 0) == 1);
  CHECK(binomial_big(4, 5) == 0);
  CHECK(binomial_big(4, -1) == 0);
  CHECK(binomial_big(-2, 0) == 0);
}

TEST_CASE("single coefficients from the published lists") {
  CHECK(coeff(Family::R, std::nullopt, 2, 8) == 20736);
  CHECK(coeff(Family::R, std::nullopt, 1, 5) == 72);
  CHECK(coeff(Family::P, 1, 2, 8) == 6912);
  CHECK(coeff(Family::Q, 1, 1, 5) == 48);
  CHECK(coeff(Family::M, std::nullopt, 0, 3) == 2);
  CHECK(coeff(Family::R, std::nullopt, 5, 8) == 0);
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(coeff(Family::P, std::nullopt, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(coeff(Family::R, 0, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(coeff(Family::Q, 2, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(coeff(Family::R, std::nullopt, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(coeff(Family::R, std::nullopt, -1, 4), std::invalid_argument);
  CHECK(coeff(CoefficientQuery{Family::R, std::nullopt, 0, 2}) == 1);
}

TEST_CASE("closed forms match the recursion tables up to n = 50") {
  for (Family f : {Family::R, Family::P, Family::Q, Family::M}) {
    const auto table = family_table(f, 50);
    for (int n = 1; n <= 50; ++n)
      CHECK(closed_form_poly(f, n) == table[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("closed forms match brute force for small sizes") {
  for (Family f : {Family::R, Family::P, Family::Q, Family::M})
    for (int n = 1; n <= 7; ++n)
      CHECK(closed_form_poly(f, n) == brute_distribution(n, f));
}

TEST_CASE("boundary specializations up to n = 50") {
  for (int m = 1; 2 * m <= 50; ++m) {
    const BigInt mf2 = factorial_big(m) * factorial_big(m);
    CHECK(coeff(Family::R, std::nullopt, 0, 2 * m) == mf2);
    CHECK(coeff(Family::R, std::nullopt, m, 2 * m) == mf2);
    CHECK(coeff(Family::P, 0, 0, 2 * m) == mf2);
    CHECK(coeff(Family::P, 1, 0, 2 * m) == m * mf2);
  }
  for (int m = 1; 2 * m + 1 <= 50; ++m) {
    const BigInt ff = factorial_big(m) * factorial_big(m + 1);
    CHECK(coeff(Family::P, 0, 0, 2 * m + 1) == ff);
    CHECK(coeff(Family::P, 1, 0, 2 * m + 1) == m * ff);
  }
}

TEST_CASE("both printed forms of each dual formula agree") {
  for (int n = 1; n <= 50; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (n % 2 == 1) {
        const auto r_alt = coeff_alternate(Family::R, std::nullopt, k, n);
        REQUIRE(r_alt.has_value());
        CHECK(*r_alt == coeff(Family::R, std::nullopt, k, n));
        const auto p_alt = coeff_alternate(Family::P, 0, k, n);
        REQUIRE(p_alt.has_value());
        CHECK(*p_alt == coeff(Family::P, 0, k, n));
      }
      const auto m_alt = coeff_alternate(Family::M, std::nullopt, k, n);
      REQUIRE(m_alt.has_value());
      CHECK(*m_alt == coeff(Family::M, std::nullopt, k, n));
    }
  }
  CHECK(!coeff_alternate(Family::P, 1, 1, 6).has_value());
  CHECK(!coeff_alternate(Family::Q, 0, 1, 6).has_value());
}

TEST_CASE("out-of-support queries are zero, not errors") {
  CHECK(coeff(Family::Q, 0, 0, 7) == 0);
  CHECK(coeff(Family::Q, 0, 9, 7) == 0);
  CHECK(coeff(Family::P, 1, 3, 7) == 0);
  CHECK(coeff(Family::M, std::nullopt, 40, 9) == 0);
}
