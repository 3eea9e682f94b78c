#include <doctest.h>

#include <map>

#include "pardes/bijections.hpp"
#include "pardes/closed_form.hpp"
#include "pardes/descents.hpp"
#include "pardes/permutation.hpp"

using namespace pardes;

TEST_CASE("r_symmetry worked examples") {
  CHECK(r_symmetry(Permutation({1, 2})) == Permutation({2, 1}));
  CHECK(r_symmetry(Permutation({1, 2, 3, 4})) == Permutation({4, 3, 2, 1}));
  CHECK(r_symmetry_inverse(Permutation({2, 1})) == Permutation({1, 2}));
  CHECK(r_symmetry_inverse(Permutation({4, 3, 2, 1})) == Permutation({1, 2, 3, 4}));
  CHECK_THROWS_AS(r_symmetry(Permutation({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("r_symmetry transports the statistic and round-trips") {
  for (int n = 2; n <= 6; n += 2) {
    const int half = n / 2;
    std::map<int, int> class_sizes;
    for (const auto& sigma : all_perms(n)) {
      const int k = parity_descent_count(sigma, DescentKind::LeftEven);
      const Permutation image = r_symmetry(sigma);
      CHECK(parity_descent_count(image, DescentKind::LeftEven) == half - k);
      CHECK(r_symmetry_inverse(image) == sigma);
      ++class_sizes[k];
    }
    for (const auto& [k, size] : class_sizes)
      CHECK(BigInt(size) == coeff(Family::R, std::nullopt, k, n));
  }
  // the fixed middle class of S_4 maps onto itself in total
  CHECK(coeff(Family::R, std::nullopt, 1, 4) == 16);
}

TEST_CASE("r_split worked examples") {
  CHECK(r_split(Permutation({2, 1})) ==
        std::pair(SplitTag::P1, Permutation({2, 1})));
  CHECK(r_split(Permutation({1, 2})) ==
        std::pair(SplitTag::P0, Permutation({1, 2})));
  CHECK(r_split_inverse(SplitTag::P1, Permutation({2, 1})) == Permutation({2, 1}));
  CHECK(r_split_inverse(SplitTag::P0, Permutation({1, 2})) == Permutation({1, 2}));
  CHECK_THROWS_AS(r_split(Permutation({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(r_split_inverse(SplitTag::P0, Permutation({2, 1})),
                  std::invalid_argument);
}

TEST_CASE("r_split realizes the coefficient split over S_4") {
  std::map<std::pair<SplitTag, int>, int> sizes;
  for (const auto& sigma : all_perms(4)) {
    const int k = parity_descent_count(sigma, DescentKind::LeftEven);
    const auto [tag, pi] = r_split(sigma);
    const int img = parity_descent_count(pi, DescentKind::RightEven);
    if (tag == SplitTag::P0) {
      CHECK(pi.values()[0] % 2 == 1);
      CHECK(img == k);
    } else {
      CHECK(pi.values()[0] % 2 == 0);
      CHECK(img == k - 1);
    }
    CHECK(r_split_inverse(tag, pi) == sigma);
    ++sizes[{tag, k}];
  }
  CHECK(sizes[{SplitTag::P0, 1}] == 8);
  CHECK(sizes[{SplitTag::P1, 1}] == 8);
  CHECK(sizes[{SplitTag::P0, 1}] + sizes[{SplitTag::P1, 1}] == 16);
}

TEST_CASE("alpha base cases and small tables") {
  CHECK(alpha_table(1).apply(Permutation({1})) == Permutation({1}));
  CHECK(alpha_table(2).apply(Permutation({1, 2})) == Permutation({1, 2}));
  CHECK(alpha_table(2).entry_count() == 1);

  const MatchingTable& a3 = alpha_table(3);
  CHECK(a3.entry_count() == 4);
  CHECK(a3.apply(Permutation({1, 2, 3})) == Permutation({1, 2, 3}));
  CHECK(a3.apply(Permutation({3, 1, 2})) == Permutation({1, 3, 2}));
  CHECK(a3.apply(Permutation({1, 3, 2})) == Permutation({3, 1, 2}));
  CHECK(a3.apply(Permutation({3, 2, 1})) == Permutation({3, 2, 1}));
  CHECK(a3.apply_inverse(Permutation({1, 3, 2})) == Permutation({3, 1, 2}));
  CHECK_THROWS_AS(a3.apply(Permutation({2, 1, 3})), std::invalid_argument);
}

TEST_CASE("alpha level 4 entries derived by hand from the insertion rules") {
  // from the pair (312, 132) at level 3: end slot, then slot before the 2nd
  // odd letter pairs with the slot before the 1st even letter, then the
  // non-descent slot before an even letter pairs with the 2nd qualifying
  // odd-letter slot
  const MatchingTable& a4 = alpha_table(4);
  CHECK(a4.apply(Permutation({3, 1, 2, 4})) == Permutation({1, 3, 2, 4}));
  CHECK(a4.apply(Permutation({3, 4, 1, 2})) == Permutation({1, 3, 4, 2}));
  CHECK(a4.apply(Permutation({3, 1, 4, 2})) == Permutation({1, 4, 3, 2}));
}

TEST_CASE("beta level 3 entries derived by hand") {
  const MatchingTable& b3 = beta_table(3);
  CHECK(b3.entry_count() == 2);
  CHECK(b3.apply(Permutation({2, 1, 3})) == Permutation({2, 1, 3}));
  CHECK(b3.apply(Permutation({2, 3, 1})) == Permutation({2, 3, 1}));
}

TEST_CASE("alpha preserves the statistic and covers the odd-starting world") {
  for (int n = 1; n <= 7; ++n) {
    const MatchingTable& a = alpha_table(n);
    std::size_t odd_starting = 0;
    std::map<int, BigInt> domain_class;
    for (const auto& sigma : all_perms(n)) {
      if (sigma.values()[0] % 2 == 0) {
        CHECK(!a.contains(sigma));
        continue;
      }
      ++odd_starting;
      const Permutation pi = a.apply(sigma);
      CHECK(pi.values()[0] % 2 == 1);
      CHECK(parity_descent_count(sigma, DescentKind::RightEven) ==
            parity_descent_count(pi, DescentKind::RightOdd));
      CHECK(a.apply_inverse(pi) == sigma);
      ++domain_class[parity_descent_count(sigma, DescentKind::RightEven)];
    }
    CHECK(a.entry_count() == odd_starting);
    for (const auto& [k, size] : domain_class)
      CHECK(size == coeff(Family::P, 0, k, n));
  }
  // the k = 1 class of the size-5 table matches the 48x term
  std::map<int, int> class5;
  for (const auto& [sigma, pi] : alpha_table(5).pairs())
    ++class5[parity_descent_count(sigma, DescentKind::RightEven)];
  CHECK(class5[1] == 48);
}

TEST_CASE("beta base cases and the shift-by-one contract") {
  CHECK(beta_table(1).entry_count() == 0);
  CHECK(beta_table(2).apply(Permutation({2, 1})) == Permutation({2, 1}));
  CHECK(parity_descent_count(Permutation({2, 1}), DescentKind::RightEven) == 0);
  CHECK(parity_descent_count(Permutation({2, 1}), DescentKind::RightOdd) == 1);

  for (int n = 2; n <= 7; ++n) {
    const MatchingTable& b = beta_table(n);
    std::size_t even_starting = 0;
    std::map<int, BigInt> dom, cod;
    for (const auto& sigma : all_perms(n)) {
      if (sigma.values()[0] % 2 == 1) {
        CHECK(!b.contains(sigma));
        continue;
      }
      ++even_starting;
      const Permutation pi = b.apply(sigma);
      CHECK(pi.values()[0] % 2 == 0);
      CHECK(parity_descent_count(pi, DescentKind::RightOdd) ==
            parity_descent_count(sigma, DescentKind::RightEven) + 1);
      CHECK(b.apply_inverse(pi) == sigma);
      ++dom[parity_descent_count(sigma, DescentKind::RightEven)];
      ++cod[parity_descent_count(pi, DescentKind::RightOdd)];
    }
    CHECK(b.entry_count() == even_starting);
    for (const auto& [k, size] : dom) CHECK(size == coeff(Family::P, 1, k, n));
    for (const auto& [k, size] : cod) CHECK(size == coeff(Family::Q, 0, k, n));
  }

  std::map<int, int> dom4, cod4;
  for (const auto& [sigma, pi] : beta_table(4).pairs()) {
    ++dom4[parity_descent_count(sigma, DescentKind::RightEven)];
    ++cod4[parity_descent_count(pi, DescentKind::RightOdd)];
  }
  CHECK(dom4[0] == 8);
  CHECK(cod4[1] == 8);
}

TEST_CASE("rebuilding the tables is deterministic") {
  CHECK(build_alpha_table(6) == build_alpha_table(6));
  CHECK(build_beta_table(6) == build_beta_table(6));
  CHECK(build_alpha_table(5) == alpha_table(5));
}

TEST_CASE("table caps") {
  CHECK(matching_cap() == kDefaultMatchingCap);
  CHECK_THROWS_AS(alpha_table(matching_cap() + 1), resource_limit_error);
  CHECK_THROWS_AS(beta_table(matching_cap() + 1), resource_limit_error);
  CHECK_THROWS_AS(set_matching_cap(0), std::invalid_argument);
}

TEST_CASE("p_complement worked example and class sizes") {
  CHECK(p_complement(Permutation({1, 2})) == Permutation({2, 1}));
  CHECK(p_complement_inverse(Permutation({2, 1})) == Permutation({1, 2}));
  CHECK_THROWS_AS(p_complement(Permutation({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(p_complement(Permutation({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(p_complement_inverse(Permutation({1, 2})), std::invalid_argument);

  CHECK(coeff(Family::P, 0, 0, 4) == 4);
  CHECK(coeff(Family::P, 1, 1, 4) == 4);
  CHECK(coeff(Family::P, 0, 1, 4) == 8);
  CHECK(coeff(Family::P, 1, 0, 4) == 8);
}

TEST_CASE("p_complement transports k to n-1-k exhaustively") {
  for (int n = 2; n <= 6; n += 2) {
    const int half = n / 2;
    for (const auto& sigma : all_perms(n)) {
      if (sigma.values()[0] % 2 == 0) continue;
      const int k = parity_descent_count(sigma, DescentKind::RightEven);
      const Permutation image = p_complement(sigma);
      CHECK(image.values()[0] % 2 == 0);
      CHECK(parity_descent_count(image, DescentKind::RightEven) == half - 1 - k);
      CHECK(p_complement_inverse(image) == sigma);
    }
  }
}
