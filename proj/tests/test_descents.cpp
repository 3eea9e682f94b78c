#include <doctest.h>

#include "pardes/descents.hpp"
#include "pardes/permutation.hpp"

using namespace pardes;

TEST_CASE("parity descent sets") {
  const Permutation p{{2, 5, 3, 1, 4}};
  CHECK(parity_descent_set(p, DescentKind::RightOdd) == std::vector<int>{2, 3});
  CHECK(parity_descent_set(p, DescentKind::LeftEven).empty());
  CHECK(parity_descent_set(p, DescentKind::Plain) == std::vector<int>{2, 3});

  const Permutation q{{4, 2, 1, 5, 6, 3, 10, 8, 7, 9}};
  CHECK(parity_descent_set(q, DescentKind::LeftEven).size() == 5);

  CHECK(parity_descent_set(Permutation::identity(6), DescentKind::Plain).empty());
}

TEST_CASE("parity descent counts") {
  CHECK(parity_descent_count(Permutation({2, 5, 3, 1, 4}), DescentKind::RightOdd) == 2);
  for (auto kind : {DescentKind::LeftEven, DescentKind::LeftOdd, DescentKind::RightEven,
                    DescentKind::RightOdd, DescentKind::Plain})
    CHECK(parity_descent_count(Permutation::identity(5), kind) == 0);
  CHECK(parity_descent_count(Permutation({2, 1}), DescentKind::LeftEven) == 1);
}

TEST_CASE("first letter parity flag") {
  CHECK(first_parity_flag(Permutation({2, 5, 3, 1, 4}), Parity::Even) == 1);
  CHECK(first_parity_flag(Permutation({1, 2}), Parity::Even) == 0);
  CHECK(first_parity_flag(Permutation({1, 2}), Parity::Odd) == 1);
}

TEST_CASE("parity kinds partition the plain descents") {
  for (int n = 1; n <= 8; ++n) {
    for_each_perm(n, [&](std::span<const int> p) {
      const int plain = parity_descent_count(p, DescentKind::Plain);
      CHECK(parity_descent_count(p, DescentKind::LeftEven) +
                parity_descent_count(p, DescentKind::LeftOdd) ==
            plain);
      CHECK(parity_descent_count(p, DescentKind::RightEven) +
                parity_descent_count(p, DescentKind::RightOdd) ==
            plain);
    });
  }
}

TEST_CASE("restricted descent sets are subsets of the plain set") {
  for_each_perm(6, [&](std::span<const int> p) {
    const auto plain = parity_descent_set(p, DescentKind::Plain);
    for (auto kind : {DescentKind::LeftEven, DescentKind::LeftOdd, DescentKind::RightEven,
                      DescentKind::RightOdd})
      for (int i : parity_descent_set(p, kind))
        CHECK(std::find(plain.begin(), plain.end(), i) != plain.end());
  });
}

TEST_CASE("reverse-complement transfers left-odd onto the right statistics") {
  // even length: parity of every letter flips, so des-top-odd becomes
  // des-bottom-even; odd length keeps parity and it becomes des-bottom-odd
  for (int n = 2; n <= 8; n += 2) {
    for_each_perm(n, [&](std::span<const int> p) {
      const Permutation sigma{std::vector<int>(p.begin(), p.end())};
      const Permutation rc = complement(reverse(sigma));
      CHECK(parity_descent_count(sigma, DescentKind::LeftOdd) ==
            parity_descent_count(rc, DescentKind::RightEven));
    });
  }
  for (int n = 1; n <= 9; n += 2) {
    for_each_perm(n, [&](std::span<const int> p) {
      const Permutation sigma{std::vector<int>(p.begin(), p.end())};
      const Permutation rc = complement(reverse(sigma));
      CHECK(parity_descent_count(sigma, DescentKind::LeftOdd) ==
            parity_descent_count(rc, DescentKind::RightOdd));
    });
  }
}

TEST_CASE("family statistic wiring") {
  CHECK(family_kind(Family::R) == DescentKind::LeftEven);
  CHECK(family_kind(Family::P) == DescentKind::RightEven);
  CHECK(family_kind(Family::Q) == DescentKind::RightOdd);
  CHECK(family_kind(Family::M) == DescentKind::LeftOdd);
  CHECK(family_z_parity(Family::P) == Parity::Even);
  CHECK(family_z_parity(Family::Q) == Parity::Odd);
  CHECK(!family_z_parity(Family::R).has_value());
  CHECK(!family_z_parity(Family::M).has_value());
  CHECK(family_from_string("R") == Family::R);
  CHECK_THROWS_AS(family_from_string("X"), std::invalid_argument);
  CHECK(descent_kind_from_string("right_odd") == DescentKind::RightOdd);
}
