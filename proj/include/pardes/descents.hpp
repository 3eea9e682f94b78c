// Parity-refined descent statistics and the first-letter parity indicator.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pardes/permutation.hpp"

namespace pardes {

enum class Parity { Even, Odd };

inline Parity parity_of(int v) { return (v % 2 == 0) ? Parity::Even : Parity::Odd; }

/// Which descent statistic is meant. Left* filters on the parity of the
/// descent top sigma_i, Right* on the descent bottom sigma_{i+1}, Plain is the
/// unrestricted descent count.
enum class DescentKind { LeftEven, LeftOdd, RightEven, RightOdd, Plain };

/// The four distribution-polynomial families. R marks des-top-even, P marks
/// des-bottom-even with z flagging an even first letter, Q marks
/// des-bottom-odd with z flagging an odd first letter, M marks des-top-odd.
enum class Family { R, P, Q, M };

/// Descent positions i in 1..n-1 with sigma_i > sigma_{i+1}, filtered by kind.
std::vector<int> parity_descent_set(std::span<const int> sigma, DescentKind kind);
int parity_descent_count(std::span<const int> sigma, DescentKind kind);

/// 1 exactly when the first letter has parity x.
int first_parity_flag(std::span<const int> sigma, Parity x);

std::vector<int> parity_descent_set(const Permutation& sigma, DescentKind kind);
int parity_descent_count(const Permutation& sigma, DescentKind kind);
int first_parity_flag(const Permutation& sigma, Parity x);

/// The x-statistic of each family.
DescentKind family_kind(Family f);

/// The parity whose first-letter indicator the family's z exponent records;
/// nullopt for the univariate families R and M.
std::optional<Parity> family_z_parity(Family f);

std::string to_string(Family f);
Family family_from_string(std::string_view name);
std::string to_string(DescentKind kind);
DescentKind descent_kind_from_string(std::string_view name);

}  // namespace pardes
