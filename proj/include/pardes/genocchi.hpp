// Genocchi numbers from the generating function 2t/(e^t+1), the
// ascend-after-odd / descend-after-even permutation count, and the two
// pattern-avoidance classes tied to them.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "pardes/patterns.hpp"
#include "pardes/polynomial.hpp"

namespace pardes {

using BigRat = boost::multiprecision::cpp_rational;

/// g_1, g_2, ... where g_m is the unsigned integer extracted from the series
/// at order 2m: g_m = (-1)^m (2m)! [t^{2m}] 2t/(e^t+1).
struct GenocchiTable {
  std::vector<BigInt> values;
};

/// Expands 2t/(e^t+1) with exact rationals and extracts the first m values.
/// Throws std::logic_error if any extracted value fails to be a positive
/// integer or an odd-order coefficient beyond t^1 fails to vanish.
GenocchiTable genocchi_sequence(int m);

/// Coefficient of t^order in the series 2t/(e^t+1).
BigRat egf_coefficient(int order);

/// True when sigma ascends after every odd letter and descends after every
/// even letter (last position exempt).
bool is_dumont(std::span<const int> sigma);

/// Number of such permutations in S_n; n must be odd.
std::uint64_t dumont_count(int n);

/// Def1 avoids the pair {1e2*, 2o1*} (pointwise the same predicate as
/// is_dumont); Conj avoids {2*1e, 2e1*}.
enum class AvoidanceClass { Def1, Conj };

const std::vector<ParityPattern>& avoidance_patterns(AvoidanceClass c);

/// Number of permutations in S_n avoiding every pattern of the class.
std::uint64_t avoidance_count(int n, AvoidanceClass c);

}  // namespace pardes
