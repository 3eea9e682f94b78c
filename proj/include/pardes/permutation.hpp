// Permutation values and the elementary transformations everything else consumes.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pardes {

/// Thrown when an enumeration or table request exceeds the configured size cap.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of 1..n, immutable after construction.
class Permutation {
 public:
  /// Validates that `values` is a rearrangement of 1..n, n >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(vals_.size()); }
  const std::vector<int>& values() const { return vals_; }

  /// 1-based entry access: value_at(i) is the i-th letter.
  int value_at(int pos) const;

  operator std::span<const int>() const { return vals_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> vals_;
};

/// Reduction to relative order: output_i < output_j exactly when seq_i < seq_j.
Permutation red(std::span<const int> seq);

/// sigma_i -> n+1-sigma_i.
Permutation complement(const Permutation& sigma);

/// Positional reversal.
Permutation reverse(const Permutation& sigma);

/// Inserts n+1 into slot i (0 = in front, i >= 1 = right after the i-th letter).
Permutation insert_at(const Permutation& sigma, int slot);

/// Inverse of insert_at: strips the maximum value and reports the slot it occupied.
std::pair<Permutation, int> remove_max(const Permutation& sigma);

/// Left cyclic rotation placing the value v first.
Permutation rotate_to_front(const Permutation& sigma, int v);

std::string to_string(const Permutation& sigma);

/// Parses space- or comma-separated one-line notation, e.g. "2 5 3 1 4".
Permutation parse_permutation(std::string_view text);

inline constexpr int kDefaultEnumerationCap = 11;

int enumeration_cap();
void set_enumeration_cap(int n);

std::uint64_t factorial_u64(int n);

/// Streams the n! permutations of 1..n in lexicographic order, as spans over a
/// reused buffer. fn receives std::span<const int>.
template <typename F>
void for_each_perm(int n, F&& fn) {
  if (n < 1) throw std::invalid_argument("for_each_perm: n must be >= 1");
  if (n > enumeration_cap())
    throw resource_limit_error("for_each_perm: n exceeds enumeration cap " +
                               std::to_string(enumeration_cap()));
  std::vector<int> buf(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) buf[static_cast<std::size_t>(i)] = i + 1;
  do {
    fn(std::span<const int>(buf));
  } while (std::next_permutation(buf.begin(), buf.end()));
}

/// Materialized enumeration; intended for small n only (still cap-checked).
std::vector<Permutation> all_perms(int n);

}  // namespace pardes
