// Executable, invertible forms of the five statistic-transporting bijections,
// including the mutually recursive alpha/beta matchings.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pardes/permutation.hpp"

namespace pardes {

/// Which coefficient class an r_split image lands in: P0 = odd-starting with
/// des-bottom-even count k, P1 = even-starting with count k-1.
enum class SplitTag { P0, P1 };

/// Even-length map sending des-top-even count k to n-k: append 2n+1,
/// complement, rotate 2n+1 to the front, drop it.
Permutation r_symmetry(const Permutation& sigma);
Permutation r_symmetry_inverse(const Permutation& sigma);

/// Even-length map realizing R_{k,2n} = P_{0,k,2n} + P_{1,k-1,2n}. The tag
/// records the parity of the cyclic predecessor of the value 1.
std::pair<SplitTag, Permutation> r_split(const Permutation& sigma);
Permutation r_split_inverse(SplitTag tag, const Permutation& pi);

/// An explicit invertible pairing between two finite permutation classes.
class MatchingTable {
 public:
  MatchingTable(int n, std::string domain_label, std::string codomain_label);

  int size() const { return n_; }
  const std::string& domain_label() const { return domain_label_; }
  const std::string& codomain_label() const { return codomain_label_; }
  std::size_t entry_count() const { return forward_.size(); }

  bool contains(const Permutation& sigma) const;
  Permutation apply(const Permutation& sigma) const;
  Permutation apply_inverse(const Permutation& pi) const;

  /// All pairs sorted by domain permutation; deterministic.
  std::vector<std::pair<Permutation, Permutation>> pairs() const;

  /// Adds one pair; rejects any collision on either side.
  void insert(const Permutation& from, const Permutation& to);

  bool operator==(const MatchingTable& other) const {
    return n_ == other.n_ && forward_ == other.forward_;
  }

 private:
  int n_;
  std::string domain_label_, codomain_label_;
  std::unordered_map<std::uint64_t, std::uint64_t> forward_, backward_;
};

inline constexpr int kDefaultMatchingCap = 9;
int matching_cap();
void set_matching_cap(int n);

/// The matching between odd-starting permutations keyed by des-bottom-even
/// and odd-starting permutations keyed by des-bottom-odd (equal statistic).
/// Cached; levels build recursively from n = 1.
const MatchingTable& alpha_table(int n);

/// The matching between even-starting permutations keyed by des-bottom-even k
/// and even-starting permutations keyed by des-bottom-odd k+1.
const MatchingTable& beta_table(int n);

/// Cache-free rebuilds, for determinism checks.
MatchingTable build_alpha_table(int n);
MatchingTable build_beta_table(int n);

/// Odd-starting even-length sigma with des-bottom-even count k maps to an
/// even-starting permutation with count n-1-k (dummy-letter complement chain
/// composed with the alpha matching).
Permutation p_complement(const Permutation& sigma);
Permutation p_complement_inverse(const Permutation& pi);

std::string to_string(SplitTag tag);

}  // namespace pardes
