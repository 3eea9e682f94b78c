// Parity-annotated consecutive patterns and residue-constrained classical avoidance.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pardes/permutation.hpp"

namespace pardes {

/// One pattern letter: a rank plus an optional residue constraint
/// (residue, modulus). No constraint means the letter matches any value.
struct PatternLetter {
  int rank = 1;
  std::optional<std::pair<int, int>> residue;  // (r, k) meaning value = r mod k
};

/// A pattern permutation whose letters carry residue annotations. All
/// annotated letters share one modulus; the two-letter even/odd notation uses
/// modulus 2 with e = residue 0 and o = residue 1.
class ParityPattern {
 public:
  explicit ParityPattern(std::vector<PatternLetter> letters);

  /// Text syntax: letters as rank plus suffix 'e', 'o', '*', or '%r:k'
  /// (residue r mod k); a missing suffix means unconstrained. Letters may be
  /// separated by spaces or commas, e.g. "2e1*", "1o 2e", "2%2:3 1%1:3".
  static ParityPattern parse(std::string_view text);

  /// Annotates every letter of tau with its own residue mod k. With k = 1
  /// every constraint is vacuous and the letters come out unconstrained.
  static ParityPattern parity_k_tau(const Permutation& tau, int k);

  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<PatternLetter>& letters() const { return letters_; }

  /// The shared modulus of the annotated letters; nullopt when all are free.
  std::optional<int> modulus() const;

  std::string to_string() const;

 private:
  std::vector<PatternLetter> letters_;
};

/// Number of windows sigma_i..sigma_{i+m-1} whose relative order matches the
/// pattern ranks with every residue constraint satisfied. Patterns longer
/// than sigma yield 0.
int count_consecutive_matches(std::span<const int> sigma, const ParityPattern& p);
int count_consecutive_matches(const Permutation& sigma, const ParityPattern& p);

/// True exactly when no pattern in the set has a consecutive match.
bool avoids_consecutive(std::span<const int> sigma,
                        std::span<const ParityPattern> patterns);
bool avoids_consecutive(const Permutation& sigma,
                        std::span<const ParityPattern> patterns);

/// Classical (not necessarily consecutive) avoidance with residues: true when
/// no subsequence of sigma reduces to tau with sigma_{i_j} = tau_j mod k for
/// every j. k = 1 degenerates to plain classical avoidance.
bool is_parity_k_tau_avoiding(std::span<const int> sigma, const Permutation& tau,
                              int k);
bool is_parity_k_tau_avoiding(const Permutation& sigma, const Permutation& tau,
                              int k);

}  // namespace pardes
