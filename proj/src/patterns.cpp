#include "pardes/patterns.hpp"

#include <charconv>
#include <stdexcept>

namespace pardes {

namespace {

int positive_mod(int v, int k) { return ((v % k) + k) % k; }

void validate_letters(const std::vector<PatternLetter>& letters) {
  if (letters.empty())
    throw std::invalid_argument("ParityPattern: pattern must be non-empty");
  std::vector<int> ranks;
  ranks.reserve(letters.size());
  std::optional<int> modulus;
  for (const PatternLetter& l : letters) {
    ranks.push_back(l.rank);
    if (l.residue) {
      const auto [r, k] = *l.residue;
      if (k < 2)
        throw std::invalid_argument("ParityPattern: modulus must be >= 2");
      if (r < 0 || r >= k)
        throw std::invalid_argument("ParityPattern: residue out of range 0..k-1");
      if (modulus && *modulus != k)
        throw std::invalid_argument("ParityPattern: mixed moduli");
      modulus = k;
    }
  }
  try {
    const Permutation check{std::move(ranks)};
    (void)check;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("ParityPattern: ranks must form a permutation of 1..m");
  }
}

}  // namespace

ParityPattern::ParityPattern(std::vector<PatternLetter> letters)
    : letters_(std::move(letters)) {
  validate_letters(letters_);
}

ParityPattern ParityPattern::parse(std::string_view text) {
  std::vector<PatternLetter> letters;
  std::size_t i = 0;
  const auto read_int = [&](const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i)
      throw std::invalid_argument(std::string("ParityPattern::parse: expected ") +
                                  what + " in '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    return v;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == ',' || c == '\t') {
      ++i;
      continue;
    }
    PatternLetter letter;
    letter.rank = read_int("a rank");
    if (i < text.size()) {
      if (text[i] == 'e') {
        letter.residue = {0, 2};
        ++i;
      } else if (text[i] == 'o') {
        letter.residue = {1, 2};
        ++i;
      } else if (text[i] == '*') {
        ++i;
      } else if (text[i] == '%') {
        ++i;
        const int r = read_int("a residue after '%'");
        if (i >= text.size() || text[i] != ':')
          throw std::invalid_argument(
              "ParityPattern::parse: expected ':' after residue in '" +
              std::string(text) + "'");
        ++i;
        const int k = read_int("a modulus after ':'");
        if (k < 2)
          throw std::invalid_argument("ParityPattern::parse: modulus must be >= 2");
        letter.residue = {positive_mod(r, k), k};
      }
    }
    letters.push_back(letter);
  }
  return ParityPattern(std::move(letters));
}

ParityPattern ParityPattern::parity_k_tau(const Permutation& tau, int k) {
  if (k < 1) throw std::invalid_argument("parity_k_tau: k must be >= 1");
  std::vector<PatternLetter> letters;
  letters.reserve(static_cast<std::size_t>(tau.size()));
  for (int v : tau.values()) {
    PatternLetter l;
    l.rank = v;
    if (k >= 2) l.residue = {positive_mod(v, k), k};
    letters.push_back(l);
  }
  return ParityPattern(std::move(letters));
}

std::optional<int> ParityPattern::modulus() const {
  for (const PatternLetter& l : letters_)
    if (l.residue) return l.residue->second;
  return std::nullopt;
}

std::string ParityPattern::to_string() const {
  std::string s;
  for (const PatternLetter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l.rank);
    if (!l.residue) {
      s += '*';
    } else if (l.residue->second == 2) {
      s += (l.residue->first == 0) ? 'e' : 'o';
    } else {
      s += '%' + std::to_string(l.residue->first) + ':' +
           std::to_string(l.residue->second);
    }
  }
  return s;
}

namespace {

bool window_matches(std::span<const int> window, const ParityPattern& p) {
  const auto& letters = p.letters();
  const std::size_t m = window.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (letters[a].residue) {
      const auto [r, k] = *letters[a].residue;
      if (positive_mod(window[a], k) != r) return false;
    }
    // relative-order check against earlier letters replaces computing red()
    for (std::size_t b = 0; b < a; ++b)
      if ((window[b] < window[a]) != (letters[b].rank < letters[a].rank))
        return false;
  }
  return true;
}

}  // namespace

int count_consecutive_matches(std::span<const int> sigma, const ParityPattern& p) {
  const std::size_t m = static_cast<std::size_t>(p.length());
  if (m > sigma.size()) return 0;
  int count = 0;
  for (std::size_t i = 0; i + m <= sigma.size(); ++i)
    if (window_matches(sigma.subspan(i, m), p)) ++count;
  return count;
}

int count_consecutive_matches(const Permutation& sigma, const ParityPattern& p) {
  return count_consecutive_matches(std::span<const int>(sigma.values()), p);
}

bool avoids_consecutive(std::span<const int> sigma,
                        std::span<const ParityPattern> patterns) {
  for (const ParityPattern& p : patterns)
    if (count_consecutive_matches(sigma, p) > 0) return false;
  return true;
}

bool avoids_consecutive(const Permutation& sigma,
                        std::span<const ParityPattern> patterns) {
  return avoids_consecutive(std::span<const int>(sigma.values()), patterns);
}

namespace {

// Backtracking search for a scattered occurrence of tau with residues mod k.
bool has_occurrence(std::span<const int> sigma, std::span<const int> tau, int k,
                    std::size_t next, std::size_t start, std::vector<int>& chosen) {
  const std::size_t m = tau.size();
  if (next == m) return true;
  for (std::size_t i = start; i + (m - next) <= sigma.size(); ++i) {
    const int v = sigma[i];
    if (k > 1 && positive_mod(v, k) != positive_mod(tau[next], k)) continue;
    bool ok = true;
    for (std::size_t b = 0; b < next; ++b) {
      if ((chosen[b] < v) != (tau[b] < tau[next])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen[next] = v;
    if (has_occurrence(sigma, tau, k, next + 1, i + 1, chosen)) return true;
  }
  return false;
}

}  // namespace

bool is_parity_k_tau_avoiding(std::span<const int> sigma, const Permutation& tau,
                              int k) {
  if (k < 1) throw std::invalid_argument("is_parity_k_tau_avoiding: k must be >= 1");
  if (static_cast<std::size_t>(tau.size()) > sigma.size()) return true;
  std::vector<int> chosen(static_cast<std::size_t>(tau.size()));
  return !has_occurrence(sigma, tau.values(), k, 0, 0, chosen);
}

bool is_parity_k_tau_avoiding(const Permutation& sigma, const Permutation& tau,
                              int k) {
  return is_parity_k_tau_avoiding(std::span<const int>(sigma.values()), tau, k);
}

}  // namespace pardes
