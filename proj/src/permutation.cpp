#include "pardes/permutation.hpp"

#include <atomic>
#include <charconv>
#include <numeric>
#include <utility>

namespace pardes {

namespace {

void validate(const std::vector<int>& vals) {
  if (vals.empty()) throw std::invalid_argument("Permutation: length must be >= 1");
  const int n = static_cast<int>(vals.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : vals) {
    if (v < 1 || v > n)
      throw std::invalid_argument("Permutation: value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("Permutation: duplicate value " + std::to_string(v));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

std::atomic<int> g_enumeration_cap{kDefaultEnumerationCap};

}  // namespace

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
  validate(vals_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("Permutation::identity: n must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::value_at(int pos) const {
  if (pos < 1 || pos > size())
    throw std::invalid_argument("Permutation::value_at: position out of range");
  return vals_[static_cast<std::size_t>(pos - 1)];
}

Permutation red(std::span<const int> seq) {
  if (seq.empty()) throw std::invalid_argument("red: sequence must be non-empty");
  const std::size_t n = seq.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<int> out(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    if (rank > 0 && seq[order[rank]] == seq[order[rank - 1]])
      throw std::invalid_argument("red: entries must be distinct");
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

Permutation complement(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v : sigma.values()) out.push_back(n + 1 - v);
  return Permutation(std::move(out));
}

Permutation reverse(const Permutation& sigma) {
  std::vector<int> out(sigma.values().rbegin(), sigma.values().rend());
  return Permutation(std::move(out));
}

Permutation insert_at(const Permutation& sigma, int slot) {
  const int n = sigma.size();
  if (slot < 0 || slot > n)
    throw std::invalid_argument("insert_at: slot " + std::to_string(slot) +
                                " out of range 0.." + std::to_string(n));
  std::vector<int> out = sigma.values();
  out.insert(out.begin() + slot, n + 1);
  return Permutation(std::move(out));
}

std::pair<Permutation, int> remove_max(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 2) throw std::invalid_argument("remove_max: length must be >= 2");
  std::vector<int> out = sigma.values();
  const auto it = std::find(out.begin(), out.end(), n);
  const int slot = static_cast<int>(it - out.begin());  // 0 if first, else i = pos-1
  out.erase(it);
  return {Permutation(std::move(out)), slot};
}

Permutation rotate_to_front(const Permutation& sigma, int v) {
  std::vector<int> out = sigma.values();
  const auto it = std::find(out.begin(), out.end(), v);
  if (it == out.end())
    throw std::invalid_argument("rotate_to_front: value " + std::to_string(v) +
                                " not present");
  std::rotate(out.begin(), it, out.end());
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& sigma) {
  std::string s;
  for (int v : sigma.values()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> vals;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ',' || text[i] == '\t') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc())
      throw std::invalid_argument("parse_permutation: expected integer at '" +
                                  std::string(text.substr(i)) + "'");
    vals.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (vals.empty()) throw std::invalid_argument("parse_permutation: empty input");
  return Permutation(std::move(vals));
}

int enumeration_cap() { return g_enumeration_cap.load(); }

void set_enumeration_cap(int n) {
  if (n < 1) throw std::invalid_argument("set_enumeration_cap: cap must be >= 1");
  g_enumeration_cap.store(n);
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial_u64: n out of range");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial_u64(std::min(n, 20))));
  for_each_perm(n, [&](std::span<const int> p) {
    out.emplace_back(std::vector<int>(p.begin(), p.end()));
  });
  return out;
}

}  // namespace pardes
