#include "pardes/bijections.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>

#include "pardes/descents.hpp"

namespace pardes {

namespace {

std::uint64_t encode(std::span<const int> p) {
  if (p.size() > 15) throw std::logic_error("MatchingTable: size above 15");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    key |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  return key;
}

std::vector<int> decode(std::uint64_t key, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = static_cast<int>((key >> (4 * i)) & 0xF);
  return out;
}

Permutation drop_front(const Permutation& sigma) {
  std::vector<int> v(sigma.values().begin() + 1, sigma.values().end());
  return Permutation(std::move(v));
}

Permutation drop_last(const Permutation& sigma) {
  std::vector<int> v(sigma.values().begin(), sigma.values().end() - 1);
  return Permutation(std::move(v));
}

Permutation prepend_max(const Permutation& sigma) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(sigma.size()) + 1);
  v.push_back(sigma.size() + 1);
  v.insert(v.end(), sigma.values().begin(), sigma.values().end());
  return Permutation(std::move(v));
}

void require_even_length(const Permutation& sigma, const char* who) {
  if (sigma.size() % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": length must be even");
}

bool starts_odd(const Permutation& sigma) { return sigma.values()[0] % 2 == 1; }

}  // namespace

Permutation r_symmetry(const Permutation& sigma) {
  require_even_length(sigma, "r_symmetry");
  const int top = sigma.size() + 1;
  const Permutation appended = insert_at(sigma, sigma.size());
  return drop_front(rotate_to_front(complement(appended), top));
}

Permutation r_symmetry_inverse(const Permutation& sigma) {
  require_even_length(sigma, "r_symmetry_inverse");
  const Permutation tau = prepend_max(sigma);
  std::vector<int> v = tau.values();
  const auto it = std::find(v.begin(), v.end(), 1);
  std::rotate(v.begin(), std::next(it) == v.end() ? v.begin() : std::next(it), v.end());
  const Permutation c = complement(Permutation(std::move(v)));
  return drop_last(c);
}

std::pair<SplitTag, Permutation> r_split(const Permutation& sigma) {
  require_even_length(sigma, "r_split");
  const auto& vals = sigma.values();
  const int top = sigma.size() + 1;
  const auto pos1 = std::find(vals.begin(), vals.end(), 1);
  // cyclic predecessor of the value 1, with the appended dummy standing in
  // when sigma starts with 1
  const int x = (pos1 == vals.begin()) ? top : *std::prev(pos1);
  const SplitTag tag = (x % 2 == 0) ? SplitTag::P1 : SplitTag::P0;
  const Permutation appended = insert_at(sigma, sigma.size());
  const Permutation cr = reverse(complement(appended));
  return {tag, drop_front(rotate_to_front(cr, top))};
}

Permutation r_split_inverse(SplitTag tag, const Permutation& pi) {
  require_even_length(pi, "r_split_inverse");
  const bool odd_first = starts_odd(pi);
  if ((tag == SplitTag::P0) != odd_first)
    throw std::invalid_argument("r_split_inverse: tag does not match the first letter");
  const Permutation star = prepend_max(pi);
  const Permutation u = rotate_to_front(star, 1);
  const Permutation prime = complement(reverse(u));  // ends with the dummy
  return drop_last(prime);
}

MatchingTable::MatchingTable(int n, std::string domain_label,
                             std::string codomain_label)
    : n_(n),
      domain_label_(std::move(domain_label)),
      codomain_label_(std::move(codomain_label)) {
  if (n < 1 || n > 15)
    throw std::invalid_argument("MatchingTable: size must be in 1..15");
}

bool MatchingTable::contains(const Permutation& sigma) const {
  return sigma.size() == n_ && forward_.count(encode(sigma.values())) != 0;
}

Permutation MatchingTable::apply(const Permutation& sigma) const {
  if (sigma.size() != n_)
    throw std::invalid_argument("MatchingTable::apply: wrong permutation size");
  const auto it = forward_.find(encode(sigma.values()));
  if (it == forward_.end())
    throw std::invalid_argument("MatchingTable::apply: " + to_string(sigma) +
                                " is not in the domain (" + domain_label_ + ")");
  return Permutation(decode(it->second, n_));
}

Permutation MatchingTable::apply_inverse(const Permutation& pi) const {
  if (pi.size() != n_)
    throw std::invalid_argument("MatchingTable::apply_inverse: wrong permutation size");
  const auto it = backward_.find(encode(pi.values()));
  if (it == backward_.end())
    throw std::invalid_argument("MatchingTable::apply_inverse: " + to_string(pi) +
                                " is not in the codomain (" + codomain_label_ + ")");
  return Permutation(decode(it->second, n_));
}

std::vector<std::pair<Permutation, Permutation>> MatchingTable::pairs() const {
  std::vector<std::pair<Permutation, Permutation>> out;
  out.reserve(forward_.size());
  for (const auto& [from, to] : forward_)
    out.emplace_back(Permutation(decode(from, n_)), Permutation(decode(to, n_)));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void MatchingTable::insert(const Permutation& from, const Permutation& to) {
  if (from.size() != n_ || to.size() != n_)
    throw std::logic_error("MatchingTable::insert: wrong permutation size");
  const std::uint64_t kf = encode(from.values());
  const std::uint64_t kt = encode(to.values());
  if (!forward_.emplace(kf, kt).second)
    throw std::logic_error("MatchingTable::insert: domain collision at " +
                           to_string(from));
  if (!backward_.emplace(kt, kf).second)
    throw std::logic_error("MatchingTable::insert: codomain collision at " +
                           to_string(to));
}

namespace {

std::atomic<int> g_matching_cap{kDefaultMatchingCap};

// Slots i whose next letter sigma_{i+1} has the wanted parity, ascending.
std::vector<int> slots_before_parity(const Permutation& sigma, int parity) {
  std::vector<int> out;
  const auto& v = sigma.values();
  for (std::size_t p = 0; p < v.size(); ++p)
    if (v[p] % 2 == parity) out.push_back(static_cast<int>(p));
  return out;
}

std::vector<int> remove_slots(std::vector<int> slots, const std::vector<int>& minus) {
  std::vector<int> out;
  out.reserve(slots.size());
  for (int s : slots)
    if (!std::binary_search(minus.begin(), minus.end(), s)) out.push_back(s);
  return out;
}

// Values shifted up by one with the new minimum 1 inserted at `slot` >= 1.
Permutation insert_low(const Permutation& sigma, int slot) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(sigma.size()) + 1);
  for (int x : sigma.values()) v.push_back(x + 1);
  v.insert(v.begin() + slot, 1);
  return Permutation(std::move(v));
}

// Builds the alpha/beta chain bottom-up; used both by the shared cache and by
// the cache-free rebuild entry points.
struct TableChain {
  std::map<int, MatchingTable> alpha, beta;

  const MatchingTable& get_alpha(int n) {
    if (auto it = alpha.find(n); it != alpha.end()) return it->second;
    MatchingTable t = build_alpha(n);
    return alpha.emplace(n, std::move(t)).first->second;
  }

  const MatchingTable& get_beta(int n) {
    if (auto it = beta.find(n); it != beta.end()) return it->second;
    MatchingTable t = build_beta(n);
    return beta.emplace(n, std::move(t)).first->second;
  }

 private:
  MatchingTable build_alpha(int n) {
    MatchingTable t(n, "odd-starting by des-bottom-even",
                    "odd-starting by des-bottom-odd");
    if (n == 1) {
      t.insert(Permutation({1}), Permutation({1}));
      return t;
    }
    if (n == 2) {
      t.insert(Permutation({1, 2}), Permutation({1, 2}));
      return t;
    }
    const MatchingTable& prev = get_alpha(n - 1);
    const bool to_odd = (n % 2 == 1);  // inserting an odd maximum?
    for (const auto& [sigma, pi] : prev.pairs()) {
      const std::vector<int> des_e = parity_descent_set(sigma, DescentKind::RightEven);
      const std::vector<int> des_o = parity_descent_set(pi, DescentKind::RightOdd);
      const std::size_t k = des_e.size();

      // descents match descents, then the end slot
      t.insert(insert_at(sigma, n - 1), insert_at(pi, n - 1));
      for (std::size_t m = 0; m < k; ++m)
        t.insert(insert_at(sigma, des_e[m]), insert_at(pi, des_o[m]));

      if (to_odd) {
        // odd maximum: before-odd slots pair with before-even slots (count
        // stays k), before-even non-descent slots pair with before-odd
        // non-descent slots (count goes to k+1)
        const auto before_odd = slots_before_parity(sigma, 1);
        const auto before_even_pi = slots_before_parity(pi, 0);
        for (std::size_t m = 0; m < before_odd.size(); ++m)
          t.insert(insert_at(sigma, before_odd[m]), insert_at(pi, before_even_pi[m]));
        const auto bump_sigma = remove_slots(slots_before_parity(sigma, 0), des_e);
        const auto bump_pi = remove_slots(slots_before_parity(pi, 1), des_o);
        for (std::size_t m = 0; m < bump_sigma.size(); ++m)
          t.insert(insert_at(sigma, bump_sigma[m]), insert_at(pi, bump_pi[m]));
      } else {
        // even maximum: slot 0 would leave the odd-starting world, so the
        // first before-odd slot (the one in front of sigma_1 resp. pi_1) is
        // skipped on both sides where it occurs
        auto keep_sigma = slots_before_parity(sigma, 1);
        keep_sigma.erase(keep_sigma.begin());
        const auto keep_pi = slots_before_parity(pi, 0);
        for (std::size_t m = 0; m < keep_sigma.size(); ++m)
          t.insert(insert_at(sigma, keep_sigma[m]), insert_at(pi, keep_pi[m]));
        const auto bump_sigma = remove_slots(slots_before_parity(sigma, 0), des_e);
        auto bump_pi = remove_slots(slots_before_parity(pi, 1), des_o);
        bump_pi.erase(bump_pi.begin());
        for (std::size_t m = 0; m < bump_sigma.size(); ++m)
          t.insert(insert_at(sigma, bump_sigma[m]), insert_at(pi, bump_pi[m]));
      }
    }
    if (to_odd) {
      // Insertions into odd-starting parents never produce (n)(even...) with
      // an even second letter; those members come from the beta matching one
      // level down, prefixed with the new odd maximum on both sides.
      for (const auto& [sigma_e, pi_e] : get_beta(n - 1).pairs())
        t.insert(prepend_max(sigma_e), prepend_max(pi_e));
    }
    return t;
  }

  MatchingTable build_beta(int n) {
    MatchingTable t(n, "even-starting by des-bottom-even k",
                    "even-starting by des-bottom-odd k+1");
    if (n == 1) return t;  // no even-starting permutation in S_1
    const MatchingTable& base = get_alpha(n - 1);
    for (const auto& [sigma, pi] : base.pairs()) {
      const std::vector<int> des_e = parity_descent_set(sigma, DescentKind::RightEven);
      const std::vector<int> des_o = parity_descent_set(pi, DescentKind::RightOdd);
      const std::size_t k = des_e.size();
      std::vector<int> non_e, non_o;
      for (int s = 1; s <= n - 1; ++s) {
        if (!std::binary_search(des_e.begin(), des_e.end(), s)) non_e.push_back(s);
        if (!std::binary_search(des_o.begin(), des_o.end(), s)) non_o.push_back(s);
      }
      for (std::size_t m = 0; m < k; ++m)
        insert_checked(t, insert_low(pi, des_o[m]), insert_low(sigma, des_e[m]));
      for (std::size_t m = 0; m < non_e.size(); ++m)
        insert_checked(t, insert_low(pi, non_o[m]), insert_low(sigma, non_e[m]));
    }
    return t;
  }

  // The construction-time contract: both sides even-starting and the
  // des-bottom-odd count exactly one above the des-bottom-even count.
  static void insert_checked(MatchingTable& t, const Permutation& from,
                             const Permutation& to) {
    if (starts_odd(from) || starts_odd(to) ||
        parity_descent_count(to, DescentKind::RightOdd) !=
            parity_descent_count(from, DescentKind::RightEven) + 1)
      throw std::logic_error("beta construction violated its statistic contract at " +
                             to_string(from));
    t.insert(from, to);
  }
};

std::mutex g_chain_mutex;
TableChain g_chain;

void check_matching_cap(int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (n > matching_cap())
    throw resource_limit_error(std::string(who) + ": n exceeds matching cap " +
                               std::to_string(matching_cap()));
}

}  // namespace

int matching_cap() { return g_matching_cap.load(); }

void set_matching_cap(int n) {
  if (n < 1 || n > 15)
    throw std::invalid_argument("set_matching_cap: cap must be in 1..15");
  g_matching_cap.store(n);
}

const MatchingTable& alpha_table(int n) {
  check_matching_cap(n, "alpha_table");
  std::lock_guard<std::mutex> lock(g_chain_mutex);
  return g_chain.get_alpha(n);
}

const MatchingTable& beta_table(int n) {
  check_matching_cap(n, "beta_table");
  std::lock_guard<std::mutex> lock(g_chain_mutex);
  return g_chain.get_beta(n);
}

MatchingTable build_alpha_table(int n) {
  check_matching_cap(n, "build_alpha_table");
  TableChain fresh;
  return fresh.get_alpha(n);
}

MatchingTable build_beta_table(int n) {
  check_matching_cap(n, "build_beta_table");
  TableChain fresh;
  return fresh.get_beta(n);
}

Permutation p_complement(const Permutation& sigma) {
  require_even_length(sigma, "p_complement");
  if (!starts_odd(sigma))
    throw std::invalid_argument("p_complement: needs an odd first letter");
  const Permutation pi = alpha_table(sigma.size()).apply(sigma);
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(pi.size()) + 1);
  v.push_back(1);
  for (int x : pi.values()) v.push_back(x + 1);
  const Permutation flipped = complement(Permutation(std::move(v)));
  return drop_front(flipped);  // the complement starts with the dummy maximum
}

Permutation p_complement_inverse(const Permutation& pi) {
  require_even_length(pi, "p_complement_inverse");
  if (starts_odd(pi))
    throw std::invalid_argument("p_complement_inverse: needs an even first letter");
  const Permutation flipped = complement(prepend_max(pi));  // starts with 1
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(pi.size()));
  for (auto it = flipped.values().begin() + 1; it != flipped.values().end(); ++it)
    v.push_back(*it - 1);
  return alpha_table(pi.size()).apply_inverse(Permutation(std::move(v)));
}

std::string to_string(SplitTag tag) { return tag == SplitTag::P0 ? "P0" : "P1"; }

}  // namespace pardes
