#include "pardes/genocchi.hpp"

#include <stdexcept>

#include "pardes/closed_form.hpp"
#include "pardes/permutation.hpp"

namespace pardes {

namespace {

// Truncated series of 2t/(e^t+1) up to t^order inclusive: series coefficients
// of e^t plus one, inverted by long division, multiplied by 2t.
std::vector<BigRat> egf_series(int order) {
  if (order < 1) throw std::invalid_argument("egf_series: order must be >= 1");
  const std::size_t len = static_cast<std::size_t>(order) + 1;
  std::vector<BigRat> denom(len);  // e^t + 1
  for (std::size_t i = 0; i < len; ++i)
    denom[i] = BigRat(BigInt(1), factorial_big(static_cast<int>(i)));
  denom[0] += 1;
  // invert: inv * denom = 1
  std::vector<BigRat> inv(len);
  inv[0] = BigRat(1) / denom[0];
  for (std::size_t i = 1; i < len; ++i) {
    BigRat acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc += denom[j] * inv[i - j];
    inv[i] = -acc / denom[0];
  }
  // multiply by 2t
  std::vector<BigRat> out(len);
  for (std::size_t i = 1; i < len; ++i) out[i] = 2 * inv[i - 1];
  return out;
}

}  // namespace

BigRat egf_coefficient(int order) {
  if (order < 0) throw std::invalid_argument("egf_coefficient: order must be >= 0");
  if (order == 0) return 0;
  return egf_series(order)[static_cast<std::size_t>(order)];
}

GenocchiTable genocchi_sequence(int m) {
  if (m < 1) throw std::invalid_argument("genocchi_sequence: m must be >= 1");
  const auto series = egf_series(2 * m);
  if (series[1] != 1)
    throw std::logic_error("genocchi_sequence: t coefficient is not 1");
  GenocchiTable table;
  table.values.reserve(static_cast<std::size_t>(m));
  BigInt fact = 1;  // (2i)!
  for (int i = 1; i <= m; ++i) {
    fact *= (2 * i - 1);
    fact *= (2 * i);
    if (i > 1 && series[static_cast<std::size_t>(2 * i - 1)] != 0)
      throw std::logic_error("genocchi_sequence: odd-order coefficient persists");
    const BigRat scaled = series[static_cast<std::size_t>(2 * i)] * fact *
                          ((i % 2 == 0) ? 1 : -1);
    if (denominator(scaled) != 1)
      throw std::logic_error("genocchi_sequence: extracted value is not integral");
    BigInt g = numerator(scaled);
    if (g <= 0)
      throw std::logic_error("genocchi_sequence: extracted value is not positive");
    table.values.push_back(std::move(g));
  }
  return table;
}

bool is_dumont(std::span<const int> sigma) {
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    const bool ascend = sigma[i] < sigma[i + 1];
    if ((sigma[i] % 2 == 1) != ascend) return false;
  }
  return true;
}

std::uint64_t dumont_count(int n) {
  if (n % 2 != 1) throw std::invalid_argument("dumont_count: n must be odd");
  std::uint64_t count = 0;
  for_each_perm(n, [&](std::span<const int> p) {
    if (is_dumont(p)) ++count;
  });
  return count;
}

const std::vector<ParityPattern>& avoidance_patterns(AvoidanceClass c) {
  static const std::vector<ParityPattern> def1 = {ParityPattern::parse("1e2*"),
                                                  ParityPattern::parse("2o1*")};
  static const std::vector<ParityPattern> conj = {ParityPattern::parse("2*1e"),
                                                  ParityPattern::parse("2e1*")};
  return c == AvoidanceClass::Def1 ? def1 : conj;
}

std::uint64_t avoidance_count(int n, AvoidanceClass c) {
  const auto& patterns = avoidance_patterns(c);
  std::uint64_t count = 0;
  for_each_perm(n, [&](std::span<const int> p) {
    if (avoids_consecutive(p, patterns)) ++count;
  });
  return count;
}

}  // namespace pardes
