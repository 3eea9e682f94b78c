#include "pardes/descents.hpp"

#include <stdexcept>

namespace pardes {

namespace {

bool counts(std::span<const int> sigma, std::size_t i, DescentKind kind) {
  switch (kind) {
    case DescentKind::Plain:
      return true;
    case DescentKind::LeftEven:
      return sigma[i] % 2 == 0;
    case DescentKind::LeftOdd:
      return sigma[i] % 2 == 1;
    case DescentKind::RightEven:
      return sigma[i + 1] % 2 == 0;
    case DescentKind::RightOdd:
      return sigma[i + 1] % 2 == 1;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<int> parity_descent_set(std::span<const int> sigma, DescentKind kind) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (sigma[i] > sigma[i + 1] && counts(sigma, i, kind))
      out.push_back(static_cast<int>(i) + 1);
  return out;
}

int parity_descent_count(std::span<const int> sigma, DescentKind kind) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (sigma[i] > sigma[i + 1] && counts(sigma, i, kind)) ++c;
  return c;
}

int first_parity_flag(std::span<const int> sigma, Parity x) {
  return parity_of(sigma[0]) == x ? 1 : 0;
}

std::vector<int> parity_descent_set(const Permutation& sigma, DescentKind kind) {
  return parity_descent_set(std::span<const int>(sigma.values()), kind);
}

int parity_descent_count(const Permutation& sigma, DescentKind kind) {
  return parity_descent_count(std::span<const int>(sigma.values()), kind);
}

int first_parity_flag(const Permutation& sigma, Parity x) {
  return first_parity_flag(std::span<const int>(sigma.values()), x);
}

DescentKind family_kind(Family f) {
  switch (f) {
    case Family::R:
      return DescentKind::LeftEven;
    case Family::P:
      return DescentKind::RightEven;
    case Family::Q:
      return DescentKind::RightOdd;
    case Family::M:
      return DescentKind::LeftOdd;
  }
  throw std::logic_error("unreachable");
}

std::optional<Parity> family_z_parity(Family f) {
  switch (f) {
    case Family::P:
      return Parity::Even;
    case Family::Q:
      return Parity::Odd;
    default:
      return std::nullopt;
  }
}

std::string to_string(Family f) {
  switch (f) {
    case Family::R:
      return "R";
    case Family::P:
      return "P";
    case Family::Q:
      return "Q";
    case Family::M:
      return "M";
  }
  throw std::logic_error("unreachable");
}

Family family_from_string(std::string_view name) {
  if (name == "R" || name == "r") return Family::R;
  if (name == "P" || name == "p") return Family::P;
  if (name == "Q" || name == "q") return Family::Q;
  if (name == "M" || name == "m") return Family::M;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string to_string(DescentKind kind) {
  switch (kind) {
    case DescentKind::LeftEven:
      return "left_even";
    case DescentKind::LeftOdd:
      return "left_odd";
    case DescentKind::RightEven:
      return "right_even";
    case DescentKind::RightOdd:
      return "right_odd";
    case DescentKind::Plain:
      return "plain";
  }
  throw std::logic_error("unreachable");
}

DescentKind descent_kind_from_string(std::string_view name) {
  if (name == "left_even") return DescentKind::LeftEven;
  if (name == "left_odd") return DescentKind::LeftOdd;
  if (name == "right_even") return DescentKind::RightEven;
  if (name == "right_odd") return DescentKind::RightOdd;
  if (name == "plain") return DescentKind::Plain;
  throw std::invalid_argument("unknown descent kind '" + std::string(name) + "'");
}

}  // namespace pardes
