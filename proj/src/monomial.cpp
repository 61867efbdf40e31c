#include "coreideal/monomial.hpp"

namespace coreideal {

Monomial::Monomial(std::span<const std::uint32_t> exponents) {
  if (exponents.size() > kMaxVars) {
    throw AlgebraError("too many variables (limit " + std::to_string(kMaxVars) + ")");
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exp_[i] = exponents[i];
    total += exponents[i];
  }
  if (total > kMaxDegree) throw AlgebraError("degree overflow");
  degree_ = static_cast<std::uint32_t>(total);
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  if (index >= kMaxVars) throw AlgebraError("variable index out of range");
  if (power > kMaxDegree) throw AlgebraError("degree overflow");
  Monomial m;
  m.exp_[index] = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (std::uint64_t{degree_} + other.degree_ > kMaxDegree) {
    throw AlgebraError("degree overflow");
  }
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp_[i] = exp_[i] + other.exp_[i];
  m.degree_ = degree_ + other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp_[i] = exp_[i] - other.exp_[i];
  m.degree_ = degree_ - other.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp_[i] = exp_[i] > other.exp_[i] ? exp_[i] : other.exp_[i];
    total += m.exp_[i];
  }
  if (total > kMaxDegree) throw AlgebraError("degree overflow");
  m.degree_ = static_cast<std::uint32_t>(total);
  return m;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i]) mask |= 1u << i;
  }
  return mask;
}

Monomial Monomial::shifted(int shift) const {
  Monomial m;
  if (shift >= 0) {
    const auto s = static_cast<std::size_t>(shift);
    for (std::size_t i = 0; i + s < kMaxVars; ++i) m.exp_[i + s] = exp_[i];
    for (std::size_t i = kMaxVars - s; i < kMaxVars; ++i) {
      if (exp_[i]) throw AlgebraError("too many variables");
    }
  } else {
    const auto s = static_cast<std::size_t>(-shift);
    for (std::size_t i = s; i < kMaxVars; ++i) m.exp_[i - s] = exp_[i];
  }
  std::uint32_t total = 0;
  for (auto v : m.exp_) total += v;
  m.degree_ = total;
  return m;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < names.size() && i < kMaxVars; ++i) {
    if (!exp_[i]) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out;
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

}  // namespace coreideal
