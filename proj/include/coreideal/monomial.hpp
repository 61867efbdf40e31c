#ifndef COREIDEAL_MONOMIAL_HPP
#define COREIDEAL_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coreideal/errors.hpp"

namespace coreideal {

inline constexpr std::size_t kMaxVars = 12;
inline constexpr std::uint32_t kMaxDegree = 1'000'000;

/// Exponent vector with cached total degree. Variables beyond the ring's
/// count stay zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const std::uint32_t> exponents);

  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Throws AlgebraError("degree overflow") past kMaxDegree.
  Monomial operator*(const Monomial& other) const;
  /// Requires other | *this.
  Monomial operator/(const Monomial& other) const;

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp_[i] && other.exp_[i]) return false;
    }
    return true;
  }
  Monomial lcm(const Monomial& other) const;

  /// Bitmask of variables with positive exponent.
  std::uint32_t support() const;

  /// Exponent vector with a new variable inserted (shift > 0) or the leading
  /// `-shift` variables dropped (shift < 0).
  Monomial shifted(int shift) const;

  bool operator==(const Monomial& o) const {
    return degree_ == o.degree_ && exp_ == o.exp_;
  }

  std::vector<std::uint32_t> exponents(std::size_t nvars) const {
    return {exp_.begin(), exp_.begin() + static_cast<std::ptrdiff_t>(nvars)};
  }

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::array<std::uint32_t, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

/// Monomial order. Block elimination compares the first `split` variables by
/// grevlex, then breaks ties with grevlex on the remaining variables.
class TermOrder {
 public:
  enum class Kind { grevlex, lex, block };

  TermOrder() = default;
  static TermOrder grevlex(std::size_t nvars) { return {Kind::grevlex, nvars, 0}; }
  static TermOrder lex(std::size_t nvars) { return {Kind::lex, nvars, 0}; }
  static TermOrder block(std::size_t nvars, std::size_t split) {
    return {Kind::block, nvars, split};
  }

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t split() const { return split_; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::grevlex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        for (std::size_t i = nvars_; i-- > 0;) {
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
      case Kind::lex:
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case Kind::block: {
        int c = grevlex_range(a, b, 0, split_);
        return c != 0 ? c : grevlex_range(a, b, split_, nvars_);
      }
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const TermOrder&) const = default;
  std::string to_string() const;

 private:
  TermOrder(Kind k, std::size_t n, std::size_t s) : kind_(k), nvars_(n), split_(s) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                           std::size_t hi) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_ = Kind::grevlex;
  std::size_t nvars_ = 0;
  std::size_t split_ = 0;
};

}  // namespace coreideal

#endif  // COREIDEAL_MONOMIAL_HPP
