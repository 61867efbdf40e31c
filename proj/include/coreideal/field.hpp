#ifndef COREIDEAL_FIELD_HPP
#define COREIDEAL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coreideal/errors.hpp"

namespace coreideal {

/// Field sizes below this produce a genericity warning.
inline constexpr std::uint64_t kGenericityFloor = 1u << 10;

/// Largest field size supported by the packed element encoding.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 62;

/// Description of GF(p^e) = GF(p)[a] / (modulus).
///
/// `modulus` holds the coefficients of a monic degree-e polynomial over
/// GF(p), lowest degree first (so modulus.size() == e + 1 and the last entry
/// is 1). For e == 1 the modulus is the trivial `a` and is ignored.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> modulus;

  /// Validated construction. When `modulus` is empty the built-in default
  /// for (p, e) is used.
  static FieldSpec make(std::uint32_t p, std::uint32_t e,
                        std::vector<std::uint32_t> modulus = {});

  /// Smallest e such that p^e >= 2^16.
  static std::uint32_t default_extension(std::uint32_t p);

  std::uint64_t size() const;
  bool operator==(const FieldSpec&) const = default;
};

/// An element of GF(p^e), packed as sum(c_i * p^i) over its coordinates
/// with respect to the power basis 1, a, ..., a^(e-1).
struct FieldElement {
  std::uint64_t code = 0;

  constexpr bool is_zero() const { return code == 0; }
  constexpr bool operator==(const FieldElement&) const = default;
  constexpr auto operator<=>(const FieldElement&) const = default;
};

bool is_prime(std::uint64_t n);

/// C(n, k) mod p by Lucas' theorem. Throws AlgebraError("invalid binomial")
/// when k > n.
std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Irreducibility over GF(p) of a monic polynomial given lowest degree first.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

/// The built-in modulus for GF(p^e). For p = 2 this is the lowest-weight
/// irreducible (trinomial if one exists, else pentanomial) with the
/// lexicographically smallest middle exponents, except that GF(2^16) uses
/// a^16 + a^5 + a^3 + a^2 + 1; for odd p it is the monic
/// irreducible with the smallest base-p encoding of its lower coefficients.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e);

/// Exact arithmetic in GF(p^e).
///
/// Fields up to 2^22 elements use log/antilog tables (and Zech logarithms for
/// addition when p is odd and e > 1); prime fields use direct modular
/// arithmetic; larger extension fields fall back to schoolbook polynomial
/// arithmetic modulo the defining polynomial.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.e; }
  std::uint64_t size() const { return size_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// The class of `a` in GF(p)[a]/(modulus); equals p mod p == 0 when e == 1.
  FieldElement generator() const;

  FieldElement from_int(std::int64_t v) const;
  FieldElement from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(FieldElement x) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    if (spec_.p == 2) return {a.code ^ b.code};
    if (spec_.e == 1) {
      std::uint64_t s = a.code + b.code;
      return {s >= spec_.p ? s - spec_.p : s};
    }
    return add_slow(a, b);
  }
  FieldElement neg(FieldElement a) const {
    if (spec_.p == 2 || a.code == 0) return a;
    if (spec_.e == 1) return {spec_.p - a.code};
    return neg_slow(a);
  }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.code == 0 || b.code == 0) return {0};
    if (!log_.empty()) return {exp_[log_[a.code] + log_[b.code]]};
    if (spec_.e == 1) return {(a.code * b.code) % spec_.p};
    return mul_poly(a, b);
  }
  /// Throws AlgebraError("zero divisor") for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t k) const;

  /// Uniform element given a 64-bit random draw source.
  template <class Rng>
  FieldElement uniform(Rng& rng) const {
    return {rng.bounded(size_)};
  }

  /// Integers for e == 1, polynomials in `a` otherwise (e.g. "a^3+a+1").
  std::string to_string(FieldElement x) const;

 private:
  FieldElement add_slow(FieldElement a, FieldElement b) const;
  FieldElement neg_slow(FieldElement a) const;
  FieldElement mul_poly(FieldElement a, FieldElement b) const;
  void build_tables();

  FieldSpec spec_;
  std::uint64_t size_ = 0;
  // Tables, populated when size_ <= kTableLimit.
  std::vector<std::uint32_t> exp_;   // length 2(q-1)
  std::vector<std::uint32_t> log_;   // length q, log_[0] unused
  std::vector<std::int64_t> zech_;   // log(1 + g^i) or -1, odd p and e > 1 only
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace coreideal

#endif  // COREIDEAL_FIELD_HPP
