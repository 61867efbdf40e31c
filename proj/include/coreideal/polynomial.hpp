#ifndef COREIDEAL_POLYNOMIAL_HPP
#define COREIDEAL_POLYNOMIAL_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "coreideal/field.hpp"
#include "coreideal/monomial.hpp"
#include "coreideal/random.hpp"

namespace coreideal {

/// A polynomial ring k[x_1..x_d] together with its active term order.
struct PolyRing {
  FieldPtr field;
  std::vector<std::string> names;
  TermOrder order;

  std::size_t nvars() const { return names.size(); }

  static std::shared_ptr<const PolyRing> make(FieldPtr field,
                                              std::vector<std::string> names,
                                              TermOrder order);
  static std::shared_ptr<const PolyRing> make(FieldPtr field,
                                              std::vector<std::string> names) {
    const auto n = names.size();
    return make(std::move(field), std::move(names), TermOrder::grevlex(n));
  }

  /// Same variables and field; structural comparison.
  bool compatible(const PolyRing& other) const {
    return field->spec() == other.field->spec() && names == other.names &&
           order == other.order;
  }
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  FieldElement coeff;
  Monomial mono;
};

/// Sparse polynomial: nonzero terms, strictly descending in the ring order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  /// Normalizes arbitrary terms: sorts, merges duplicates, drops zeros.
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);

  /// Trusted construction from terms already in canonical form.
  static Polynomial from_sorted(PolyRingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
  std::vector<Term> release_terms() && { return std::move(terms_); }

  static Polynomial constant(PolyRingPtr ring, FieldElement c);
  static Polynomial monomial(PolyRingPtr ring, FieldElement c, const Monomial& m);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);

  const PolyRingPtr& ring() const { return ring_; }
  const Field& field() const { return *ring_->field; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  FieldElement leading_coeff() const { return terms_.front().coeff; }
  std::uint32_t total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scaled(FieldElement c) const;
  Polynomial mul_term(FieldElement c, const Monomial& m) const;
  Polynomial monic() const;
  Polynomial pow(std::uint32_t k) const;

  /// Same terms, re-sorted for another ring with identical variables.
  Polynomial with_order(PolyRingPtr ring) const;
  /// Embeds into a ring whose variables are `shift` new leading variables
  /// followed by this ring's variables (shift < 0 drops leading variables,
  /// which must then have zero exponent).
  Polynomial shifted_into(PolyRingPtr ring, int shift) const;

  /// f - c*m*g, the basic reduction step.
  Polynomial minus_multiple(FieldElement c, const Monomial& m,
                            const Polynomial& g) const;

  bool operator==(const Polynomial& g) const;

  /// Canonical text, e.g. "x^2*y + (a+1)*z + 3".
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& g) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// sum(lambda_j * gens_j) with lambda uniform in the field.
struct LinearCombination {
  Polynomial value;
  std::vector<FieldElement> coefficients;
};

/// Throws AlgebraError on an empty generator list. Emits nothing; the
/// caller decides how to report a field below kGenericityFloor.
LinearCombination random_linear_combination(std::span<const Polynomial> gens,
                                            SeededRng& rng);

}  // namespace coreideal

#endif  // COREIDEAL_POLYNOMIAL_HPP
