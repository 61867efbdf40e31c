#ifndef COREIDEAL_IDEAL_HPP
#define COREIDEAL_IDEAL_HPP

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "coreideal/groebner.hpp"
#include "coreideal/polynomial.hpp"

namespace coreideal {

/// R = k[x_1..x_d] / Q with distinguished maximal ideal m = (x_1..x_d).
///
/// Ideals of R are represented by lifts to P = k[x_1..x_d]. Computations are
/// affine; localization at m is modelled by working with m-primary ideals
/// (see `localize`).
class RingSpec {
 public:
  /// `ring` must use grevlex. Throws AlgebraError when Q is the unit ideal.
  static std::shared_ptr<const RingSpec> make(PolyRingPtr ring,
                                              std::vector<Polynomial> quotient_gens);

  const PolyRingPtr& poly_ring() const { return ring_; }
  const Field& field() const { return *ring_->field; }
  const FieldPtr& field_ptr() const { return ring_->field; }
  const std::vector<std::string>& vars() const { return ring_->names; }
  std::size_t nvars() const { return ring_->nvars(); }
  std::span<const Polynomial> quotient_gens() const { return quotient_; }
  const GroebnerBasis& quotient_gb() const { return quotient_gb_; }
  /// [t, x_1..x_d] with t in its own top block.
  const PolyRingPtr& elimination_ring() const { return elim_; }
  std::size_t dim() const { return dim_; }

  /// Normal form modulo Q.
  Polynomial reduce_mod_quotient(const Polynomial& f) const;
  Polynomial var(std::size_t i) const { return Polynomial::variable(ring_, i); }
  Polynomial one() const { return Polynomial::constant(ring_, field().one()); }

  std::string to_string() const;

 private:
  RingSpec() = default;

  PolyRingPtr ring_;
  PolyRingPtr elim_;
  std::vector<Polynomial> quotient_;
  GroebnerBasis quotient_gb_;
  std::size_t dim_ = 0;
};

using RingPtr = std::shared_ptr<const RingSpec>;

/// Finitely generated ideal of R. Equality, membership and invariants are
/// decided through the reduced Groebner basis of (gens + Q), computed on first
/// use and shared by copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {ring->one()}); }
  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  /// Adopts `gb` (a reduced grevlex basis of gens + Q) as the cached basis.
  static Ideal from_basis(RingPtr ring, GroebnerBasis gb);

  const RingPtr& ring() const { return ring_; }
  std::span<const Polynomial> gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }

  const GroebnerBasis& gb() const;
  /// Reduced basis elements that are nonzero in R (elements of Q omitted).
  std::vector<Polynomial> basis_in_ring() const;

  bool contains(const Polynomial& f) const { return is_member(f, gb()); }
  /// other is a subset of *this.
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;
  bool is_unit() const { return gb().is_unit(); }
  bool is_zero() const;

  std::vector<std::string> basis_strings() const;

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, unsigned n);
/// A intersected with B via elimination of an auxiliary variable t.
Ideal intersect(const Ideal& a, const Ideal& b);
/// Quotient dimension up to which A : B is solved by linear algebra in P/A.
inline constexpr std::uint64_t kLinearColonLimit = 3000;

/// A : B. When P/(A+Q) has at most kLinearColonLimit standard monomials this
/// is a kernel computation there; otherwise the intersection of the principal
/// colons A : f over gens(B).
Ideal colon(const Ideal& a, const Ideal& b);
/// The two routes of colon(), callable directly.
Ideal colon_by_elimination(const Ideal& a, const Ideal& b);
Ideal colon_by_linear_algebra(const Ideal& a, const Ideal& b,
                              std::uint64_t limit = kLinearColonLimit);
/// A : f for a single element, via (A + Q) cap (f) divided by f in P.
Ideal colon(const Ideal& a, const Polynomial& f);

/// Krull dimension of R/A from the leading-term ideal of A + Q.
std::size_t krull_dim(const Ideal& a);
bool is_m_primary(const Ideal& a);
/// dim R - dim R/A (R assumed equidimensional and catenary).
std::size_t height(const Ideal& a);

/// m^c.
Ideal maximal_ideal_power(const RingPtr& ring, unsigned c);

/// The m-primary component of A, i.e. A R_m contracted to R: A + m^c for the
/// first c (doubling from 1) at which A + m^c = A + m^(c+1). Returns A itself
/// when A is already m-primary. Throws AlgebraError when no such c <= max_c
/// exists (A R_m is not m-primary).
Ideal localize(const Ideal& a, unsigned max_c = 256);

/// Throws AlgebraError("non-local input: ...") unless A is m-primary.
void require_m_primary(const Ideal& a, const std::string& what);

/// Drops generators that vanish mod Q, monomial generators divisible by
/// another monomial generator, and generators in the k-span of earlier ones.
std::vector<Polynomial> interreduce_generators(const RingSpec& ring,
                                               std::vector<Polynomial> gens);

/// Exact division in P; throws AlgebraError when f does not divide g.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f);

}  // namespace coreideal

#endif  // COREIDEAL_IDEAL_HPP
