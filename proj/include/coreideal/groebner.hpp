#ifndef COREIDEAL_GROEBNER_HPP
#define COREIDEAL_GROEBNER_HPP

#include <span>
#include <vector>

#include "coreideal/polynomial.hpp"

namespace coreideal {

/// A Groebner basis in the order of its polynomials' ring. When `reduced` is
/// set the elements are monic, inter-reduced and sorted by increasing leading
/// monomial, so two reduced bases of the same ideal are identical.
struct GroebnerBasis {
  PolyRingPtr ring;
  std::vector<Polynomial> elements;
  bool reduced = false;

  const TermOrder& order() const { return ring->order; }
  bool is_unit() const {
    return elements.size() == 1 && elements.front().is_constant() &&
           !elements.front().is_zero();
  }
  bool is_zero_ideal() const { return elements.empty(); }
};

/// Counters from one Buchberger run.
struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t zero_reductions = 0;
};

/// Full remainder of f on division by `divisors`: no term of the result is
/// divisible by a leading monomial of any divisor. Divisors are tried in
/// list order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of (gens) with respect to the gens' ring order.
///
/// Pairs are processed in order of increasing sugar degree (ties: smaller
/// lcm degree, then smaller lcm). Gebauer-Moeller installation discards
/// pairs by the coprime-leading-term criterion and the chain criterion.
/// Throws AlgebraError("degree overflow ...") naming the pair when an lcm
/// exceeds kMaxDegree.
GroebnerBasis buchberger(std::span<const Polynomial> gens,
                         BuchbergerStats* stats = nullptr);

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                                BuchbergerStats* stats = nullptr) {
  return buchberger(std::span<const Polynomial>(gens), stats);
}

/// f is in the ideal iff its normal form by a Groebner basis vanishes.
bool is_member(const Polynomial& f, const GroebnerBasis& gb);

/// Equality of ideals via reduced bases. Throws on order mismatch.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

/// Buchberger criterion: every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

}  // namespace coreideal

#endif  // COREIDEAL_GROEBNER_HPP
