#ifndef COREIDEAL_REDUCTIONS_HPP
#define COREIDEAL_REDUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coreideal/ideal.hpp"
#include "coreideal/random.hpp"

namespace coreideal {

/// Knobs for every randomized ("general") computation.
///
/// Each sampling site derives its own stream from `seed`, so results are a
/// deterministic function of the seed alone. Every general quantity is
/// recomputed `repeats` times from independent sub-seeds and must agree.
struct GeneralElementConfig {
  std::uint64_t seed = 0;
  unsigned repeats = 2;
  std::uint64_t field_floor = kGenericityFloor;
  unsigned n_max = 20;   // reduction-number search bound
  unsigned t_max = 25;   // K_n sampling bound
  unsigned window = 3;   // core stability window
  unsigned max_reductions = 200;  // cap on reductions drawn for the core

  /// Same knobs, different master seed.
  GeneralElementConfig with_seed(std::uint64_t s) const {
    GeneralElementConfig c = *this;
    c.seed = s;
    return c;
  }
};

/// Stream tags for derive_seed.
namespace streams {
inline constexpr std::uint64_t kMinimalReduction = 0x6d72;
inline constexpr std::uint64_t kSInvariant = 0x7369;
inline constexpr std::uint64_t kKn = 0x6b6e;
inline constexpr std::uint64_t kCoreMaster = 0x636d;
inline constexpr std::uint64_t kCoreReduction = 0x6372;
inline constexpr std::uint64_t kChain = 0x6368;
inline constexpr std::uint64_t kConjecture = 0x636a;
inline constexpr std::uint64_t kStabilization = 0x7374;
inline constexpr std::uint64_t kLemmaBound = 0x6c62;
}  // namespace streams

/// One line of the genericity audit trail.
struct GenericityEvent {
  std::string quantity;
  std::uint64_t seed = 0;
  std::string outcome;
};

using GenericityLog = std::vector<GenericityEvent>;

struct GeneralElements {
  std::vector<Polynomial> elements;
  /// lambda[i][j]: coefficient of gens(I)[j] in elements[i].
  std::vector<std::vector<FieldElement>> lambda;
  std::uint64_t seed = 0;
};

/// t random k-linear combinations of gens(I). Logs a warning event when the
/// field is smaller than cfg.field_floor.
GeneralElements general_elements(const Ideal& i, unsigned t, std::uint64_t seed,
                                 const GeneralElementConfig& cfg,
                                 GenericityLog* log = nullptr);

/// Smallest c with m^c contained in I (I m-primary).
unsigned maximal_ideal_exponent(const Ideal& i);

/// Least n <= n_max with I^(n+1) = J I^n in R_m. When I is m-primary and J is
/// not, J is first replaced by its m-primary component. Throws AlgebraError
/// if J is not inside I or no such n exists.
unsigned reduction_number(const Ideal& j, const Ideal& i, unsigned n_max);

/// l(I) = dim R, for m-primary I only.
std::size_t analytic_spread(const Ideal& i);

/// A reduction J of I together with its reduction number.
struct ReductionDatum {
  Ideal j;                          // m-primary representative in R
  Ideal i;
  unsigned r = 0;
  std::vector<Polynomial> elements; // the sampled generators
  std::vector<std::vector<FieldElement>> lambda;
  std::uint64_t seed = 0;
};

/// J generated by l(I) general elements; re-samples on failure up to
/// cfg.repeats times, then throws GenericityFailure.
ReductionDatum general_minimal_reduction(const Ideal& i, std::uint64_t seed,
                                         const GeneralElementConfig& cfg,
                                         GenericityLog* log = nullptr);

/// Wraps a user-supplied J: checks J inside I, localizes, computes r.
ReductionDatum make_reduction(const Ideal& j, const Ideal& i,
                              const GeneralElementConfig& cfg);

/// s = r_J((J, b)) for general b, sampled cfg.repeats times; all samples
/// must agree (GenericityFailure otherwise).
unsigned s_invariant(const Ideal& i, const Ideal& j, const GeneralElementConfig& cfg,
                     GenericityLog* log = nullptr);

/// r_J((J, b)) for `samples` independent general b.
std::vector<unsigned> sampled_reduction_numbers(const Ideal& i, const Ideal& j,
                                                unsigned samples,
                                                const GeneralElementConfig& cfg);

}  // namespace coreideal

#endif  // COREIDEAL_REDUCTIONS_HPP
