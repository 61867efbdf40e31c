#ifndef COREIDEAL_CORE_ENGINE_HPP
#define COREIDEAL_CORE_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coreideal/ideal.hpp"
#include "coreideal/reductions.hpp"

namespace coreideal {

/// K_n from the closed form: gens(J) followed by gens(I), and for every
/// composition nu of n the product f^nu scaled by
///   prod_{j=t+1}^{m-1} C(n - nu_1 - ... - nu_{j-1}, nu_j)  (mod p),
/// where t = |gens(J)|. Products whose coefficient vanishes are omitted.
Ideal kn_binomial(const Ideal& j, const Ideal& i, unsigned n);

/// Result of sampling C_t = sum_{k<=t} (J, b_k)^n until C_t = C_{t+1}.
struct KnSample {
  Ideal k;
  unsigned t = 0;
};

/// One sampling run from a fixed seed. Throws GenericityFailure when t
/// exceeds cfg.t_max.
KnSample kn_sample(const Ideal& j, const Ideal& i, unsigned n, std::uint64_t seed,
                   const GeneralElementConfig& cfg);

/// K_n as the stabilized sum of (J, b)^n over general b, repeated
/// cfg.repeats times from independent sub-seeds; the runs must agree.
Ideal kn_general(const Ideal& j, const Ideal& i, unsigned n, const GeneralElementConfig& cfg,
                 GenericityLog* log = nullptr);

/// K_n by enumerating every b = sum lambda_j f_j with lambda in GF(p)^m over
/// the generators of I. Requires e == 1 and p^m <= 10^6. The result equals
/// K_n whenever the reduced monomials lambda^nu separate the multinomial
/// terms of b^n (e.g. n < p).
Ideal kn_bruteforce(const Ideal& j, const Ideal& i, unsigned n);

/// L_n = J^(n+1) : K_n (with K_n from kn_general).
Ideal ln_ideal(const Ideal& j, const Ideal& i, unsigned n, const GeneralElementConfig& cfg,
               GenericityLog* log = nullptr);

/// L_n from a precomputed K_n.
Ideal ln_from_kn(const Ideal& j, const Ideal& kn, unsigned n);

/// J^(n+1) : I^n.
Ideal adjoint_colon(const Ideal& j, const Ideal& i, unsigned n);

struct SandwichCheck {
  std::uint64_t seed = 0;
  unsigned r = 0;
  unsigned n = 0;
  bool lower_contained = false;
  bool upper_contained = false;
  bool lower_equal = false;   // J^(n+1):I^n == core
  bool upper_equal = false;   // core == J^(n+1):K_n
  Ideal lower;
  Ideal upper;
};

struct CoreReport {
  Ideal core;
  std::size_t ell = 0;
  std::size_t g = 0;
  unsigned n_requested = 0;
  unsigned n_used = 0;        // max(n, s, 1); 0 requests n = s
  unsigned s = 0;
  unsigned reductions_used = 0;
  unsigned window = 0;
  std::vector<ReductionDatum> reductions;
  std::vector<SandwichCheck> sandwich;
  /// True when no checked J has J^(n+1):I^n equal to the candidate, so only
  /// the stability window certifies it.
  bool sandwich_inconclusive = false;
  std::vector<std::string> notes;
  GenericityLog log;
};

/// core(I) as a running intersection of general minimal reductions, stopped
/// after cfg.window consecutive draws leave it unchanged, then checked
/// against J^(n+1):I^n <= core <= J^(n+1):K_n for the first `sandwich_limit`
/// reductions (0 = all). Throws TheoremViolation if a bound fails,
/// GenericityFailure if repeated runs disagree.
CoreReport core(const Ideal& i, unsigned n, const GeneralElementConfig& cfg,
                unsigned sandwich_limit = 0);

/// The running-intersection stage only, from one master seed.
Ideal core_intersection(const Ideal& i, std::uint64_t master_seed,
                        const GeneralElementConfig& cfg,
                        std::vector<ReductionDatum>* used = nullptr,
                        GenericityLog* log = nullptr);

struct ChainVerdict {
  unsigned n = 0;
  unsigned r = 0;
  std::size_t ell = 0;
  std::size_t g = 0;
  unsigned bound = 0;             // max(r - l + g, 0)
  bool precondition_met = false;  // n >= bound
  bool lower_contained = false;
  bool lower_strict = false;
  bool upper_contained = false;
  bool upper_strict = false;
  Ideal lower;
  Ideal upper;
  Ideal core;
};

/// J^(n+1):I^n <= core(I) <= J^(n+1):K_n for a general minimal reduction J.
/// Throws TheoremViolation when the precondition holds and a containment
/// fails. `known_core` skips recomputing core(I).
ChainVerdict check_inclusion_chain(const Ideal& i, unsigned n, const GeneralElementConfig& cfg,
                                   const std::optional<Ideal>& known_core = std::nullopt);

struct ConjectureVerdict {
  unsigned n = 0;
  std::size_t ell = 0;
  /// partial[j] is the intersection of L_n(J_1), ..., L_n(J_{j+1}).
  std::vector<Ideal> partial;
  /// equal[j]: partial[j] == core(I).
  std::vector<bool> equal;
  Ideal core;
  bool holds() const { return !equal.empty() && equal.back(); }
};

/// Intersections of L_n(J_i) over l general minimal reductions against core(I).
/// Repeated cfg.repeats times; the per-j verdicts must agree.
ConjectureVerdict check_conjecture(const Ideal& i, unsigned n, const GeneralElementConfig& cfg,
                                   const std::optional<Ideal>& known_core = std::nullopt,
                                   GenericityLog* log = nullptr);

struct StabilizationVerdict {
  unsigned s = 0;
  unsigned r = 0;
  unsigned adjoint_start = 0;              // max(r - l + g, 0)
  std::vector<unsigned> ns;                // s, s+1, s+2
  std::vector<bool> ln_equal;              // L_n == L_s
  std::vector<bool> kn_equal;              // J^(n-s) K_s == K_n
  std::vector<bool> adjoint_equal;         // J^(n+1):I^n == value at adjoint_start
  bool holds() const;
};

/// L_n = L_s and J^(n-s) K_s = K_n for n = s, s+1, s+2, and constancy of
/// J^(n+1):I^n from max(r - l + g, 0) on.
StabilizationVerdict check_stabilization(const Ideal& j, const Ideal& i,
                                         const GeneralElementConfig& cfg,
                                         GenericityLog* log = nullptr);

}  // namespace coreideal

#endif  // COREIDEAL_CORE_ENGINE_HPP
