#include "coreideal/reductions.hpp"

namespace coreideal {

GeneralElements general_elements(const Ideal& i, unsigned t, std::uint64_t seed,
                                 const GeneralElementConfig& cfg, GenericityLog* log) {
  if (i.num_gens() == 0) throw AlgebraError("general elements of the zero ideal");
  const auto& k = i.ring()->field();
  if (log && k.size() < cfg.field_floor) {
    log->push_back({"field size", seed,
                    "warning: field of size " + std::to_string(k.size()) +
                        " is below the genericity floor"});
  }
  SeededRng rng(seed);
  GeneralElements out;
  out.seed = seed;
  for (unsigned a = 0; a < t; ++a) {
    auto lc = random_linear_combination(i.gens(), rng);
    out.elements.push_back(std::move(lc.value));
    out.lambda.push_back(std::move(lc.coefficients));
  }
  return out;
}

unsigned maximal_ideal_exponent(const Ideal& i) {
  require_m_primary(i, "ideal");
  for (unsigned c = 1;; ++c) {
    if (i.contains(maximal_ideal_power(i.ring(), c))) return c;
  }
}

namespace {

Ideal local_representative(const Ideal& j, const Ideal& i, unsigned n_max) {
  if (is_m_primary(j) || !is_m_primary(i)) return j;
  // A reduction with r_J(I) <= n_max contains I^(n_max+1) locally, hence
  // m^(a (n_max+1)).
  const unsigned bound = maximal_ideal_exponent(i) * (n_max + 1);
  try {
    return localize(j, bound);
  } catch (const AlgebraError&) {
    throw AlgebraError("J is not a reduction of I within n_max = " + std::to_string(n_max));
  }
}

}  // namespace

unsigned reduction_number(const Ideal& j, const Ideal& i, unsigned n_max) {
  if (!i.contains(j)) throw AlgebraError("reduction_number: J is not contained in I");
  const Ideal jl = local_representative(j, i, n_max);
  Ideal ipow = Ideal::unit(i.ring());  // I^n
  for (unsigned n = 0; n <= n_max; ++n) {
    Ideal next = n == 0 ? i : product(ipow, i);
    Ideal rhs = n == 0 ? jl : product(jl, ipow);
    if (next.equals(rhs)) return n;
    ipow = std::move(next);
  }
  throw AlgebraError("J is not a reduction of I: I^(n+1) != J I^n for every n <= " +
                     std::to_string(n_max));
}

std::size_t analytic_spread(const Ideal& i) {
  if (!is_m_primary(i)) {
    throw AlgebraError("analytic spread implemented only for m-primary ideals");
  }
  return i.ring()->dim();
}

ReductionDatum general_minimal_reduction(const Ideal& i, std::uint64_t seed,
                                         const GeneralElementConfig& cfg,
                                         GenericityLog* log) {
  require_m_primary(i, "I");
  const auto ell = static_cast<unsigned>(analytic_spread(i));
  const unsigned attempts = std::max(cfg.repeats, 1u);
  for (unsigned a = 0; a < attempts; ++a) {
    const std::uint64_t sub = derive_seed(seed, streams::kMinimalReduction, a);
    GeneralElements ge = general_elements(i, ell, sub, cfg, log);
    Ideal j(i.ring(), ge.elements);
    try {
      Ideal jl = local_representative(j, i, cfg.n_max);
      const unsigned r = reduction_number(jl, i, cfg.n_max);
      return ReductionDatum{jl, i, r, std::move(ge.elements), std::move(ge.lambda), sub};
    } catch (const AlgebraError& e) {
      if (log) log->push_back({"minimal reduction", sub, std::string("resampled: ") + e.what()});
    }
  }
  throw GenericityFailure(
      "sampled elements do not generate a reduction - enlarge field or raise n_max");
}

ReductionDatum make_reduction(const Ideal& j, const Ideal& i, const GeneralElementConfig& cfg) {
  if (!i.contains(j)) throw AlgebraError("J is not contained in I");
  Ideal jl = local_representative(j, i, cfg.n_max);
  const unsigned r = reduction_number(jl, i, cfg.n_max);
  return ReductionDatum{jl, i, r, {j.gens().begin(), j.gens().end()}, {}, 0};
}

std::vector<unsigned> sampled_reduction_numbers(const Ideal& i, const Ideal& j,
                                                unsigned samples,
                                                const GeneralElementConfig& cfg) {
  std::vector<unsigned> out;
  for (unsigned a = 0; a < samples; ++a) {
    const std::uint64_t sub = derive_seed(cfg.seed, streams::kLemmaBound, a);
    GeneralElements b = general_elements(i, 1, sub, cfg);
    out.push_back(reduction_number(j, sum(j, Ideal(i.ring(), b.elements)), cfg.n_max));
  }
  return out;
}

unsigned s_invariant(const Ideal& i, const Ideal& j, const GeneralElementConfig& cfg,
                     GenericityLog* log) {
  require_m_primary(i, "I");
  const Ideal jl = local_representative(j, i, cfg.n_max);
  std::vector<unsigned> values;
  const unsigned reps = std::max(cfg.repeats, 1u);
  for (unsigned a = 0; a < reps; ++a) {
    const std::uint64_t sub = derive_seed(cfg.seed, streams::kSInvariant, a);
    GeneralElements b = general_elements(i, 1, sub, cfg, log);
    const Ideal jb = sum(jl, Ideal(i.ring(), b.elements));
    values.push_back(reduction_number(jl, jb, cfg.n_max));
    if (log) log->push_back({"s", sub, "r_J((J,b)) = " + std::to_string(values.back())});
  }
  for (auto v : values) {
    if (v != values.front()) {
      throw GenericityFailure("genericity check failed for s; enlarge field or change seed");
    }
  }
  return values.front();
}

}  // namespace coreideal
