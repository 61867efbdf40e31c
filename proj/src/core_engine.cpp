#include "coreideal/core_engine.hpp"

#include <algorithm>

namespace coreideal {

namespace {

unsigned adjoint_bound(unsigned r, std::size_t ell, std::size_t g) {
  const long long b = static_cast<long long>(r) - static_cast<long long>(ell) +
                      static_cast<long long>(g);
  return b > 0 ? static_cast<unsigned>(b) : 0u;
}

std::vector<Ideal> powers_up_to(const Ideal& a, unsigned n) {
  std::vector<Ideal> out{Ideal::unit(a.ring())};
  for (unsigned k = 1; k <= n; ++k) out.push_back(k == 1 ? a : product(out.back(), a));
  return out;
}

// Generators of (J, b)^n = sum_a b^a J^(n-a), given J^0..J^n.
void append_power_of_sum(const RingSpec& ring, const std::vector<Ideal>& jpow,
                         const Polynomial& b, unsigned n, std::vector<Polynomial>& out) {
  Polynomial bp = ring.one();
  for (unsigned a = 0; a <= n; ++a) {
    for (const auto& g : jpow[n - a].gens()) {
      Polynomial h = ring.reduce_mod_quotient(bp * g);
      if (!h.is_zero()) out.push_back(std::move(h));
    }
    bp = ring.reduce_mod_quotient(bp * b);
    if (bp.is_zero()) break;
  }
}

}  // namespace

Ideal kn_binomial(const Ideal& j, const Ideal& i, unsigned n) {
  if (n == 0) throw AlgebraError("K_n requires n >= 1");
  const auto& ring = *j.ring();
  const std::uint32_t p = ring.field().characteristic();
  std::vector<Polynomial> f(j.gens().begin(), j.gens().end());
  const std::size_t t = f.size();
  f.insert(f.end(), i.gens().begin(), i.gens().end());
  const std::size_t m = f.size();
  if (m == 0) return Ideal::zero(j.ring());

  // pw[k][e] = f_k^e mod Q
  std::vector<std::vector<Polynomial>> pw(m);
  for (std::size_t k = 0; k < m; ++k) {
    pw[k].push_back(ring.one());
    for (unsigned e = 1; e <= n; ++e) pw[k].push_back(ring.reduce_mod_quotient(pw[k].back() * f[k]));
  }

  std::vector<Polynomial> gens;
  // Depth-first over compositions; `acc` is the product so far, `coef` the
  // accumulated binomial factor.
  auto rec = [&](auto&& self, std::size_t k, unsigned remaining, const Polynomial& acc,
                 std::uint32_t coef) -> void {
    if (k + 1 == m) {
      Polynomial h = ring.reduce_mod_quotient(acc * pw[k][remaining]);
      if (!h.is_zero()) gens.push_back(h.scaled(ring.field().from_int(coef)));
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      std::uint32_t c = coef;
      if (k >= t) c = static_cast<std::uint32_t>((std::uint64_t{c} * binomial_mod_p(remaining, e, p)) % p);
      if (c == 0) continue;
      Polynomial next = e == 0 ? acc : ring.reduce_mod_quotient(acc * pw[k][e]);
      if (next.is_zero()) continue;
      self(self, k + 1, remaining - e, next, c);
    }
  };
  rec(rec, 0, n, ring.one(), 1);
  return Ideal(j.ring(), interreduce_generators(ring, std::move(gens)));
}

KnSample kn_sample(const Ideal& j, const Ideal& i, unsigned n, std::uint64_t seed,
                   const GeneralElementConfig& cfg) {
  if (n == 0) throw AlgebraError("K_n requires n >= 1");
  const auto& ring = *j.ring();
  const auto jpow = powers_up_to(j, n);
  Ideal c;
  for (unsigned k = 0; k <= cfg.t_max; ++k) {
    GeneralElements b = general_elements(i, 1, derive_seed(seed, streams::kKn, k), cfg);
    std::vector<Polynomial> gens;
    append_power_of_sum(ring, jpow, b.elements.front(), n, gens);
    if (k == 0) {
      c = Ideal(j.ring(), interreduce_generators(ring, std::move(gens)));
      continue;
    }
    const bool stable = std::all_of(gens.begin(), gens.end(),
                                    [&](const Polynomial& g) { return c.contains(g); });
    if (stable) return {c, k};
    gens.insert(gens.end(), c.gens().begin(), c.gens().end());
    c = Ideal(j.ring(), interreduce_generators(ring, std::move(gens)));
  }
  throw GenericityFailure("K_n did not stabilize within t_max = " + std::to_string(cfg.t_max) +
                          " general elements");
}

Ideal kn_general(const Ideal& j, const Ideal& i, unsigned n, const GeneralElementConfig& cfg,
                 GenericityLog* log) {
  const unsigned reps = std::max(cfg.repeats, 1u);
  std::optional<Ideal> first;
  for (unsigned a = 0; a < reps; ++a) {
    const std::uint64_t sub = derive_seed(cfg.seed, streams::kKn, a);
    KnSample s = kn_sample(j, i, n, sub, cfg);
    if (log) {
      log->push_back({"K_" + std::to_string(n), sub, "stabilized at t = " + std::to_string(s.t)});
    }
    if (!first) {
      first = std::move(s.k);
    } else if (!first->equals(s.k)) {
      throw GenericityFailure("genericity check failed for K_n; enlarge field or change seed");
    }
  }
  return *first;
}

Ideal kn_bruteforce(const Ideal& j, const Ideal& i, unsigned n) {
  if (n == 0) throw AlgebraError("K_n requires n >= 1");
  const auto& ring = *j.ring();
  const auto& k = ring.field();
  const std::size_t m = i.num_gens();
  std::uint64_t count = 1;
  for (std::size_t a = 0; a < m && count <= 1'000'000; ++a) count *= k.size();
  if (k.degree() != 1 || count > 1'000'000) throw AlgebraError("brute force infeasible");

  const auto jpow = powers_up_to(j, n);
  std::vector<Polynomial> gens;
  std::vector<std::uint64_t> lambda(m, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    Polynomial b = Polynomial(ring.poly_ring(), {});
    for (std::size_t a = 0; a < m; ++a) {
      const FieldElement c{v % k.size()};
      v /= k.size();
      if (!c.is_zero()) b = b + i.gens()[a].scaled(c);
    }
    append_power_of_sum(ring, jpow, b, n, gens);
    if (gens.size() > 512) gens = interreduce_generators(ring, std::move(gens));
  }
  return Ideal(j.ring(), interreduce_generators(ring, std::move(gens)));
}

Ideal ln_from_kn(const Ideal& j, const Ideal& kn, unsigned n) {
  return colon(power(j, n + 1), kn);
}

Ideal ln_ideal(const Ideal& j, const Ideal& i, unsigned n, const GeneralElementConfig& cfg,
               GenericityLog* log) {
  return ln_from_kn(j, kn_general(j, i, n, cfg, log), n);
}

Ideal adjoint_colon(const Ideal& j, const Ideal& i, unsigned n) {
  return colon(power(j, n + 1), power(i, n));
}

Ideal core_intersection(const Ideal& i, std::uint64_t master_seed,
                        const GeneralElementConfig& cfg, std::vector<ReductionDatum>* used,
                        GenericityLog* log) {
  Ideal x;
  unsigned stable = 0;
  for (unsigned k = 0; k < cfg.max_reductions; ++k) {
    ReductionDatum d = general_minimal_reduction(
        i, derive_seed(master_seed, streams::kCoreReduction, k), cfg, log);
    if (k == 0) {
      x = d.j;
    } else if (d.j.contains(x)) {
      ++stable;
    } else {
      x = intersect(x, d.j);
      stable = 0;
    }
    if (used) used->push_back(std::move(d));
    if (stable >= cfg.window) return x;
  }
  throw GenericityFailure("core did not stabilize within " +
                          std::to_string(cfg.max_reductions) + " reductions");
}

CoreReport core(const Ideal& i, unsigned n, const GeneralElementConfig& cfg,
                unsigned sandwich_limit) {
  require_m_primary(i, "I");
  CoreReport rep;
  rep.ell = analytic_spread(i);
  rep.g = height(i);
  rep.n_requested = n;
  rep.window = cfg.window;

  const unsigned runs = std::max(cfg.repeats, 1u);
  for (unsigned a = 0; a < runs; ++a) {
    const std::uint64_t master = derive_seed(cfg.seed, streams::kCoreMaster, a);
    std::vector<ReductionDatum> used;
    Ideal x = core_intersection(i, master, cfg, &used, &rep.log);
    rep.log.push_back({"core", master,
                       "stable after " + std::to_string(used.size()) + " reductions"});
    if (a == 0) {
      rep.core = std::move(x);
      rep.reductions = std::move(used);
    } else if (!rep.core.equals(x)) {
      throw GenericityFailure("genericity check failed for core; enlarge field or change seed");
    }
  }
  rep.reductions_used = static_cast<unsigned>(rep.reductions.size());

  rep.s = s_invariant(i, rep.reductions.front().j, cfg, &rep.log);
  rep.n_used = std::max({n, rep.s, 1u});  // K_n needs n >= 1; s = 0 when J = I
  if (n != 0 && rep.n_used != n) {
    rep.notes.push_back("n raised from " + std::to_string(n) + " to s = " + std::to_string(rep.s));
  }

  const std::size_t limit = sandwich_limit == 0
                                ? rep.reductions.size()
                                : std::min<std::size_t>(sandwich_limit, rep.reductions.size());
  bool certified = false;
  for (std::size_t k = 0; k < limit; ++k) {
    const auto& d = rep.reductions[k];
    SandwichCheck sc;
    sc.seed = d.seed;
    sc.r = d.r;
    sc.n = std::max(rep.n_used, adjoint_bound(d.r, rep.ell, rep.g));
    const Ideal lower = adjoint_colon(d.j, i, sc.n);
    const Ideal upper =
        ln_ideal(d.j, i, sc.n, cfg.with_seed(derive_seed(d.seed, streams::kKn, k)), &rep.log);
    sc.lower_contained = rep.core.contains(lower);
    sc.upper_contained = upper.contains(rep.core);
    sc.lower_equal = sc.lower_contained && lower.contains(rep.core);
    sc.upper_equal = sc.upper_contained && rep.core.contains(upper);
    sc.lower = lower;
    sc.upper = upper;
    rep.sandwich.push_back(sc);
    if (!sc.lower_contained || !sc.upper_contained) {
      throw TheoremViolation(
          "core candidate violates the bounds J^(n+1):I^n <= core <= J^(n+1):K_n");
    }
    certified = certified || sc.lower_equal;
  }
  rep.sandwich_inconclusive = !certified;
  if (rep.sandwich_inconclusive) rep.notes.push_back("sandwich-inconclusive, window-certified");
  return rep;
}

ChainVerdict check_inclusion_chain(const Ideal& i, unsigned n, const GeneralElementConfig& cfg,
                                   const std::optional<Ideal>& known_core) {
  require_m_primary(i, "I");
  ChainVerdict v;
  v.n = n;
  v.ell = analytic_spread(i);
  v.g = height(i);
  const ReductionDatum d =
      general_minimal_reduction(i, derive_seed(cfg.seed, streams::kChain, 0), cfg);
  v.r = d.r;
  v.bound = adjoint_bound(d.r, v.ell, v.g);
  v.precondition_met = n >= v.bound;
  v.core = known_core ? *known_core : core(i, n, cfg, 1).core;
  v.lower = adjoint_colon(d.j, i, n);
  v.upper = ln_ideal(d.j, i, n, cfg.with_seed(derive_seed(cfg.seed, streams::kChain, 1)));
  v.lower_contained = v.core.contains(v.lower);
  v.lower_strict = v.lower_contained && !v.lower.contains(v.core);
  v.upper_contained = v.upper.contains(v.core);
  v.upper_strict = v.upper_contained && !v.core.contains(v.upper);
  if (v.precondition_met && (!v.lower_contained || !v.upper_contained)) {
    throw TheoremViolation("inclusion chain J^(n+1):I^n <= core <= J^(n+1):K_n fails for n = " +
                           std::to_string(n));
  }
  return v;
}

ConjectureVerdict check_conjecture(const Ideal& i, unsigned n, const GeneralElementConfig& cfg,
                                   const std::optional<Ideal>& known_core, GenericityLog* log) {
  require_m_primary(i, "I");
  ConjectureVerdict out;
  out.n = n;
  out.ell = analytic_spread(i);
  out.core = known_core ? *known_core : core(i, n, cfg, 1).core;
  const unsigned runs = std::max(cfg.repeats, 1u);
  for (unsigned a = 0; a < runs; ++a) {
    const std::uint64_t run_seed = derive_seed(cfg.seed, streams::kConjecture, a);
    std::vector<Ideal> partial;
    std::vector<bool> equal;
    for (std::size_t k = 0; k < out.ell; ++k) {
      const ReductionDatum d = general_minimal_reduction(
          i, derive_seed(run_seed, streams::kCoreReduction, k), cfg, log);
      Ideal l = ln_ideal(d.j, i, n, cfg.with_seed(derive_seed(run_seed, streams::kKn, k)), log);
      partial.push_back(partial.empty() ? l : intersect(partial.back(), l));
      equal.push_back(partial.back().equals(out.core));
    }
    if (log) {
      std::string s;
      for (bool e : equal) s += e ? '1' : '0';
      log->push_back({"conjecture", run_seed, "per-j equality " + s});
    }
    if (a == 0) {
      out.partial = std::move(partial);
      out.equal = std::move(equal);
    } else if (out.equal != equal) {
      throw GenericityFailure("genericity check failed for conjecture verdict; change seed");
    }
  }
  return out;
}

bool StabilizationVerdict::holds() const {
  auto all = [](const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
  };
  return all(ln_equal) && all(kn_equal) && all(adjoint_equal);
}

StabilizationVerdict check_stabilization(const Ideal& j, const Ideal& i,
                                         const GeneralElementConfig& cfg, GenericityLog* log) {
  require_m_primary(i, "I");
  const ReductionDatum d = make_reduction(j, i, cfg);
  StabilizationVerdict v;
  v.r = d.r;
  v.s = s_invariant(i, d.j, cfg, log);
  const unsigned s = std::max(v.s, 1u);
  const GeneralElementConfig kcfg = cfg.with_seed(derive_seed(cfg.seed, streams::kStabilization, 0));

  const Ideal ks = kn_general(d.j, i, s, kcfg, log);
  const Ideal ls = ln_from_kn(d.j, ks, s);
  for (unsigned n = s; n <= s + 2; ++n) {
    v.ns.push_back(n);
    const Ideal kn = n == s ? ks : kn_general(d.j, i, n, kcfg, log);
    v.ln_equal.push_back(n == s || ln_from_kn(d.j, kn, n).equals(ls));
    v.kn_equal.push_back(n == s || product(power(d.j, n - s), ks).equals(kn));
  }

  v.adjoint_start = adjoint_bound(d.r, analytic_spread(i), height(i));
  const Ideal a0 = adjoint_colon(d.j, i, v.adjoint_start);
  for (unsigned n = v.adjoint_start; n <= v.adjoint_start + 2; ++n) {
    v.adjoint_equal.push_back(n == v.adjoint_start || adjoint_colon(d.j, i, n).equals(a0));
  }
  return v;
}

}  // namespace coreideal
