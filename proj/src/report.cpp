#include "coreideal/report.hpp"

#include <chrono>
#include <sstream>

namespace coreideal {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kCommandReduction = 0x636c;

std::vector<std::string> gens_strings(const Ideal& a) { return a.basis_strings(); }

std::string ideal_text(const std::string& name, const Ideal& a) {
  std::string out = name + " = (";
  for (std::size_t k = 0; k < a.num_gens(); ++k) {
    out += (k ? ", " : "") + a.gens()[k].to_string();
  }
  return out + ")";
}

json bools(const std::vector<bool>& v) {
  json out = json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

struct Context {
  const SpecFile& spec;
  const CommandOptions& opts;
  const Ideal& i;
  GeneralElementConfig cfg;
  CommandReport& rep;

  ReductionDatum reduction() const {
    if (opts.j) {
      auto gens = parse_polynomial_list(*opts.j, spec.ring->poly_ring());
      if (gens.empty()) throw ParseError("--J needs at least one generator", 1, 1);
      return make_reduction(Ideal(spec.ring, std::move(gens)), i, cfg);
    }
    return general_minimal_reduction(i, derive_seed(cfg.seed, kCommandReduction, 0), cfg,
                                     &rep.log);
  }

  // --n, then the spec's n, then s for the given reduction.
  unsigned resolve_n(const ReductionDatum& d) {
    if (opts.n) return *opts.n;
    if (spec.options.n) return *spec.options.n;
    const unsigned s = s_invariant(i, d.j, cfg, &rep.log);
    rep.verdicts["s"] = s;
    return std::max(s, 1u);
  }

  void result(const std::string& name, const Ideal& a) {
    rep.results.emplace_back(name, gens_strings(a));
  }
};

void require_positive(unsigned n, const std::string& what) {
  if (n == 0) throw ParseError(what + " requires --n >= 1", 1, 1);
}

void run_core(Context& c) {
  const unsigned n = c.opts.n ? *c.opts.n : c.spec.options.n.value_or(0);
  CoreReport r = core(c.i, n, c.cfg, c.opts.sandwich);
  c.result("core", r.core);
  for (std::size_t k = 0; k < r.sandwich.size(); ++k) {
    const auto tag = "[" + std::to_string(k + 1) + "]";
    c.result("J" + tag, r.reductions[k].j);
    c.result("adjoint" + tag, r.sandwich[k].lower);
    c.result("L_n" + tag, r.sandwich[k].upper);
  }
  auto& v = c.rep.verdicts;
  v["ell"] = r.ell;
  v["g"] = r.g;
  v["s"] = r.s;
  v["n"] = r.n_used;
  v["reductions_used"] = r.reductions_used;
  v["window"] = r.window;
  json sw = json::array();
  for (const auto& sc : r.sandwich) {
    sw.push_back({{"r", sc.r},
                  {"n", sc.n},
                  {"lower_contained", sc.lower_contained},
                  {"lower_strict", sc.lower_contained && !sc.lower_equal},
                  {"upper_contained", sc.upper_contained},
                  {"upper_strict", sc.upper_contained && !sc.upper_equal}});
  }
  v["sandwich"] = sw;
  v["certified_by_lower_bound"] = !r.sandwich_inconclusive;
  v["notes"] = r.notes;
  c.rep.log.insert(c.rep.log.end(), r.log.begin(), r.log.end());
}

void run_kn(Context& c) {
  const ReductionDatum d = c.reduction();
  const unsigned n = c.resolve_n(d);
  require_positive(n, "kn");
  Ideal k;
  if (c.opts.method == "general") {
    k = kn_general(d.j, c.i, n, c.cfg, &c.rep.log);
  } else if (c.opts.method == "binomial") {
    k = kn_binomial(d.j, c.i, n);
  } else if (c.opts.method == "bruteforce") {
    k = kn_bruteforce(d.j, c.i, n);
  } else {
    throw ParseError("unknown --method '" + c.opts.method + "'", 1, 1);
  }
  c.result("J", d.j);
  c.result("K_n", k);
  c.rep.verdicts["n"] = n;
  c.rep.verdicts["method"] = c.opts.method;
}

void run_ln(Context& c) {
  const ReductionDatum d = c.reduction();
  const unsigned n = c.resolve_n(d);
  require_positive(n, "ln");
  c.result("J", d.j);
  c.result("L_n", ln_ideal(d.j, c.i, n, c.cfg, &c.rep.log));
  c.rep.verdicts["n"] = n;
}

void run_adjoint(Context& c) {
  const ReductionDatum d = c.reduction();
  const unsigned n = c.resolve_n(d);
  c.result("J", d.j);
  c.result("adjoint", adjoint_colon(d.j, c.i, n));
  c.rep.verdicts["n"] = n;
}

void run_rednum(Context& c) {
  const ReductionDatum d = c.reduction();
  c.result("J", d.j);
  c.rep.verdicts["r"] = d.r;
}

void run_s(Context& c) {
  const ReductionDatum d = c.reduction();
  c.result("J", d.j);
  c.rep.verdicts["r"] = d.r;
  c.rep.verdicts["s"] = s_invariant(c.i, d.j, c.cfg, &c.rep.log);
}

void run_chain(Context& c) {
  unsigned n = 0;
  if (c.opts.n) {
    n = *c.opts.n;
  } else if (c.spec.options.n) {
    n = *c.spec.options.n;
  } else {
    n = c.resolve_n(c.reduction());
  }
  require_positive(n, "check-chain");
  const ChainVerdict v = check_inclusion_chain(c.i, n, c.cfg);
  c.result("adjoint", v.lower);
  c.result("core", v.core);
  c.result("L_n", v.upper);
  auto& o = c.rep.verdicts;
  o["n"] = v.n;
  o["r"] = v.r;
  o["ell"] = v.ell;
  o["g"] = v.g;
  o["bound"] = v.bound;
  o["precondition_met"] = v.precondition_met;
  o["lower_contained"] = v.lower_contained;
  o["lower_strict"] = v.lower_strict;
  o["upper_contained"] = v.upper_contained;
  o["upper_strict"] = v.upper_strict;
}

void run_conjecture(Context& c) {
  unsigned n = 0;
  if (c.opts.n) {
    n = *c.opts.n;
  } else if (c.spec.options.n) {
    n = *c.spec.options.n;
  } else {
    n = c.resolve_n(c.reduction());
  }
  require_positive(n, "check-conjecture");
  const ConjectureVerdict v = check_conjecture(c.i, n, c.cfg, std::nullopt, &c.rep.log);
  c.result("core", v.core);
  for (std::size_t k = 0; k < v.partial.size(); ++k) {
    c.result("intersection[" + std::to_string(k + 1) + "]", v.partial[k]);
  }
  auto& o = c.rep.verdicts;
  o["n"] = v.n;
  o["ell"] = v.ell;
  o["equal_to_core"] = bools(v.equal);
  o["holds"] = v.holds();
}

void run_stabilization(Context& c) {
  const ReductionDatum d = c.reduction();
  const StabilizationVerdict v = check_stabilization(d.j, c.i, c.cfg, &c.rep.log);
  c.result("J", d.j);
  auto& o = c.rep.verdicts;
  o["s"] = v.s;
  o["r"] = v.r;
  o["n_values"] = v.ns;
  o["ln_equal"] = bools(v.ln_equal);
  o["kn_equal"] = bools(v.kn_equal);
  o["adjoint_start"] = v.adjoint_start;
  o["adjoint_equal"] = bools(v.adjoint_equal);
  o["holds"] = v.holds();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "core", "kn", "ln", "adjoint", "rednum", "s",
      "check-chain", "check-conjecture", "check-stabilization"};
  return names;
}

GeneralElementConfig resolve_config(const SpecFile& spec, const CommandOptions& opts) {
  GeneralElementConfig cfg;
  const auto& so = spec.options;
  cfg.seed = opts.seed.value_or(so.seed.value_or(cfg.seed));
  cfg.repeats = opts.repeats.value_or(so.repeats.value_or(cfg.repeats));
  cfg.window = opts.window.value_or(so.window.value_or(cfg.window));
  cfg.t_max = opts.t_max.value_or(so.t_max.value_or(cfg.t_max));
  cfg.n_max = opts.n_max.value_or(so.n_max.value_or(cfg.n_max));
  if (cfg.repeats == 0) throw ParseError("repeats must be at least 1", 1, 1);
  if (cfg.window == 0) throw ParseError("window must be at least 1", 1, 1);
  return cfg;
}

CommandReport run_command(const std::string& command, const SpecFile& spec,
                          const CommandOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Ideal& i = spec.ideal(opts.ideal);
  CommandReport rep;
  rep.command = command;
  rep.ring = spec.ring->to_string();
  rep.ideal = ideal_text(opts.ideal, i);
  rep.field_size = spec.ring->field().size();
  Context c{spec, opts, i, resolve_config(spec, opts), rep};
  rep.seed = c.cfg.seed;

  if (command == "core") {
    run_core(c);
  } else if (command == "kn") {
    run_kn(c);
  } else if (command == "ln") {
    run_ln(c);
  } else if (command == "adjoint") {
    run_adjoint(c);
  } else if (command == "rednum") {
    run_rednum(c);
  } else if (command == "s") {
    run_s(c);
  } else if (command == "check-chain") {
    run_chain(c);
  } else if (command == "check-conjecture") {
    run_conjecture(c);
  } else if (command == "check-stabilization") {
    run_stabilization(c);
  } else {
    throw ParseError("unknown command '" + command + "'", 1, 1);
  }
  rep.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string format_text(const CommandReport& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  out << "ring: " << report.ring << "\n";
  out << "ideal: " << report.ideal << "\n";
  out << "seed: " << report.seed << "\n";
  for (const auto& [name, gens] : report.results) {
    out << "\n[" << name << "]\n";
    for (const auto& g : gens) out << g << "\n";
  }
  out << "\n[verdicts]\n";
  for (const auto& [key, value] : report.verdicts.items()) {
    out << key << ": " << value.dump() << "\n";
  }
  if (!report.log.empty()) {
    out << "\n[genericity]\n";
    for (const auto& e : report.log) {
      out << e.quantity << " (seed " << e.seed << "): " << e.outcome << "\n";
    }
  }
  return out.str();
}

nlohmann::ordered_json to_json(const CommandReport& report) {
  json out;
  out["ring"] = report.ring;
  out["ideal"] = report.ideal;
  out["command"] = report.command;
  out["seed"] = report.seed;
  out["field_size"] = report.field_size;
  json results = json::object();
  for (const auto& [name, gens] : report.results) results[name] = gens;
  out["results"] = results;
  out["verdicts"] = report.verdicts;
  json log = json::array();
  for (const auto& e : report.log) {
    log.push_back({{"quantity", e.quantity}, {"seed", e.seed}, {"outcome", e.outcome}});
  }
  out["genericity_log"] = log;
  out["timing_ms"] = report.timing_ms;
  return out;
}

}  // namespace coreideal
