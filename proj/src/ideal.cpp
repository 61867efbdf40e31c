#include "coreideal/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>

namespace coreideal {

namespace {

std::size_t dimension_of_leading_terms(const GroebnerBasis& gb, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.elements) supports.push_back(g.leading_monomial().support());
  std::size_t best = 0;
  const std::uint32_t full = nvars >= 32 ? ~0u : ((1u << nvars) - 1);
  for (std::uint32_t s = 0; s <= full; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool independent = true;
    for (auto sup : supports) {
      if ((sup & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
    if (s == full) break;
  }
  return best;
}

Polynomial lift_to_elimination(const RingSpec& ring, const Polynomial& f) {
  return f.shifted_into(ring.elimination_ring(), 1);
}

// Reduced grevlex basis of the t-free part of an elimination basis.
GroebnerBasis eliminate_t(const RingSpec& ring, const GroebnerBasis& gb) {
  GroebnerBasis out{ring.poly_ring(), {}, true};
  for (const auto& g : gb.elements) {
    if (g.leading_monomial()[0] == 0) out.elements.push_back(g.shifted_into(ring.poly_ring(), -1));
  }
  return out;
}

}  // namespace

std::shared_ptr<const RingSpec> RingSpec::make(PolyRingPtr ring,
                                               std::vector<Polynomial> quotient_gens) {
  if (ring->order.kind() != TermOrder::Kind::grevlex) {
    throw AlgebraError("ring must use grevlex as its default order");
  }
  if (ring->nvars() + 1 > kMaxVars) {
    throw AlgebraError("too many variables (limit " + std::to_string(kMaxVars - 1) + ")");
  }
  std::shared_ptr<RingSpec> r(new RingSpec());
  r->ring_ = ring;
  std::vector<std::string> enames{"_t"};
  enames.insert(enames.end(), ring->names.begin(), ring->names.end());
  const auto n = enames.size();
  r->elim_ = PolyRing::make(ring->field, std::move(enames), TermOrder::block(n, 1));
  for (auto& q : quotient_gens) {
    if (!q.ring()->compatible(*ring)) throw AlgebraError("ring mismatch in quotient");
    if (!q.is_zero()) r->quotient_.push_back(q.with_order(ring));
  }
  r->quotient_gb_ = r->quotient_.empty() ? GroebnerBasis{ring, {}, true}
                                         : buchberger(r->quotient_);
  if (r->quotient_gb_.is_unit()) throw AlgebraError("quotient ideal is the unit ideal");
  r->dim_ = dimension_of_leading_terms(r->quotient_gb_, ring->nvars());
  return r;
}

Polynomial RingSpec::reduce_mod_quotient(const Polynomial& f) const {
  if (quotient_gb_.elements.empty()) return f;
  return normal_form(f, quotient_gb_.elements);
}

std::string RingSpec::to_string() const {
  const auto& spec = field().spec();
  std::string out = "GF(" + std::to_string(spec.p);
  if (spec.e > 1) out += "^" + std::to_string(spec.e);
  out += ")[";
  for (std::size_t i = 0; i < vars().size(); ++i) out += (i ? "," : "") + vars()[i];
  out += "]";
  if (!quotient_.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < quotient_.size(); ++i) {
      out += (i ? ", " : "") + quotient_[i].to_string();
    }
    out += ")";
  }
  return out;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!g.ring()->compatible(*ring_->poly_ring())) throw AlgebraError("ring mismatch");
    if (!g.is_zero()) gens_.push_back(g.ring() == ring_->poly_ring() ? std::move(g)
                                                                    : g.with_order(ring_->poly_ring()));
  }
}

Ideal Ideal::from_basis(RingPtr ring, GroebnerBasis gb) {
  std::vector<Polynomial> gens;
  for (const auto& g : gb.elements) {
    if (!ring->reduce_mod_quotient(g).is_zero()) gens.push_back(g);
  }
  Ideal out(std::move(ring), std::move(gens));
  std::call_once(out.cache_->once, [&] { out.cache_->gb = std::move(gb); });
  return out;
}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(cache_->once, [this] {
    std::vector<Polynomial> all(gens_.begin(), gens_.end());
    for (const auto& q : ring_->quotient_gens()) all.push_back(q);
    if (all.empty()) {
      cache_->gb = GroebnerBasis{ring_->poly_ring(), {}, true};
    } else {
      cache_->gb = buchberger(all);
    }
  });
  return cache_->gb;
}

std::vector<Polynomial> Ideal::basis_in_ring() const {
  std::vector<Polynomial> out;
  for (const auto& g : gb().elements) {
    if (!ring_->reduce_mod_quotient(g).is_zero()) out.push_back(g);
  }
  return out;
}

std::vector<std::string> Ideal::basis_strings() const {
  std::vector<std::string> out;
  for (const auto& g : basis_in_ring()) out.push_back(g.to_string());
  return out;
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gens()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::equals(const Ideal& other) const { return ideal_equal(gb(), other.gb()); }

bool Ideal::is_zero() const {
  for (const auto& g : gens_) {
    if (!ring_->reduce_mod_quotient(g).is_zero()) return false;
  }
  return true;
}

namespace {

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw AlgebraError("ring mismatch");
}

}  // namespace

std::vector<Polynomial> interreduce_generators(const RingSpec& ring,
                                               std::vector<Polynomial> gens) {
  const auto& k = ring.field();
  const auto& order = ring.poly_ring()->order;
  auto less = [&order](const Monomial& a, const Monomial& b) { return order.less(a, b); };
  std::map<Monomial, std::vector<Term>, decltype(less)> rows(less);
  std::vector<Polynomial> kept;
  for (auto& g0 : gens) {
    Polynomial g = ring.reduce_mod_quotient(g0);
    if (g.is_zero()) continue;
    std::vector<Term> r(g.terms().begin(), g.terms().end());
    std::vector<Term> residue;
    while (!r.empty()) {
      auto it = rows.find(r.front().mono);
      if (it == rows.end()) {
        residue.push_back(r.front());
        r.erase(r.begin());
        continue;
      }
      // Rows are monic, so subtracting lc * row cancels the leading term.
      auto rp = Polynomial::from_sorted(ring.poly_ring(), std::move(r));
      rp = rp.minus_multiple(rp.leading_coeff(), Monomial{},
                             Polynomial::from_sorted(ring.poly_ring(), it->second));
      r = std::move(rp).release_terms();
    }
    if (residue.empty()) continue;
    const FieldElement inv = k.inv(residue.front().coeff);
    for (auto& t : residue) t.coeff = k.mul(t.coeff, inv);
    const Monomial pivot = residue.front().mono;
    rows.emplace(pivot, std::move(residue));
    kept.push_back(std::move(g));
  }
  // Drop monomial generators properly divisible by another monomial generator.
  std::vector<bool> redundant_at(kept.size(), false);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool redundant = false;
    if (kept[i].is_monomial()) {
      for (std::size_t j = 0; j < kept.size() && !redundant; ++j) {
        if (j != i && kept[j].is_monomial() &&
            kept[j].leading_monomial().divides(kept[i].leading_monomial()) &&
            !(kept[j].leading_monomial() == kept[i].leading_monomial())) {
          redundant = true;
        }
      }
    }
    redundant_at[i] = redundant;
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (!redundant_at[i]) out.push_back(std::move(kept[i]));
  }
  return out;
}

Ideal sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens(a.gens().begin(), a.gens().end());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  gens.reserve(a.num_gens() * b.num_gens());
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) gens.push_back(a.ring()->reduce_mod_quotient(f * g));
  }
  return Ideal(a.ring(), interreduce_generators(*a.ring(), std::move(gens)));
}

Ideal power(const Ideal& a, unsigned n) {
  if (n == 0) return Ideal::unit(a.ring());
  Ideal r = a;
  for (unsigned i = 1; i < n; ++i) r = product(r, a);
  return r;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const auto& ring = *a.ring();
  const auto& er = ring.elimination_ring();
  const Polynomial t = Polynomial::variable(er, 0);
  const Polynomial one_minus_t = Polynomial::constant(er, ring.field().one()) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens()) gens.push_back(t * lift_to_elimination(ring, f));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * lift_to_elimination(ring, g));
  for (const auto& q : ring.quotient_gens()) gens.push_back(lift_to_elimination(ring, q));
  return Ideal::from_basis(a.ring(), eliminate_t(ring, buchberger(gens)));
}

Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) throw AlgebraError("division by zero polynomial");
  const auto& k = f.field();
  const FieldElement inv = k.inv(f.leading_coeff());
  std::vector<Term> quotient;
  Polynomial r = g;
  while (!r.is_zero()) {
    if (!f.leading_monomial().divides(r.leading_monomial())) {
      throw AlgebraError("non-exact division in colon computation");
    }
    const FieldElement c = k.mul(r.leading_coeff(), inv);
    const Monomial m = r.leading_monomial() / f.leading_monomial();
    quotient.push_back({c, m});
    r = r.minus_multiple(c, m, f);
  }
  return Polynomial::from_sorted(g.ring(), std::move(quotient));
}

namespace {

// Monomials outside the leading-term ideal, or nullopt when there are more
// than `limit` of them (or infinitely many).
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb, std::size_t n,
                                                        std::uint64_t limit) {
  std::vector<Monomial> lts;
  std::vector<std::uint32_t> box(n, 0);
  for (const auto& g : gb.elements) {
    const auto lm = g.leading_monomial();
    lts.push_back(lm);
    const auto s = lm.support();
    if (std::popcount(s) == 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(s));
      box[i] = box[i] == 0 ? lm[i] : std::min(box[i], lm[i]);
    }
  }
  if (std::any_of(box.begin(), box.end(), [](std::uint32_t b) { return b == 0; })) return {};
  std::vector<std::uint32_t> e(n, 0);
  std::vector<Monomial> out;
  bool overflow = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (out.size() >= limit) {
        overflow = true;
        return;
      }
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t v = 0; v < box[i] && !overflow; ++v) {
      e[i] = v;
      for (std::size_t k = i + 1; k < n; ++k) e[k] = 0;
      const Monomial m(e);
      // Once m is divisible, so is every larger exponent in this slot.
      if (std::any_of(lts.begin(), lts.end(), [&](const Monomial& l) { return l.divides(m); })) break;
      self(self, i + 1);
    }
    e[i] = 0;
  };
  rec(rec, 0);
  if (overflow) return {};
  return out;
}

// A : B by linear algebra in the finite-dimensional algebra P/(A+Q) with
// basis `basis`: the kernel of h -> (h f)_f over the generators f of B.
Ideal colon_linear(const Ideal& a, const Ideal& b, const std::vector<Monomial>& basis) {
  const auto& ring = *a.ring();
  const auto& k = ring.field();
  const auto& gb = a.gb().elements;
  std::vector<Polynomial> kernel;
  kernel.reserve(basis.size());
  for (const auto& m : basis) kernel.push_back(Polynomial::monomial(ring.poly_ring(), k.one(), m));
  const Polynomial zero(ring.poly_ring(), {});
  for (const auto& f : b.gens()) {
    if (kernel.empty()) break;
    // Echelon rows (image, preimage) keyed by the image's leading monomial;
    // images are kept monic.
    std::map<Monomial, std::pair<Polynomial, Polynomial>,
             std::function<bool(const Monomial&, const Monomial&)>>
        rows([&](const Monomial& x, const Monomial& y) { return ring.poly_ring()->order.less(x, y); });
    std::vector<Polynomial> next;
    for (auto& v : kernel) {
      Polynomial w = normal_form(v * f, gb);
      while (!w.is_zero()) {
        auto it = rows.find(w.leading_monomial());
        if (it == rows.end()) break;
        const FieldElement c = w.leading_coeff();
        w = w.minus_multiple(c, Monomial{}, it->second.first);
        v = v.minus_multiple(c, Monomial{}, it->second.second);
      }
      if (w.is_zero()) {
        next.push_back(std::move(v));
      } else {
        const FieldElement inv = k.inv(w.leading_coeff());
        const Monomial lead = w.leading_monomial();
        rows.emplace(lead, std::make_pair(w.scaled(inv), v.scaled(inv)));
      }
    }
    kernel = std::move(next);
  }
  std::vector<Polynomial> gens(a.gens().begin(), a.gens().end());
  gens.insert(gens.end(), kernel.begin(), kernel.end());
  return Ideal(a.ring(), interreduce_generators(ring, std::move(gens)));
}

}  // namespace

Ideal colon(const Ideal& a, const Polynomial& f) {
  if (a.contains(f)) return Ideal::unit(a.ring());
  const auto& ring = *a.ring();
  const auto& er = ring.elimination_ring();
  const Polynomial t = Polynomial::variable(er, 0);
  const Polynomial one_minus_t = Polynomial::constant(er, ring.field().one()) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.gens()) gens.push_back(t * lift_to_elimination(ring, g));
  for (const auto& q : ring.quotient_gens()) gens.push_back(t * lift_to_elimination(ring, q));
  gens.push_back(one_minus_t * lift_to_elimination(ring, f));
  const GroebnerBasis meet = eliminate_t(ring, buchberger(gens));
  std::vector<Polynomial> quotients;
  for (const auto& g : meet.elements) quotients.push_back(exact_divide(g, f));
  return Ideal(a.ring(), interreduce_generators(ring, std::move(quotients)));
}

Ideal colon_by_elimination(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (b.is_zero()) throw AlgebraError("colon by the zero ideal");
  std::vector<Ideal> parts;
  for (const auto& f : b.gens()) {
    if (a.contains(f)) continue;
    parts.push_back(colon(a, f));
  }
  if (parts.empty()) return Ideal::unit(a.ring());
  Ideal r = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) r = intersect(r, parts[i]);
  if (is_m_primary(a) && !r.is_unit() && !is_m_primary(r)) {
    throw AlgebraError("internal error: colon of an m-primary ideal is not m-primary");
  }
  return r;
}

Ideal colon_by_linear_algebra(const Ideal& a, const Ideal& b, std::uint64_t limit) {
  check_same_ring(a, b);
  if (b.is_zero()) throw AlgebraError("colon by the zero ideal");
  if (a.is_unit()) return a;
  auto basis = standard_monomials(a.gb(), a.ring()->nvars(), limit);
  if (!basis) throw AlgebraError("quotient too large for the linear colon");
  return colon_linear(a, b, *basis);
}

Ideal colon(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (b.is_zero()) throw AlgebraError("colon by the zero ideal");
  if (!a.is_unit()) {
    if (auto basis = standard_monomials(a.gb(), a.ring()->nvars(), kLinearColonLimit)) {
      return colon_linear(a, b, *basis);
    }
  }
  return colon_by_elimination(a, b);
}

std::size_t krull_dim(const Ideal& a) {
  if (a.is_unit()) throw AlgebraError("empty variety: krull_dim of the unit ideal");
  return dimension_of_leading_terms(a.gb(), a.ring()->nvars());
}

bool is_m_primary(const Ideal& a) {
  if (a.is_unit()) return false;
  const auto n = a.ring()->nvars();
  std::vector<std::uint32_t> box(n, 0);
  bool homogeneous = true;
  for (const auto& g : a.gb().elements) {
    const auto lm = g.leading_monomial();
    const auto s = lm.support();
    if (std::popcount(s) == 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(s));
      box[i] = box[i] == 0 ? lm[i] : std::min(box[i], lm[i]);
    }
    homogeneous = homogeneous && g.is_homogeneous();
  }
  if (std::any_of(box.begin(), box.end(), [](std::uint32_t b) { return b == 0; })) return false;
  // A homogeneous zero-dimensional ideal only vanishes at the origin.
  if (homogeneous) return true;
  // Otherwise every variable must be nilpotent modulo A; in an algebra of
  // dimension L that happens by the L-th power.
  const std::uint64_t len = standard_monomials(a.gb(), n, ~std::uint64_t{0})->size();
  const auto& gb = a.gb().elements;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p = a.ring()->var(i);
    for (std::uint64_t k = 1; k <= len && !p.is_zero(); ++k) {
      p = normal_form(p * a.ring()->var(i), gb);
    }
    if (!p.is_zero()) return false;
  }
  return true;
}

std::size_t height(const Ideal& a) { return a.ring()->dim() - krull_dim(a); }

Ideal maximal_ideal_power(const RingPtr& ring, unsigned c) {
  const auto n = ring->nvars();
  std::vector<Polynomial> gens;
  std::vector<std::uint32_t> e(n, 0);
  // Enumerate exponent vectors of total degree c.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      gens.push_back(Polynomial::monomial(ring->poly_ring(), ring->field().one(), Monomial(e)));
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[i] = left - v;
      self(self, i + 1, v);
    }
  };
  if (n == 0) return c == 0 ? Ideal::unit(ring) : Ideal::zero(ring);
  rec(rec, 0, c);
  return Ideal(ring, interreduce_generators(*ring, std::move(gens)));
}

Ideal localize(const Ideal& a, unsigned max_c) {
  if (a.is_unit() || is_m_primary(a)) return a;
  for (unsigned c = 1; c <= max_c; c *= 2) {
    Ideal lo = sum(a, maximal_ideal_power(a.ring(), c));
    Ideal hi = sum(a, maximal_ideal_power(a.ring(), c + 1));
    if (lo.equals(hi)) return lo;
  }
  throw AlgebraError("ideal is not m-primary in the local ring (no stabilization of A + m^c)");
}

void require_m_primary(const Ideal& a, const std::string& what) {
  if (!is_m_primary(a)) {
    throw AlgebraError("non-local input: " + what +
                       " not m-primary; localization semantics not guaranteed");
  }
}

}  // namespace coreideal
