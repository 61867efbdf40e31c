#include "coreideal/polynomial.hpp"

#include <algorithm>
#include <set>

namespace coreideal {

PolyRingPtr PolyRing::make(FieldPtr field, std::vector<std::string> names,
                           TermOrder order) {
  if (names.size() > kMaxVars) {
    throw AlgebraError("too many variables (limit " + std::to_string(kMaxVars) + ")");
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw AlgebraError("duplicate variable name");
  if (order.nvars() != names.size()) throw AlgebraError("term order arity mismatch");
  return std::make_shared<const PolyRing>(
      PolyRing{std::move(field), std::move(names), order});
}

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
  const auto& order = ring_->order;
  const auto& k = *ring_->field;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = k.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(t);
    }
  }
}

Polynomial Polynomial::constant(PolyRingPtr ring, FieldElement c) {
  return monomial(std::move(ring), c, Monomial{});
}

Polynomial Polynomial::monomial(PolyRingPtr ring, FieldElement c, const Monomial& m) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw AlgebraError("variable index out of range");
  auto one = ring->field->one();
  return monomial(std::move(ring), one, Monomial::variable(index));
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

void Polynomial::check_ring(const Polynomial& g) const {
  if (ring_ != g.ring_ && !(ring_ && g.ring_ && ring_->compatible(*g.ring_))) {
    throw AlgebraError("ring mismatch");
  }
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_ring(g);
  return minus_multiple(field().neg(field().one()), Monomial{}, g);
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  check_ring(g);
  return minus_multiple(field().one(), Monomial{}, g);
}

Polynomial Polynomial::operator-() const { return scaled(field().neg(field().one())); }

Polynomial Polynomial::minus_multiple(FieldElement c, const Monomial& m,
                                      const Polynomial& g) const {
  const auto& k = field();
  const auto& order = ring_->order;
  const FieldElement nc = k.neg(c);
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && !have_gm) {
      gm = g.terms_[j].mono * m;
      have_gm = true;
    }
    int cmp;
    if (i == terms_.size()) {
      cmp = -1;
    } else if (j == g.terms_.size()) {
      cmp = 1;
    } else {
      cmp = order.compare(terms_[i].mono, gm);
    }
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      FieldElement v = k.mul(nc, g.terms_[j].coeff);
      if (!v.is_zero()) out.terms_.push_back({v, gm});
      ++j;
      have_gm = false;
    } else {
      FieldElement v = k.add(terms_[i].coeff, k.mul(nc, g.terms_[j].coeff));
      if (!v.is_zero()) out.terms_.push_back({v, gm});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  const auto& k = field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) prod.push_back({k.mul(a.coeff, b.coeff), a.mono * b.mono});
  }
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({field().mul(c, t.coeff), t.mono});
  return out;
}

Polynomial Polynomial::mul_term(FieldElement c, const Monomial& m) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({field().mul(c, t.coeff), t.mono * m});
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading_coeff()));
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial r = constant(ring_, field().one());
  Polynomial base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Polynomial Polynomial::with_order(PolyRingPtr ring) const {
  if (ring->nvars() != ring_->nvars()) throw AlgebraError("ring mismatch");
  return Polynomial(std::move(ring), terms_);
}

Polynomial Polynomial::shifted_into(PolyRingPtr ring, int shift) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (shift < 0) {
      for (int i = 0; i < -shift; ++i) {
        if (t.mono[static_cast<std::size_t>(i)]) {
          throw AlgebraError("cannot drop a variable that occurs");
        }
      }
    }
    ts.push_back({t.coeff, t.mono.shifted(shift)});
  }
  return Polynomial(std::move(ring), std::move(ts));
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].coeff == g.terms_[i].coeff) || !(terms_[i].mono == g.terms_[i].mono)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& k = field();
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string c = k.to_string(t.coeff);
    const bool compound = c.find('+') != std::string::npos;
    if (t.mono.is_one()) {
      out += compound ? "(" + c + ")" : c;
      continue;
    }
    if (!(t.coeff == k.one())) out += (compound ? "(" + c + ")" : c) + "*";
    out += t.mono.to_string(ring_->names);
  }
  return out;
}

LinearCombination random_linear_combination(std::span<const Polynomial> gens,
                                            SeededRng& rng) {
  if (gens.empty()) throw AlgebraError("random linear combination of no generators");
  const auto& ring = gens.front().ring();
  const auto& k = *ring->field;
  LinearCombination out{Polynomial(ring), {}};
  for (const auto& g : gens) {
    FieldElement lambda = k.uniform(rng);
    out.coefficients.push_back(lambda);
    out.value = out.value + g.scaled(lambda);
  }
  return out;
}

}  // namespace coreideal
