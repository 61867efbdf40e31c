#include "coreideal/groebner.hpp"

#include <algorithm>

namespace coreideal {

namespace {

struct Divisor {
  const std::vector<Term>* terms;
  Monomial lead;
  std::uint32_t mask;
  FieldElement inv_lc;
};

Divisor make_divisor(const std::vector<Term>& terms, const Field& k) {
  return {&terms, terms.front().mono, terms.front().mono.support(),
          k.inv(terms.front().coeff)};
}

// dst = a[a_from..] - c*m*b[1..]
void sub_multiple(std::vector<Term>& dst, const std::vector<Term>& a,
                  std::size_t a_from, FieldElement c, const Monomial& m,
                  const std::vector<Term>& b, const Field& k,
                  const TermOrder& order) {
  dst.clear();
  dst.reserve(a.size() - a_from + b.size());
  const FieldElement nc = k.neg(c);
  std::size_t i = a_from, j = 1;
  Monomial bm;
  if (j < b.size()) bm = b[j].mono * m;
  while (i < a.size() && j < b.size()) {
    const int cmp = order.compare(a[i].mono, bm);
    if (cmp > 0) {
      dst.push_back(a[i++]);
    } else {
      FieldElement v = k.mul(nc, b[j].coeff);
      if (cmp == 0) v = k.add(a[i++].coeff, v);
      if (!v.is_zero()) dst.push_back({v, bm});
      if (++j < b.size()) bm = b[j].mono * m;
    }
  }
  while (i < a.size()) dst.push_back(a[i++]);
  while (j < b.size()) {
    FieldElement v = k.mul(nc, b[j].coeff);
    dst.push_back({v, b[j].mono * m});
    ++j;
  }
}

const Divisor* find_divisor(const Monomial& t, std::span<const Divisor> divs) {
  const std::uint32_t mask = t.support();
  for (const auto& d : divs) {
    if ((d.mask & ~mask) == 0 && d.lead.divides(t)) return &d;
  }
  return nullptr;
}

// Reduces p by divs. With full == false only the leading term is reduced
// (until it becomes irreducible).
std::vector<Term> reduce(std::vector<Term> p, std::span<const Divisor> divs,
                         bool full, const Field& k, const TermOrder& order) {
  std::vector<Term> done;
  std::vector<Term> scratch;
  std::size_t start = 0;
  while (start < p.size()) {
    const Term& t = p[start];
    const Divisor* d = find_divisor(t.mono, divs);
    if (!d) {
      if (!full) break;
      done.push_back(t);
      ++start;
      continue;
    }
    const FieldElement c = k.mul(t.coeff, d->inv_lc);
    const Monomial m = t.mono / d->lead;
    sub_multiple(scratch, p, start + 1, c, m, *d->terms, k, order);
    std::swap(p, scratch);
    start = 0;
  }
  if (done.empty()) {
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(start));
    return p;
  }
  done.insert(done.end(), p.begin() + static_cast<std::ptrdiff_t>(start), p.end());
  return done;
}

void make_monic(std::vector<Term>& p, const Field& k) {
  if (p.empty() || p.front().coeff == k.one()) return;
  const FieldElement inv = k.inv(p.front().coeff);
  for (auto& t : p) t.coeff = k.mul(t.coeff, inv);
}

struct BasisElement {
  std::vector<Term> terms;
  std::uint32_t sugar;
  bool active;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t sugar;
};

class BuchbergerRun {
 public:
  BuchbergerRun(const PolyRingPtr& ring, BuchbergerStats& stats)
      : ring_(ring), k_(*ring->field), order_(ring->order), stats_(stats) {}

  GroebnerBasis run(std::span<const Polynomial> gens) {
    std::vector<std::vector<Term>> input;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      std::vector<Term> t(g.terms().begin(), g.terms().end());
      input.push_back(std::move(t));
    }
    std::sort(input.begin(), input.end(), [&](const auto& a, const auto& b) {
      return order_.compare(a.front().mono, b.front().mono) < 0;
    });
    for (auto& t : input) {
      const std::uint32_t sugar = degree_of(t);
      auto r = reduce(std::move(t), active_divisors(), true, k_, order_);
      if (r.empty()) continue;
      make_monic(r, k_);
      if (r.front().mono.is_one()) return unit_basis();
      install(std::move(r), sugar);
    }
    while (!pairs_.empty()) {
      const Pair p = pop_pair();
      ++stats_.pairs_reduced;
      auto s = spoly(p);
      auto r = reduce(std::move(s), active_divisors(), true, k_, order_);
      if (r.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      make_monic(r, k_);
      if (r.front().mono.is_one()) return unit_basis();
      install(std::move(r), p.sugar);
    }
    return interreduce();
  }

 private:
  static std::uint32_t degree_of(const std::vector<Term>& t) {
    std::uint32_t d = 0;
    for (const auto& x : t) d = std::max(d, x.mono.degree());
    return d;
  }

  std::span<const Divisor> active_divisors() {
    if (divisors_dirty_) {
      divisors_.clear();
      for (const auto& e : basis_) {
        if (e.active) divisors_.push_back(make_divisor(e.terms, k_));
      }
      divisors_dirty_ = false;
    }
    return divisors_;
  }

  GroebnerBasis unit_basis() const {
    GroebnerBasis gb{ring_, {Polynomial::constant(ring_, k_.one())}, true};
    return gb;
  }

  Monomial checked_lcm(std::size_t i, std::size_t j) const {
    try {
      return lead(i).lcm(lead(j));
    } catch (const AlgebraError&) {
      throw AlgebraError("degree overflow in S-pair (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
    }
  }

  const Monomial& lead(std::size_t i) const { return basis_[i].terms.front().mono; }

  std::vector<Term> spoly(const Pair& p) const {
    const auto& f = basis_[p.i].terms;
    const auto& g = basis_[p.j].terms;
    // Both monic: S = (lcm/lt f) f - (lcm/lt g) g, leading terms cancel.
    const Monomial mf = p.lcm / lead(p.i);
    const Monomial mg = p.lcm / lead(p.j);
    std::vector<Term> fm;
    fm.reserve(f.size());
    for (std::size_t a = 1; a < f.size(); ++a) fm.push_back({f[a].coeff, f[a].mono * mf});
    std::vector<Term> out;
    // fm has no leading term; prepend a dummy so sub_multiple skips index 0 of g.
    sub_multiple(out, fm, 0, k_.one(), mg, g, k_, order_);
    return out;
  }

  std::uint32_t pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const auto si = basis_[i].sugar - lead(i).degree();
    const auto sj = basis_[j].sugar - lead(j).degree();
    return std::max(si, sj) + l.degree();
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    const int c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t q = 1; q < pairs_.size(); ++q) {
      if (pair_less(pairs_[q], pairs_[best])) best = q;
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  // Gebauer-Moeller installation of a new basis element.
  void install(std::vector<Term> terms, std::uint32_t sugar) {
    const std::size_t h = basis_.size();
    const std::uint32_t s = std::max(sugar, degree_of(terms));
    basis_.push_back({std::move(terms), s, true});
    const Monomial& lh = lead(h);

    std::vector<Pair> c;
    for (std::size_t g = 0; g < h; ++g) {
      if (!basis_[g].active) continue;
      const Monomial l = checked_lcm(g, h);
      c.push_back({g, h, l, pair_sugar(g, h, l)});
    }
    stats_.pairs_considered += c.size();
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool keep = lead(p.i).coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (c[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < d.size() && keep; ++b) {
          if (d[b].lcm.divides(p.lcm)) keep = false;
        }
        if (!keep) ++stats_.chain_skipped;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + d.size());
    for (const auto& p : pairs_) {
      if (lh.divides(p.lcm) && !(lead(p.i).lcm(lh) == p.lcm) &&
          !(lead(p.j).lcm(lh) == p.lcm)) {
        ++stats_.chain_skipped;
        continue;
      }
      next.push_back(p);
    }
    for (const auto& p : d) {
      if (lead(p.i).coprime(lh)) {
        ++stats_.coprime_skipped;
        continue;
      }
      next.push_back(p);
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < h; ++g) {
      if (basis_[g].active && lh.divides(lead(g))) basis_[g].active = false;
    }
    divisors_dirty_ = true;
  }

  GroebnerBasis interreduce() {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].active) keep.push_back(i);
    }
    std::vector<Divisor> divs;
    for (auto i : keep) divs.push_back(make_divisor(basis_[i].terms, k_));
    std::vector<Polynomial> out;
    for (std::size_t a = 0; a < keep.size(); ++a) {
      const auto& t = basis_[keep[a]].terms;
      std::vector<Divisor> others;
      for (std::size_t b = 0; b < keep.size(); ++b) {
        if (b != a) others.push_back(divs[b]);
      }
      std::vector<Term> tail(t.begin() + 1, t.end());
      auto r = reduce(std::move(tail), others, true, k_, order_);
      r.insert(r.begin(), t.front());
      make_monic(r, k_);
      out.push_back(Polynomial::from_sorted(ring_, std::move(r)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return GroebnerBasis{ring_, std::move(out), true};
  }

  PolyRingPtr ring_;
  const Field& k_;
  const TermOrder& order_;
  BuchbergerStats& stats_;
  std::vector<BasisElement> basis_;
  std::vector<Pair> pairs_;
  std::vector<Divisor> divisors_;
  bool divisors_dirty_ = true;
};

std::vector<Divisor> divisors_of(std::span<const Polynomial> polys,
                                 std::vector<std::vector<Term>>& storage,
                                 const Field& k) {
  storage.clear();
  storage.reserve(polys.size());
  for (const auto& g : polys) {
    if (!g.is_zero()) storage.emplace_back(g.terms().begin(), g.terms().end());
  }
  std::vector<Divisor> divs;
  for (const auto& s : storage) divs.push_back(make_divisor(s, k));
  return divs;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (f.is_zero() || divisors.empty()) return f;
  const auto& k = f.field();
  std::vector<std::vector<Term>> storage;
  const auto divs = divisors_of(divisors, storage, k);
  std::vector<Term> p(f.terms().begin(), f.terms().end());
  return Polynomial::from_sorted(f.ring(),
                                 reduce(std::move(p), divs, true, k, f.ring()->order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const auto& k = f.field();
  return f.mul_term(k.inv(f.leading_coeff()), l / f.leading_monomial()) -
         g.mul_term(k.inv(g.leading_coeff()), l / g.leading_monomial());
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, BuchbergerStats* stats) {
  BuchbergerStats local;
  if (gens.empty()) return GroebnerBasis{nullptr, {}, true};
  PolyRingPtr ring = gens.front().ring();
  for (const auto& g : gens) {
    if (g.ring() != ring && !g.ring()->compatible(*ring)) throw AlgebraError("ring mismatch");
  }
  BuchbergerRun run(ring, stats ? *stats : local);
  return run.run(gens);
}

bool is_member(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.is_zero()) return true;
  return normal_form(f, gb.elements).is_zero();
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.ring && b.ring && !(a.order() == b.order())) {
    throw AlgebraError("ideal_equal: term order mismatch");
  }
  if (!a.reduced || !b.reduced) throw AlgebraError("ideal_equal: bases must be reduced");
  if (a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    if (!(a.elements[i] == b.elements[i])) return false;
  }
  return true;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& e = gb.elements;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (!normal_form(s_polynomial(e[i], e[j]), e).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace coreideal
