#include <doctest.h>

#include <map>

#include "coreideal/polynomial.hpp"
#include "coreideal/random.hpp"

using namespace coreideal;

namespace {

Monomial random_monomial(SeededRng& rng, std::size_t n, std::uint32_t max_exp) {
  std::vector<std::uint32_t> e(n);
  for (auto& x : e) x = static_cast<std::uint32_t>(rng.bounded(max_exp + 1));
  return Monomial(e);
}

Polynomial random_poly(SeededRng& rng, const PolyRingPtr& r, int terms, std::uint32_t max_exp) {
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) {
    t.push_back({r->field->uniform(rng), random_monomial(rng, r->nvars(), max_exp)});
  }
  return Polynomial(r, std::move(t));
}

// Dense oracle: exponent vector -> coefficient, multiplied term by term.
using Dense = std::map<std::vector<std::uint32_t>, FieldElement>;

Dense dense(const Polynomial& f) {
  Dense d;
  for (const auto& t : f.terms()) d[t.mono.exponents(f.ring()->nvars())] = t.coeff;
  return d;
}

Dense naive_product(const Polynomial& f, const Polynomial& g) {
  const auto& k = f.field();
  const auto n = f.ring()->nvars();
  Dense out;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      auto e = a.mono.exponents(n);
      const auto eb = b.mono.exponents(n);
      for (std::size_t i = 0; i < n; ++i) e[i] += eb[i];
      auto it = out.emplace(e, k.zero()).first;
      it->second = k.add(it->second, k.mul(a.coeff, b.coeff));
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

PolyRingPtr ring3(std::uint32_t p, std::uint32_t e, TermOrder order = TermOrder::grevlex(3)) {
  auto k = std::make_shared<const Field>(FieldSpec::make(p, e));
  return PolyRing::make(k, {"x", "y", "z"}, order);
}

}  // namespace

TEST_CASE("monomial arithmetic and divisibility") {
  const Monomial a(std::vector<std::uint32_t>{2, 1, 0});
  const Monomial b(std::vector<std::uint32_t>{3, 1, 4});
  CHECK(a.degree() == 3);
  CHECK(a.divides(b));
  CHECK_FALSE(b.divides(a));
  CHECK((b / a) == Monomial(std::vector<std::uint32_t>{1, 0, 4}));
  CHECK((a * b).degree() == 11);
  CHECK(a.lcm(Monomial(std::vector<std::uint32_t>{0, 3, 1})) ==
        Monomial(std::vector<std::uint32_t>{2, 3, 1}));
  CHECK(Monomial::variable(0).coprime(Monomial::variable(2)));
  const std::vector<std::string> names{"x", "y", "z"};
  CHECK(a.to_string(names) == "x^2*y");
  CHECK(Monomial().to_string(names) == "1");
  CHECK_THROWS_AS(Monomial::variable(0, kMaxDegree) * Monomial::variable(1, 1), AlgebraError);

  SeededRng rng(1);
  for (int t = 0; t < 500; ++t) {
    const auto m = random_monomial(rng, 4, 3), n = random_monomial(rng, 4, 3);
    bool componentwise = true;
    for (std::size_t i = 0; i < 4; ++i) componentwise = componentwise && m[i] <= n[i];
    CHECK(m.divides(n) == componentwise);
  }
}

TEST_CASE("term orders: total, multiplicative, 1 minimal") {
  SeededRng rng(2);
  for (const auto& order :
       {TermOrder::grevlex(4), TermOrder::lex(4), TermOrder::block(4, 1), TermOrder::block(4, 2)}) {
    for (int t = 0; t < 2000; ++t) {
      const auto a = random_monomial(rng, 4, 4), b = random_monomial(rng, 4, 4),
                 c = random_monomial(rng, 4, 4);
      const int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      CHECK((ab == 0) == (a == b));
      if (ab < 0) CHECK(order.less(a * c, b * c));
      if (!a.is_one()) CHECK(order.less(Monomial(), a));
      if (order.less(a, b) && order.less(b, c)) CHECK(order.less(a, c));
    }
  }
}

TEST_CASE("grevlex and block orders on small cases") {
  const auto x = Monomial::variable(0), y = Monomial::variable(1), z = Monomial::variable(2);
  const auto g = TermOrder::grevlex(3);
  CHECK(g.less(z * z, x * z));          // x*z > z^2
  CHECK(g.less(x * z, y * y));          // y^2 > x*z in grevlex
  CHECK(g.less(x, y * y));              // degree first
  const auto elim = TermOrder::block(3, 1);
  CHECK(elim.less(y * y * y * z, x));   // x eliminates
  CHECK(TermOrder::lex(3).less(y * y * y, x));
}

TEST_CASE("polynomial product against the dense oracle") {
  for (auto [p, e] : {std::pair{2u, 16u}, std::pair{3u, 8u}, std::pair{101u, 1u}}) {
    const auto r = ring3(p, e);
    SeededRng rng(p);
    for (int t = 0; t < 50; ++t) {
      const auto f = random_poly(rng, r, 6, 3), g = random_poly(rng, r, 6, 3),
                 h = random_poly(rng, r, 4, 2);
      CHECK(dense(f * g) == naive_product(f, g));
      CHECK(f * g == g * f);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f - f).is_zero());
      CHECK((f + g) - g == f);
    }
  }
}

TEST_CASE("canonical form: sorted, no zeros, no duplicates") {
  const auto r = ring3(3, 1);
  const auto& k = *r->field;
  const auto x = Monomial::variable(0);
  Polynomial f(r, {{k.from_int(1), x}, {k.from_int(2), x}, {k.from_int(1), Monomial()}});
  CHECK(f.size() == 1);  // 1 + 2 = 0 in GF(3) on x
  CHECK(f.to_string() == "1");
  SeededRng rng(4);
  const auto g = random_poly(rng, r, 12, 3);
  for (std::size_t i = 1; i < g.size(); ++i) {
    CHECK(r->order.less(g.terms()[i].mono, g.terms()[i - 1].mono));
    CHECK_FALSE(g.terms()[i].coeff.is_zero());
  }
}

TEST_CASE("printing, monic, powers and homogeneity") {
  const auto r = ring3(2, 4);
  const auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1),
             z = Polynomial::variable(r, 2);
  const auto a = Polynomial::constant(r, r->field->generator());
  const auto f = x * x * y + a * z + Polynomial::constant(r, r->field->one());
  CHECK(f.to_string() == "x^2*y + a*z + 1");
  CHECK((x + y).pow(2) == x * x + y * y);  // characteristic 2
  CHECK((x * y + z * z).is_homogeneous());
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.total_degree() == 3);
  CHECK((a * x).monic() == x);
}

TEST_CASE("ring mismatch is rejected") {
  const auto r1 = ring3(2, 1), r2 = ring3(3, 1);
  CHECK_THROWS_AS(Polynomial::variable(r1, 0) + Polynomial::variable(r2, 0), AlgebraError);
  auto k = std::make_shared<const Field>(FieldSpec::make(2, 1));
  CHECK_THROWS_AS(PolyRing::make(k, {"x", "x"}), AlgebraError);
}

TEST_CASE("random linear combinations record their coefficients") {
  const auto r = ring3(2, 16);
  SeededRng rng(9);
  std::vector<Polynomial> gens{Polynomial::variable(r, 0), Polynomial::variable(r, 1)};
  const auto lc = random_linear_combination(gens, rng);
  REQUIRE(lc.coefficients.size() == 2);
  CHECK(lc.value == gens[0].scaled(lc.coefficients[0]) + gens[1].scaled(lc.coefficients[1]));
  CHECK_THROWS_AS(random_linear_combination(std::span<const Polynomial>{}, rng), AlgebraError);
}
