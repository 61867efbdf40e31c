#include <doctest.h>

#include <utility>

#include "coreideal/groebner.hpp"
#include "coreideal/random.hpp"
#include "support.hpp"

using namespace coreideal;

namespace {

PolyRingPtr ring(const std::string& header) { return support::parse(header + "ideal I = 1\n").ring->poly_ring(); }

std::vector<Polynomial> polys(const PolyRingPtr& r, const std::string& text) {
  return parse_polynomial_list(text, r);
}

// Every S-polynomial reduces to zero: checked directly, not via the library's own test.
bool s_pairs_vanish(const GroebnerBasis& gb) {
  for (std::size_t a = 0; a < gb.elements.size(); ++a) {
    for (std::size_t b = a + 1; b < gb.elements.size(); ++b) {
      if (!normal_form(s_polynomial(gb.elements[a], gb.elements[b]), gb.elements).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t a = 0; a < gb.elements.size(); ++a) {
    const auto& f = gb.elements[a];
    if (f.leading_coeff() != f.field().one()) return false;
    if (a > 0 && !gb.order().less(gb.elements[a - 1].leading_monomial(), f.leading_monomial())) {
      return false;
    }
    for (std::size_t b = 0; b < gb.elements.size(); ++b) {
      if (a == b) continue;
      for (const auto& t : f.terms()) {
        if (gb.elements[b].leading_monomial().divides(t.mono)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("x^2 + y, y^2 + x") {
  const auto r = ring("char = 5\nvars = x, y\n");
  const auto gb = buchberger(polys(r, "x^2 + y, y^2 + x"));
  CHECK(gb.reduced);
  CHECK(satisfies_buchberger_criterion(gb));
  CHECK(s_pairs_vanish(gb));
  CHECK(is_reduced(gb));
  // grevlex: the two generators already form a Groebner basis (coprime leading terms).
  REQUIRE(gb.elements.size() == 2);
  CHECK(gb.elements[0].to_string() == "y^2 + x");
  CHECK(gb.elements[1].to_string() == "x^2 + y");
}

TEST_CASE("known bases") {
  const auto r = ring("char = 7\nvars = x, y\n");
  CHECK(buchberger(polys(r, "x, x + 1")).is_unit());
  CHECK(buchberger(std::vector<Polynomial>{}).is_zero_ideal() == true);
  // (x*y - 1, x^2): x = x*(x*y) - ... gives the unit ideal.
  CHECK(buchberger(polys(r, "x*y - 1, x^2")).is_unit());
  const auto gb = buchberger(polys(r, "x^2 - y, x*y - 1"));
  CHECK(s_pairs_vanish(gb));
  CHECK(is_reduced(gb));
  CHECK(is_member(polys(r, "y^3 - 1")[0], gb));
  CHECK_FALSE(is_member(polys(r, "y - 1")[0], gb));
}

TEST_CASE("reduced basis is canonical under shuffles and scalings") {
  for (const char* header : {"char = 2\next_degree = 16\nvars = x, y, z\n",
                             "char = 3\next_degree = 8\nvars = x, y, z\n",
                             "char = 101\nvars = x, y, z\n"}) {
    const auto r = ring(header);
    const auto gens = polys(r, "x^2*y + z^3, x*y*z + y^2, x^3 + x*z^2 + 1, y*z^2 + x");
    const auto ref = buchberger(gens);
    CHECK(s_pairs_vanish(ref));
    CHECK(is_reduced(ref));
    SeededRng rng(11);
    for (int t = 0; t < 5; ++t) {
      auto g = gens;
      for (std::size_t k = g.size(); k > 1; --k) std::swap(g[k - 1], g[rng.bounded(k)]);
      for (auto& f : g) {
        FieldElement c;
        do c = r->field->uniform(rng); while (c.is_zero());
        f = f.scaled(c);
      }
      g.push_back(g[0] * g[1] + g[2]);  // redundant generator
      const auto other = buchberger(g);
      REQUIRE(other.elements.size() == ref.elements.size());
      for (std::size_t k = 0; k < ref.elements.size(); ++k) CHECK(other.elements[k] == ref.elements[k]);
      CHECK(ideal_equal(ref, other));
    }
  }
}

TEST_CASE("membership: combinations are members, normal forms are reduced") {
  const auto r = ring("char = 3\next_degree = 8\nvars = x, y, z\n");
  const auto gens = polys(r, "x^2 - y*z, y^2 - x*z, z^2 - x*y");
  const auto gb = buchberger(gens);
  SeededRng rng(5);
  const auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1),
             z = Polynomial::variable(r, 2);
  const std::vector<Polynomial> mults{x, y, z, x * y + z, y * y * z, Polynomial::constant(r, r->field->one())};
  for (int t = 0; t < 40; ++t) {
    Polynomial f = Polynomial::constant(r, r->field->zero());
    for (const auto& g : gens) {
      f = f + mults[rng.bounded(mults.size())].scaled(r->field->uniform(rng)) * g;
    }
    CHECK(is_member(f, gb));
    const auto h = f + mults[rng.bounded(mults.size())];
    const auto nf = normal_form(h, gb.elements);
    for (const auto& term : nf.terms()) {
      for (const auto& g : gb.elements) CHECK_FALSE(g.leading_monomial().divides(term.mono));
    }
    CHECK(is_member(h - nf, gb));
  }
  CHECK_FALSE(is_member(x, gb));
}

TEST_CASE("elimination order yields the elimination ideal") {
  // Twisted cubic: eliminating t from (x - t, y - t^2, z - t^3).
  auto k = std::make_shared<const Field>(FieldSpec::make(2, 1));
  const auto r = PolyRing::make(k, {"t", "x", "y", "z"}, TermOrder::block(4, 1));
  const auto gb = buchberger(polys(r, "x - t, y - t^2, z - t^3"));
  std::vector<Polynomial> eliminated;
  for (const auto& g : gb.elements) {
    if (g.leading_monomial()[0] == 0) eliminated.push_back(g);
  }
  const auto target = buchberger(polys(r, "y - x^2, z - x^3"));
  CHECK(ideal_equal(buchberger(eliminated), target));
}
