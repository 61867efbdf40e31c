#include <doctest.h>

#include "coreideal/core_engine.hpp"
#include "support.hpp"

using namespace coreideal;

namespace {

GeneralElementConfig fast() {
  GeneralElementConfig cfg;
  cfg.seed = 3;
  return cfg;
}

}  // namespace

TEST_CASE("K_1 = I and K_n(J, J) = J^n") {
  const SpecFile s = support::load("ex4_1");
  const Ideal& i = s.ideal("I");
  const Ideal& j = s.ideal("J");
  CHECK(kn_binomial(j, i, 1).equals(i));
  CHECK(kn_general(j, i, 1, fast()).equals(i));
  for (unsigned n = 1; n <= 3; ++n) {
    CHECK(kn_binomial(j, j, n).equals(power(j, n)));
    CHECK(kn_sample(j, j, n, 1, fast()).t == 1);
  }
}

TEST_CASE("one extra generator: K_n = (J, b)^n") {
  const auto s = support::parse("char = 3\next_degree = 6\nvars = x, y\nideal I = x^3, y^3, x*y\nideal J = x^3, y^3\n");
  for (unsigned n = 1; n <= 3; ++n) {
    CHECK(kn_binomial(s.ideal("J"), s.ideal("I"), n).equals(power(s.ideal("I"), n)));
    CHECK(kn_general(s.ideal("J"), s.ideal("I"), n, fast()).equals(power(s.ideal("I"), n)));
  }
}

TEST_CASE("K_2 of (x^2) in (x, y) depends on the characteristic") {
  // b = u x + v y; b^2 = u^2 x^2 + v^2 y^2 in char 2, and has a 2uv xy term otherwise.
  const auto c2 = support::parse("char = 2\nvars = x, y\nideal I = x, y\nideal J = x^2\n");
  const auto c3 = support::parse("char = 3\nvars = x, y\nideal I = x, y\nideal J = x^2\n");
  CHECK(kn_binomial(c2.ideal("J"), c2.ideal("I"), 2).equals(support::ideal(c2, "x^2, y^2")));
  CHECK(kn_general(c2.ideal("J"), c2.ideal("I"), 2, fast()).equals(support::ideal(c2, "x^2, y^2")));
  CHECK(kn_binomial(c3.ideal("J"), c3.ideal("I"), 2).equals(support::ideal(c3, "x^2, x*y, y^2")));
  CHECK(kn_general(c3.ideal("J"), c3.ideal("I"), 2, fast()).equals(support::ideal(c3, "x^2, x*y, y^2")));
}

TEST_CASE("J^n <= K_n <= I^n") {
  for (const char* name : {"ex4_1", "ex4_5", "ex4_8"}) {
    CAPTURE(name);
    const SpecFile s = support::load(name);
    const Ideal& i = s.ideal("I");
    const auto d = general_minimal_reduction(i, 11, fast());
    for (unsigned n = 1; n <= 2; ++n) {
      const Ideal k = kn_binomial(d.j, i, n);
      CHECK(k.contains(power(d.j, n)));
      CHECK(power(i, n).contains(k));
      const Ideal l = ln_from_kn(d.j, k, n);
      CHECK(l.contains(adjoint_colon(d.j, i, n)));
      CHECK(power(d.j, n + 1).contains(product(l, k)));
    }
  }
}

TEST_CASE("brute force needs a small prime field") {
  const auto big = support::parse("char = 2\nvars = x, y\nideal I = x, y\nideal J = x\n");
  CHECK_THROWS_AS(kn_bruteforce(big.ideal("J"), big.ideal("I"), 2), AlgebraError);
  const auto small = support::parse("char = 3\next_degree = 1\nvars = x, y\nideal I = x, y\nideal J = x^2\n");
  CHECK(kn_bruteforce(small.ideal("J"), small.ideal("I"), 2)
            .equals(kn_binomial(small.ideal("J"), small.ideal("I"), 2)));
}

TEST_CASE("core of m and of m^2 in two variables") {
  for (const char* header : {"char = 2\n", "char = 101\n"}) {
    const auto s = support::parse(std::string(header) + "vars = x, y\nideal I = x, y\nideal M2 = x^2, x*y, y^2\n");
    const CoreReport m = core(s.ideal("I"), 0, fast());
    CHECK(m.core.equals(s.ideal("I")));
    const CoreReport m2 = core(s.ideal("M2"), 0, fast());
    CHECK(m2.core.equals(power(s.ideal("I"), 3)));
    CHECK(m2.ell == 2);
    CHECK(m2.reductions_used >= m2.window);
    CHECK_FALSE(m2.sandwich_inconclusive);
  }
}

TEST_CASE("chain, conjecture and stabilization on m^2") {
  const auto s = support::parse("char = 2\nvars = x, y\nideal I = x^2, x*y, y^2\n");
  const Ideal& i = s.ideal("I");
  const Ideal m3 = support::ideal(s, "x^3, x^2*y, x*y^2, y^3");
  const auto chain = check_inclusion_chain(i, 1, fast());
  CHECK(chain.core.equals(m3));
  CHECK(chain.lower_contained);
  CHECK(chain.upper_contained);
  const auto conj = check_conjecture(i, 1, fast(), m3);
  CHECK(conj.holds());
  CHECK(conj.partial.size() == 2);
  const auto d = general_minimal_reduction(i, 2, fast());
  const auto st = check_stabilization(d.j, i, fast());
  CHECK(st.holds());
  CHECK(st.ns.size() == 3);
}

TEST_CASE("ex4_1 core is the published ideal") {
  const SpecFile s = support::load("ex4_1");
  const Ideal expected = support::ideal(
      s, "x^2*z^2, y^2*z^2, x^4, y^4, x^3*y*z, x*y^3*z, x^2*y^2*z, x^2*y^3, x^3*y^2");
  const CoreReport r = core(s.ideal("I"), 2, fast());
  CHECK(r.ell == 2);
  CHECK(r.s == 2);
  CHECK(r.core.equals(expected));
  REQUIRE_FALSE(r.sandwich.empty());
  CHECK(r.sandwich[0].lower_contained);
  CHECK(r.sandwich[0].upper_contained);
}
