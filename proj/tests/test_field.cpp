#include <doctest.h>

#include "coreideal/field.hpp"
#include "coreideal/random.hpp"

using namespace coreideal;

namespace {

// Carry-less product of two GF(2)[t] polynomials as bit masks, reduced modulo
// `mod` (degree e).
std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod, int e) {
  std::uint64_t r = 0;
  for (int i = 0; i < 64; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  for (int d = 63; d >= e; --d) {
    if ((r >> d) & 1) r ^= mod << (d - e);
  }
  return r;
}

void check_axioms(const Field& k, int trials, std::uint64_t seed) {
  SeededRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto a = k.uniform(rng), b = k.uniform(rng), c = k.uniform(rng);
    REQUIRE(k.add(a, b) == k.add(b, a));
    REQUIRE(k.mul(a, b) == k.mul(b, a));
    REQUIRE(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
    REQUIRE(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
    REQUIRE(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
    REQUIRE(k.sub(k.add(a, b), b) == a);
    if (!a.is_zero()) {
      REQUIRE(k.mul(a, k.inv(a)) == k.one());
      REQUIRE(k.div(k.mul(a, b), a) == b);
    }
  }
}

}  // namespace

TEST_CASE("GF(2): 1 + 1 = 0") {
  const Field k(FieldSpec::make(2, 1));
  CHECK(k.add(k.one(), k.one()) == k.zero());
}

TEST_CASE("GF(2^4) with t^4+t+1: t * t^3 = t + 1") {
  const Field k(FieldSpec::make(2, 4, {1, 1, 0, 0, 1}));
  const auto t = k.generator();
  const auto t3 = k.pow(t, 3);
  CHECK(k.mul(t, t3) == k.from_digits(std::vector<std::uint32_t>{1, 1}));
  // every product against the bitwise oracle
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      CHECK(k.mul({a}, {b}).code == gf2_mulmod(a, b, 0b10011, 4));
    }
  }
}

TEST_CASE("GF(3): 2 / 2 = 1, and division by zero") {
  const Field k(FieldSpec::make(3, 1));
  CHECK(k.div(k.from_int(2), k.from_int(2)) == k.one());
  CHECK_THROWS_WITH_AS(k.inv(k.zero()), "zero divisor", AlgebraError);
}

TEST_CASE("field axioms on random triples") {
  check_axioms(Field(FieldSpec::make(2, 16)), 2000, 1);
  check_axioms(Field(FieldSpec::make(3, 8)), 2000, 2);
  check_axioms(Field(FieldSpec::make(101, 1)), 2000, 3);
  check_axioms(Field(FieldSpec::make(5, 3)), 2000, 4);
  // polynomial fallback, beyond the table limit
  check_axioms(Field(FieldSpec::make(2, 40)), 300, 5);
  check_axioms(Field(FieldSpec::make(3, 30)), 300, 6);
}

TEST_CASE("Fermat: x^(q-1) = 1 in large fields") {
  for (auto [p, e] : {std::pair{2u, 40u}, std::pair{3u, 30u}, std::pair{1000003u, 2u}}) {
    const Field k(FieldSpec::make(p, e));
    SeededRng rng(p + e);
    for (int t = 0; t < 20; ++t) {
      const auto x = k.uniform(rng);
      if (!x.is_zero()) CHECK(k.pow(x, k.size() - 1) == k.one());
    }
  }
}

TEST_CASE("default moduli are irreducible and GF(2^16) is pinned") {
  CHECK(default_modulus(2, 16) ==
        std::vector<std::uint32_t>{1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  for (auto [p, e] : {std::pair{2u, 8u}, std::pair{2u, 13u}, std::pair{3u, 11u},
                      std::pair{5u, 7u}, std::pair{7u, 6u}, std::pair{3u, 8u}}) {
    const auto m = default_modulus(p, e);
    CHECK(m.size() == e + 1);
    CHECK(is_irreducible_mod_p(m, p));
  }
  CHECK(FieldSpec::default_extension(2) == 16);
  CHECK(FieldSpec::default_extension(3) == 11);
  CHECK(FieldSpec::default_extension(5) == 7);
}

TEST_CASE("irreducibility test against root-finding and factoring") {
  // x^2+1 splits over GF(5) (2^2 = -1), stays irreducible over GF(3)
  CHECK_FALSE(is_irreducible_mod_p(std::vector<std::uint32_t>{1, 0, 1}, 5));
  CHECK(is_irreducible_mod_p(std::vector<std::uint32_t>{1, 0, 1}, 3));
  // (x^2+x+1)^2 over GF(2): no roots but reducible
  CHECK_FALSE(is_irreducible_mod_p(std::vector<std::uint32_t>{1, 0, 1, 0, 1}, 2));
}

TEST_CASE("FieldSpec validation") {
  CHECK_THROWS_AS(FieldSpec::make(4, 1), AlgebraError);
  CHECK_THROWS_AS(FieldSpec::make(2, 0), AlgebraError);
  CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 0, 1}), AlgebraError);  // x^2+1 = (x+1)^2
  CHECK_THROWS_AS(FieldSpec::make(2, 70), AlgebraError);
}

TEST_CASE("binomial_mod_p") {
  CHECK(binomial_mod_p(4, 2, 2) == 0);
  CHECK(binomial_mod_p(5, 2, 3) == 1);
  for (std::uint32_t p : {2u, 3u, 7u}) CHECK(binomial_mod_p(17, 0, p) == 1);
  CHECK_THROWS_WITH_AS(binomial_mod_p(2, 3, 5), "invalid binomial: k > n", AlgebraError);

  // exhaustive against factorials
  std::uint64_t fact[21] = {1};
  for (int n = 1; n <= 20; ++n) fact[n] = fact[n - 1] * static_cast<std::uint64_t>(n);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint64_t n = 0; n <= 20; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        REQUIRE(binomial_mod_p(n, k, p) == fact[n] / fact[k] / fact[n - k] % p);
      }
    }
  }
}

TEST_CASE("element printing") {
  const Field k(FieldSpec::make(2, 4, {1, 1, 0, 0, 1}));
  CHECK(k.to_string(k.from_digits(std::vector<std::uint32_t>{1, 1, 0, 1})) == "a^3+a+1");
  CHECK(k.to_string(k.one()) == "1");
  const Field k3(FieldSpec::make(3, 2));
  CHECK(k3.to_string(k3.from_digits(std::vector<std::uint32_t>{0, 2})) == "2*a");
  const Field f(FieldSpec::make(101, 1));
  CHECK(f.to_string(f.from_int(-1)) == "100");
}

TEST_CASE("seeded sampling is reproducible") {
  SeededRng a(42), b(42), c(43);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  CHECK(SeededRng(42).next() != c.next());
  SeededRng r(7);
  for (int i = 0; i < 1000; ++i) CHECK(r.bounded(101) < 101);
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
}
