#include "coreideal/field.hpp"

#include <algorithm>
#include <limits>

namespace coreideal {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

using GfpPoly = std::vector<std::uint32_t>;  // lowest degree first

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (k) {
    if (k & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    k >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(GfpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g over GF(p); g monic.
GfpPoly poly_mod(GfpPoly f, const GfpPoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>(
          (f[shift + i] + (p - c) * g[i] % p) % p);
    }
    trim(f);
  }
  return f;
}

GfpPoly poly_mulmod(const GfpPoly& a, const GfpPoly& b, const GfpPoly& g,
                    std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  GfpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), g, p);
}

GfpPoly poly_powmod(GfpPoly base, std::uint64_t k, const GfpPoly& g,
                    std::uint32_t p) {
  GfpPoly r{1};
  base = poly_mod(std::move(base), g, p);
  while (k) {
    if (k & 1) r = poly_mulmod(r, base, g, p);
    base = poly_mulmod(base, base, g, p);
    k >>= 1;
  }
  return r;
}

GfpPoly poly_gcd(GfpPoly a, GfpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a <- a mod b
    const std::uint64_t inv = powmod(b.back(), p - 2, p);
    for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool has_root(std::span<const std::uint32_t> f, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

std::uint32_t small_binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  // n, k < p
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = mulmod(num, (n - i) % p, p);
    den = mulmod(den, (i + 1) % p, p);
  }
  return static_cast<std::uint32_t>(mulmod(num, powmod(den, p - 2, p), p));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) throw AlgebraError("invalid binomial: k > n");
  std::uint64_t r = 1;
  while (n || k) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    r = mulmod(r, small_binomial(nd, kd, p), p);
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(r % p);
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  GfpPoly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t e = f.size() - 1;
  if (f.back() != 1) return false;
  if (e == 1) return true;
  if (e <= 3) return !has_root(f, p);
  // Rabin: x^(p^e) == x mod f, and gcd(x^(p^(e/r)) - x, f) == 1 for r | e.
  auto frobenius_power = [&](std::size_t k) {
    GfpPoly x{0, 1};
    for (std::size_t i = 0; i < k; ++i) x = poly_powmod(x, p, f, p);
    return x;
  };
  auto minus_x = [&](GfpPoly g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return g;
  };
  if (!minus_x(frobenius_power(e)).empty()) return false;
  for (std::uint64_t r : prime_factors(e)) {
    GfpPoly g = poly_gcd(f, minus_x(frobenius_power(e / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e) {
  if (e == 1) return {0, 1};
  // Conventional GF(2^16) pentanomial a^16 + a^5 + a^3 + a^2 + 1.
  if (p == 2 && e == 16) return {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
  GfpPoly f(e + 1, 0);
  f[0] = 1;
  f[e] = 1;
  if (p == 2) {
    for (std::uint32_t k = 1; k < e; ++k) {
      f[k] = 1;
      if (is_irreducible_mod_p(f, p)) return f;
      f[k] = 0;
    }
    for (std::uint32_t k1 = 3; k1 < e; ++k1) {
      for (std::uint32_t k2 = 2; k2 < k1; ++k2) {
        for (std::uint32_t k3 = 1; k3 < k2; ++k3) {
          f[k1] = f[k2] = f[k3] = 1;
          if (is_irreducible_mod_p(f, p)) return f;
          f[k1] = f[k2] = f[k3] = 0;
        }
      }
    }
  }
  // Smallest base-p encoding of the lower coefficients.
  for (std::uint64_t v = 1;; ++v) {
    std::uint64_t w = v;
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(w % p);
      w /= p;
    }
    if (w != 0) break;
    if (f[0] != 0 && is_irreducible_mod_p(f, p)) return f;
  }
  throw AlgebraError("no irreducible polynomial found");
}

std::uint32_t FieldSpec::default_extension(std::uint32_t p) {
  std::uint32_t e = 1;
  std::uint64_t q = p;
  while (q < (1u << 16)) {
    q *= p;
    ++e;
  }
  return e;
}

std::uint64_t FieldSpec::size() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  return q;
}

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t e,
                          std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) {
    throw AlgebraError("characteristic " + std::to_string(p) + " is not prime");
  }
  if (e < 1) throw AlgebraError("extension degree must be >= 1");
  long double q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  if (q >= static_cast<long double>(kMaxFieldSize)) {
    throw AlgebraError("field GF(" + std::to_string(p) + "^" +
                       std::to_string(e) + ") is too large");
  }
  FieldSpec spec;
  spec.p = p;
  spec.e = e;
  if (modulus.empty()) {
    spec.modulus = default_modulus(p, e);
  } else {
    for (auto& c : modulus) c %= p;
    trim(modulus);
    if (modulus.size() != e + 1 || modulus.back() != 1) {
      throw AlgebraError("modulus must be monic of degree " + std::to_string(e));
    }
    if (!is_irreducible_mod_p(modulus, p)) {
      throw AlgebraError("modulus is not irreducible over GF(" +
                         std::to_string(p) + ")");
    }
    spec.modulus = std::move(modulus);
  }
  return spec;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (spec_.modulus.empty()) spec_ = FieldSpec::make(spec_.p, spec_.e);
  if (!is_prime(spec_.p)) throw AlgebraError("characteristic is not prime");
  if (spec_.modulus.size() != spec_.e + 1 ||
      !is_irreducible_mod_p(spec_.modulus, spec_.p)) {
    throw AlgebraError("invalid field modulus");
  }
  size_ = spec_.size();
  if (size_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  const std::uint64_t q = size_;
  if (q == 2) {
    exp_ = {1, 1};
    log_ = {0, 0};
    return;
  }
  const auto factors = prime_factors(q - 1);
  // Slow-path exponentiation; tables are not populated yet.
  auto slow_pow = [&](FieldElement a, std::uint64_t k) {
    FieldElement r = one();
    while (k) {
      if (k & 1) r = spec_.e == 1 ? FieldElement{r.code * a.code % spec_.p}
                                  : mul_poly(r, a);
      a = spec_.e == 1 ? FieldElement{a.code * a.code % spec_.p} : mul_poly(a, a);
      k >>= 1;
    }
    return r;
  };
  FieldElement g{0};
  for (std::uint64_t c = 2; c < q; ++c) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow({c}, (q - 1) / r) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = {c};
      break;
    }
  }
  exp_.assign(2 * (q - 1), 0);
  log_.assign(q, 0);
  FieldElement x = one();
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x.code);
    exp_[i + q - 1] = static_cast<std::uint32_t>(x.code);
    log_[x.code] = static_cast<std::uint32_t>(i);
    x = spec_.e == 1 ? FieldElement{x.code * g.code % spec_.p} : mul_poly(x, g);
  }
  if (spec_.p != 2 && spec_.e > 1) {
    zech_.assign(q - 1, -1);
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      // 1 + g^i: increment the constant digit.
      std::uint64_t c = exp_[i];
      std::uint64_t d0 = c % spec_.p;
      std::uint64_t s = c - d0 + (d0 + 1) % spec_.p;
      zech_[i] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
    }
  }
}

FieldElement Field::generator() const {
  if (spec_.e == 1) return from_int(0);
  return {spec_.p};
}

FieldElement Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(spec_.p);
  if (r < 0) r += spec_.p;
  return {static_cast<std::uint64_t>(r)};
}

FieldElement Field::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() > spec_.e) throw AlgebraError("too many digits for field element");
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * spec_.p + d[i] % spec_.p;
  return {code};
}

std::vector<std::uint32_t> Field::digits(FieldElement x) const {
  std::vector<std::uint32_t> d(spec_.e, 0);
  std::uint64_t c = x.code;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    d[i] = static_cast<std::uint32_t>(c % spec_.p);
    c /= spec_.p;
  }
  return d;
}

FieldElement Field::add_slow(FieldElement a, FieldElement b) const {
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  if (!zech_.empty()) {
    std::uint64_t la = log_[a.code], lb = log_[b.code];
    const std::uint64_t n = size_ - 1;
    const std::uint64_t d = lb >= la ? lb - la : lb + n - la;
    const std::int64_t z = zech_[d];
    if (z < 0) return {0};
    return {exp_[la + static_cast<std::uint64_t>(z)]};
  }
  std::uint64_t ca = a.code, cb = b.code, out = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    out += ((ca % spec_.p + cb % spec_.p) % spec_.p) * place;
    ca /= spec_.p;
    cb /= spec_.p;
    place *= spec_.p;
  }
  return {out};
}

FieldElement Field::neg_slow(FieldElement a) const {
  if (!zech_.empty()) return {exp_[log_[a.code] + (size_ - 1) / 2]};
  std::uint64_t ca = a.code, out = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    out += ((spec_.p - ca % spec_.p) % spec_.p) * place;
    ca /= spec_.p;
    place *= spec_.p;
  }
  return {out};
}

FieldElement Field::mul_poly(FieldElement a, FieldElement b) const {
  const auto da = digits(a), db = digits(b);
  GfpPoly prod(2 * spec_.e - 1, 0);
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < spec_.e; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{da[i]} * db[j]) % spec_.p);
    }
  }
  auto r = poly_mod(std::move(prod), spec_.modulus, spec_.p);
  return from_digits(r);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw AlgebraError("zero divisor");
  if (!log_.empty()) {
    const std::uint64_t n = size_ - 1;
    return {exp_[(n - log_[a.code]) % n]};
  }
  return pow(a, size_ - 2);
}

FieldElement Field::pow(FieldElement a, std::uint64_t k) const {
  FieldElement r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::string Field::to_string(FieldElement x) const {
  if (spec_.e == 1) return std::to_string(x.code);
  if (x.code == 0) return "0";
  const auto d = digits(x);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (!d[i]) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += 'a';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace coreideal
