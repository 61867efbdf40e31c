#ifndef COREIDEAL_SPEC_FILE_HPP
#define COREIDEAL_SPEC_FILE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coreideal/ideal.hpp"

namespace coreideal {

/// Parses an infix polynomial over `ring`: + - * ^, parentheses, integer
/// literals, declared variables (juxtaposition multiplies, so "x2y" is not
/// allowed but "x^2y" and "xy" are when x and y are variables), and the
/// extension generator `a` when the field is not prime and `a` is not a
/// variable. `line`/`column` anchor error messages.
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring,
                            std::size_t line = 1, std::size_t column = 1);

/// Comma-separated polynomial list; an empty or blank string yields no
/// polynomials.
std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const PolyRingPtr& ring,
                                              std::size_t line = 1,
                                              std::size_t column = 1);

struct SpecOptions {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> repeats;
  std::optional<unsigned> n;
  std::optional<unsigned> n_max;
  std::optional<unsigned> t_max;
  std::optional<unsigned> window;

  bool operator==(const SpecOptions&) const = default;
};

/// A parsed spec file:
///
///   char = 2
///   ext_degree = 16                 (optional; default p^e >= 2^16)
///   modulus = a^16+a^5+a^3+a^2+1    (optional)
///   vars = x, y, z
///   quotient = z^3                  (optional; empty means R = P)
///   ideal I = x^2, y^2, x*z, y*z
///   seed = 42                       (options: seed repeats n n_max t_max window)
///
/// '#' starts a comment. Unknown or repeated keys are errors.
struct SpecFile {
  RingPtr ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  SpecOptions options;

  const Ideal* find(const std::string& name) const;
  const Ideal& ideal(const std::string& name) const;
};

/// `field_ext` overrides ext_degree (and drops any explicit modulus).
SpecFile parse_spec(std::string_view text,
                    std::optional<std::uint32_t> field_ext = std::nullopt);
SpecFile load_spec(const std::string& path,
                   std::optional<std::uint32_t> field_ext = std::nullopt);

/// Canonical text form; parse_spec(print_spec(s)) reproduces s.
std::string print_spec(const SpecFile& spec);

}  // namespace coreideal

#endif  // COREIDEAL_SPEC_FILE_HPP
