#ifndef COREIDEAL_TESTS_SUPPORT_HPP
#define COREIDEAL_TESTS_SUPPORT_HPP

#include <string>

#include "coreideal/spec_file.hpp"

namespace support {

inline std::string spec_path(const std::string& name) {
  return std::string(COREIDEAL_SPEC_DIR) + "/" + name + ".spec";
}

inline coreideal::SpecFile load(const std::string& name) {
  return coreideal::load_spec(spec_path(name));
}

inline coreideal::SpecFile parse(const std::string& text) { return coreideal::parse_spec(text); }

inline coreideal::Ideal ideal(const coreideal::SpecFile& s, const std::string& gens) {
  return coreideal::Ideal(s.ring, coreideal::parse_polynomial_list(gens, s.ring->poly_ring()));
}

inline coreideal::Polynomial poly(const coreideal::SpecFile& s, const std::string& text) {
  return coreideal::parse_polynomial(text, s.ring->poly_ring());
}

}  // namespace support

#endif  // COREIDEAL_TESTS_SUPPORT_HPP
