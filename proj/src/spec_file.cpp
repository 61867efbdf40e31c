#include "coreideal/spec_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace coreideal {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const PolyRingPtr& ring, std::size_t line,
             std::size_t column)
      : text_(text), ring_(ring), line_(line), column_(column) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_ + pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      bool negate = false;
      if (peek('+') || peek('-')) {
        negate = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        p = p * factor();
      } else if (starts_factor()) {
        p = p * factor();
      } else {
        break;
      }
    }
    return p;
  }

  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    bool overflow = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) overflow = true;
      v = v * 10 + d;
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    if (overflow) {
      pos_ = start;
      fail("integer literal too large");
    }
    return v;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      const std::size_t at = pos_;
      const std::uint64_t e = integer();
      if (e > kMaxDegree) {
        pos_ = at;
        fail("exponent too large");
      }
      base = base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    const auto& k = *ring_->field;
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      return Polynomial::constant(ring_, k.from_int(static_cast<std::int64_t>(v % k.characteristic())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return identifier(text_.substr(start, pos_ - start), start);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  // An identifier is a declared variable, the extension generator `a`, or a
  // juxtaposition of declared variables (longest match first).
  Polynomial identifier(std::string_view id, std::size_t start) {
    const auto& names = ring_->names;
    const auto& k = *ring_->field;
    Polynomial out = Polynomial::constant(ring_, k.one());
    std::size_t i = 0;
    while (i < id.size()) {
      std::size_t best_len = 0, best_var = 0;
      for (std::size_t v = 0; v < names.size(); ++v) {
        const auto& nm = names[v];
        if (nm.size() > best_len && id.substr(i, nm.size()) == nm) {
          best_len = nm.size();
          best_var = v;
        }
      }
      if (best_len > 0) {
        out = out * Polynomial::variable(ring_, best_var);
        i += best_len;
        continue;
      }
      if (id[i] == 'a' && k.degree() > 1) {
        out = out.scaled(k.generator());
        ++i;
        continue;
      }
      pos_ = start + i;
      fail("undeclared variable in '" + std::string(id) + "'");
    }
    return out;
  }

  std::string_view text_;
  const PolyRingPtr& ring_;
  std::size_t line_, column_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct Entry {
  std::string value;
  std::size_t line;
  std::size_t column;  // column where the value starts
};

std::uint64_t parse_uint(const Entry& e, const std::string& key) {
  if (e.value.empty()) throw ParseError("missing value for '" + key + "'", e.line, e.column);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < e.value.size(); ++i) {
    const char c = e.value[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("expected a nonnegative integer for '" + key + "'", e.line, e.column + i);
    }
    const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (v > (UINT64_MAX - d) / 10) throw ParseError("integer too large", e.line, e.column);
    v = v * 10 + d;
  }
  return v;
}

unsigned parse_small(const Entry& e, const std::string& key) {
  const auto v = parse_uint(e, key);
  if (v > 1'000'000) throw ParseError("value too large for '" + key + "'", e.line, e.column);
  return static_cast<unsigned>(v);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring,
                            std::size_t line, std::size_t column) {
  return ExprParser(text, ring, line, column).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const PolyRingPtr& ring,
                                              std::size_t line, std::size_t column) {
  std::vector<Polynomial> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      const auto piece = text.substr(start, i - start);
      if (trim(piece).empty()) throw ParseError("empty polynomial in list", line, column + start);
      out.push_back(parse_polynomial(piece, ring, line, column + start));
      start = i + 1;
    }
  }
  return out;
}

const Ideal* SpecFile::find(const std::string& name) const {
  for (const auto& [n, id] : ideals) {
    if (n == name) return &id;
  }
  return nullptr;
}

const Ideal& SpecFile::ideal(const std::string& name) const {
  if (const Ideal* p = find(name)) return *p;
  throw AlgebraError("spec defines no ideal named '" + name + "'");
}

SpecFile parse_spec(std::string_view text, std::optional<std::uint32_t> field_ext) {
  static const std::set<std::string> kKeys = {"char", "ext_degree", "modulus", "vars",
                                              "quotient", "seed", "repeats", "n",
                                              "n_max", "t_max", "window"};
  std::map<std::string, Entry> entries;
  std::vector<std::pair<std::string, Entry>> ideal_entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, 1);
    std::string key = trim(line.substr(0, eq));
    std::size_t vstart = eq + 1;
    while (vstart < line.size() && std::isspace(static_cast<unsigned char>(line[vstart]))) ++vstart;
    Entry entry{trim(line.substr(eq + 1)), line_no, vstart + 1};
    if (key.rfind("ideal", 0) == 0 && key.size() > 5 &&
        std::isspace(static_cast<unsigned char>(key[5]))) {
      std::string name = trim(std::string_view(key).substr(5));
      bool valid = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
      for (char c : name) valid = valid && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!valid) throw ParseError("invalid ideal name '" + name + "'", line_no, 1);
      for (const auto& [n, e] : ideal_entries) {
        if (n == name) throw ParseError("duplicate ideal '" + name + "'", line_no, 1);
      }
      ideal_entries.emplace_back(std::move(name), std::move(entry));
      continue;
    }
    if (!kKeys.count(key)) throw ParseError("unknown key '" + key + "'", line_no, 1);
    if (entries.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, 1);
    entries.emplace(std::move(key), std::move(entry));
    if (end == text.size()) break;
  }

  if (!entries.count("char")) throw ParseError("missing 'char'", line_no, 1);
  if (!entries.count("vars")) throw ParseError("missing 'vars'", line_no, 1);
  const Entry& ch = entries.at("char");
  const auto p64 = parse_uint(ch, "char");
  if (p64 > UINT32_MAX || !is_prime(p64)) {
    throw ParseError("characteristic " + ch.value + " is not prime", ch.line, ch.column);
  }
  const auto p = static_cast<std::uint32_t>(p64);
  std::uint32_t e = FieldSpec::default_extension(p);
  if (entries.count("ext_degree")) {
    const Entry& ed = entries.at("ext_degree");
    const auto v = parse_uint(ed, "ext_degree");
    if (v < 1 || v > 64) throw ParseError("ext_degree out of range", ed.line, ed.column);
    e = static_cast<std::uint32_t>(v);
  }
  if (field_ext) e = *field_ext;

  std::vector<std::uint32_t> modulus;
  if (entries.count("modulus") && !field_ext) {
    const Entry& me = entries.at("modulus");
    // Parse over GF(p)[a] as a one-variable ring.
    auto prime = std::make_shared<const Field>(FieldSpec::make(p, 1));
    auto aring = PolyRing::make(prime, {"a"});
    const Polynomial m = parse_polynomial(me.value, aring, me.line, me.column);
    modulus.assign(m.total_degree() + 1, 0);
    for (const auto& t : m.terms()) modulus[t.mono[0]] = static_cast<std::uint32_t>(t.coeff.code);
    if (modulus.size() != e + 1) {
      throw ParseError("modulus degree does not match ext_degree", me.line, me.column);
    }
  }
  FieldSpec fs;
  try {
    fs = FieldSpec::make(p, e, modulus);
  } catch (const AlgebraError& err) {
    throw ParseError(err.what(), ch.line, ch.column);
  }
  auto field = std::make_shared<const Field>(fs);

  const Entry& ve = entries.at("vars");
  std::vector<std::string> names;
  {
    std::size_t start = 0;
    const std::string& v = ve.value;
    for (std::size_t i = 0; i <= v.size(); ++i) {
      if (i == v.size() || v[i] == ',') {
        std::string nm = trim(std::string_view(v).substr(start, i - start));
        bool valid = !nm.empty() && std::isalpha(static_cast<unsigned char>(nm[0]));
        for (char c : nm) valid = valid && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!valid) throw ParseError("invalid variable name '" + nm + "'", ve.line, ve.column + start);
        if (nm == "a" && fs.e > 1) {
          throw ParseError("'a' is reserved for the field generator", ve.line, ve.column + start);
        }
        for (const auto& other : names) {
          if (other == nm) throw ParseError("duplicate variable '" + nm + "'", ve.line, ve.column + start);
        }
        names.push_back(std::move(nm));
        start = i + 1;
      }
    }
  }
  if (names.size() + 1 > kMaxVars) throw ParseError("too many variables", ve.line, ve.column);
  auto pring = PolyRing::make(field, names);

  std::vector<Polynomial> quotient;
  if (entries.count("quotient")) {
    const Entry& qe = entries.at("quotient");
    quotient = parse_polynomial_list(qe.value, pring, qe.line, qe.column);
  }
  SpecFile out;
  try {
    out.ring = RingSpec::make(pring, quotient);
  } catch (const AlgebraError& err) {
    const Entry& qe = entries.at("quotient");
    throw ParseError(err.what(), qe.line, qe.column);
  }
  for (const auto& [name, entry] : ideal_entries) {
    out.ideals.emplace_back(name, Ideal(out.ring, parse_polynomial_list(entry.value, pring,
                                                                        entry.line, entry.column)));
  }
  auto opt = [&](const char* key, std::optional<unsigned>& slot) {
    if (entries.count(key)) slot = parse_small(entries.at(key), key);
  };
  if (entries.count("seed")) out.options.seed = parse_uint(entries.at("seed"), "seed");
  opt("repeats", out.options.repeats);
  opt("n", out.options.n);
  opt("n_max", out.options.n_max);
  opt("t_max", out.options.t_max);
  opt("window", out.options.window);
  return out;
}

SpecFile load_spec(const std::string& path, std::optional<std::uint32_t> field_ext) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spec file '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), field_ext);
}

std::string print_spec(const SpecFile& spec) {
  const auto& ring = *spec.ring;
  const auto& fs = ring.field().spec();
  std::ostringstream out;
  out << "char = " << fs.p << "\n";
  out << "ext_degree = " << fs.e << "\n";
  if (fs.e > 1) {
    std::string m;
    for (std::size_t i = fs.modulus.size(); i-- > 0;) {
      if (!fs.modulus[i]) continue;
      if (!m.empty()) m += " + ";
      if (i == 0 || fs.modulus[i] != 1) m += std::to_string(fs.modulus[i]);
      if (i > 0 && fs.modulus[i] != 1) m += "*";
      if (i > 0) m += "a";
      if (i > 1) m += "^" + std::to_string(i);
    }
    out << "modulus = " << m << "\n";
  }
  out << "vars = ";
  for (std::size_t i = 0; i < ring.vars().size(); ++i) out << (i ? ", " : "") << ring.vars()[i];
  out << "\n";
  out << "quotient = ";
  for (std::size_t i = 0; i < ring.quotient_gens().size(); ++i) {
    out << (i ? ", " : "") << ring.quotient_gens()[i].to_string();
  }
  out << "\n";
  for (const auto& [name, id] : spec.ideals) {
    out << "ideal " << name << " = ";
    for (std::size_t i = 0; i < id.gens().size(); ++i) out << (i ? ", " : "") << id.gens()[i].to_string();
    out << "\n";
  }
  const auto& o = spec.options;
  if (o.seed) out << "seed = " << *o.seed << "\n";
  if (o.repeats) out << "repeats = " << *o.repeats << "\n";
  if (o.n) out << "n = " << *o.n << "\n";
  if (o.n_max) out << "n_max = " << *o.n_max << "\n";
  if (o.t_max) out << "t_max = " << *o.t_max << "\n";
  if (o.window) out << "window = " << *o.window << "\n";
  return out.str();
}

}  // namespace coreideal
