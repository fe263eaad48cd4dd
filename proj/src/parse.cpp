#include "idealcalc/parse.hpp"

#include <cctype>
#include <sstream>

namespace idealcalc {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer at position " + std::to_string(start) + " in '" + s + "'");
    try {
      return std::stoll(s.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      throw ParseError("integer literal too large in '" + s + "'");
    }
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '@'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

}  // namespace

Polynomial parse_polynomial(const Ring& ring, const std::string& text) {
  const Field& F = ring->field();
  Lexer lx{text};
  Polynomial result(ring);
  bool first = true;
  while (!lx.eof()) {
    bool negative = false;
    if (lx.accept('-')) {
      negative = true;
    } else if (lx.accept('+')) {
      // explicit plus
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(lx.pos) + " in '" + text + "'");
    }
    first = false;

    Scalar coeff = negative ? F.neg(F.one()) : F.one();
    Monomial mono;
    bool have_factor = false;
    for (;;) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = F.mul(coeff, F.from_int(lx.integer()));
        have_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = lx.ident();
        int idx = ring->var_index(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "' in '" + text + "'");
        int exp = 1;
        if (lx.accept('^')) exp = static_cast<int>(lx.integer());
        if (exp < 0) throw ParseError("negative exponent in '" + text + "'");
        mono.set(idx, mono.exponent(idx) + exp);
        have_factor = true;
      } else {
        break;
      }
      lx.accept('*');
    }
    if (!have_factor) throw ParseError("empty term at position " + std::to_string(lx.pos) + " in '" + text + "'");
    result = result + Polynomial::monomial(ring, mono, coeff);
  }
  return result;
}

std::string print_polynomial(const Polynomial& f) {
  const Field& F = f.ring()->field();
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string cs = F.to_string(t.coeff);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit_coeff = (cs == "1");
    bool printed = false;
    if (!unit_coeff || t.mono.is_one()) {
      os << cs;
      printed = true;
    }
    for (int i = 0; i < f.ring()->num_vars(); ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (printed) os << "*";
      os << f.ring()->var_name(i);
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

}  // namespace idealcalc
