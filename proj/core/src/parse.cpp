#include "nilzeta/parse.hpp"

#include <cctype>
#include <string>

namespace nilzeta {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FactoredRationalFunction rational() {
    expect('(');
    LaurentPolynomial num = polynomial();
    expect(')');
    FactoredRationalFunction::Denominator den;
    if (accept('/')) {
      expect('(');
      do {
        expect('(');
        expect('1');
        expect('-');
        Monomial m = monomial();
        expect(')');
        int k = 1;
        if (accept('^')) k = integer_exponent();
        if (k <= 0) fail("factor multiplicity must be positive");
        den[m] += k;
      } while (accept('*'));
      expect(')');
    }
    finish();
    return FactoredRationalFunction(std::move(num), den);
  }

  LaurentPolynomial polynomial() {
    LaurentPolynomial out;
    bool negative = accept('-');
    do {
      auto [m, c] = term();
      out.add_term(m, negative ? mpz_class(-c) : c);
      skip_ws();
      if (at_end() || peek() == ')') break;
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
    } while (true);
    return out;
  }

  void finish() {
    skip_ws();
    if (!at_end()) fail("trailing input");
  }

 private:
  std::pair<Monomial, mpz_class> term() {
    skip_ws();
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class c(digits());
      if (accept('*')) return {monomial(), c};
      return {Monomial(), c};
    }
    return {monomial(), mpz_class(1)};
  }

  Monomial monomial() {
    Monomial out;
    do {
      skip_ws();
      std::string name;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) name += text_[pos_++];
      auto v = Variable::parse(name);
      if (!v) fail("unknown variable '" + name + "'");
      int e = 1;
      if (accept('^')) e = integer_exponent();
      out *= Monomial(*v, e);
    } while (accept_monomial_star());
    return out;
  }

  // '*' continues a monomial only when a variable follows, not a '(' factor.
  bool accept_monomial_star() {
    skip_ws();
    std::size_t save = pos_;
    if (!accept('*')) return false;
    skip_ws();
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) return true;
    pos_ = save;
    return false;
  }

  int integer_exponent() {
    bool negative = accept('-');
    std::string d = digits();
    int v = std::stoi(d);
    return negative ? -v : v;
  }

  std::string digits() {
    skip_ws();
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text) {
  Parser parser(text);
  LaurentPolynomial out = parser.polynomial();
  parser.finish();
  return out;
}

FactoredRationalFunction parse_rational(std::string_view text) { return Parser(text).rational(); }

}  // namespace nilzeta
