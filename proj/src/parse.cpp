#include "mldlab/parse.hpp"
#include "mldlab/error.hpp"

#include <cctype>
#include <string>

namespace mldlab {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  BiPoly parse_all() {
    BiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  std::vector<BiPoly> parse_list() {
    skip_ws();
    bool wrapped = false;
    // A leading '(' wraps the list only if a top-level comma follows or the
    // group closes the input; "(x+y)^2" alone is a single generator.
    if (peek() == '(' && is_list_wrapper()) {
      wrapped = true;
      ++pos_;
    }
    std::vector<BiPoly> gens;
    gens.push_back(expr());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      gens.push_back(expr());
      skip_ws();
    }
    if (wrapped) {
      if (peek() != ')') fail("expected ')' closing the generator list");
      ++pos_;
      skip_ws();
    }
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return gens;
  }

private:
  bool is_list_wrapper() const {
    int depth = 0;
    for (std::size_t k = pos_; k < text_.size(); ++k) {
      char ch = text_[k];
      if (ch == '(') ++depth;
      else if (ch == ')') {
        if (--depth == 0) {
          std::size_t rest = k + 1;
          while (rest < text_.size() && std::isspace(static_cast<unsigned char>(text_[rest]))) ++rest;
          return rest == text_.size();
        }
      }
    }
    return depth > 0; // unclosed: report the missing ')' at the end
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  BiPoly expr() {
    BiPoly acc;
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    BiPoly t = term();
    acc = negate ? -t : t;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      BiPoly next = term();
      if (c == '+') acc += next;
      else acc -= next;
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = power();
    while (peek() == '*') {
      ++pos_;
      acc = acc * power();
    }
    return acc;
  }

  BiPoly power() {
    BiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a nonnegative integer exponent");
      std::string digits = read_digits();
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(std::stoi(digits));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  BiPoly atom() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected an integer denominator");
        std::size_t at = pos_;
        Integer den(read_digits());
        if (den == 0) throw SyntaxError(at, "zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return BiPoly(q);
      }
      return BiPoly(Rational(num));
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "x") return BiPoly::x();
      if (name == "y") return BiPoly::y();
      throw Error(ErrorKind::UnknownVariable,
                  "'" + name + "' at position " + std::to_string(start) + " (only x and y are allowed)");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

BiPoly poly_parse(std::string_view text) { return Parser(text).parse_all(); }

std::vector<BiPoly> parse_generators(std::string_view text) { return Parser(text).parse_list(); }

} // namespace mldlab
