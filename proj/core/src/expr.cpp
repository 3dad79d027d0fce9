#include "mfl/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "mfl/errors.hpp"

namespace mfl::expr {

namespace {

using Fn = std::function<double(double)>;

struct Parser {
  const std::string& src;
  std::size_t pos = 0;
  std::string variable;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::config_invalid,
                "expression '" + src + "' at position " +
                    std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  bool consume(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Fn parse_expr() {
    Fn left = parse_term();
    for (;;) {
      if (consume('+')) {
        Fn right = parse_term();
        left = [l = std::move(left), r = std::move(right)](double x) {
          return l(x) + r(x);
        };
      } else if (consume('-')) {
        Fn right = parse_term();
        left = [l = std::move(left), r = std::move(right)](double x) {
          return l(x) - r(x);
        };
      } else {
        return left;
      }
    }
  }

  Fn parse_term() {
    Fn left = parse_unary();
    for (;;) {
      if (consume('*')) {
        Fn right = parse_unary();
        left = [l = std::move(left), r = std::move(right)](double x) {
          return l(x) * r(x);
        };
      } else if (consume('/')) {
        Fn right = parse_unary();
        left = [l = std::move(left), r = std::move(right)](double x) {
          return l(x) / r(x);
        };
      } else {
        return left;
      }
    }
  }

  Fn parse_unary() {
    if (consume('-')) {
      Fn inner = parse_unary();
      return [f = std::move(inner)](double x) { return -f(x); };
    }
    return parse_primary();
  }

  Fn parse_primary() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of input");
    const char c = src[pos];
    if (c == '(') {
      ++pos;
      Fn inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return parse_identifier();
    fail("unexpected character");
  }

  Fn parse_number() {
    const char* begin = src.c_str() + pos;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) fail("bad numeric literal");
    pos += static_cast<std::size_t>(end - begin);
    return [value](double) { return value; };
  }

  Fn parse_identifier() {
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) ||
            src[pos] == '_'))
      ++pos;
    const std::string name = src.substr(start, pos - start);
    skip_ws();
    const bool call = pos < src.size() && src[pos] == '(';
    if (call) {
      ++pos;
      Fn a = parse_expr();
      if (name == "sqrt" || name == "sin" || name == "abs") {
        if (!consume(')')) fail("expected ')' after " + name);
        if (name == "sqrt")
          return [f = std::move(a)](double x) { return std::sqrt(f(x)); };
        if (name == "sin")
          return [f = std::move(a)](double x) { return std::sin(f(x)); };
        return [f = std::move(a)](double x) { return std::abs(f(x)); };
      }
      if (name == "min" || name == "max") {
        if (!consume(',')) fail("expected ',' in " + name);
        Fn b = parse_expr();
        if (!consume(')')) fail("expected ')' after " + name);
        if (name == "min")
          return [fa = std::move(a), fb = std::move(b)](double x) {
            return std::min(fa(x), fb(x));
          };
        return [fa = std::move(a), fb = std::move(b)](double x) {
          return std::max(fa(x), fb(x));
        };
      }
      fail("unknown function '" + name + "'");
    }
    // Plain identifier: the (single) variable.
    if (variable.empty()) variable = name;
    if (name != variable)
      fail("second variable '" + name + "' (only '" + variable +
           "' is allowed)");
    return [](double x) { return x; };
  }
};

} // namespace

Expression parse_expression(const std::string& source) {
  Parser parser{source, 0, {}};
  Expression out;
  out.fn = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != source.size()) parser.fail("trailing input");
  out.variable = parser.variable;
  out.source = source;
  return out;
}

} // namespace mfl::expr
