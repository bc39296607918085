#include "expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "slowspin/core.hpp"
#include "slowspin/errors.hpp"

namespace slowspin::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  double parse() {
    const double v = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot evaluate '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double sum() {
    double v = product();
    for (;;) {
      if (accept('+')) {
        v += product();
      } else if (accept('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  double product() {
    double v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  double power() {
    const double base = atom();
    if (accept('^')) return std::pow(base, unary());
    return base;
  }

  double atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (accept('(')) {
      const double v = sum();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return named();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  double number() {
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("bad number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }

  double named() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "pi") return kPi;
    if (!accept('(')) fail("unknown name '" + name + "'");
    const double arg = sum();
    if (!accept(')')) fail("missing ')'");
    if (name == "sqrt") return std::sqrt(arg);
    if (name == "sin") return std::sin(arg);
    if (name == "cos") return std::cos(arg);
    if (name == "exp") return std::exp(arg);
    if (name == "log") return std::log(arg);
    fail("unknown function '" + name + "'");
  }
};

}  // namespace

double eval_expression(std::string_view text) {
  const double v = Parser(text).parse();
  if (!std::isfinite(v)) throw InvalidArgument("'" + std::string(text) + "' is not finite");
  return v;
}

}  // namespace slowspin::cli
