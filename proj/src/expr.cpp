#include "bupoly/expr.hpp"

#include <cctype>
#include <limits>

#include "bupoly/perfect.hpp"

namespace bupoly {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Poly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  Poly expr() {
    Poly sum = product();
    while (consume('+')) sum += product();
    return sum;
  }

  Poly product() {
    Poly prod = power();
    while (consume('*')) prod = prod * power();
    return prod;
  }

  Poly power() {
    Poly base = atom();
    if (consume('^')) {
      skip_space();
      const std::size_t e = uint();
      return pow(base, e);
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (at_end()) fail("expected a term");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return Poly::X();
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (c == '0' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == 'x' || text_[pos_ + 1] == 'X')) {
      const std::size_t start = pos_;
      pos_ += 2;
      while (!at_end() && std::isxdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start + 2) fail("expected hex digits");
      return from_hex(text_.substr(start, pos_ - start));
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("only the constants 0 and 1 exist");
      }
      return c == '1' ? Poly::One() : Poly::Zero();
    }
    if (c == 'M' || c == 'C') {
      const std::size_t start = pos_;
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      if (auto p = constants().lookup(name)) return *p;
      pos_ = start;
      fail("unknown name '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::size_t uint() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an exponent");
    std::size_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > kMaxDegree) fail("exponent too large");
      ++pos_;
    }
    return v;
  }

  bool consume(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_ + 1); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_base(const Poly& base, bool use_names) {
  if (use_names) {
    if (auto name = constants().name_of(base)) return *name;
  }
  if (base == Poly::X()) return "x";
  return "(" + to_symbolic(base) + ")";
}

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string format_factorization(const Factorization& f, bool use_names) {
  if (f.empty()) return "1";
  std::string out;
  for (const auto& factor : f.factors()) {
    if (!out.empty()) out += '*';
    out += format_base(factor.base, use_names);
    if (factor.exponent != 1) out += "^" + std::to_string(factor.exponent);
  }
  return out;
}

}  // namespace bupoly
