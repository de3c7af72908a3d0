#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bupoly {

/// Largest degree any polynomial may reach. Operations that would exceed it
/// throw CapExceeded instead of allocating.
inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

/// Raised when a configured size cap (degree, oracle size, enumeration
/// degree) would be exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Degree of a polynomial. The zero polynomial has degree "minus infinity",
/// which compares below every finite degree and has no integer value.
class Degree {
 public:
  static constexpr Degree NegInfinity() { return Degree(); }
  static constexpr Degree Finite(std::size_t d) { return Degree(d); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_neg_infinity() const { return !finite_; }

  /// Throws std::domain_error on the zero-polynomial sentinel.
  std::size_t value() const {
    if (!finite_) throw std::domain_error("degree of the zero polynomial has no value");
    return value_;
  }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Degree() = default;
  constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}
  bool finite_ = false;
  std::size_t value_ = 0;
};

/// Polynomial over F2, stored as a dense bit vector in 64-bit words with bit
/// i holding the coefficient of x^i. The top word is always nonzero; the
/// zero polynomial has no words.
///
/// Ordering is by degree, then by the coefficient vector read as an
/// unsigned integer. This is the canonical order used for factorizations.
class Poly {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Poly() = default;

  static Poly Zero() { return Poly(); }
  static Poly One() { return FromWord(1); }
  static Poly X() { return FromWord(2); }
  /// x + 1
  static Poly XPlusOne() { return FromWord(3); }
  static Poly Monomial(std::size_t exponent);
  static Poly FromWord(Word w);
  static Poly FromWords(std::vector<Word> words);
  /// Sum of x^e over the given exponents; repeated exponents cancel.
  static Poly FromExponents(std::initializer_list<std::size_t> exponents);
  static Poly FromExponents(std::span<const std::size_t> exponents);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  Degree degree() const;
  /// Degree of a polynomial known to be nonzero; throws on zero.
  std::size_t deg() const { return degree().value(); }
  bool coeff(std::size_t i) const;
  std::size_t weight() const;
  std::span<const Word> words() const { return words_; }

  /// Value at 0 (constant term) and at 1 (parity of the weight).
  bool eval0() const { return coeff(0); }
  bool eval1() const { return weight() % 2 == 1; }

  /// Largest k with x^k dividing this polynomial. Zero input throws.
  std::size_t x_valuation() const;

  Poly& operator+=(const Poly& q);
  Poly& operator*=(const Poly& q);
  /// Multiplication by x^k.
  Poly shifted(std::size_t k) const;

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend bool operator==(const Poly&, const Poly&) = default;
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  explicit Poly(std::vector<Word> words) : words_(std::move(words)) { trim(); }
  void trim();
  std::vector<Word> words_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
/// Throws std::domain_error when d is zero.
DivRem div_rem(const Poly& p, const Poly& d);
Poly operator%(const Poly& p, const Poly& d);
/// Exact quotient; throws std::domain_error if d does not divide p.
Poly exact_div(const Poly& p, const Poly& d);
bool divides(const Poly& d, const Poly& p);
/// Monic gcd. gcd(0, 0) throws std::domain_error.
Poly gcd(const Poly& p, const Poly& q);
/// p^e by square-and-multiply. 0^0 is taken to be 1.
Poly pow(const Poly& p, std::size_t e);
Poly square(const Poly& p);
/// Inverse of squaring: throws std::domain_error if p is not a square.
Poly square_root(const Poly& p);
Poly derivative(const Poly& p);
/// p(x + 1).
Poly conjugate(const Poly& p);
/// x^deg(p) * p(1/x). Zero input throws std::domain_error.
Poly reciprocal(const Poly& p);
/// Coprime to x(x+1). Zero input throws std::domain_error.
bool is_odd(const Poly& p);
/// gcd(p, p') == 1, so a nonconstant square reports false. Zero throws.
bool is_squarefree(const Poly& p);
/// (base^e) mod modulus, with base reduced first.
Poly pow_mod(const Poly& base, std::size_t e, const Poly& modulus);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus);
Poly square_mod(const Poly& a, const Poly& modulus);

/// Multiplication kernels. Both are exact and must agree bit for bit;
/// operator* picks one by operand shape.
namespace kernels {
Poly mul_shift_xor(const Poly& p, const Poly& q);
Poly mul_clmul(const Poly& p, const Poly& q);
/// Word-level product without the hardware instruction.
Poly mul_clmul_portable(const Poly& p, const Poly& q);
/// True when the hardware carry-less multiply instruction is in use.
bool hardware_clmul_available();
}  // namespace kernels

/// "0x" followed by the coefficient vector as a hexadecimal integer, bit i
/// being the coefficient of x^i (so 0x17 is 1+x+x^2+x^4). Zero prints as 0x0.
std::string to_hex(const Poly& p);
/// Inverse of to_hex. Throws std::invalid_argument on malformed input.
Poly from_hex(std::string_view text);
/// Expanded form in ascending powers: "1+x+x^2", "0" for zero.
std::string to_symbolic(const Poly& p);

}  // namespace bupoly

template <>
struct std::hash<bupoly::Poly> {
  std::size_t operator()(const bupoly::Poly& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : p.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
