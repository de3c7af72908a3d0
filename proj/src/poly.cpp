#include "bupoly/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define BUPOLY_X86 1
#endif

namespace bupoly {

namespace {

using Word = Poly::Word;
constexpr std::size_t kBits = Poly::kWordBits;

std::size_t words_for_degree(std::size_t d) { return d / kBits + 1; }

void check_degree(std::size_t d, const char* what) {
  if (d > kMaxDegree) {
    throw CapExceeded(std::string(what) + ": degree " + std::to_string(d) +
                      " exceeds cap " + std::to_string(kMaxDegree));
  }
}

// dst ^= src * x^shift, dst already large enough.
void xor_shifted(std::vector<Word>& dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t word_shift = shift / kBits;
  const unsigned bit_shift = shift % kBits;
  if (bit_shift == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + word_shift] ^= src[i];
    return;
  }
  Word carry = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + word_shift] ^= (src[i] << bit_shift) | carry;
    carry = src[i] >> (kBits - bit_shift);
  }
  if (carry != 0) dst[src.size() + word_shift] ^= carry;
}

std::size_t top_bit(std::span<const Word> w) {
  return (w.size() - 1) * kBits + (kBits - 1 - std::countl_zero(w.back()));
}

}  // namespace

// ---------------------------------------------------------------------------

Poly Poly::Monomial(std::size_t exponent) {
  check_degree(exponent, "monomial");
  std::vector<Word> w(words_for_degree(exponent), 0);
  w[exponent / kBits] = Word{1} << (exponent % kBits);
  return Poly(std::move(w));
}

Poly Poly::FromWord(Word w) { return Poly(std::vector<Word>{w}); }

Poly Poly::FromWords(std::vector<Word> words) {
  Poly p(std::move(words));
  if (!p.is_zero()) check_degree(p.deg(), "from_words");
  return p;
}

Poly Poly::FromExponents(std::initializer_list<std::size_t> exponents) {
  return FromExponents(std::span<const std::size_t>(exponents.begin(), exponents.size()));
}

Poly Poly::FromExponents(std::span<const std::size_t> exponents) {
  std::size_t top = 0;
  for (auto e : exponents) top = std::max(top, e);
  check_degree(top, "from_exponents");
  std::vector<Word> w(words_for_degree(top), 0);
  for (auto e : exponents) w[e / kBits] ^= Word{1} << (e % kBits);
  return Poly(std::move(w));
}

void Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Degree Poly::degree() const {
  if (words_.empty()) return Degree::NegInfinity();
  return Degree::Finite(top_bit(words_));
}

bool Poly::coeff(std::size_t i) const {
  const std::size_t w = i / kBits;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % kBits)) & 1;
}

std::size_t Poly::weight() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t Poly::x_valuation() const {
  if (is_zero()) throw std::domain_error("x-adic valuation of zero");
  std::size_t i = 0;
  while (words_[i] == 0) ++i;
  return i * kBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
}

Poly& Poly::operator+=(const Poly& q) {
  if (q.words_.size() > words_.size()) words_.resize(q.words_.size(), 0);
  for (std::size_t i = 0; i < q.words_.size(); ++i) words_[i] ^= q.words_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& q) {
  *this = *this * q;
  return *this;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  check_degree(deg() + k, "shift");
  std::vector<Word> w(words_for_degree(deg() + k), 0);
  xor_shifted(w, words_, k);
  return Poly(std::move(w));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Multiplication

namespace kernels {

Poly mul_shift_xor(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const std::size_t d = p.deg() + q.deg();
  check_degree(d, "multiply");
  std::vector<Word> out(words_for_degree(d) + 1, 0);
  const auto pw = p.words();
  for (std::size_t wi = 0; wi < pw.size(); ++wi) {
    Word bits = pw[wi];
    while (bits != 0) {
      const auto b = static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      xor_shifted(out, q.words(), wi * kBits + b);
    }
  }
  return Poly::FromWords(std::move(out));
}

namespace {

#ifdef BUPOLY_X86
__attribute__((target("pclmul,sse2"))) void clmul_words_hw(std::span<const Word> a,
                                                           std::span<const Word> b,
                                                           std::vector<Word>& out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a[i]));
    for (std::size_t j = 0; j < b.size(); ++j) {
      const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b[j]));
      const __m128i r = _mm_clmulepi64_si128(va, vb, 0x00);
      out[i + j] ^= static_cast<Word>(_mm_cvtsi128_si64(r));
      out[i + j + 1] ^= static_cast<Word>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)));
    }
  }
}

bool detect_clmul() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("pclmul");
}
#endif

// 64x64 -> 128 carry-less product, 4-bit windowed. The window table keeps
// the full 67-bit shifted multiplicand split over two words.
void clmul64(Word a, Word b, Word& lo, Word& hi) {
  Word tlo[16];
  Word thi[16];
  tlo[0] = thi[0] = 0;
  for (unsigned i = 1; i < 16; ++i) {
    tlo[i] = 0;
    thi[i] = 0;
    for (unsigned j = 0; j < 4; ++j) {
      if ((i >> j) & 1) {
        tlo[i] ^= a << j;
        thi[i] ^= j == 0 ? 0 : a >> (kBits - j);
      }
    }
  }
  lo = 0;
  hi = 0;
  for (int shift = 60; shift >= 0; shift -= 4) {
    hi = (hi << 4) | (lo >> 60);
    lo <<= 4;
    const unsigned nib = (b >> shift) & 0xF;
    lo ^= tlo[nib];
    hi ^= thi[nib];
  }
}

void clmul_words_portable(std::span<const Word> a, std::span<const Word> b, std::vector<Word>& out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Word lo;
      Word hi;
      clmul64(a[i], b[j], lo, hi);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
}

}  // namespace

bool hardware_clmul_available() {
#ifdef BUPOLY_X86
  static const bool available = detect_clmul();
  return available;
#else
  return false;
#endif
}

Poly mul_clmul(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  check_degree(p.deg() + q.deg(), "multiply");
  std::vector<Word> out(p.words().size() + q.words().size(), 0);
#ifdef BUPOLY_X86
  if (hardware_clmul_available()) {
    clmul_words_hw(p.words(), q.words(), out);
    return Poly::FromWords(std::move(out));
  }
#endif
  clmul_words_portable(p.words(), q.words(), out);
  return Poly::FromWords(std::move(out));
}

Poly mul_clmul_portable(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  check_degree(p.deg() + q.deg(), "multiply");
  std::vector<Word> out(p.words().size() + q.words().size(), 0);
  clmul_words_portable(p.words(), q.words(), out);
  return Poly::FromWords(std::move(out));
}

}  // namespace kernels

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  // Sparse operands (Mersenne-like, monomials) are cheaper as shifted XORs.
  const Poly& sparse = p.weight() <= q.weight() ? p : q;
  const Poly& dense = &sparse == &p ? q : p;
  if (sparse.weight() <= 4) return kernels::mul_shift_xor(sparse, dense);
  return kernels::mul_clmul(p, q);
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

// ---------------------------------------------------------------------------
// Division and friends

DivRem div_rem(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < d.degree()) return {Poly::Zero(), p};
  const std::size_t dd = d.deg();
  const std::size_t dp = p.deg();
  std::vector<Word> rem(p.words().begin(), p.words().end());
  std::vector<Word> quo(words_for_degree(dp - dd), 0);
  const auto dw = d.words();
  for (std::size_t i = dp + 1; i-- > dd;) {
    if ((rem[i / kBits] >> (i % kBits)) & 1) {
      const std::size_t s = i - dd;
      quo[s / kBits] |= Word{1} << (s % kBits);
      // rem has room: the shifted divisor tops out at bit i <= dp.
      const std::size_t word_shift = s / kBits;
      const unsigned bit_shift = s % kBits;
      if (bit_shift == 0) {
        for (std::size_t k = 0; k < dw.size(); ++k) rem[k + word_shift] ^= dw[k];
      } else {
        Word carry = 0;
        for (std::size_t k = 0; k < dw.size(); ++k) {
          rem[k + word_shift] ^= (dw[k] << bit_shift) | carry;
          carry = dw[k] >> (kBits - bit_shift);
        }
        if (carry != 0) rem[dw.size() + word_shift] ^= carry;
      }
    }
  }
  return {Poly::FromWords(std::move(quo)), Poly::FromWords(std::move(rem))};
}

Poly operator%(const Poly& p, const Poly& d) { return div_rem(p, d).remainder; }

Poly exact_div(const Poly& p, const Poly& d) {
  auto [q, r] = div_rem(p, d);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& p) { return (p % d).is_zero(); }

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

namespace {

// Spreads the 32 bits of v into the even bit positions of a 64-bit word.
Word spread32(Word v) {
  v &= 0xFFFFFFFFULL;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

// Inverse of spread32 on the even bits.
Word compress32(Word v) {
  v &= 0x5555555555555555ULL;
  v = (v | (v >> 1)) & 0x3333333333333333ULL;
  v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v >> 4)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v >> 8)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v >> 16)) & 0x00000000FFFFFFFFULL;
  return v;
}

}  // namespace

Poly square(const Poly& p) {
  if (p.is_zero()) return {};
  check_degree(2 * p.deg(), "square");
  const auto w = p.words();
  std::vector<Word> out(2 * w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[2 * i] = spread32(w[i]);
    out[2 * i + 1] = spread32(w[i] >> 32);
  }
  return Poly::FromWords(std::move(out));
}

Poly square_root(const Poly& p) {
  const auto w = p.words();
  std::vector<Word> out((w.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] & 0xAAAAAAAAAAAAAAAAULL) throw std::domain_error("polynomial is not a square");
    const Word half = compress32(w[i]);
    out[i / 2] |= (i % 2 == 0) ? half : half << 32;
  }
  return Poly::FromWords(std::move(out));
}

Poly pow(const Poly& p, std::size_t e) {
  if (e == 0) return Poly::One();
  if (p.is_zero()) return {};
  if (p.deg() > 0 && e > kMaxDegree / p.deg()) {
    throw CapExceeded("power: degree exceeds cap " + std::to_string(kMaxDegree));
  }
  Poly result = Poly::One();
  Poly base = p;
  while (true) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e == 0) break;
    base = square(base);
  }
  return result;
}

Poly derivative(const Poly& p) {
  // Odd-index coefficients move down one place; even ones vanish.
  const auto w = p.words();
  std::vector<Word> out(w.begin(), w.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Word odd = out[i] & 0xAAAAAAAAAAAAAAAAULL;
    out[i] = odd >> 1;
  }
  return Poly::FromWords(std::move(out));
}

Poly conjugate(const Poly& p) {
  // (x+1)^i = sum over k whose bits are a subset of i's bits of x^k, so the
  // new coefficient at k is the XOR of old coefficients at supersets of k.
  std::vector<Word> w(p.words().begin(), p.words().end());
  static constexpr Word kLowMasks[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
  };
  for (unsigned level = 0; level < 6; ++level) {
    const unsigned s = 1u << level;
    for (auto& word : w) word ^= (word >> s) & kLowMasks[level];
  }
  for (std::size_t stride = 1; stride < w.size(); stride <<= 1) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if ((i & stride) == 0 && i + stride < w.size()) w[i] ^= w[i + stride];
    }
  }
  return Poly::FromWords(std::move(w));
}

Poly reciprocal(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
  const std::size_t d = p.deg();
  std::vector<Word> out(words_for_degree(d), 0);
  for (std::size_t i = 0; i <= d; ++i) {
    if (p.coeff(i)) {
      const std::size_t j = d - i;
      out[j / kBits] |= Word{1} << (j % kBits);
    }
  }
  return Poly::FromWords(std::move(out));
}

bool is_odd(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("parity of the zero polynomial");
  return p.eval0() && p.eval1();
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefreeness of the zero polynomial");
  if (p.deg() == 0) return true;
  const Poly dp = derivative(p);
  if (dp.is_zero()) return false;
  return gcd(p, dp).is_one();
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly square_mod(const Poly& a, const Poly& modulus) { return square(a) % modulus; }

Poly pow_mod(const Poly& base, std::size_t e, const Poly& modulus) {
  Poly result = Poly::One() % modulus;
  Poly b = base % modulus;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, b, modulus);
    e >>= 1;
    if (e > 0) b = square_mod(b, modulus);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text forms

std::string to_hex(const Poly& p) {
  if (p.is_zero()) return "0x0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "0x";
  const auto w = p.words();
  bool leading = true;
  for (std::size_t i = w.size(); i-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const unsigned v = (w[i] >> (4 * nib)) & 0xF;
      if (leading && v == 0) continue;
      leading = false;
      out.push_back(kDigits[v]);
    }
  }
  return out;
}

Poly from_hex(std::string_view text) {
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
    throw std::invalid_argument("hex polynomial must start with 0x: '" + std::string(text) + "'");
  }
  const std::string_view digits = text.substr(2);
  std::vector<Word> w((digits.size() + 15) / 16, 0);
  for (std::size_t k = 0; k < digits.size(); ++k) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(digits[digits.size() - 1 - k])));
    Word v;
    if (c >= '0' && c <= '9') {
      v = static_cast<Word>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<Word>(c - 'a' + 10);
    } else {
      throw std::invalid_argument("bad hex digit in '" + std::string(text) + "'");
    }
    w[k / 16] |= v << (4 * (k % 16));
  }
  return Poly::FromWords(std::move(w));
}

std::string to_symbolic(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const std::size_t d = p.deg();
  for (std::size_t i = 0; i <= d; ++i) {
    if (!p.coeff(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace bupoly
