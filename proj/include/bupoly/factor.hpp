#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "bupoly/poly.hpp"

namespace bupoly {

struct Factor {
  Poly base;
  unsigned exponent = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A product of irreducible prime powers in canonical order: bases strictly
/// increasing under Poly's ordering (degree, then coefficient bits), every
/// exponent positive. The empty factorization is the constant 1.
class Factorization {
 public:
  Factorization() = default;
  /// Merges repeated bases and sorts. Bases are trusted to be irreducible;
  /// zero exponents are dropped.
  explicit Factorization(std::vector<Factor> factors);
  Factorization(std::initializer_list<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  /// Number of distinct irreducible factors.
  std::size_t omega() const { return factors_.size(); }
  /// Exponent of base, zero if absent.
  unsigned exponent_of(const Poly& base) const;

  Poly expand() const;
  std::size_t degree() const;

  /// Product of two factorizations (exponents of shared bases add).
  friend Factorization operator*(const Factorization& a, const Factorization& b);
  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  void canonicalize();
  std::vector<Factor> factors_;
};

/// Rabin's test: x^(2^d) = x mod p and gcd(x^(2^(d/l)) - x, p) = 1 for every
/// prime l dividing d = deg p. Constants (and zero) are not irreducible.
bool is_irreducible(const Poly& p);

/// Default seed of the splitting generator used by factorize().
inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'f2f2'2024ULL;

/// Complete factorization into irreducibles via squarefree decomposition,
/// distinct-degree factorization and trace-map equal-degree splitting. The
/// result is canonical whatever the seed. Zero input throws
/// std::domain_error.
Factorization factorize(const Poly& p, std::uint64_t seed = kDefaultFactorSeed);

/// Largest degree irreducibles_of_degree() accepts.
inline constexpr unsigned kIrreducibleDegreeCap = 16;

/// All irreducible polynomials of exactly degree n, ascending. Results are
/// built once per degree and cached; concurrent callers are safe. n == 0
/// throws std::invalid_argument, n > kIrreducibleDegreeCap CapExceeded.
const std::vector<Poly>& irreducibles_of_degree(unsigned n);

}  // namespace bupoly
