#pragma once

#include <array>
#include <optional>
#include <string>

#include "bupoly/divisor.hpp"
#include "bupoly/factor.hpp"
#include "bupoly/poly.hpp"

namespace bupoly {

/// Exponents (a, b) of a Mersenne polynomial 1 + x^a (x+1)^b.
struct MersenneShape {
  unsigned a = 0;
  unsigned b = 0;
  friend bool operator==(const MersenneShape&, const MersenneShape&) = default;
};

/// (a, b) when p + 1 = x^a (x+1)^b with a, b >= 1 and gcd(a, b) = 1.
/// Irreducibility is not required. Zero input throws std::domain_error.
std::optional<MersenneShape> is_mersenne(const Poly& p);

/// Number of distinct irreducible factors. Zero input throws.
std::size_t omega(const Poly& s);

/// sigma_kind(s) == s. Zero input throws.
bool is_perfect(const Poly& s, SigmaKind kind);
bool is_perfect(const Factorization& s, SigmaKind kind);

/// Membership in {2, 4} together with {2^n - 1 : n >= 1}.
bool es_contains(unsigned n);

/// The named Mersenne irreducibles M1..M5 and the bi-unitary perfect
/// polynomials C1..C15. Everything is assembled from the defining products;
/// index i holds M_{i+1} / C_{i+1}.
struct ConstantsTable {
  std::array<Poly, 5> M;
  std::array<Factorization, 15> C_factored;
  std::array<Poly, 15> C;

  bool es_contains(unsigned n) const { return bupoly::es_contains(n); }
  /// "M1".."M5" or "C1".."C15" if p is one of the table entries.
  std::optional<std::string> name_of(const Poly& p) const;
  /// Resolves "M1".."M5" and "C1".."C15".
  std::optional<Poly> lookup(std::string_view name) const;
};

const ConstantsTable& constants();

}  // namespace bupoly
