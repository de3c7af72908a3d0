#include "bupoly/divisor.hpp"

#include <algorithm>

namespace bupoly {

std::string_view to_string(SigmaKind kind) {
  switch (kind) {
    case SigmaKind::AllDivisors:
      return "all";
    case SigmaKind::Unitary:
      return "unitary";
    case SigmaKind::BiUnitary:
      return "biunitary";
  }
  return "?";
}

Poly gcd_unitary(const Factorization& s, const Factorization& t) {
  Poly out = Poly::One();
  for (const auto& f : s.factors()) {
    if (t.exponent_of(f.base) == f.exponent) out = out * pow(f.base, f.exponent);
  }
  return out;
}

Poly gcd_unitary(const Poly& s, const Poly& t) {
  if (s.is_zero() || t.is_zero()) throw std::domain_error("unitary gcd of the zero polynomial");
  return gcd_unitary(factorize(s), factorize(t));
}

Poly geometric_sum(const Poly& t, unsigned n) {
  if (t.is_zero()) return Poly::One();
  if (t.is_one()) return n % 2 == 0 ? Poly::One() : Poly::Zero();
  return exact_div(pow(t, n + 1) + Poly::One(), t + Poly::One());
}

Poly sigma_prime_power(SigmaKind kind, const Poly& t, unsigned e) {
  if (e == 0) return Poly::One();
  switch (kind) {
    case SigmaKind::AllDivisors:
      return geometric_sum(t, e);
    case SigmaKind::Unitary:
      return pow(t, e) + Poly::One();
    case SigmaKind::BiUnitary:
      if (e % 2 == 1) return geometric_sum(t, e);
      {
        const unsigned n = e / 2;
        return (t + Poly::One()) * geometric_sum(t, n) * geometric_sum(t, n - 1);
      }
  }
  throw std::logic_error("unknown sigma kind");
}

Poly sigma_of_kind(SigmaKind kind, const Factorization& f) {
  Poly out = Poly::One();
  for (const auto& factor : f.factors()) out = out * sigma_prime_power(kind, factor.base, factor.exponent);
  return out;
}

Poly sigma_of_kind(SigmaKind kind, const Poly& s) {
  if (s.is_zero()) throw std::domain_error("divisor sum of the zero polynomial");
  return sigma_of_kind(kind, factorize(s));
}

Poly sigma(const Poly& s) { return sigma_of_kind(SigmaKind::AllDivisors, s); }
Poly sigma(const Factorization& f) { return sigma_of_kind(SigmaKind::AllDivisors, f); }
Poly sigma_unitary(const Poly& s) { return sigma_of_kind(SigmaKind::Unitary, s); }
Poly sigma_unitary(const Factorization& f) { return sigma_of_kind(SigmaKind::Unitary, f); }
Poly sigma_biunitary(const Poly& s) { return sigma_of_kind(SigmaKind::BiUnitary, s); }
Poly sigma_biunitary(const Factorization& f) { return sigma_of_kind(SigmaKind::BiUnitary, f); }

std::vector<Poly> biunitary_divisors(const Poly& s) {
  if (s.is_zero()) throw std::domain_error("divisors of the zero polynomial");
  if (s.deg() > kOracleDegreeCap) {
    throw CapExceeded("oracle degree " + std::to_string(s.deg()) + " exceeds cap " +
                      std::to_string(kOracleDegreeCap));
  }
  const Factorization f = factorize(s);
  const auto factors = f.factors();
  std::vector<unsigned> tuple(factors.size(), 0);
  std::vector<Poly> out;
  while (true) {
    Poly d = Poly::One();
    for (std::size_t i = 0; i < factors.size(); ++i) d = d * pow(factors[i].base, tuple[i]);
    const Poly cofactor = exact_div(s, d);
    if (gcd_unitary(d, cofactor).is_one()) out.push_back(d);
    // Odometer step over 0..exponent for each base.
    std::size_t i = 0;
    while (i < factors.size() && tuple[i] == factors[i].exponent) tuple[i++] = 0;
    if (i == factors.size()) break;
    ++tuple[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poly sigma_biunitary_oracle(const Poly& s) {
  Poly sum;
  for (const auto& d : biunitary_divisors(s)) sum += d;
  return sum;
}

}  // namespace bupoly
