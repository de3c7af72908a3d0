#pragma once

#include <string_view>
#include <vector>

#include "bupoly/factor.hpp"
#include "bupoly/poly.hpp"

namespace bupoly {

enum class SigmaKind { AllDivisors, Unitary, BiUnitary };

inline constexpr SigmaKind kAllSigmaKinds[] = {SigmaKind::AllDivisors, SigmaKind::Unitary, SigmaKind::BiUnitary};

std::string_view to_string(SigmaKind kind);

/// Greatest common unitary divisor. Per shared irreducible T with T^k || s
/// and T^l || t, contributes T^k when k == l and nothing otherwise.
/// Zero input throws std::domain_error.
Poly gcd_unitary(const Poly& s, const Poly& t);
Poly gcd_unitary(const Factorization& s, const Factorization& t);

/// 1 + T + ... + T^n, evaluated as (T^(n+1) + 1) / (T + 1).
Poly geometric_sum(const Poly& t, unsigned n);

/// The selected divisor sum of T^e for irreducible T:
///   all divisors  1 + T + ... + T^e
///   unitary       1 + T^e
///   bi-unitary    (1+T) sigma(T^n) sigma(T^(n-1)) for e = 2n, sigma(T^e) for odd e
Poly sigma_prime_power(SigmaKind kind, const Poly& t, unsigned e);

// Each sigma is multiplicative over the factorization. The Poly overloads
// factorize first; the Factorization overloads skip that step. Zero input
// throws std::domain_error.
Poly sigma(const Poly& s);
Poly sigma(const Factorization& f);
Poly sigma_unitary(const Poly& s);
Poly sigma_unitary(const Factorization& f);
Poly sigma_biunitary(const Poly& s);
Poly sigma_biunitary(const Factorization& f);
Poly sigma_of_kind(SigmaKind kind, const Poly& s);
Poly sigma_of_kind(SigmaKind kind, const Factorization& f);

/// Largest degree accepted by the naive bi-unitary divisor oracle.
inline constexpr std::size_t kOracleDegreeCap = 64;

/// Every divisor D of s with gcd_unitary(D, s/D) == 1, ascending. Divisors
/// are enumerated from exponent tuples and each is tested directly against
/// the definition. Throws CapExceeded above kOracleDegreeCap.
std::vector<Poly> biunitary_divisors(const Poly& s);

/// XOR-sum of biunitary_divisors(s). Shares no code with the closed forms.
Poly sigma_biunitary_oracle(const Poly& s);

}  // namespace bupoly
