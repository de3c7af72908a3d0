#include <gtest/gtest.h>

#include <random>

#include "bupoly/divisor.hpp"
#include "oracles.hpp"

namespace bupoly {
namespace {

Poly P(std::initializer_list<std::size_t> e) { return Poly::FromExponents(e); }

const Poly x = Poly::X();
const Poly y = Poly::XPlusOne();
const Poly M1 = P({0, 1, 2});
const Poly M2 = P({0, 1, 3});
const Poly M3 = P({0, 2, 3});
const Poly M4 = P({0, 1, 2, 3, 4});
const Poly M5 = P({0, 3, 4});

TEST(UnitaryGcd, Examples) {
  EXPECT_EQ(gcd_unitary(pow(x, 3), pow(x, 3)), pow(x, 3));
  EXPECT_EQ(gcd_unitary(pow(x, 2), pow(x, 4)), Poly::One());
  EXPECT_EQ(gcd_unitary(pow(x, 2) * y, pow(x, 2) * pow(y, 3)), pow(x, 2));
  EXPECT_EQ(gcd_unitary(M1, M2), Poly::One());
  EXPECT_THROW(gcd_unitary(Poly(), x), std::domain_error);
}

TEST(UnitaryGcd, MatchesDefinition) {
  for (unsigned da = 1; da <= 6; ++da) {
    for (const auto& a : oracle::all_of_degree(da)) {
      for (const auto& b : oracle::all_of_degree(7 - da)) {
        ASSERT_EQ(gcd_unitary(a, b).is_one(), oracle::unitary_coprime(a, b)) << to_hex(a) << " " << to_hex(b);
      }
    }
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(pow(x, 4)), M4);
  EXPECT_EQ(sigma(Poly::One()), Poly::One());
  EXPECT_EQ(sigma(pow(x, 3)), P({0, 1, 2, 3}));
  EXPECT_EQ(sigma(pow(x, 3)), pow(y, 3));
  EXPECT_THROW(sigma(Poly()), std::domain_error);
}

TEST(Sigma, UnitaryExamples) {
  EXPECT_EQ(sigma_unitary(pow(x, 3)), P({0, 3}));
  EXPECT_EQ(sigma_unitary(x * y), y * x);
  const Poly sf = x * M1 * M5;
  EXPECT_EQ(sigma_unitary(sf), sigma(sf));
}

TEST(Sigma, BiUnitaryExamples) {
  EXPECT_EQ(sigma_biunitary(pow(M2, 4)), pow(x, 2) * pow(y, 4) * M1 * M5);
  EXPECT_EQ(sigma_biunitary(pow(M3, 4)), pow(x, 4) * pow(y, 2) * M1 * M4);
  for (const Poly& t : {x, y, M1, M4}) {
    EXPECT_EQ(sigma_biunitary(pow(t, 2)), pow(t + Poly::One(), 2));
    EXPECT_EQ(sigma_biunitary(t), t + Poly::One());
  }
  EXPECT_EQ(sigma_biunitary(Poly::One()), Poly::One());
}

TEST(Sigma, OracleExamples) {
  EXPECT_EQ(sigma_biunitary_oracle(pow(M2, 4)), pow(x, 2) * pow(y, 4) * M1 * M5);
  EXPECT_EQ(sigma_biunitary_oracle(pow(x, 2) * pow(y, 2)), pow(x, 2) * pow(y, 2));
  for (unsigned n = 0; n <= 3; ++n) EXPECT_EQ(sigma_biunitary_oracle(pow(x, 2 * n + 1)), sigma(pow(x, 2 * n + 1)));
}

TEST(Sigma, BiUnitaryDivisorLists) {
  EXPECT_EQ(biunitary_divisors(pow(x, 3)), (std::vector<Poly>{Poly::One(), x, pow(x, 2), pow(x, 3)}));
  EXPECT_EQ(biunitary_divisors(pow(x, 2)), (std::vector<Poly>{Poly::One(), pow(x, 2)}));
  EXPECT_EQ(biunitary_divisors(Poly::One()), (std::vector<Poly>{Poly::One()}));
  EXPECT_THROW(biunitary_divisors(Poly::Monomial(kOracleDegreeCap + 1)), CapExceeded);
}

TEST(Sigma, ClosedFormsMatchDefinitionsOnSmallInputs) {
  for (unsigned d = 1; d <= 9; ++d) {
    for (const auto& s : oracle::all_of_degree(d)) {
      ASSERT_EQ(sigma(s), oracle::sigma_definition(s)) << to_hex(s);
      ASSERT_EQ(sigma_unitary(s), oracle::sigma_unitary_definition(s)) << to_hex(s);
      ASSERT_EQ(sigma_biunitary(s), oracle::sigma_biunitary_definition(s)) << to_hex(s);
    }
  }
}

TEST(Sigma, EnumerationOracleMatchesDefinition) {
  for (unsigned d = 1; d <= 9; ++d) {
    for (const auto& s : oracle::all_of_degree(d)) {
      ASSERT_EQ(sigma_biunitary_oracle(s), oracle::sigma_biunitary_definition(s)) << to_hex(s);
    }
  }
}

TEST(Sigma, ClosedFormMatchesOracleOnPrimePowers) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& t : irreducibles_of_degree(n)) {
      for (unsigned e = 0; e <= 10; ++e) {
        const Poly s = pow(t, e);
        ASSERT_EQ(sigma_biunitary(s), sigma_biunitary_oracle(s)) << to_hex(t) << "^" << e;
      }
    }
  }
}

TEST(Sigma, DegreePreserved) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Poly s = oracle::random_poly(rng, 80);
    ASSERT_EQ(sigma_biunitary(s).deg(), s.deg());
    ASSERT_EQ(sigma(s).deg(), s.deg());
    ASSERT_EQ(sigma_unitary(s).deg(), s.deg());
  }
}

TEST(Sigma, SquarefreeInputsAgree) {
  std::mt19937_64 rng(32);
  int checked = 0;
  while (checked < 200) {
    const Poly s = oracle::random_poly(rng, 60);
    if (!is_squarefree(s)) continue;
    ++checked;
    ASSERT_EQ(sigma(s), sigma_unitary(s));
    ASSERT_EQ(sigma(s), sigma_biunitary(s));
  }
}

TEST(Sigma, Multiplicative) {
  std::mt19937_64 rng(33);
  int checked = 0;
  while (checked < 300) {
    const Poly a = oracle::random_poly(rng, 24);
    const Poly b = oracle::random_poly(rng, 24);
    if (!gcd(a, b).is_one()) continue;
    ++checked;
    for (SigmaKind k : kAllSigmaKinds) {
      ASSERT_EQ(sigma_of_kind(k, a * b), sigma_of_kind(k, a) * sigma_of_kind(k, b)) << to_string(k);
    }
  }
}

TEST(Sigma, FactorizationOverloadsAgree) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 200; ++i) {
    const Poly s = oracle::random_poly(rng, 50);
    const Factorization f = factorize(s);
    for (SigmaKind k : kAllSigmaKinds) ASSERT_EQ(sigma_of_kind(k, f), sigma_of_kind(k, s));
  }
}

TEST(Sigma, ConjugationCommutes) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 200; ++i) {
    const Poly s = oracle::random_poly(rng, 50);
    ASSERT_EQ(sigma_biunitary(conjugate(s)), conjugate(sigma_biunitary(s)));
  }
}

TEST(SigmaPrimePower, NonDivisibility) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& t : irreducibles_of_degree(n)) {
      for (unsigned c = 1; c <= 12; ++c) ASSERT_FALSE(divides(t, sigma_biunitary(pow(t, c))));
    }
  }
}

TEST(SigmaPrimePower, GeometricSum) {
  EXPECT_EQ(geometric_sum(x, 0), Poly::One());
  EXPECT_EQ(geometric_sum(x, 4), M4);
  EXPECT_EQ(geometric_sum(M1, 2), Poly::One() + M1 + pow(M1, 2));
}

}  // namespace
}  // namespace bupoly
