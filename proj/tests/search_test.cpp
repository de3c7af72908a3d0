#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bupoly/perfect.hpp"
#include "bupoly/search.hpp"
#include "oracles.hpp"

namespace bupoly {
namespace {

const Poly x = Poly::X();
const Poly y = Poly::XPlusOne();

std::vector<Poly> polys_of(const std::vector<Finding>& findings) {
  std::vector<Poly> out;
  for (const auto& f : findings) out.push_back(f.poly);
  return out;
}

SearchSpec small_brute(unsigned omega) {
  SearchSpec s = SearchSpec::BruteForceDefaults(omega);
  s.max_xy_exponent = 10;
  s.exponents.cap = 8;
  s.max_irreducible_degree = 4;
  s.max_total_degree = 30;
  return s;
}

void expect_sound(const std::vector<Finding>& findings) {
  for (const auto& f : findings) {
    EXPECT_EQ(f.factors.expand(), f.poly);
    EXPECT_EQ(f.certificate, f.factors) << to_hex(f.poly);
    EXPECT_EQ(sigma_biunitary(f.poly), f.poly) << to_hex(f.poly);
    EXPECT_TRUE(divides(x * y, f.poly)) << to_hex(f.poly);
    EXPECT_EQ(f.tag, classify_finding(f.poly, f.factors));
    if (f.poly.deg() <= kOracleDegreeCap) EXPECT_EQ(sigma_biunitary_oracle(f.poly), f.poly) << to_hex(f.poly);
  }
}

void expect_conjugation_closed(const std::vector<Finding>& findings) {
  const auto polys = polys_of(findings);
  const std::set<Poly> set(polys.begin(), polys.end());
  for (const auto& p : polys) EXPECT_TRUE(set.count(conjugate(p))) << to_hex(p);
}

TEST(SearchSpec, Defaults) {
  const auto m = SearchSpec::MersenneDefaults();
  EXPECT_EQ(m.max_xy_exponent, 60u);
  EXPECT_EQ(m.exponents.values(), (std::vector<unsigned>{1, 2, 3, 4, 7}));
  const auto b = SearchSpec::BruteForceDefaults(3);
  EXPECT_EQ(b.max_xy_exponent, 16u);
  EXPECT_EQ(b.exponents.values().size(), 16u);
  EXPECT_EQ(b.max_irreducible_degree, 6u);
  EXPECT_EQ(b.max_total_degree, 40u);
  EXPECT_EQ(b.omega_max, 3u);
}

TEST(SearchSpec, ValidationRejectsBadBoxes) {
  auto s = SearchSpec::BruteForceDefaults(3);
  s.omega_max = 1;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = SearchSpec::BruteForceDefaults(3);
  s.exponents.cap = 0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = SearchSpec::BruteForceDefaults(3);
  s.max_irreducible_degree = kIrreducibleDegreeCap + 1;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  EXPECT_THROW(search_mersenne_special(SearchSpec::BruteForceDefaults(3)), std::invalid_argument);
  EXPECT_THROW(search_omega(SearchSpec::MersenneDefaults()), std::invalid_argument);
}

TEST(Classify, Tags) {
  const auto& t = constants();
  EXPECT_EQ(classify_finding(t.C[2], t.C_factored[2]), "C3");
  const Poly c6bar = conjugate(t.C[5]);
  EXPECT_EQ(classify_finding(c6bar, factorize(c6bar)), "conj(C6)");
  const Poly fam = pow(x, 7) * pow(y, 7);
  EXPECT_EQ(classify_finding(fam, factorize(fam)), "omega2 a=7");
  const Poly sq = pow(x, 2) * pow(y, 2);
  EXPECT_EQ(classify_finding(sq, factorize(sq)), "omega2 a=2");
  const Poly other = x * y * t.M[0];
  EXPECT_EQ(classify_finding(other, factorize(other)), "unlisted");
}

TEST(MersenneSearch, MatchesReferenceOnReducedBox) {
  SearchSpec s = SearchSpec::MersenneDefaults();
  s.max_xy_exponent = 14;
  s.exponents.cap = 4;
  const auto fast = search_mersenne_special(s);
  const auto slow = reference::search_mersenne_special(s);
  EXPECT_EQ(fast, slow);
  EXPECT_FALSE(fast.empty());
  expect_sound(fast);
}

TEST(MersenneSearch, DefaultsContainEveryTableEntry) {
  const auto findings = search_mersenne_special(SearchSpec::MersenneDefaults());
  expect_sound(findings);
  expect_conjugation_closed(findings);
  const auto polys = polys_of(findings);
  for (const auto& c : constants().C) {
    EXPECT_TRUE(std::binary_search(polys.begin(), polys.end(), c)) << to_hex(c);
    EXPECT_TRUE(std::count(polys.begin(), polys.end(), conjugate(c))) << to_hex(c);
  }
  for (unsigned a : {1u, 2u, 3u, 7u, 15u, 31u}) {
    EXPECT_TRUE(std::count(polys.begin(), polys.end(), pow(x, a) * pow(y, a))) << a;
  }
  EXPECT_FALSE(std::count(polys.begin(), polys.end(), Poly::One()));
}

TEST(MersenneSearch, UnlistedFindingsAreGenuine) {
  // Every finding outside the table is checked again from the definition of
  // sigma** on its factorization and against the divisor enumeration.
  for (const auto& f : search_mersenne_special(SearchSpec::MersenneDefaults())) {
    if (f.tag != "unlisted") continue;
    EXPECT_TRUE(is_perfect(f.factors, SigmaKind::BiUnitary));
    EXPECT_TRUE(is_perfect(conjugate(f.poly), SigmaKind::BiUnitary));
  }
}

TEST(OmegaSearch, MatchesReferenceOnReducedBoxes) {
  for (unsigned omega : {2u, 3u, 4u}) {
    const auto s = small_brute(omega);
    const auto fast = search_omega(s);
    EXPECT_EQ(fast, reference::search_omega(s)) << "omega " << omega;
    expect_sound(fast);
    expect_conjugation_closed(fast);
    for (const auto& f : fast) EXPECT_EQ(f.factors.omega(), omega);
  }
}

TEST(OmegaSearch, OmegaTwoIsTheKnownFamily) {
  const auto findings = search_omega(SearchSpec::BruteForceDefaults(2));
  std::vector<Poly> expected = {pow(x, 2) * pow(y, 2)};
  for (unsigned a : {1u, 3u, 7u, 15u}) expected.push_back(pow(x, a) * pow(y, a));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(polys_of(findings), expected);
}

TEST(OmegaSearch, OmegaThreeIsFirstSevenWithConjugates) {
  const auto& t = constants();
  std::vector<Poly> expected;
  for (std::size_t i = 0; i < 7; ++i) {
    expected.push_back(t.C[i]);
    expected.push_back(conjugate(t.C[i]));
  }
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  EXPECT_EQ(polys_of(search_omega(SearchSpec::BruteForceDefaults(3))), expected);
}

TEST(OmegaSearch, OmegaFourContainsTableEntries) {
  const auto& t = constants();
  const auto findings = search_omega(SearchSpec::BruteForceDefaults(4));
  expect_sound(findings);
  expect_conjugation_closed(findings);
  const auto polys = polys_of(findings);
  for (std::size_t i = 7; i < 13; ++i) {
    EXPECT_TRUE(std::binary_search(polys.begin(), polys.end(), t.C[i])) << "C" << i + 1;
  }
}

TEST(Determinism, ResultsIndependentOfJobCount) {
  SearchSpec s = small_brute(4);
  s.jobs = 1;
  const auto one = search_omega(s);
  for (unsigned jobs : {2u, 3u, 8u}) {
    s.jobs = jobs;
    EXPECT_EQ(search_omega(s), one) << jobs;
  }
  SearchSpec m = SearchSpec::MersenneDefaults();
  m.max_xy_exponent = 20;
  m.jobs = 1;
  const auto mone = search_mersenne_special(m);
  m.jobs = 4;
  EXPECT_EQ(search_mersenne_special(m), mone);
}

TEST(Completeness, NaiveScanAgreesAtSmallDegree) {
  constexpr unsigned kDegree = 12;
  std::vector<Poly> searched;
  for (unsigned omega = 2; omega <= 4; ++omega) {
    SearchSpec s = SearchSpec::BruteForceDefaults(omega);
    s.max_xy_exponent = kDegree;
    s.exponents = {ExponentSet::Kind::FullRange, kDegree};
    s.max_irreducible_degree = kDegree - 2;
    s.max_total_degree = kDegree;
    for (const auto& f : search_omega(s)) searched.push_back(f.poly);
  }
  std::sort(searched.begin(), searched.end());
  auto naive = oracle::naive_bup_scan(kDegree);
  std::sort(naive.begin(), naive.end());
  EXPECT_EQ(searched, naive);
}

TEST(GuidedFamilies, Shapes) {
  const auto families = guided_families();
  ASSERT_EQ(families.size(), 3u);
  EXPECT_EQ(families[0].name, GuidedFamilyName::QisSigmaP2m);
  EXPECT_EQ(families[1].name, GuidedFamilyName::PQisSigmaX2m);
  EXPECT_EQ(families[2].name, GuidedFamilyName::QisSigmaX2m);
  for (const auto& f : families) {
    EXPECT_GT(f.candidate_count(), 0u);
    for (const auto& [p, q] : f.pq_choices) {
      EXPECT_TRUE(is_irreducible(p));
      EXPECT_TRUE(is_odd(q));
      EXPECT_FALSE(is_mersenne(q).has_value() && is_irreducible(q));
    }
  }
}

TEST(GuidedFamilies, FindingsAreSound) {
  const auto findings = check_guided_families(SearchSpec::GuidedDefaults());
  expect_sound(findings);
}

TEST(RunSearch, Dispatches) {
  SearchSpec s = small_brute(3);
  EXPECT_EQ(run_search(s), search_omega(s));
  EXPECT_EQ(to_string(SearchMode::GuidedFamilies), "guided");
}

}  // namespace
}  // namespace bupoly
