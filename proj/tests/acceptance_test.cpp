// Acceptance suite. Runs each criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Pass criterion numbers as arguments to
// run a subset; the exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bupoly/divisor.hpp"
#include "bupoly/expr.hpp"
#include "bupoly/factor.hpp"
#include "bupoly/perfect.hpp"
#include "bupoly/search.hpp"
#include "oracles.hpp"

namespace {

using namespace bupoly;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

const Poly x = Poly::X();
const Poly y = Poly::XPlusOne();

std::set<Poly> poly_set(const std::vector<Finding>& findings) {
  std::set<Poly> out;
  for (const auto& f : findings) out.insert(f.poly);
  return out;
}

std::set<Poly> conjugation_closure(std::size_t first, std::size_t last) {
  std::set<Poly> out;
  for (std::size_t i = first; i < last; ++i) {
    out.insert(constants().C[i]);
    out.insert(conjugate(constants().C[i]));
  }
  return out;
}

/// Describes the symmetric difference of two sets.
Outcome compare_sets(const std::set<Poly>& got, const std::set<Poly>& want) {
  Outcome o;
  std::size_t extra = 0, missing = 0;
  std::ostringstream first;
  for (const auto& p : got) {
    if (want.count(p)) continue;
    if (extra++ == 0) first << " first extra " << format_factorization(factorize(p), true) << ";";
  }
  for (const auto& p : want) {
    if (got.count(p)) continue;
    if (missing++ == 0) first << " first missing " << format_factorization(factorize(p), true) << ";";
  }
  o.ok = extra == 0 && missing == 0;
  std::ostringstream os;
  os << got.size() << " found, " << want.size() << " expected, " << extra << " extra, " << missing << " missing;"
     << first.str();
  o.detail = os.str();
  return o;
}

Outcome constants_verify() {
  std::size_t checked = 0;
  for (const auto& c : constants().C) {
    for (const Poly& p : {c, conjugate(c)}) {
      ++checked;
      if (sigma_biunitary(p) != p) return {false, "not perfect: " + to_hex(p)};
    }
  }
  return {true, std::to_string(checked) + " polynomials verified"};
}

Outcome omega_two_family() {
  std::vector<Poly> yes = {pow(x, 2) * pow(y, 2)};
  for (unsigned n = 1; n <= 6; ++n) yes.push_back(pow(x, (1u << n) - 1) * pow(y, (1u << n) - 1));
  for (const auto& p : yes) {
    if (!is_perfect(p, SigmaKind::BiUnitary)) return {false, "expected perfect: " + to_symbolic(p)};
  }
  for (unsigned a : {4u, 5u, 6u}) {
    if (is_perfect(pow(x, a) * pow(y, a), SigmaKind::BiUnitary)) return {false, "unexpected perfect a=" + std::to_string(a)};
  }
  return {true, "7 members perfect, a=4,5,6 rejected"};
}

Outcome oracle_equivalence() {
  std::size_t prime_powers = 0;
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& t : irreducibles_of_degree(n)) {
      for (unsigned e = 0; e <= 10; ++e) {
        const Poly s = pow(t, e);
        if (sigma_biunitary(s) != sigma_biunitary_oracle(s)) return {false, "prime power " + to_hex(t)};
        ++prime_powers;
      }
    }
  }
  std::mt19937_64 rng(0xacce01);
  std::size_t composites = 0;
  while (composites < 1000) {
    const Poly s = oracle::random_poly(rng, 40);
    if (s.deg() < 2 || is_irreducible(s)) continue;
    ++composites;
    if (sigma_biunitary(s) != sigma_biunitary_oracle(s)) return {false, "composite " + to_hex(s)};
  }
  return {true, std::to_string(prime_powers) + " prime powers, 1000 composites"};
}

Outcome multiplicativity() {
  std::mt19937_64 rng(0xacce04);
  std::size_t pairs = 0;
  while (pairs < 1000) {
    const Poly a = oracle::random_poly(rng, 24);
    const Poly b = oracle::random_poly(rng, 24);
    if (!gcd(a, b).is_one()) continue;
    ++pairs;
    for (SigmaKind k : kAllSigmaKinds) {
      if (sigma_of_kind(k, a * b) != sigma_of_kind(k, a) * sigma_of_kind(k, b)) {
        return {false, std::string(to_string(k)) + " fails on " + to_hex(a) + ", " + to_hex(b)};
      }
    }
  }
  return {true, "1000 coprime pairs, three divisor sums"};
}

Outcome mersenne_search() {
  const SearchSpec spec = SearchSpec::MersenneDefaults();
  const auto findings = search_mersenne_special(spec);
  std::set<Poly> want = conjugation_closure(0, 15);
  if (want.size() != 24) return {false, "closure has " + std::to_string(want.size()) + " members"};
  for (unsigned a = 1; a <= spec.max_xy_exponent; ++a) {
    if (a == 2 || ((a + 1) & a) == 0) want.insert(pow(x, a) * pow(y, a));
  }
  return compare_sets(poly_set(findings), want);
}

Outcome brute_force_searches() {
  const auto three = compare_sets(poly_set(search_omega(SearchSpec::BruteForceDefaults(3))), conjugation_closure(0, 7));
  const auto four = compare_sets(poly_set(search_omega(SearchSpec::BruteForceDefaults(4))), conjugation_closure(7, 13));
  return {three.ok && four.ok, "omega=3: " + three.detail + " omega=4: " + four.detail};
}

Outcome guided_families_empty() {
  const auto findings = check_guided_families(SearchSpec::GuidedDefaults());
  std::size_t candidates = 0;
  for (const auto& f : guided_families()) candidates += f.candidate_count();
  std::ostringstream os;
  os << candidates << " candidates, " << findings.size() << " perfect";
  if (!findings.empty()) os << "; first " << format_factorization(findings.front().factors, true);
  return {findings.empty(), os.str()};
}

Outcome toy_completeness() {
  constexpr unsigned kDegree = 14;
  std::set<Poly> searched;
  for (unsigned omega = 2; omega <= 4; ++omega) {
    SearchSpec s = SearchSpec::BruteForceDefaults(omega);
    s.max_xy_exponent = kDegree;
    s.exponents = {ExponentSet::Kind::FullRange, kDegree};
    s.max_irreducible_degree = kDegree - 2;
    s.max_total_degree = kDegree;
    for (const auto& f : search_omega(s)) searched.insert(f.poly);
  }
  const auto naive = oracle::naive_bup_scan(kDegree);
  return compare_sets(searched, std::set<Poly>(naive.begin(), naive.end()));
}

Outcome factorization_checks() {
  std::mt19937_64 rng(0xacce09);
  for (int i = 0; i < 10000; ++i) {
    const Poly p = oracle::random_poly(rng, 64);
    const Factorization f = factorize(p);
    if (f.expand() != p) return {false, "round trip " + to_hex(p)};
    for (const auto& factor : f.factors()) {
      if (!is_irreducible(factor.base)) return {false, "reducible factor of " + to_hex(p)};
    }
  }
  for (unsigned n = 1; n <= 12; ++n) {
    const auto count = static_cast<std::int64_t>(irreducibles_of_degree(n).size());
    if (count != oracle::necklace_count(n)) return {false, "count mismatch at degree " + std::to_string(n)};
    if (n <= 10) {
      std::int64_t trial = 0;
      for (const auto& p : oracle::all_of_degree(n)) trial += oracle::is_irreducible_trial(p);
      if (trial != count) return {false, "trial division disagrees at degree " + std::to_string(n)};
    }
  }
  return {true, "10000 round trips, counts n<=12"};
}

bool power_of_two(unsigned n) { return n != 0 && (n & (n - 1)) == 0; }

Outcome identity_suite() {
  const Poly one = Poly::One();
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& t : irreducibles_of_degree(n)) {
      for (unsigned c = 1; c <= 12; ++c) {
        if (divides(t, sigma_biunitary(pow(t, c)))) return {false, "non-divisibility " + to_hex(t)};
      }
    }
  }
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& t : irreducibles_of_degree(n)) {
      for (unsigned a = 1; a <= 31; a += 2) {
        const unsigned two_alpha = (a + 1) & ~a;
        const unsigned u = (a + 1) / two_alpha;
        const Poly want = pow(t + one, two_alpha - 1) * pow(sigma(pow(t, u - 1)), two_alpha);
        if (sigma_biunitary(pow(t, a)) != want) return {false, "closed form " + to_hex(t) + "^" + std::to_string(a)};
      }
    }
  }
  for (unsigned a = 1; a <= 40; ++a) {
    const Factorization f = factorize(sigma_biunitary(pow(x, a)));
    const bool splits = f.exponent_of(x) + f.exponent_of(y) == f.degree();
    if (splits != (a == 2 || power_of_two(a + 1))) return {false, "splitting a=" + std::to_string(a)};
  }
  std::set<Poly> self_reciprocal;
  for (unsigned a = 1; a <= 11; ++a) {
    for (unsigned b = 1; a + b <= 12; ++b) {
      const Poly p = one + pow(x, a) * pow(y, b);
      if (is_mersenne(p) && is_irreducible(p) && reciprocal(p) == p) self_reciprocal.insert(p);
    }
  }
  if (self_reciprocal != std::set<Poly>{constants().M[0], constants().M[3]}) {
    return {false, "self-reciprocal Mersenne set has " + std::to_string(self_reciprocal.size()) + " members"};
  }
  for (unsigned h = 0; h <= 62; ++h) {
    if ((sigma(pow(x, h)) == sigma(pow(y, h))) != power_of_two(h + 2)) return {false, "h=" + std::to_string(h)};
  }
  return {true, "non-divisibility, closed forms, splitting, self-reciprocal Mersenne, sigma(x^h)=sigma((x+1)^h)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "constants verification", 1.0, constants_verify},
      {2, "omega=2 family", 1.0, omega_two_family},
      {3, "oracle equivalence", 30.0, oracle_equivalence},
      {4, "multiplicativity", 60.0, multiplicativity},
      {5, "Mersenne-special search", 60.0, mersenne_search},
      {6, "brute force omega=3 and omega=4", 600.0, brute_force_searches},
      {7, "guided families empty", 10.0, guided_families_empty},
      {8, "toy-scale completeness", 60.0, toy_completeness},
      {9, "factorization", 60.0, factorization_checks},
      {10, "identity suite", 60.0, identity_suite},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("criterion %2d %-34s %s  %.3fs (budget %.0fs)%s  %s\n", c.number, c.name, pass ? "PASS" : "FAIL",
                seconds, c.budget_seconds, in_time ? "" : " OVER BUDGET", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
