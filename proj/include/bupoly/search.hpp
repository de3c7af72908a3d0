#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bupoly/factor.hpp"
#include "bupoly/poly.hpp"

namespace bupoly {

enum class SearchMode { MersenneSpecial, BruteForce, GuidedFamilies };

std::string_view to_string(SearchMode mode);

/// Allowed exponents for the odd irreducible factors of a candidate.
struct ExponentSet {
  enum class Kind {
    EsTruncated,  // {2, 4} and {2^n - 1}, capped
    FullRange,    // 1..cap
  };
  Kind kind = Kind::FullRange;
  unsigned cap = 16;

  /// Positive members in ascending order.
  std::vector<unsigned> values() const;
};

/// Finite search box. Which fields matter depends on the mode.
struct SearchSpec {
  SearchMode mode = SearchMode::BruteForce;
  /// Cap on the exponents of x and x+1.
  unsigned max_xy_exponent = 16;
  ExponentSet exponents;
  /// Odd irreducibles of degree 2..max_irreducible_degree are candidates.
  unsigned max_irreducible_degree = 6;
  unsigned max_total_degree = 40;
  /// Brute force: the exact number of distinct irreducible factors.
  unsigned omega_max = 3;
  /// Worker threads; 0 picks the OpenMP default.
  unsigned jobs = 0;

  /// x^a (x+1)^b M1^h1 ... M5^h5 with a, b <= 60 and h_j in {0,1,2,3,4,7}.
  static SearchSpec MersenneDefaults();
  /// a, b, h_i <= 16, irreducibles of degree <= 6, total degree <= 40.
  static SearchSpec BruteForceDefaults(unsigned omega);
  static SearchSpec GuidedDefaults();

  /// Throws std::invalid_argument on a malformed box.
  void validate() const;
};

/// A bi-unitary perfect polynomial located by a search.
struct Finding {
  Poly poly;
  Factorization factors;
  /// Factorization of sigma**(poly), computed independently of the search
  /// kernel. Equal to `factors` for every genuine finding.
  Factorization certificate;
  /// "C3", "conj(C6)", "omega2 a=7" or "unlisted".
  std::string tag;

  friend bool operator==(const Finding&, const Finding&) = default;
};

/// Name of p relative to the known lists.
std::string classify_finding(const Poly& p, const Factorization& factors);

// Search entry points. Each validates the spec and throws
// std::invalid_argument when the mode does not match. Results are sorted
// by polynomial and do not depend on the job count.

/// x^a (x+1)^b prod M_j^h_j over the five named Mersenne irreducibles,
/// 0 <= a, b <= max_xy_exponent, h_j in {0} and the exponent set. The
/// constant 1 is not reported.
std::vector<Finding> search_mersenne_special(const SearchSpec& spec);

/// x^a (x+1)^b P_1^h_1 ... P_k^h_k with k = omega_max - 2 distinct odd
/// irreducibles, every exponent >= 1 and the total degree capped.
std::vector<Finding> search_omega(const SearchSpec& spec);

/// The three candidate families of x^a (x+1)^b P^c Q^d with Q not Mersenne.
std::vector<Finding> check_guided_families(const SearchSpec& spec);

/// Dispatch on spec.mode.
std::vector<Finding> run_search(const SearchSpec& spec);

/// Straightforward serial versions of the search kernels. Every candidate
/// is expanded and sigma** is evaluated from the closed forms on the full
/// factorization. Kept for cross-checking the optimized kernels.
namespace reference {
std::vector<Finding> search_mersenne_special(const SearchSpec& spec);
std::vector<Finding> search_omega(const SearchSpec& spec);
}  // namespace reference

enum class GuidedFamilyName { QisSigmaP2m, PQisSigmaX2m, QisSigmaX2m };

std::string_view to_string(GuidedFamilyName name);

/// A finite family x^a (x+1)^b P^c Q^d.
struct GuidedFamily {
  GuidedFamilyName name;
  std::vector<std::pair<Poly, Poly>> pq_choices;
  std::vector<unsigned> a_range;
  std::vector<unsigned> b_range;
  std::vector<unsigned> c_range;
  std::vector<unsigned> d_range;
  /// Only tuples with a + b odd.
  bool require_odd_ab_sum = false;

  std::size_t candidate_count() const;
};

/// The three families, in the order QisSigmaP2m, PQisSigmaX2m, QisSigmaX2m.
std::vector<GuidedFamily> guided_families();

}  // namespace bupoly
