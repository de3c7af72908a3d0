#include "bupoly/search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bupoly/divisor.hpp"
#include "bupoly/perfect.hpp"

namespace bupoly {

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::MersenneSpecial:
      return "mersenne";
    case SearchMode::BruteForce:
      return "brute";
    case SearchMode::GuidedFamilies:
      return "guided";
  }
  return "?";
}

std::string_view to_string(GuidedFamilyName name) {
  switch (name) {
    case GuidedFamilyName::QisSigmaP2m:
      return "QisSigmaP2m";
    case GuidedFamilyName::PQisSigmaX2m:
      return "PQisSigmaX2m";
    case GuidedFamilyName::QisSigmaX2m:
      return "QisSigmaX2m";
  }
  return "?";
}

std::vector<unsigned> ExponentSet::values() const {
  std::vector<unsigned> out;
  for (unsigned h = 1; h <= cap; ++h) {
    if (kind == Kind::FullRange || es_contains(h)) out.push_back(h);
  }
  return out;
}

SearchSpec SearchSpec::MersenneDefaults() {
  SearchSpec s;
  s.mode = SearchMode::MersenneSpecial;
  s.max_xy_exponent = 60;
  s.exponents = {ExponentSet::Kind::EsTruncated, 7};
  s.max_irreducible_degree = 4;
  // Never binding: 2*60 + 7*(2+3+3+4+4) = 232.
  s.max_total_degree = 256;
  s.omega_max = 7;
  return s;
}

SearchSpec SearchSpec::BruteForceDefaults(unsigned omega) {
  SearchSpec s;
  s.mode = SearchMode::BruteForce;
  s.max_xy_exponent = 16;
  s.exponents = {ExponentSet::Kind::FullRange, 16};
  s.max_irreducible_degree = 6;
  s.max_total_degree = 40;
  s.omega_max = omega;
  return s;
}

SearchSpec SearchSpec::GuidedDefaults() {
  SearchSpec s;
  s.mode = SearchMode::GuidedFamilies;
  return s;
}

void SearchSpec::validate() const {
  auto fail = [](const std::string& why) { throw std::invalid_argument("invalid search spec: " + why); };
  if (exponents.cap == 0) fail("exponent cap must be positive");
  if (max_total_degree == 0) fail("max_total_degree must be positive");
  if (max_irreducible_degree == 0) fail("max_irreducible_degree must be positive");
  if (max_irreducible_degree > kIrreducibleDegreeCap) fail("max_irreducible_degree above enumeration cap");
  if (omega_max < 2 || omega_max > 7) fail("omega_max must lie in 2..7");
  if (mode == SearchMode::BruteForce) {
    if (omega_max > 4) fail("brute force supports omega_max <= 4");
    if (max_xy_exponent == 0) fail("max_xy_exponent must be positive");
  }
}

// ---------------------------------------------------------------------------
// Findings

std::string classify_finding(const Poly& p, const Factorization& factors) {
  const auto& table = constants();
  if (auto name = table.name_of(p); name && (*name)[0] == 'C') return *name;
  if (auto name = table.name_of(conjugate(p)); name && (*name)[0] == 'C') return "conj(" + *name + ")";
  const unsigned a = factors.exponent_of(Poly::X());
  if (factors.omega() == 2 && a > 0 && factors.exponent_of(Poly::XPlusOne()) == a) {
    const unsigned next = a + 1;
    if (a == 2 || (next & (next - 1)) == 0) return "omega2 a=" + std::to_string(a);
  }
  return "unlisted";
}

namespace {

Finding make_finding(Factorization factors) {
  Finding f;
  f.poly = factors.expand();
  f.certificate = factorize(sigma_biunitary(f.poly));
  f.tag = classify_finding(f.poly, factors);
  f.factors = std::move(factors);
  return f;
}

std::vector<Finding> sorted(std::vector<Finding> v) {
  std::sort(v.begin(), v.end(), [](const Finding& a, const Finding& b) { return a.poly < b.poly; });
  return v;
}

void require_mode(const SearchSpec& spec, SearchMode mode) {
  if (spec.mode != mode) {
    throw std::invalid_argument("search mode mismatch: spec is '" + std::string(to_string(spec.mode)) +
                                "', operation needs '" + std::string(to_string(mode)) + "'");
  }
  spec.validate();
}

class ThreadScope {
 public:
  explicit ThreadScope(unsigned jobs) {
#ifdef _OPENMP
    previous_ = omp_get_max_threads();
    if (jobs > 0) omp_set_num_threads(static_cast<int>(jobs));
#else
    (void)jobs;
#endif
  }
  ~ThreadScope() {
#ifdef _OPENMP
    omp_set_num_threads(previous_);
#endif
  }
  ThreadScope(const ThreadScope&) = delete;
  ThreadScope& operator=(const ThreadScope&) = delete;

 private:
  int previous_ = 1;
};

// ---------------------------------------------------------------------------
// Exponent-vector kernel.
//
// A candidate x^a (x+1)^b prod P_j^h_j is bi-unitary perfect iff the sum of
// the factorizations of sigma**(component) equals its own exponent vector.
// Each component's sigma** factorization is projected onto the candidate's
// primes ("slots") once; components whose sigma** has a prime outside the
// slots can never take part in a solution.

constexpr std::size_t kMaxSlots = 8;
using ExpVec = std::array<std::uint16_t, kMaxSlots>;

struct Image {
  bool closed = false;
  ExpVec exps{};
};

Image project(const Factorization& f, const std::vector<Poly>& slots) {
  Image img;
  img.closed = true;
  for (const auto& factor : f.factors()) {
    auto it = std::find(slots.begin(), slots.end(), factor.base);
    if (it == slots.end()) {
      img.closed = false;
      return img;
    }
    img.exps[static_cast<std::size_t>(it - slots.begin())] = static_cast<std::uint16_t>(factor.exponent);
  }
  return img;
}

/// sigma**(T^e) factorizations for one prime over a list of exponents.
struct SigmaColumn {
  Poly prime;
  std::vector<unsigned> exponents;
  std::vector<Factorization> images;
};

SigmaColumn sigma_column(const Poly& prime, std::vector<unsigned> exponents) {
  SigmaColumn col{prime, std::move(exponents), {}};
  col.images.reserve(col.exponents.size());
  for (unsigned e : col.exponents) col.images.push_back(factorize(sigma_prime_power(SigmaKind::BiUnitary, prime, e)));
  return col;
}

struct Box {
  std::vector<Poly> slots;  // slot 0 = x, slot 1 = x+1
  std::vector<std::size_t> slot_degrees;
  std::vector<unsigned> xy_values;
  std::vector<unsigned> odd_values;
  std::vector<Image> x_images;  // indexed like xy_values
  std::vector<Image> y_images;
  std::vector<std::vector<Image>> odd_images;  // [odd slot][index into odd_values]
  std::size_t max_total_degree = 0;
};

Box make_box(const std::vector<const SigmaColumn*>& odd_columns, const SigmaColumn& x_col, const SigmaColumn& y_col,
             const std::vector<unsigned>& odd_values, std::size_t max_total_degree) {
  Box box;
  box.slots = {x_col.prime, y_col.prime};
  for (const auto* c : odd_columns) box.slots.push_back(c->prime);
  if (box.slots.size() > kMaxSlots) throw std::invalid_argument("too many distinct primes for the search kernel");
  for (const auto& s : box.slots) box.slot_degrees.push_back(s.deg());
  box.xy_values = x_col.exponents;
  box.odd_values = odd_values;
  for (const auto& f : x_col.images) box.x_images.push_back(project(f, box.slots));
  for (const auto& f : y_col.images) box.y_images.push_back(project(f, box.slots));
  for (const auto* c : odd_columns) {
    std::vector<Image> imgs;
    for (const auto& f : c->images) imgs.push_back(project(f, box.slots));
    box.odd_images.push_back(std::move(imgs));
  }
  box.max_total_degree = max_total_degree;
  return box;
}

struct Hit {
  std::size_t box_index;
  ExpVec target;
};

class CellScanner {
 public:
  CellScanner(const Box& box, std::size_t box_index, std::vector<Hit>& out)
      : box_(box), box_index_(box_index), out_(out) {}

  void scan(std::size_t ia, std::size_t ib) {
    const Image& ix = box_.x_images[ia];
    const Image& iy = box_.y_images[ib];
    if (!ix.closed || !iy.closed) return;
    target_ = {};
    target_[0] = static_cast<std::uint16_t>(box_.xy_values[ia]);
    target_[1] = static_cast<std::uint16_t>(box_.xy_values[ib]);
    const std::size_t degree = target_[0] + target_[1];
    if (degree > box_.max_total_degree) return;
    ExpVec partial{};
    for (std::size_t k = 0; k < kMaxSlots; ++k) partial[k] = static_cast<std::uint16_t>(ix.exps[k] + iy.exps[k]);
    if (partial[0] > target_[0] || partial[1] > target_[1]) return;
    recurse(0, partial, degree);
  }

 private:
  void recurse(std::size_t odd_slot, const ExpVec& partial, std::size_t degree) {
    const std::size_t nslots = box_.slots.size();
    if (odd_slot == box_.odd_images.size()) {
      bool all_zero = true;
      for (std::size_t k = 0; k < nslots; ++k) all_zero = all_zero && target_[k] == 0;
      if (all_zero) return;
      for (std::size_t k = 0; k < nslots; ++k) {
        if (partial[k] != target_[k]) return;
      }
      out_.push_back({box_index_, target_});
      return;
    }
    const std::size_t slot = odd_slot + 2;
    const auto& images = box_.odd_images[odd_slot];
    for (std::size_t i = 0; i < box_.odd_values.size(); ++i) {
      const unsigned h = box_.odd_values[i];
      const std::size_t next_degree = degree + h * box_.slot_degrees[slot];
      if (next_degree > box_.max_total_degree) break;  // odd_values ascend
      const Image& img = images[i];
      if (!img.closed) continue;
      ExpVec next = partial;
      for (std::size_t k = 0; k < nslots; ++k) next[k] = static_cast<std::uint16_t>(next[k] + img.exps[k]);
      // x- and (x+1)-valuations only grow from here on.
      if (next[0] > target_[0] || next[1] > target_[1]) continue;
      target_[slot] = static_cast<std::uint16_t>(h);
      recurse(odd_slot + 1, next, next_degree);
    }
    target_[slot] = 0;
  }

  const Box& box_;
  std::size_t box_index_;
  std::vector<Hit>& out_;
  ExpVec target_{};
};

std::vector<unsigned> range_inclusive(unsigned lo, unsigned hi) {
  std::vector<unsigned> v;
  for (unsigned i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

/// Runs every (box, a, b) cell in parallel and converts the hits into
/// findings. Cells are independent; the merge sorts, so the result does not
/// depend on scheduling.
std::vector<Finding> scan_boxes(const std::vector<Box>& boxes, unsigned jobs) {
  std::size_t cells_per_box = 0;
  for (const auto& b : boxes) cells_per_box = std::max(cells_per_box, b.xy_values.size() * b.xy_values.size());
  const std::size_t total = boxes.size() * cells_per_box;
  std::vector<std::vector<Hit>> per_cell(total);
  {
    ThreadScope threads(jobs);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t cell = 0; cell < static_cast<std::int64_t>(total); ++cell) {
      const auto c = static_cast<std::size_t>(cell);
      const std::size_t bi = c / cells_per_box;
      const std::size_t rest = c % cells_per_box;
      const Box& box = boxes[bi];
      const std::size_t n = box.xy_values.size();
      if (rest >= n * n) continue;
      CellScanner scanner(box, bi, per_cell[c]);
      scanner.scan(rest / n, rest % n);
    }
  }
  std::vector<Factorization> found;
  for (const auto& hits : per_cell) {
    for (const auto& h : hits) {
      const Box& box = boxes[h.box_index];
      std::vector<Factor> factors;
      for (std::size_t k = 0; k < box.slots.size(); ++k) factors.push_back({box.slots[k], h.target[k]});
      found.emplace_back(std::move(factors));
    }
  }
  std::vector<Finding> out(found.size());
  {
    ThreadScope threads(jobs);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(found.size()); ++i) {
      out[static_cast<std::size_t>(i)] = make_finding(found[static_cast<std::size_t>(i)]);
    }
  }
  return sorted(std::move(out));
}

std::vector<Poly> odd_irreducibles_up_to(unsigned max_degree) {
  std::vector<Poly> out;
  for (unsigned d = 2; d <= max_degree; ++d) {
    const auto& list = irreducibles_of_degree(d);
    out.insert(out.end(), list.begin(), list.end());
  }
  return out;
}

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Optimized searches

std::vector<Finding> search_mersenne_special(const SearchSpec& spec) {
  require_mode(spec, SearchMode::MersenneSpecial);
  const auto& table = constants();
  const auto xy = range_inclusive(0, spec.max_xy_exponent);
  std::vector<unsigned> odd = {0};
  for (unsigned h : spec.exponents.values()) odd.push_back(h);
  const SigmaColumn x_col = sigma_column(Poly::X(), xy);
  const SigmaColumn y_col = sigma_column(Poly::XPlusOne(), xy);
  std::vector<SigmaColumn> m_cols;
  for (const auto& m : table.M) m_cols.push_back(sigma_column(m, odd));
  std::vector<const SigmaColumn*> ptrs;
  for (const auto& c : m_cols) ptrs.push_back(&c);
  std::vector<Box> boxes{make_box(ptrs, x_col, y_col, odd, spec.max_total_degree)};
  return scan_boxes(boxes, spec.jobs);
}

std::vector<Finding> search_omega(const SearchSpec& spec) {
  require_mode(spec, SearchMode::BruteForce);
  const auto xy = range_inclusive(1, spec.max_xy_exponent);
  const auto odd = spec.exponents.values();
  const std::vector<Poly> primes = odd_irreducibles_up_to(spec.max_irreducible_degree);
  const SigmaColumn x_col = sigma_column(Poly::X(), xy);
  const SigmaColumn y_col = sigma_column(Poly::XPlusOne(), xy);
  std::vector<SigmaColumn> cols;
  cols.reserve(primes.size());
  for (const auto& p : primes) cols.push_back(sigma_column(p, odd));
  std::vector<Box> boxes;
  for (const auto& combo : combinations(primes.size(), spec.omega_max - 2)) {
    std::vector<const SigmaColumn*> ptrs;
    std::size_t min_degree = 2;
    for (std::size_t i : combo) {
      ptrs.push_back(&cols[i]);
      min_degree += primes[i].deg();
    }
    if (min_degree > spec.max_total_degree) continue;
    boxes.push_back(make_box(ptrs, x_col, y_col, odd, spec.max_total_degree));
  }
  return scan_boxes(boxes, spec.jobs);
}

// ---------------------------------------------------------------------------
// Guided families

std::size_t GuidedFamily::candidate_count() const {
  std::size_t ab = 0;
  for (unsigned a : a_range) {
    for (unsigned b : b_range) {
      if (!require_odd_ab_sum || (a + b) % 2 == 1) ++ab;
    }
  }
  return pq_choices.size() * ab * c_range.size() * d_range.size();
}

std::vector<GuidedFamily> guided_families() {
  const auto& t = constants();
  const Poly& M1 = t.M[0];
  const Poly& M4 = t.M[3];
  const Poly x = Poly::X();
  const Poly y = Poly::XPlusOne();
  const Poly one = Poly::One();
  std::vector<GuidedFamily> out;

  GuidedFamily f1;
  f1.name = GuidedFamilyName::QisSigmaP2m;
  f1.pq_choices = {{M1, one + x * y * M1}, {M1, one + pow(x, 3) * pow(y, 3) * M1}};
  f1.a_range = range_inclusive(1, 11);
  f1.b_range = range_inclusive(1, 11);
  f1.c_range = range_inclusive(1, 8);
  f1.d_range = range_inclusive(1, 3);
  f1.require_odd_ab_sum = true;
  out.push_back(std::move(f1));

  GuidedFamily f2;
  f2.name = GuidedFamilyName::PQisSigmaX2m;
  f2.pq_choices = {{M1, Poly::FromExponents({0, 3, 6})}};
  f2.a_range = {1, 3, 4, 6, 7, 16};
  f2.b_range = {1, 3, 4, 6, 7, 16};
  f2.c_range = range_inclusive(1, 3);
  f2.d_range = {1};
  out.push_back(std::move(f2));

  GuidedFamily f3;
  f3.name = GuidedFamilyName::QisSigmaX2m;
  f3.pq_choices = {{M1, one + x * pow(y, 3) * pow(M1, 4)}, {M4, one + x * y * pow(M4, 2)}};
  f3.a_range = {20, 22, 24, 26};
  f3.b_range = {4, 6, 8, 10};
  f3.c_range = {1, 2, 3, 7};
  f3.d_range = {1};
  out.push_back(std::move(f3));
  return out;
}

std::vector<Finding> check_guided_families(const SearchSpec& spec) {
  require_mode(spec, SearchMode::GuidedFamilies);
  std::vector<Factorization> candidates;
  for (const auto& fam : guided_families()) {
    for (const auto& [P, Q] : fam.pq_choices) {
      const Factorization q_factors = factorize(Q);
      for (unsigned a : fam.a_range) {
        for (unsigned b : fam.b_range) {
          if (fam.require_odd_ab_sum && (a + b) % 2 == 0) continue;
          for (unsigned c : fam.c_range) {
            for (unsigned d : fam.d_range) {
              std::vector<Factor> fs = {{Poly::X(), a}, {Poly::XPlusOne(), b}, {P, c}};
              for (const auto& qf : q_factors.factors()) fs.push_back({qf.base, qf.exponent * d});
              candidates.emplace_back(std::move(fs));
            }
          }
        }
      }
    }
  }
  std::vector<char> perfect(candidates.size(), 0);
  {
    ThreadScope threads(spec.jobs);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.size()); ++i) {
      const auto& f = candidates[static_cast<std::size_t>(i)];
      perfect[static_cast<std::size_t>(i)] = sigma_biunitary(f) == f.expand();
    }
  }
  std::vector<Finding> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (perfect[i]) out.push_back(make_finding(candidates[i]));
  }
  return sorted(std::move(out));
}

std::vector<Finding> run_search(const SearchSpec& spec) {
  switch (spec.mode) {
    case SearchMode::MersenneSpecial:
      return search_mersenne_special(spec);
    case SearchMode::BruteForce:
      return search_omega(spec);
    case SearchMode::GuidedFamilies:
      return check_guided_families(spec);
  }
  throw std::logic_error("unknown search mode");
}

// ---------------------------------------------------------------------------
// Serial references

namespace reference {

namespace {

void test_candidate(const std::vector<Factor>& factors, std::size_t max_total_degree, std::vector<Finding>& out) {
  Factorization f{std::vector<Factor>(factors)};
  if (f.empty() || f.degree() > max_total_degree) return;
  if (sigma_biunitary(f) == f.expand()) out.push_back(make_finding(std::move(f)));
}

}  // namespace

std::vector<Finding> search_mersenne_special(const SearchSpec& spec) {
  require_mode(spec, SearchMode::MersenneSpecial);
  const auto& M = constants().M;
  std::vector<unsigned> odd = {0};
  for (unsigned h : spec.exponents.values()) odd.push_back(h);
  std::vector<Finding> out;
  std::array<std::size_t, 5> idx{};
  for (unsigned a = 0; a <= spec.max_xy_exponent; ++a) {
    for (unsigned b = 0; b <= spec.max_xy_exponent; ++b) {
      idx.fill(0);
      while (true) {
        std::vector<Factor> fs = {{Poly::X(), a}, {Poly::XPlusOne(), b}};
        for (std::size_t j = 0; j < 5; ++j) fs.push_back({M[j], odd[idx[j]]});
        test_candidate(fs, spec.max_total_degree, out);
        std::size_t j = 0;
        while (j < 5 && idx[j] + 1 == odd.size()) idx[j++] = 0;
        if (j == 5) break;
        ++idx[j];
      }
    }
  }
  return sorted(std::move(out));
}

std::vector<Finding> search_omega(const SearchSpec& spec) {
  require_mode(spec, SearchMode::BruteForce);
  const auto primes = odd_irreducibles_up_to(spec.max_irreducible_degree);
  const auto odd = spec.exponents.values();
  const std::size_t k = spec.omega_max - 2;
  std::vector<Finding> out;
  for (const auto& combo : combinations(primes.size(), k)) {
    for (unsigned a = 1; a <= spec.max_xy_exponent; ++a) {
      for (unsigned b = 1; b <= spec.max_xy_exponent; ++b) {
        std::vector<std::size_t> idx(k, 0);
        while (true) {
          std::vector<Factor> fs = {{Poly::X(), a}, {Poly::XPlusOne(), b}};
          for (std::size_t j = 0; j < k; ++j) fs.push_back({primes[combo[j]], odd[idx[j]]});
          test_candidate(fs, spec.max_total_degree, out);
          std::size_t j = 0;
          while (j < k && idx[j] + 1 == odd.size()) idx[j++] = 0;
          if (j == k) break;
          ++idx[j];
        }
      }
    }
  }
  return sorted(std::move(out));
}

}  // namespace reference

}  // namespace bupoly
