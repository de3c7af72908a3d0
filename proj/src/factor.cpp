#include "bupoly/factor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <random>

namespace bupoly {

// ---------------------------------------------------------------------------
// Factorization

Factorization::Factorization(std::vector<Factor> factors) : factors_(std::move(factors)) { canonicalize(); }

Factorization::Factorization(std::initializer_list<Factor> factors) : factors_(factors) { canonicalize(); }

void Factorization::canonicalize() {
  std::erase_if(factors_, [](const Factor& f) { return f.exponent == 0; });
  std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) { return a.base < b.base; });
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  for (auto& f : factors_) {
    if (f.base.is_zero() || f.base.is_one()) {
      throw std::invalid_argument("factorization base must be nonconstant");
    }
    if (!merged.empty() && merged.back().base == f.base) {
      merged.back().exponent += f.exponent;
    } else {
      merged.push_back(std::move(f));
    }
  }
  factors_ = std::move(merged);
}

unsigned Factorization::exponent_of(const Poly& base) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), base,
                             [](const Factor& f, const Poly& b) { return f.base < b; });
  return it != factors_.end() && it->base == base ? it->exponent : 0;
}

Poly Factorization::expand() const {
  Poly out = Poly::One();
  for (const auto& f : factors_) out = out * pow(f.base, f.exponent);
  return out;
}

std::size_t Factorization::degree() const {
  std::size_t d = 0;
  for (const auto& f : factors_) d += f.base.deg() * f.exponent;
  return d;
}

Factorization operator*(const Factorization& a, const Factorization& b) {
  std::vector<Factor> all(a.factors_.begin(), a.factors_.end());
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return Factorization(std::move(all));
}

// ---------------------------------------------------------------------------
// Irreducibility

namespace {

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(2^k) mod m.
Poly frobenius_power_of_x(std::size_t k, const Poly& m) {
  Poly h = Poly::X() % m;
  for (std::size_t i = 0; i < k; ++i) h = square_mod(h, m);
  return h;
}

}  // namespace

bool is_irreducible(const Poly& p) {
  if (p.is_zero()) return false;
  const std::size_t d = p.deg();
  if (d == 0) return false;
  if (d == 1) return true;
  if (!p.eval0() || !p.eval1()) return false;
  const Poly x = Poly::X();
  if (frobenius_power_of_x(d, p) != x % p) return false;
  for (std::size_t l : prime_divisors(d)) {
    const Poly h = frobenius_power_of_x(d / l, p);
    if (!gcd(h + x, p).is_one()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Factorization algorithm

namespace {

struct PowerPart {
  Poly poly;  // squarefree
  unsigned multiplicity;
};

void squarefree_parts(const Poly& f, unsigned scale, std::vector<PowerPart>& out) {
  if (f.deg() == 0) return;
  const Poly df = derivative(f);
  if (df.is_zero()) {
    squarefree_parts(square_root(f), scale * 2, out);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = exact_div(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = exact_div(w, y);
    if (!z.is_one()) out.push_back({std::move(z), i * scale});
    ++i;
    c = exact_div(c, y);
    w = std::move(y);
  }
  if (!c.is_one()) squarefree_parts(square_root(c), scale * 2, out);
}

struct DegreePart {
  Poly poly;  // product of distinct irreducibles, all of degree `degree`
  std::size_t degree;
};

std::vector<DegreePart> distinct_degree(Poly g) {
  std::vector<DegreePart> out;
  const Poly x = Poly::X();
  Poly h = x % g;
  std::size_t d = 0;
  while (g.deg() >= 2 * (d + 1)) {
    ++d;
    h = square_mod(h, g);
    Poly f = gcd(h + x, g);
    if (!f.is_one()) {
      g = exact_div(g, f);
      h = h % g;
      out.push_back({std::move(f), d});
    }
  }
  if (g.deg() > 0) {
    const std::size_t dg = g.deg();
    out.push_back({std::move(g), dg});
  }
  return out;
}

Poly random_below(std::size_t degree_bound, std::mt19937_64& rng) {
  std::vector<Poly::Word> w((degree_bound + 63) / 64, 0);
  for (auto& word : w) word = rng();
  if (degree_bound % 64 != 0) w.back() &= (Poly::Word{1} << (degree_bound % 64)) - 1;
  return Poly::FromWords(std::move(w));
}

void equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t n = f.deg();
  if (n == d) {
    out.push_back(f);
    return;
  }
  while (true) {
    // Trace of a random element down to F2 is 0 or 1 in each residue field,
    // so the gcd separates the two classes of factors.
    const Poly a = random_below(n, rng);
    Poly t = a;
    Poly sum = a;
    for (std::size_t i = 1; i < d; ++i) {
      t = square_mod(t, f);
      sum += t;
    }
    if (sum.is_zero()) continue;
    Poly g = gcd(sum, f);
    if (g.deg() > 0 && g.deg() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factorize(const Poly& p, std::uint64_t seed) {
  if (p.is_zero()) throw std::domain_error("factorization of the zero polynomial");
  std::vector<Factor> factors;
  if (p.deg() == 0) return {};
  std::mt19937_64 rng(seed);
  std::vector<PowerPart> parts;
  squarefree_parts(p, 1, parts);
  for (const auto& part : parts) {
    for (const auto& dp : distinct_degree(part.poly)) {
      std::vector<Poly> bases;
      equal_degree(dp.poly, dp.degree, rng, bases);
      for (auto& b : bases) factors.push_back({std::move(b), part.multiplicity});
    }
  }
  return Factorization(std::move(factors));
}

// ---------------------------------------------------------------------------
// Irreducible enumeration

namespace {

std::vector<Poly> sieve_degree(unsigned n) {
  if (n == 1) return {Poly::X(), Poly::XPlusOne()};
  std::vector<const std::vector<Poly>*> smaller;
  for (unsigned k = 2; 2 * k <= n; ++k) smaller.push_back(&irreducibles_of_degree(k));
  std::vector<Poly> out;
  const Poly::Word lo = Poly::Word{1} << n;
  const Poly::Word hi = Poly::Word{1} << (n + 1);
  // Odd constant term and odd weight rule out the factors x and x+1.
  for (Poly::Word w = lo | 1; w < hi; w += 2) {
    if (std::popcount(w) % 2 == 0) continue;
    const Poly candidate = Poly::FromWord(w);
    bool irreducible = true;
    for (const auto* list : smaller) {
      for (const auto& q : *list) {
        if (divides(q, candidate)) {
          irreducible = false;
          break;
        }
      }
      if (!irreducible) break;
    }
    if (irreducible) out.push_back(candidate);
  }
  return out;
}

struct IrreducibleCache {
  std::array<std::once_flag, kIrreducibleDegreeCap + 1> once;
  std::array<std::vector<Poly>, kIrreducibleDegreeCap + 1> lists;
};

IrreducibleCache& cache() {
  static IrreducibleCache c;
  return c;
}

}  // namespace

const std::vector<Poly>& irreducibles_of_degree(unsigned n) {
  if (n == 0) throw std::invalid_argument("irreducible degree must be positive");
  if (n > kIrreducibleDegreeCap) {
    throw CapExceeded("irreducible degree " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kIrreducibleDegreeCap));
  }
  auto& c = cache();
  std::call_once(c.once[n], [&] { c.lists[n] = sieve_degree(n); });
  return c.lists[n];
}

}  // namespace bupoly
