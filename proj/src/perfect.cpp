#include "bupoly/perfect.hpp"

#include <numeric>

namespace bupoly {

std::optional<MersenneShape> is_mersenne(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("Mersenne test of the zero polynomial");
  const Poly shifted = p + Poly::One();
  if (shifted.is_zero()) return std::nullopt;
  const Factorization f = factorize(shifted);
  const unsigned a = f.exponent_of(Poly::X());
  const unsigned b = f.exponent_of(Poly::XPlusOne());
  if (a == 0 || b == 0 || f.omega() != 2) return std::nullopt;
  if (std::gcd(a, b) != 1) return std::nullopt;
  return MersenneShape{a, b};
}

std::size_t omega(const Poly& s) {
  if (s.is_zero()) throw std::domain_error("omega of the zero polynomial");
  return factorize(s).omega();
}

bool is_perfect(const Factorization& s, SigmaKind kind) { return sigma_of_kind(kind, s) == s.expand(); }

bool is_perfect(const Poly& s, SigmaKind kind) {
  if (s.is_zero()) throw std::domain_error("perfectness of the zero polynomial");
  return sigma_of_kind(kind, factorize(s)) == s;
}

bool es_contains(unsigned n) {
  if (n == 2 || n == 4) return true;
  const unsigned long long m = static_cast<unsigned long long>(n) + 1;
  return n >= 1 && (m & (m - 1)) == 0;
}

namespace {

ConstantsTable build_constants() {
  ConstantsTable t;
  const Poly x = Poly::X();
  const Poly y = Poly::XPlusOne();
  t.M[0] = Poly::FromExponents({0, 1, 2});
  t.M[1] = Poly::FromExponents({0, 1, 3});
  t.M[2] = Poly::FromExponents({0, 2, 3});
  t.M[3] = geometric_sum(x, 4);
  t.M[4] = conjugate(t.M[3]);
  const auto& [M1, M2, M3, M4, M5] = t.M;

  t.C_factored = {
      Factorization{{x, 3}, {y, 4}, {M1, 1}},
      Factorization{{x, 3}, {y, 5}, {M1, 2}},
      Factorization{{x, 4}, {y, 4}, {M1, 2}},
      Factorization{{x, 6}, {y, 6}, {M1, 2}},
      Factorization{{x, 4}, {y, 5}, {M1, 3}},
      Factorization{{x, 7}, {y, 8}, {M5, 1}},
      Factorization{{x, 7}, {y, 9}, {M5, 2}},
      Factorization{{x, 8}, {y, 8}, {M4, 1}, {M5, 1}},
      Factorization{{x, 8}, {y, 9}, {M4, 1}, {M5, 2}},
      Factorization{{x, 7}, {y, 10}, {M1, 2}, {M5, 1}},
      Factorization{{x, 7}, {y, 13}, {M2, 2}, {M3, 2}},
      Factorization{{x, 9}, {y, 9}, {M4, 2}, {M5, 2}},
      Factorization{{x, 14}, {y, 14}, {M2, 2}, {M3, 2}},
      // The sigma** image of x^10 carries M4, so the last factor is M4.
      Factorization{{x, 10}, {y, 13}, {M1, 2}, {M2, 2}, {M3, 2}, {M4, 1}},
      Factorization{{x, 13}, {y, 13}, {M1, 2}, {M2, 4}, {M3, 4}, {M4, 1}, {M5, 1}},
  };
  for (std::size_t i = 0; i < t.C.size(); ++i) t.C[i] = t.C_factored[i].expand();
  return t;
}

}  // namespace

const ConstantsTable& constants() {
  static const ConstantsTable table = build_constants();
  return table;
}

std::optional<std::string> ConstantsTable::name_of(const Poly& p) const {
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (M[i] == p) return "M" + std::to_string(i + 1);
  }
  for (std::size_t i = 0; i < C.size(); ++i) {
    if (C[i] == p) return "C" + std::to_string(i + 1);
  }
  return std::nullopt;
}

std::optional<Poly> ConstantsTable::lookup(std::string_view name) const {
  if (name.size() < 2 || (name[0] != 'M' && name[0] != 'C')) return std::nullopt;
  std::size_t index = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    index = index * 10 + static_cast<std::size_t>(c - '0');
    if (index > 100) return std::nullopt;
  }
  if (name[1] == '0') return std::nullopt;
  if (name[0] == 'M' && index >= 1 && index <= M.size()) return M[index - 1];
  if (name[0] == 'C' && index >= 1 && index <= C.size()) return C[index - 1];
  return std::nullopt;
}

}  // namespace bupoly
