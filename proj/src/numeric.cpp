#include <cmath>
#include <stdexcept>

#include "drinfeld/mzv.hpp"

namespace drinfeld {

namespace {

constexpr int kCut = 40;
constexpr int kEulerTerms = 8;

// Σ_{n > m} n^{-s} for real s > 1 by Euler-Maclaurin at the point m + 1.
long double hurwitz_tail(long double s, long m) {
  const long double n0 = static_cast<long double>(m + 1);
  long double sum = std::pow(n0, 1 - s) / (s - 1) + std::pow(n0, -s) / 2;
  long double rising = s;  // s (s+1) ... (s+2k-2)
  long double fact = 2;    // (2k)!
  for (int k = 1; k <= kEulerTerms; ++k) {
    long double b = bernoulli(2 * k).to_long_double();
    sum += b / fact * rising * std::pow(n0, -s - 2 * k + 1);
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    fact *= (2.0L * k + 1) * (2.0L * k + 2);
  }
  return sum;
}

}  // namespace

long double numeric_zeta(int s) {
  if (s < 2) throw std::invalid_argument("numeric_zeta needs s >= 2");
  long double sum = 0;
  for (long n = kCut; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
  return sum + hurwitz_tail(s, kCut);
}

long double numeric_double_zeta(int a, int b) {
  if (a < 2 || b < 1) throw std::invalid_argument("numeric_double_zeta needs a >= 2, b >= 1");
  // ζ(a,b) = Σ_{m>=1} m^{-b} T(m), T(m) = Σ_{n>m} n^{-a}.
  const long m_max = 2000;
  long double total = 0;
  long double t = numeric_zeta(a);
  for (long m = 1; m <= m_max; ++m) {
    t -= std::pow(static_cast<long double>(m), -a);
    total += std::pow(static_cast<long double>(m), -b) * t;
  }
  // Beyond m_max expand T(m) = m^{1-a}/(a-1) - m^{-a}/2 + Σ_k B_{2k}/(2k)! (a)_{2k-1} m^{1-a-2k}.
  total += hurwitz_tail(a + b - 1, m_max) / (a - 1) - hurwitz_tail(a + b, m_max) / 2;
  long double rising = a, fact = 2;
  for (int k = 1; k <= 4; ++k) {
    total += bernoulli(2 * k).to_long_double() / fact * rising * hurwitz_tail(a + b + 2 * k - 1, m_max);
    rising *= (a + 2 * k - 1) * (a + 2 * k);
    fact *= (2.0L * k + 1) * (2.0L * k + 2);
  }
  return total;
}

long double numeric_eval(const MzvExpr& m, long double target_error) {
  if (!(target_error >= 1e-10L)) throw std::invalid_argument("numeric_eval: target error below the 1e-10 floor");
  long double sum = 0;
  for (const auto& [mono, c] : m.terms()) {
    long double v = 1;
    for (ZetaAtom a : mono.atoms())
      v *= a == ZetaAtom::Z35 ? numeric_double_zeta(3, 5) : numeric_zeta(atom_weight(a));
    sum += c.to_long_double() * v;
  }
  return sum;
}

}  // namespace drinfeld
