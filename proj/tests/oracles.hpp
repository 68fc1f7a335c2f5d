#pragma once
// Independent reference computations used to check the library.

#include <cmath>
#include <random>

#include "drinfeld/series.hpp"

namespace oracle {

// ζ(s) by summing to N plus the first Euler-Maclaurin corrections.
inline long double zeta(int s, long n_max = 200000) {
  long double sum = 0;
  for (long n = n_max; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
  long double N = n_max;
  return sum + std::pow(N, 1 - s) / (s - 1) - std::pow(N, -s) / 2;
}

// ζ(a,b) = Σ_{m>n>=1} m^{-a} n^{-b} = Σ_n n^{-b} T_a(n), T_a(n) = Σ_{m>n} m^{-a},
// with T_a built backwards from n_max.
inline long double double_zeta(int a, int b, long n_max = 200000) {
  long double N = n_max;
  long double t = std::pow(N, 1 - a) / (a - 1) - std::pow(N, -a) / 2 + a * std::pow(N, -a - 1) / 12;
  long double sum = 0;
  for (long n = n_max; n >= 1; --n) {
    sum += std::pow(static_cast<long double>(n), -b) * t;
    t += std::pow(static_cast<long double>(n), -a);
  }
  return sum + std::pow(N, 2 - a - b) / ((a - 1) * (a + b - 2));
}

// Random series with rational coefficients on a sparse subset of the words of
// length 2..max_len containing both letters.
inline drinfeld::NCSeries random_group_series(std::mt19937& rng, int max_len = 7, int max_y_deg = 2) {
  drinfeld::NCSeries s(max_len, max_y_deg, drinfeld::Rational(1));
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::bernoulli_distribution keep(0.3);
  for (const auto& w : drinfeld::words_up_to(max_len, max_y_deg, 2)) {
    if (w.x_degree() == 0 || w.y_degree() == 0 || !keep(rng)) continue;
    s.add(w, drinfeld::Scalar(drinfeld::Rational(num(rng), den(rng))));
  }
  return s;
}

}  // namespace oracle
