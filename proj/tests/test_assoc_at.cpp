#include <gtest/gtest.h>

#include "drinfeld/assoc_at.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/grt.hpp"

using namespace drinfeld;

namespace {

const AssociatorFamilies& fams8() {
  static AssociatorFamilies f(shared_reduction_table(8));
  return f;
}

const AtCoefficients& at8() {
  static AtCoefficients a(fams8());
  return a;
}

// Expanded (s(s-1))^{2n} integrated term by term with a binomial sum, no polynomial class.
Rational kernel_integral(int n, const Rational& upper) {
  Rational total;
  for (int k = 0; k <= 2 * n; ++k) {
    // (s² - s)^{2n} = Σ_k C(2n,k) s^{2k} (-s)^{2n-k}
    int power = 2 * n + k;
    Rational term = Rational(binomial(2 * n, k)) * Rational::pow(upper, static_cast<unsigned>(power + 1)) / Rational(power + 1);
    if ((2 * n - k) % 2) term = -term;
    total += term;
  }
  return total;
}

Rational beta_by_series(const Rational& x, int a, int b) {
  Rational total;
  for (int k = 0; k < b; ++k) {
    Rational term = Rational(binomial(b - 1, k)) * Rational::pow(x, static_cast<unsigned>(a + k)) / Rational(a + k);
    if (k % 2) term = -term;
    total += term;
  }
  return total;
}

}  // namespace

TEST(Polynomial, Integration) {
  PolynomialQ s2s = PolynomialQ(std::vector<Rational>{Rational(0), Rational(-1), Rational(1)});
  EXPECT_EQ(integrate_poly(s2s.pow(2), Rational(0), Rational(1)), Rational(1, 30));
  EXPECT_EQ(integrate_poly(s2s.pow(2), Rational(0), Rational(0)), Rational(0));
  EXPECT_EQ(kernel_poly(1), s2s.pow(2));
  EXPECT_EQ(PolynomialQ::monomial(3).antiderivative(), PolynomialQ::monomial(4, Rational(1, 4)));
  EXPECT_EQ(PolynomialQ().degree(), -1);
  EXPECT_EQ(s2s(Rational(1, 2)), Rational(-1, 4));
}

TEST(Integrals, SingleAgainstBinomialSums) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(I1(n), kernel_integral(n, Rational(1))) << n;
    EXPECT_EQ(J1(n), kernel_integral(n, Rational(1, 2))) << n;
    EXPECT_EQ(J1(n) * Rational(2), I1(n));
    EXPECT_EQ(I1(n), Rational(factorial(2 * n) * factorial(2 * n), factorial(4 * n + 1)));
  }
  EXPECT_EQ(I1(1), Rational(1, 30));
}

TEST(Integrals, IncompleteBeta) {
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) {
      Rational complete = Rational(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1));
      EXPECT_EQ(incomplete_beta(Rational(1), a, b), complete);
      for (Rational x : {Rational(1, 4), Rational(1, 3), Rational(1, 2)}) {
        EXPECT_EQ(incomplete_beta(x, a, b), beta_by_series(x, a, b));
        EXPECT_EQ(incomplete_beta(x, a, b) + incomplete_beta(Rational(1) - x, b, a), complete);
      }
    }
  EXPECT_EQ(incomplete_beta(Rational(1, 2), 3, 3), Rational(1, 60));
}

TEST(Integrals, NestedGoldens) {
  EXPECT_EQ(J2(2, 1), Rational(1199, 154828800));
  EXPECT_EQ(J2(1, 2), Rational(283, 51609600));
  for (int l = 1; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m) EXPECT_EQ(J2(l, m) + J2(m, l), J1(l) * J1(m)) << l << "," << m;
}

TEST(Cab, C2nValues) {
  EXPECT_EQ(c2n(1), Scalar(3, MzvExpr(ZetaMonomial{ZetaAtom::Z3}, Rational(60))));
  EXPECT_EQ(c2n(2), Scalar(5, MzvExpr(ZetaMonomial{ZetaAtom::Z5}, Rational(1260))));
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(check_c2n(n, fams8())) << n;
}

TEST(Cab, SmallSystemsConsistent) {
  const std::size_t expected_equations[] = {0, 3, 10, 21};
  for (int n = 1; n <= 3; ++n) {
    AtSolution s = solve_cab(n, fams8());
    EXPECT_EQ(s.n, n);
    EXPECT_EQ(s.equations, expected_equations[n]);
    EXPECT_EQ(s.cab.size(), static_cast<std::size_t>(n));
    for (const auto& [ab, c] : s.cab) {
      EXPECT_EQ(ab.first + ab.second, 2 * n - 1);
      EXPECT_LT(ab.first, ab.second);
      ASSERT_EQ(c.terms().size(), 1u);
      EXPECT_EQ(c.terms().begin()->first, 2 * n + 1);
    }
  }
}

TEST(Cab, XElementReproducesPsi) {
  // I1(n)·x_{2n+1} must reproduce ψ on the odd-weight y-degree 1 and 2 words of length 2n+1.
  for (int n = 1; n <= 3; ++n) {
    AtSolution s = solve_cab(n, fams8());
    NCSeries x = expand(s.x_element());
    for (const Word& w : words_up_to(2 * n + 1, 2, 2 * n + 1)) {
      if (w.y_degree() == 0) continue;
      EXPECT_EQ(x.coeff(w) * I1(n), fams8().c(w)) << w.to_string();
    }
  }
}

TEST(Cab, ExtendedTable) {
  AssociatorFamilies f11(shared_reduction_table(11));
  for (int n = 4; n <= 5; ++n) EXPECT_NO_THROW(solve_cab(n, f11)) << n;
  ReductionTable t8 = load_reduction_table(8);
  AssociatorFamilies f8(t8);
  EXPECT_THROW(solve_cab(4, f8), RangeError);
}

TEST(AtCoeff, VanishingAndDegreeOne) {
  const auto& F = fams8();
  for (const Word& w : words_up_to(8, 2, 1)) {
    if (w.y_degree() == 0) continue;
    Scalar a = at8().coeff(w);
    if (w.size() % 2) EXPECT_TRUE(a.is_zero()) << w.to_string();
    else if (w.y_degree() == 1) EXPECT_EQ(a, F.u(w)) << w.to_string();
  }
}

TEST(AtCoeff, Theorem) {
  MzvExpr e = MzvExpr::atom(ZetaAtom::Z35) - MzvExpr(ZetaMonomial{ZetaAtom::Z3, ZetaAtom::Z5}, Rational(6293, 2048));
  Word w = parse_word("x^2yx^4y");
  EXPECT_EQ(at8().coeff(w), Scalar(8, e));
  Scalar diff = at8().coeff(w) - fams8().f(w);
  EXPECT_EQ(diff, Scalar(8, MzvExpr(ZetaMonomial{ZetaAtom::Z3, ZetaAtom::Z5}, Rational(-6293, 2048) + Rational(7, 2))));
}

TEST(AtCoeff, PathOrderedOracle) {
  // ψ̃ from the time-ordered exponential of c_{2n} I-kernels, then ψ̃·Φ_KZ.
  const auto& F = fams8();
  NCSeries psi_t(8, 2, Rational(1));
  std::vector<NCSeries> g(4);
  for (int k = 1; k <= 3; ++k) {
    g[k] = expand(LieElement::ad(2 * k, c2n(k)));
    NCSeries x = expand(at8().solution(k).x_element());
    for (const auto& [w, c] : x.coefficients()) psi_t.add(w, c * J1(k));
  }
  for (int l = 1; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m) {
      if (2 * l + 2 * m + 2 > 8) continue;
      NCSeries term = series_mul(g[l], g[m], 8, 2) + y_derivation(g[l], g[m], 8, 2);
      for (const auto& [w, c] : term.coefficients()) psi_t.add(w, c * J2(l, m));
    }
  NCSeries phi = substitution_product(psi_t, F.series(Family::KZ));
  for (const Word& w : words_up_to(8, 2, 1)) {
    if (w.y_degree() == 0) continue;
    ASSERT_EQ(phi.coeff(w), at8().coeff(w)) << w.to_string();
  }
}

TEST(AtCoeff, MissingSolution) {
  AtSolutions none;
  EXPECT_THROW(at_coeff(parse_word("x^2yxy"), none, fams8()), RangeError);
  EXPECT_EQ(at_coeff(parse_word("xy"), none, fams8()), fams8().u(parse_word("xy")));
}
