#include <gtest/gtest.h>

#include <thread>

#include "drinfeld/assoc_half.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/grt.hpp"

using namespace drinfeld;

namespace {

const AssociatorFamilies& fams() {
  static AssociatorFamilies f(shared_reduction_table(8));
  return f;
}

Scalar zeta_over(int power, std::initializer_list<ZetaAtom> atoms, Rational c) {
  return Scalar(power, MzvExpr(ZetaMonomial(atoms), c));
}

void expect_same_on_words(const NCSeries& got, const NCSeries& want, const char* what) {
  for (const Word& w : words_up_to(8, 2, 1)) ASSERT_EQ(got.coeff(w), want.coeff(w)) << what << " at " << w.to_string();
}

}  // namespace

TEST(Families, Names) {
  for (Family f : {Family::KZ, Family::AKZ, Family::Psi, Family::HalfPsi, Family::Half})
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("quarter"), ParseError);
}

TEST(Families, Delta) {
  EXPECT_TRUE(delta(0, 0));
  EXPECT_FALSE(delta(0, 1));
  EXPECT_TRUE(delta(2, 2));
}

TEST(Families, KzExamples) {
  const auto& F = fams();
  EXPECT_EQ(F.u(parse_word("xy")), zeta_over(2, {ZetaAtom::Z2}, Rational(-1)));
  EXPECT_EQ(F.u(parse_word("xxy")), zeta_over(3, {ZetaAtom::Z3}, Rational(-1)));
  EXPECT_EQ(F.u(parse_word("yxx")), zeta_over(3, {ZetaAtom::Z3}, Rational(-1)));
  EXPECT_EQ(F.u(parse_word("x^2yx^2")), zeta_over(5, {ZetaAtom::Z5}, Rational(-6)));
  EXPECT_EQ(F.u(parse_word("xyxy")), zeta_over(4, {ZetaAtom::Z2, ZetaAtom::Z2}, Rational(3, 10)));
  EXPECT_EQ(F.u(parse_word("x^2yx^4y")), zeta_over(8, {ZetaAtom::Z35}, Rational(1)));
  EXPECT_TRUE(F.u(parse_word("x")).is_zero());
  EXPECT_TRUE(F.u(Word()).is_zero());
}

TEST(Families, AkzPsiHalfExamples) {
  const auto& F = fams();
  Word xxy = parse_word("xxy"), xy = parse_word("xy");
  EXPECT_EQ(F.akz(xxy), -F.u(xxy));
  EXPECT_EQ(F.akz(xy), F.u(xy));
  EXPECT_EQ(F.c(xxy), zeta_over(3, {ZetaAtom::Z3}, Rational(2)));
  EXPECT_TRUE(F.c(xy).is_zero());
  EXPECT_EQ(F.d(xxy), zeta_over(3, {ZetaAtom::Z3}, Rational(1)));
  EXPECT_TRUE(F.d(xy).is_zero());
  EXPECT_TRUE(F.f(xxy).is_zero());
  EXPECT_EQ(F.f(xy), F.u(xy));
  EXPECT_EQ(F.coeff(Family::Half, xy), F.f(xy));
}

TEST(Families, HalfTheorem) {
  // (2ζ(3,5) - 7ζ(3)ζ(5))/(512π⁸) = (ζ(3,5) - 7/2 ζ(3)ζ(5))/(2πi)⁸
  MzvExpr e = MzvExpr::atom(ZetaAtom::Z35) - MzvExpr(ZetaMonomial{ZetaAtom::Z3, ZetaAtom::Z5}, Rational(7, 2));
  Scalar f = fams().f(parse_word("x^2yx^4y"));
  EXPECT_EQ(f, Scalar(8, e));
  EXPECT_EQ(f.render(RenderStyle::PiPower), "(2ζ(3,5)-7ζ(3)ζ(5))/(512π^8)");
}

TEST(Families, OracleIdentities) {
  const auto& F = fams();
  NCSeries kz = F.series(Family::KZ), akz = F.series(Family::AKZ), psi = F.series(Family::Psi),
           hpsi = F.series(Family::HalfPsi), half = F.series(Family::Half);
  expect_same_on_words(substitution_product(psi, kz), akz, "psi.kz = akz");
  expect_same_on_words(substitution_product(hpsi, hpsi), psi, "hpsi.hpsi = psi");
  expect_same_on_words(substitution_product(hpsi, kz), half, "hpsi.kz = half");
}

TEST(Families, ParityRules) {
  const auto& F = fams();
  for (const Word& w : words_up_to(8, 2, 1)) {
    if (w.y_degree() == 0) continue;
    EXPECT_EQ(F.akz(w), w.size() % 2 ? -F.u(w) : F.u(w));
    if (w.size() % 2) {
      EXPECT_TRUE(F.f(w).is_zero()) << w.to_string();
    } else if (w.y_degree() == 1) {
      EXPECT_TRUE(F.c(w).is_zero()) << w.to_string();
      EXPECT_EQ(F.f(w), F.u(w)) << w.to_string();
    }
    if (w.y_degree() == 1 || w.size() % 2) EXPECT_EQ(F.d(w) * Rational(2), F.c(w)) << w.to_string();
  }
  for (Family fam : {Family::KZ, Family::AKZ, Family::Psi, Family::HalfPsi, Family::Half})
    EXPECT_TRUE(degree1_antisymmetric(F.series(fam))) << family_name(fam);
}

TEST(Families, EvenDegreeOneIsRational) {
  const auto& F = fams();
  for (int len = 2; len <= 8; len += 2)
    for (int a = 0; a < len; ++a) {
      Scalar s = F.u(Word::xyx(a, len - 1 - a));
      ASSERT_EQ(s.terms().size(), 1u);
      const auto& [power, e] = *s.terms().begin();
      EXPECT_EQ(power, len);
      ASSERT_EQ(e.terms().size(), 1u);
      const ZetaMonomial& m = e.terms().begin()->first;
      EXPECT_EQ(m.count(ZetaAtom::Z2), len / 2);
      EXPECT_EQ(static_cast<int>(m.atoms().size()), len / 2);
    }
}

TEST(Families, HalfDiffersFromKzAndAkz) {
  const auto& F = fams();
  NCSeries half = F.series(Family::Half);
  EXPECT_FALSE(half.same_coefficients(F.series(Family::KZ)));
  EXPECT_FALSE(half.same_coefficients(F.series(Family::AKZ)));
  EXPECT_NE(F.f(parse_word("xxy")), F.u(parse_word("xxy")));
}

TEST(Families, RangeChecks) {
  const auto& F = fams();
  EXPECT_THROW(F.u(parse_word("xyyy")), RangeError);
  EXPECT_THROW(F.f(parse_word("x^7y^2")), RangeError);
  EXPECT_THROW(F.series(Family::KZ, 9, 2), RangeError);
}

TEST(Families, ConcurrentQueries) {
  AssociatorFamilies local(shared_reduction_table(8));
  std::vector<Word> words = words_up_to(8, 2, 2);
  std::vector<std::vector<Scalar>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (const Word& w : words) results[t].push_back(local.f(w));
    });
  for (auto& th : threads) th.join();
  for (std::size_t i = 0; i < words.size(); ++i)
    for (int t = 0; t < 4; ++t) ASSERT_EQ(results[t][i], fams().f(words[i]));
}
