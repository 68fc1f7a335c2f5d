#include <gtest/gtest.h>

#include <random>

#include "drinfeld/errors.hpp"
#include "drinfeld/series.hpp"

using namespace drinfeld;

namespace {

NCSeries sparse(std::mt19937& rng, int max_len) {
  NCSeries s(max_len, 2, Rational(1));
  std::uniform_int_distribution<long> num(-4, 4);
  std::bernoulli_distribution keep(0.25);
  for (const Word& w : words_up_to(max_len, 2, 1))
    if (keep(rng)) s.add(w, Scalar(Rational(num(rng), 1 + static_cast<long>(rng() % 3))));
  return s;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational::parse("1/"), ParseError);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, SumMatchesCrossMultiplication) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-100000, 100000), p(1, 100000);
  for (int i = 0; i < 1000; ++i) {
    long a = d(rng), b = p(rng), c = d(rng), e = p(rng);
    Rational s = Rational(a, b) + Rational(c, e);
    mpz_class num = mpz_class(a) * e + mpz_class(c) * b, den = mpz_class(b) * e;
    EXPECT_EQ(s.numerator() * den, num * s.denominator());
    EXPECT_EQ(Rational::parse(s.to_string()), s);
  }
}

TEST(Word, ParseAndRender) {
  Word w = parse_word("x^2yx^4y");
  EXPECT_EQ(w.letters(), "xxyxxxxy");
  EXPECT_EQ(parse_word("xxyxxxxy"), w);
  EXPECT_EQ(parse_word("x^2 y x^4 y"), w);
  EXPECT_EQ(w.to_string(), "x^2yx^4y");
  EXPECT_EQ(w.y_degree(), 2);
  EXPECT_EQ(w.size(), 8);
  EXPECT_THROW(parse_word("x^0y"), ParseError);
  EXPECT_THROW(parse_word("xzy"), ParseError);
  EXPECT_THROW(parse_word(""), ParseError);
}

TEST(Word, Orders) {
  EXPECT_TRUE(lex_less(parse_word("xy"), parse_word("y")));
  EXPECT_TRUE(lex_less(parse_word("x"), parse_word("xy")));
  EXPECT_TRUE(parse_word("y") < parse_word("xy"));
  EXPECT_EQ(parse_word("xxy").reversed(), parse_word("yxx"));
  EXPECT_EQ(parse_word("xxy").swapped(), parse_word("yyx"));
}

TEST(Composition, WordConversion) {
  Composition c{4, 2};
  EXPECT_EQ(c.to_word(), parse_word("x^3yxy"));
  EXPECT_EQ(Composition::from_word(c.to_word()), c);
  EXPECT_EQ(parse_composition("(4,2)"), c);
  EXPECT_TRUE(c.admissible());
  EXPECT_FALSE(Composition({1, 2}).admissible());
  EXPECT_THROW(parse_composition("0,2"), ParseError);
}

TEST(Scalar, HomogeneityEnforced) {
  EXPECT_THROW(Scalar(3, MzvExpr::atom(ZetaAtom::Z5)), std::invalid_argument);
  EXPECT_NO_THROW(Scalar(8, MzvExpr::atom(ZetaAtom::Z35)));
}

TEST(Scalar, Rendering) {
  MzvExpr e = MzvExpr::atom(ZetaAtom::Z35) * Rational(2) -
              MzvExpr(ZetaMonomial{ZetaAtom::Z3, ZetaAtom::Z5}, Rational(7));
  Scalar s = Scalar(8, e) * Rational(1, 2);
  EXPECT_EQ(s.render(RenderStyle::PiPower), "(2ζ(3,5)-7ζ(3)ζ(5))/(512π^8)");
  EXPECT_EQ(Scalar().render(RenderStyle::PiPower), "0");
  EXPECT_EQ(Scalar(3, -MzvExpr::atom(ZetaAtom::Z3)).render(RenderStyle::TwoPiI), "-ζ(3)/(2πi)^3");
  EXPECT_THROW(Scalar(3, MzvExpr::atom(ZetaAtom::Z3)).render(RenderStyle::PiPower), std::domain_error);
}

TEST(Series, ProductExamples) {
  NCSeries a(8, 2);
  a.add(parse_word("xy"), Scalar(1));
  NCSeries sq = series_mul(a, a);
  EXPECT_EQ(sq.coeff(parse_word("xy")), Scalar(2));
  EXPECT_EQ(sq.coeff(parse_word("xyxy")), Scalar(1));
  EXPECT_EQ(sq.constant(), Rational(1));

  NCSeries one(8, 2);
  EXPECT_TRUE(series_mul(a, one).same_coefficients(a));

  NCSeries p(8, 3), q(8, 3);
  p.add(parse_word("x^2y"), Scalar(Rational(3)));
  q.add(parse_word("xy^2"), Scalar(Rational(5)));
  EXPECT_EQ(series_mul(p, q).coeff(parse_word("x^2yxy^2")), Scalar(15));
}

TEST(Series, ProductIsAssociative) {
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    NCSeries a = sparse(rng, 6), b = sparse(rng, 6), c = sparse(rng, 6);
    EXPECT_TRUE(series_mul(series_mul(a, b), c).same_coefficients(series_mul(a, series_mul(b, c))));
  }
}

TEST(Series, InverseIsTwoSided) {
  std::mt19937 rng(5);
  NCSeries one(6, 2);
  for (int i = 0; i < 10; ++i) {
    NCSeries a = sparse(rng, 6);
    NCSeries inv = series_inverse(a);
    EXPECT_TRUE(series_mul(a, inv).same_coefficients(one));
    EXPECT_TRUE(series_mul(inv, a).same_coefficients(one));
  }
  NCSeries b(4, 2);
  b.add(parse_word("xy"), Scalar(1));
  NCSeries inv = series_inverse(b);
  EXPECT_EQ(inv.coeff(parse_word("xy")), Scalar(-1));
  EXPECT_EQ(inv.coeff(parse_word("xyxy")), Scalar(1));
  b.set_constant(Rational(2));
  EXPECT_THROW(series_inverse(b), MathError);
}

TEST(Series, TruncationRespected) {
  NCSeries s(3, 1);
  s.add(parse_word("xxxy"), Scalar(1));
  s.add(parse_word("yy"), Scalar(1));
  EXPECT_TRUE(s.coefficients().empty());
  EXPECT_THROW(s.set(parse_word("yy"), Scalar(1)), RangeError);
}
