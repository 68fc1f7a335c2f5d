#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/mzv.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

/// Lie element of y-degree <= 2 in the basis ad_x^a(y), [ad_x^α(y), ad_x^β(y)] (α < β).
/// ad_x(y) = [x, y] = xy - yx throughout.
class LieElement {
public:
  using Deg1 = std::map<int, Scalar>;
  using Deg2 = std::map<std::pair<int, int>, Scalar>;

  LieElement() = default;
  static LieElement ad(int a, const Scalar& coeff = Scalar(1));
  /// coeff·[ad_x^α(y), ad_x^β(y)]; normalized to α < β (α = β gives zero).
  static LieElement bracket(int alpha, int beta, const Scalar& coeff = Scalar(1));

  const Deg1& deg1() const { return deg1_; }
  const Deg2& deg2() const { return deg2_; }
  bool is_zero() const { return deg1_.empty() && deg2_.empty(); }
  Scalar coeff(int a) const;
  Scalar coeff(int alpha, int beta) const;

  void add_ad(int a, const Scalar& s);
  void add_bracket(int alpha, int beta, const Scalar& s);

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& r);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(LieElement a, const Rational& r) { return a *= r; }
  friend bool operator==(const LieElement&, const LieElement&) = default;

  std::string to_string() const;

private:
  Deg1 deg1_;
  Deg2 deg2_;
};

bool is_lyndon(const Word& w);
/// All Lyndon words of the given length with y-degree <= max_y_deg, lexicographic with x < y.
std::vector<Word> lyndon_words(int length, int max_y_deg);
/// w = uv with v the longest proper Lyndon suffix. Requires |w| >= 2 and w Lyndon.
std::pair<Word, Word> standard_factorization(const Word& w);
/// The bracketing γ(w) expanded in the free associative algebra.
WordPoly gamma_polynomial(const Word& w);
/// γ(w) in the ad basis; w must be Lyndon of y-degree 1 or 2.
LieElement gamma(const Word& w);

/// Associative expansion; words beyond max_len are dropped.
NCSeries expand(const LieElement& e, int max_len = kDefaultMaxLen, int max_y_deg = kDefaultMaxYDeg);
/// Inverse of expand on y-degree 1 and 2 parts. Throws MathError if the
/// series is not a Lie element (pure x / pure y words, or an inconsistent solve).
LieElement to_lie_element(const NCSeries& s);

/// Σ over the y letters of every word: the y replaced by [y, g]. The derivation
/// x -> 0, y -> [y, g] applied to s.
NCSeries y_derivation(const NCSeries& g, const NCSeries& s, int max_len, int max_y_deg);
/// γΦ + [y, γ]∂_yΦ, truncated like phi.
NCSeries grt_lie_action(const LieElement& g, const NCSeries& phi);
/// {p, q} = [p, q] + D_p q - D_q p on series, D_p: x -> 0, y -> [y, p].
NCSeries ihara_bracket_series(const NCSeries& p, const NCSeries& q, int max_len, int max_y_deg);
/// Ihara bracket of two y-degree 1 elements, re-expressed in the ad basis.
LieElement ihara_bracket(const LieElement& p, const LieElement& q);

}  // namespace drinfeld
