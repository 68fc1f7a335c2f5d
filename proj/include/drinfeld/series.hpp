#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "drinfeld/mzv_expr.hpp"
#include "drinfeld/rational.hpp"
#include "drinfeld/word.hpp"

namespace drinfeld {

inline constexpr int kDefaultMaxLen = 8;
inline constexpr int kDefaultMaxYDeg = 2;

/// Truncated noncommutative power series 1·constant + Σ coeff(w)·w in x, y.
/// Words longer than max_len or of y-degree above max_y_deg are dropped.
class NCSeries {
public:
  using Coefficients = std::map<Word, Scalar>;

  explicit NCSeries(int max_len = kDefaultMaxLen, int max_y_deg = kDefaultMaxYDeg,
                    Rational constant = Rational(1));
  /// The constant series `constant` (use Rational(0) for the zero series).
  static NCSeries constant_series(const Rational& constant, int max_len = kDefaultMaxLen,
                                  int max_y_deg = kDefaultMaxYDeg);
  /// The single word w with coefficient 1 and zero constant term.
  static NCSeries monomial(const Word& w, int max_len = kDefaultMaxLen, int max_y_deg = kDefaultMaxYDeg);

  int max_len() const { return max_len_; }
  int max_y_deg() const { return max_y_deg_; }
  const Rational& constant() const { return constant_; }
  void set_constant(const Rational& c) { constant_ = c; }
  const Rational& mu() const { return mu_; }
  void set_mu(const Rational& mu) { mu_ = mu; }

  const Coefficients& coefficients() const { return coeffs_; }
  bool within_truncation(const Word& w) const {
    return w.size() <= max_len_ && w.y_degree() <= max_y_deg_;
  }
  /// Coefficient of w; zero for absent words and for the empty word use constant().
  Scalar coeff(const Word& w) const;
  /// Sets the coefficient; words outside the truncation throw RangeError.
  void set(const Word& w, const Scalar& s);
  /// Adds to the coefficient; words outside the truncation are silently dropped.
  void add(const Word& w, const Scalar& s);

  NCSeries truncated(int max_len, int max_y_deg) const;
  /// w(x,y) -> w(y,x) on every word.
  NCSeries swapped() const;
  /// Φ(-x,-y): multiplies the coefficient of w by (-1)^{|w|}.
  NCSeries negated_letters() const;

  NCSeries& operator+=(const NCSeries& o);
  NCSeries& operator-=(const NCSeries& o);
  NCSeries& operator*=(const Rational& r);
  friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
  friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
  friend NCSeries operator*(NCSeries a, const Rational& r) { return a *= r; }

  bool is_zero() const { return constant_.is_zero() && coeffs_.empty(); }
  /// Equal constants and coefficients; truncation parameters and mu are ignored.
  bool same_coefficients(const NCSeries& o) const;

  std::string to_string(RenderStyle style = RenderStyle::TwoPiI) const;

private:
  int max_len_;
  int max_y_deg_;
  Rational constant_;
  Rational mu_{0};
  Coefficients coeffs_;
};

/// Concatenation product, truncated at the requested length and y-degree.
NCSeries series_mul(const NCSeries& a, const NCSeries& b, int max_len, int max_y_deg);
/// Truncation taken as the smaller of the two operands'.
NCSeries series_mul(const NCSeries& a, const NCSeries& b);
/// Multiplicative inverse of a series with constant term 1, by the geometric
/// series 1 - r + r² - ... with r = a - 1. Throws MathError otherwise.
NCSeries series_inverse(const NCSeries& a);
/// ab - ba.
NCSeries commutator(const NCSeries& a, const NCSeries& b);

/// All words of length in [min_len, max_len] with y-degree <= max_y_deg, shortlex order.
std::vector<Word> words_up_to(int max_len, int max_y_deg, int min_len = 0);

}  // namespace drinfeld
