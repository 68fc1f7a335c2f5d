#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "drinfeld/assoc_half.hpp"
#include "drinfeld/lie.hpp"

namespace drinfeld {

/// Polynomial in one variable over ℚ, coefficient i multiplying s^i.
class PolynomialQ {
public:
  PolynomialQ() = default;
  explicit PolynomialQ(std::vector<Rational> coeffs);
  static PolynomialQ monomial(int degree, const Rational& c = Rational(1));

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator()(const Rational& s) const;
  /// The antiderivative vanishing at 0.
  PolynomialQ antiderivative() const;
  PolynomialQ pow(unsigned e) const;

  PolynomialQ& operator+=(const PolynomialQ& o);
  PolynomialQ& operator-=(const PolynomialQ& o);
  friend PolynomialQ operator+(PolynomialQ a, const PolynomialQ& b) { return a += b; }
  friend PolynomialQ operator-(PolynomialQ a, const PolynomialQ& b) { return a -= b; }
  friend PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b);
  friend bool operator==(const PolynomialQ&, const PolynomialQ&) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

Rational integrate_poly(const PolynomialQ& p, const Rational& lo, const Rational& hi);
/// (s(s-1))^{2n}
PolynomialQ kernel_poly(int n);

/// ∫_0^1 (s(s-1))^{2n} ds = ((2n)!)²/(4n+1)!
Rational I1(int n);
/// ∫_0^{1/2} (s(s-1))^{2n} ds = I1(n)/2
Rational J1(int n);
/// ∫_0^{1/2} (s₁(s₁-1))^{2l} ∫_0^{s₁} (s₂(s₂-1))^{2m} ds₂ ds₁
Rational J2(int l, int m);
/// B_x(a,b) = ∫_0^x t^{a-1}(1-t)^{b-1} dt, a, b >= 1.
Rational incomplete_beta(const Rational& x, int a, int b);

/// 2(4n+1)! ζ(2n+1) / ((2πi)^{2n+1} ((2n)!)²)
Scalar c2n(int n);
/// I1(n)·c_{2n}·C(2n,j)(-1)^j = -2u_{x^j y x^{2n-j}} for every j.
bool check_c2n(int n, const AssociatorFamilies& fam);

struct AtSolution {
  int n = 0;
  Scalar c2n;
  /// c_{α,β} as they enter the linear system, α < β, α + β = 2n - 1.
  std::map<std::pair<int, int>, Scalar> cab;
  std::size_t equations = 0;

  /// x_{2n+1} in the ad basis. The bracket expansion used by the system has
  /// the opposite sign to [ad_x^α(y), ad_x^β(y)] (α + β is odd), so the stored
  /// c_{α,β} enter with a minus sign.
  LieElement x_element() const;
};

/// Assembles the (2n+1)n equations in the n unknowns c_{α,β} (one rational
/// system per basis monomial) and solves them exactly. Throws RangeError if
/// the table does not reach weight 2n+1 and MathError if the system is
/// inconsistent or underdetermined.
AtSolution solve_cab(int n, const AssociatorFamilies& fam);

using AtSolutions = std::map<int, AtSolution>;

/// Coefficient f̃_w of Φ_AT. Odd-length words are evaluated in full and must
/// come out zero (MathError otherwise); odd degree-2 words need sols[(|w|-1)/2].
Scalar at_coeff(const Word& w, const AtSolutions& sols, const AssociatorFamilies& fam);

/// at_coeff with solutions computed on demand and cached.
class AtCoefficients {
public:
  explicit AtCoefficients(const AssociatorFamilies& fam) : fam_(&fam) {}
  const AtSolution& solution(int n) const;
  Scalar coeff(const Word& w) const;
  NCSeries series(int max_len = kDefaultMaxLen, int max_y_deg = kDefaultMaxYDeg) const;

private:
  const AssociatorFamilies* fam_;
  mutable std::mutex mutex_;
  mutable AtSolutions sols_;
};

}  // namespace drinfeld
