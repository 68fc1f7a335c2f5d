#include "drinfeld/assoc_at.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

Rational binom(int n, int k) { return Rational(binomial(n, k)); }
Rational sign(int k) { return Rational(neg_one_pow(k)); }

using ScalarKey = std::pair<int, ZetaMonomial>;

void collect_keys(const Scalar& s, std::vector<ScalarKey>& keys) {
  for (const auto& [k, e] : s.terms())
    for (const auto& [m, r] : e.terms()) {
      ScalarKey key{k, m};
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
}

// Σ_{p,s: 2s = a+b-p} w(s)·c_{2s}(C(2s,a)(-1)^a - C(2s,b)(-1)^b) u_{x^p y x^c}
// + Σ_{q,s: 2s = b+c-q} w(s)·c_{2s} C(2s,b)(-1)^b u_{x^a y x^q}, w = I1 or J1.
template <class Weight>
Scalar degree1_action_sums(int a, int b, int c, Weight weight, const AssociatorFamilies& fam) {
  Scalar s;
  for (int k = 1; 2 * k <= a + b; ++k) {
    int p = a + b - 2 * k;
    Rational m = binom(2 * k, a) * sign(a) - binom(2 * k, b) * sign(b);
    if (!m.is_zero()) s += c2n(k) * fam.u(Word::xyx(p, c)) * (weight(k) * m);
  }
  for (int k = 1; 2 * k <= b + c; ++k) {
    int q = b + c - 2 * k;
    Rational m = binom(2 * k, b) * sign(b);
    if (!m.is_zero()) s += c2n(k) * fam.u(Word::xyx(a, q)) * (weight(k) * m);
  }
  return s;
}

// Coefficient of c_{α,β} in the equation for x^a y x^b y x^c, before the I1/J1 factor.
Rational cab_entry(int alpha, int beta, int a, int c) {
  return binom(alpha, a) * binom(beta, c) * sign(a + beta - c) - binom(alpha, c) * binom(beta, a) * sign(a + alpha - c);
}

std::vector<std::pair<int, int>> cab_unknowns(int n) {
  std::vector<std::pair<int, int>> out;
  for (int alpha = 0; 2 * alpha < 2 * n - 1; ++alpha) out.emplace_back(alpha, 2 * n - 1 - alpha);
  return out;
}

}  // namespace

PolynomialQ::PolynomialQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolynomialQ PolynomialQ::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return PolynomialQ(std::move(v));
}

void PolynomialQ::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational PolynomialQ::operator()(const Rational& s) const {
  Rational r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * s + *it;
  return r;
}

PolynomialQ PolynomialQ::antiderivative() const {
  std::vector<Rational> v(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  return PolynomialQ(std::move(v));
}

PolynomialQ PolynomialQ::pow(unsigned e) const {
  PolynomialQ r({Rational(1)}), base = *this;
  for (; e; e >>= 1) {
    if (e & 1u) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

PolynomialQ& PolynomialQ::operator+=(const PolynomialQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolynomialQ& PolynomialQ::operator-=(const PolynomialQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return PolynomialQ();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolynomialQ(std::move(v));
}

Rational integrate_poly(const PolynomialQ& p, const Rational& lo, const Rational& hi) {
  PolynomialQ f = p.antiderivative();
  return f(hi) - f(lo);
}

PolynomialQ kernel_poly(int n) {
  if (n < 0) throw std::invalid_argument("kernel_poly needs n >= 0");
  return PolynomialQ({Rational(0), Rational(-1), Rational(1)}).pow(static_cast<unsigned>(2 * n));
}

Rational I1(int n) {
  if (n < 1) throw std::invalid_argument("I1 needs n >= 1");
  mpz_class f = factorial(static_cast<unsigned>(2 * n));
  return Rational(f * f, factorial(static_cast<unsigned>(4 * n + 1)));
}

Rational J1(int n) { return I1(n) * Rational(1, 2); }

Rational J2(int l, int m) {
  if (l < 1 || m < 1) throw std::invalid_argument("J2 needs l, m >= 1");
  PolynomialQ inner = kernel_poly(m).antiderivative();
  return integrate_poly(kernel_poly(l) * inner, Rational(0), Rational(1, 2));
}

Rational incomplete_beta(const Rational& x, int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("incomplete_beta needs integer a, b >= 1");
  PolynomialQ t = PolynomialQ::monomial(a - 1);
  PolynomialQ one_minus = PolynomialQ({Rational(1), Rational(-1)}).pow(static_cast<unsigned>(b - 1));
  return integrate_poly(t * one_minus, Rational(0), x);
}

Scalar c2n(int n) {
  if (n < 1) throw std::invalid_argument("c2n needs n >= 1");
  mpz_class f = factorial(static_cast<unsigned>(2 * n));
  Rational k(2 * factorial(static_cast<unsigned>(4 * n + 1)), f * f);
  return Scalar(2 * n + 1, single_zeta(2 * n + 1) * k);
}

bool check_c2n(int n, const AssociatorFamilies& fam) {
  Scalar lhs_base = c2n(n) * I1(n);
  for (int j = 0; j <= 2 * n; ++j)
    if (!(lhs_base * (binom(2 * n, j) * sign(j)) == fam.u(Word::xyx(j, 2 * n - j)) * Rational(-2))) return false;
  return true;
}

LieElement AtSolution::x_element() const {
  LieElement e = LieElement::ad(2 * n, c2n);
  for (const auto& [ab, s] : cab) e.add_bracket(ab.first, ab.second, -s);
  return e;
}

AtSolution solve_cab(int n, const AssociatorFamilies& fam) {
  if (n < 1) throw std::invalid_argument("solve_cab needs n >= 1");
  if (fam.table().max_weight() < 2 * n + 1)
    throw RangeError("solving for c_{α,β} at n = " + std::to_string(n) + " needs the reduction table to weight " +
                     std::to_string(2 * n + 1) + " (have " + std::to_string(fam.table().max_weight()) + ")");
  if (!check_c2n(n, fam)) throw MathError("c_{2n} closed form disagrees with the degree-1 coefficients at n = " + std::to_string(n));

  const auto unknowns = cab_unknowns(n);
  const Rational i1 = I1(n);
  const auto weight = [](int s) { return I1(s); };
  std::vector<RationalVector> rows;
  std::vector<std::string> row_labels, col_labels;
  std::vector<Scalar> rhs_scalars;
  for (int a = 0; a <= 2 * n - 1; ++a)
    for (int b = 0; a + b <= 2 * n - 1; ++b) {
      int c = 2 * n - 1 - a - b;
      Word w = Word::xyxyx(a, b, c);
      RationalVector row;
      for (const auto& [alpha, beta] : unknowns) row.push_back(i1 * cab_entry(alpha, beta, a, c));
      rows.push_back(std::move(row));
      row_labels.push_back(w.to_string());
      rhs_scalars.push_back(fam.u(w) * Rational(-2) - degree1_action_sums(a, b, c, weight, fam));
    }
  for (const auto& [alpha, beta] : unknowns) col_labels.push_back("c" + std::to_string(alpha) + "," + std::to_string(beta));

  std::vector<ScalarKey> keys;
  for (const auto& s : rhs_scalars) collect_keys(s, keys);
  std::vector<RationalVector> rhs;
  for (const auto& key : keys) {
    RationalVector v;
    for (const auto& s : rhs_scalars) v.push_back(s.at(key.first).coefficient(key.second));
    rhs.push_back(std::move(v));
  }

  AtSolution sol;
  sol.n = n;
  sol.c2n = c2n(n);
  sol.equations = rows.size();
  SolveResult res = solve_overdetermined(LabeledMatrix(std::move(rows), row_labels, col_labels), rhs);
  if (auto* bad = std::get_if<Inconsistent>(&res))
    throw MathError("c_{α,β} system at n = " + std::to_string(n) + " is inconsistent (equation " + bad->witness_label + ")");
  if (auto* under = std::get_if<Underdetermined>(&res))
    throw MathError("c_{α,β} system at n = " + std::to_string(n) + " has rank " + std::to_string(under->rank) +
                    " < " + std::to_string(under->unknowns));
  const auto& values = std::get<Solution>(res).values;
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    Scalar s;
    for (std::size_t k = 0; k < keys.size(); ++k)
      if (!values[k][j].is_zero()) s += Scalar(keys[k].first, MzvExpr(keys[k].second, values[k][j]));
    sol.cab.emplace(unknowns[j], std::move(s));
  }
  return sol;
}

Scalar at_coeff(const Word& w, const AtSolutions& sols, const AssociatorFamilies& fam) {
  const int deg = w.y_degree(), len = w.size();
  if (deg > 2) throw RangeError("word " + w.to_string() + " has y-degree above 2");
  if (deg == 0 || len < 2) return Scalar();
  const std::vector<int> r = w.x_runs();
  const auto weight = [](int s) { return J1(s); };
  if (deg == 1) {
    if (len % 2 == 0) return fam.u(w);
    int n = (len - 1) / 2;
    Scalar v = fam.u(w) + c2n(n) * (J1(n) * sign(r[0]) * binom(2 * n, r[0]));
    if (!v.is_zero()) throw MathError("odd degree-1 coefficient of Φ_AT does not vanish at " + w.to_string());
    return v;
  }
  const int a = r[0], b = r[1], c = r[2];
  if (len % 2 != 0) {
    int n = (len - 1) / 2;
    auto it = sols.find(n);
    if (it == sols.end()) throw RangeError("no c_{α,β} solution for n = " + std::to_string(n));
    Scalar v = fam.u(w) + degree1_action_sums(a, b, c, weight, fam);
    for (const auto& [ab, s] : it->second.cab) v += s * (J1(n) * cab_entry(ab.first, ab.second, a, c));
    if (!v.is_zero()) throw MathError("odd degree-2 coefficient of Φ_AT does not vanish at " + w.to_string());
    return v;
  }
  const int n = len / 2;
  Scalar v = fam.u(w) + degree1_action_sums(a, b, c, weight, fam);
  for (int l = 1; l < n - 1; ++l) {
    int m = n - 1 - l;
    Rational k = binom(2 * l, a) * binom(2 * m, c) * sign(a - c) + binom(2 * m, a) * binom(2 * l, b) * sign(a + b) -
                 binom(2 * m, c) * binom(2 * l, b) * sign(b + c);
    if (!k.is_zero()) v += c2n(l) * c2n(m) * (J2(l, m) * k);
  }
  return v;
}

const AtSolution& AtCoefficients::solution(int n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = sols_.find(n);
    if (it != sols_.end()) return it->second;
  }
  AtSolution s = solve_cab(n, *fam_);
  std::lock_guard lock(mutex_);
  return sols_.try_emplace(n, std::move(s)).first->second;
}

Scalar AtCoefficients::coeff(const Word& w) const {
  if (w.y_degree() == 2 && w.size() % 2 != 0) solution((w.size() - 1) / 2);
  AtSolutions snapshot;
  {
    std::lock_guard lock(mutex_);
    snapshot = sols_;
  }
  return at_coeff(w, snapshot, *fam_);
}

NCSeries AtCoefficients::series(int max_len, int max_y_deg) const {
  if (max_y_deg > 2) throw RangeError("Φ_AT coefficients stop at y-degree 2");
  NCSeries s(max_len, max_y_deg, Rational(1));
  s.set_mu(Rational(1));
  for (const Word& w : words_up_to(max_len, max_y_deg, 1)) s.add(w, coeff(w));
  return s;
}

}  // namespace drinfeld
