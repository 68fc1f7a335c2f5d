#pragma once

#include <map>
#include <string>
#include <vector>

#include "drinfeld/linalg.hpp"
#include "drinfeld/mzv_expr.hpp"
#include "drinfeld/rational.hpp"
#include "drinfeld/word.hpp"

namespace drinfeld {

/// Finite rational linear combination of keys, zero terms never stored.
template <class Key>
class Combination {
public:
  using Terms = std::map<Key, Rational>;

  Combination() = default;
  explicit Combination(const Key& k, const Rational& c = Rational(1)) { add(k, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// Sum of all coefficients.
  Rational mass() const {
    Rational m;
    for (const auto& [k, c] : terms_) m += c;
    return m;
  }

  void add(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Combination& operator*=(const Rational& r) {
    if (r.is_zero()) terms_.clear();
    for (auto& [k, c] : terms_) c *= r;
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(Combination a, const Rational& r) { return a *= r; }
  friend bool operator==(const Combination&, const Combination&) = default;

  /// "4 xxyy + 2 xyxy" style; `render` maps a key to text.
  template <class F>
  std::string to_string(F render) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      Rational a = c;
      if (!first) s += a.sign() < 0 ? " - " : " + ";
      else if (a.sign() < 0) s += "-";
      if (a.sign() < 0) a = -a;
      if (a != Rational(1)) s += a.to_string() + " ";
      s += render(k);
      first = false;
    }
    return s;
  }

private:
  Terms terms_;
};

using WordPoly = Combination<Word>;
using CompositionPoly = Combination<Composition>;

std::string to_string(const WordPoly& p);
std::string to_string(const CompositionPoly& p);

WordPoly shuffle(const Word& u, const Word& v);
WordPoly shuffle(const WordPoly& p, const WordPoly& q);
CompositionPoly stuffle(const Composition& u, const Composition& v);
CompositionPoly stuffle(const CompositionPoly& p, const CompositionPoly& q);

/// Combination of admissible words with the same shuffle-regularized zeta
/// value as w (ζ(x) = ζ(y) = 0).
WordPoly shuffle_regularize(const Word& w);
WordPoly shuffle_regularize(const WordPoly& p);
/// Combination of admissible compositions with the same stuffle-regularized
/// value as c (ζ(1) = 0).
CompositionPoly stuffle_regularize(const Composition& c);

/// ζ(x^a y x^b) = (-1)^b C(a+b, a) ζ(a+b+1). Requires a + b >= 1.
CompositionPoly zeta_deg1_closed_form(int a, int b);

CompositionPoly to_compositions(const WordPoly& p);
WordPoly to_words(const CompositionPoly& p);

Rational bernoulli(int n);
/// ζ(2n) as a rational multiple of ζ(2)^n. Throws std::invalid_argument on odd or non-positive input.
MzvExpr zeta_even(int two_n);
/// ζ(n) in the atom basis: ζ(1) = 0, even values through zeta_even, odd 3..11 are atoms.
MzvExpr single_zeta(int n);
/// ζ(a,1) from 2ζ(a,1) = aζ(a+1) - Σ_{b=2}^{a-1} ζ(b)ζ(a+1-b).
MzvExpr euler_a1(int a);

/// Reductions of admissible compositions of depth <= 2 to the basis monomials.
class ReductionTable {
public:
  ReductionTable() = default;
  ReductionTable(int max_weight, std::map<Composition, MzvExpr> entries, bool fallback);

  int max_weight() const { return max_weight_; }
  bool from_fallback() const { return fallback_; }
  const std::map<Composition, MzvExpr>& entries() const { return entries_; }
  bool contains(const Composition& c) const { return entries_.count(c) != 0; }
  /// Throws RangeError when the composition is not covered.
  const MzvExpr& at(const Composition& c) const;
  /// Linear extension over admissible compositions; the empty composition maps to 1.
  MzvExpr reduce(const CompositionPoly& p) const;

private:
  int max_weight_ = 0;
  std::map<Composition, MzvExpr> entries_;
  bool fallback_ = false;
};

/// Relation matrix of the harvest at weight N. Columns: the weight-N zeta
/// values (depth 1 then depth 2, lexicographic), followed by the basis
/// monomials. `lower` must already reduce every single zeta below N.
LabeledMatrix harvest_matrix(int weight, const ReductionTable& lower);

/// Reduces every admissible depth <= 2 composition of weight <= max_weight
/// by harvesting double shuffle relations weight by weight. Weight 10 only
/// carries ζ(10). Throws RankDeficient if some value stays unreduced and
/// MathError if the entries disagree with numeric evaluation.
ReductionTable build_reduction_table(int max_weight);
/// The static table (weights <= 8), verified numerically when loaded.
ReductionTable fallback_reduction_table();
/// build_reduction_table, falling back to the static table for max_weight <= 8.
ReductionTable load_reduction_table(int max_weight);
/// Process-wide cached table covering at least max_weight.
const ReductionTable& shared_reduction_table(int max_weight = 8);

/// Shuffle-regularized ζ(w) in the basis.
MzvExpr zeta_word(const Word& w, const ReductionTable& table);
/// Stuffle-regularized ζ(c); equal to the shuffle-regularized value for depth <= 2 and at most one leading 1.
MzvExpr zeta_composition(const Composition& c, const ReductionTable& table);

/// Numerical value of an expression, each atom accurate to target_error.
/// Throws std::invalid_argument for target_error below 1e-10.
long double numeric_eval(const MzvExpr& m, long double target_error = 1e-10L);
/// ζ(s), s >= 2, by Euler-Maclaurin.
long double numeric_zeta(int s);
/// ζ(a,b), a >= 2, b >= 1.
long double numeric_double_zeta(int a, int b);

}  // namespace drinfeld
