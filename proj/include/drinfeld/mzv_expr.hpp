#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/rational.hpp"

namespace drinfeld {

/// The fixed set of irreducible symbols. Z35 stands for ζ(3,5).
enum class ZetaAtom : std::uint8_t { Z2, Z3, Z5, Z7, Z9, Z11, Z35 };

int atom_weight(ZetaAtom a);
/// "z2", "z3", ..., "z35" (the JSON spelling).
std::string atom_name(ZetaAtom a);
/// "ζ(2)", ..., "ζ(3,5)".
std::string atom_symbol(ZetaAtom a);
ZetaAtom atom_from_name(std::string_view name);
/// The atom for the single zeta value ζ(n), n odd in [3, 11], or ζ(2).
std::optional<ZetaAtom> single_zeta_atom(int n);

/// A commutative product of atoms, kept as a sorted multiset. The empty
/// monomial is 1.
class ZetaMonomial {
public:
  ZetaMonomial() = default;
  ZetaMonomial(std::initializer_list<ZetaAtom> atoms);
  explicit ZetaMonomial(std::vector<ZetaAtom> atoms);

  const std::vector<ZetaAtom>& atoms() const { return atoms_; }
  bool is_one() const { return atoms_.empty(); }
  int weight() const;
  int count(ZetaAtom a) const;

  ZetaMonomial operator*(const ZetaMonomial& o) const;

  /// "ζ(3)^2ζ(2)"; ζ(2) last, everything else ascending. "1" for the unit.
  std::string to_string() const;

  friend bool operator==(const ZetaMonomial&, const ZetaMonomial&) = default;

private:
  std::vector<ZetaAtom> atoms_;
};

/// Display order: by weight, then by power of ζ(2), then by number of atoms,
/// then by atoms. Reproduces the column order of the weight <= 8 basis table.
struct MonomialOrder {
  bool operator()(const ZetaMonomial& a, const ZetaMonomial& b) const;
};

/// All monomials of the given weight in the atom set {ζ(2), ζ(3), ζ(5), ζ(7), ζ(9), ζ(11), ζ(3,5)}.
std::vector<ZetaMonomial> monomials_of_weight(int weight);

/// Exact rational linear combination of zeta monomials.
class MzvExpr {
public:
  using Terms = std::map<ZetaMonomial, Rational, MonomialOrder>;

  MzvExpr() = default;
  explicit MzvExpr(const Rational& constant);
  MzvExpr(const ZetaMonomial& m, const Rational& coeff = Rational(1));
  static MzvExpr atom(ZetaAtom a) { return MzvExpr(ZetaMonomial{a}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ZetaMonomial& m) const;
  void add_term(const ZetaMonomial& m, const Rational& c);

  /// Weight shared by all terms, or nullopt for zero / mixed expressions.
  std::optional<int> homogeneous_weight() const;
  bool is_homogeneous_of_weight(int w) const;
  /// Part of the expression of the given weight.
  MzvExpr weight_component(int w) const;

  MzvExpr& operator+=(const MzvExpr& o);
  MzvExpr& operator-=(const MzvExpr& o);
  MzvExpr& operator*=(const Rational& r);
  friend MzvExpr operator+(MzvExpr a, const MzvExpr& b) { return a += b; }
  friend MzvExpr operator-(MzvExpr a, const MzvExpr& b) { return a -= b; }
  friend MzvExpr operator*(MzvExpr a, const Rational& r) { return a *= r; }
  friend MzvExpr operator*(const Rational& r, MzvExpr a) { return a *= r; }
  MzvExpr operator*(const MzvExpr& o) const;
  MzvExpr operator-() const;

  friend bool operator==(const MzvExpr&, const MzvExpr&) = default;

  /// "ζ(3)^2 - 32/105 ζ(2)^3"; "0" for zero.
  std::string to_string() const;

private:
  Terms terms_;
};

enum class RenderStyle { TwoPiI, PiPower };

/// Graded coefficient ring: a finite sum of MzvExpr_k / (2πi)^k where the
/// expression at key k is homogeneous of weight k.
class Scalar {
public:
  using Terms = std::map<int, MzvExpr>;

  Scalar() = default;
  /// Rational scalar (key 0).
  Scalar(const Rational& r);  // NOLINT(google-explicit-constructor)
  Scalar(long r) : Scalar(Rational(r)) {}  // NOLINT(google-explicit-constructor)
  /// expr / (2πi)^power; throws std::invalid_argument unless expr is zero or
  /// homogeneous of weight `power`.
  Scalar(int power, MzvExpr expr);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The expression at key k (zero when absent).
  MzvExpr at(int power) const;
  /// Rational value if the scalar is a pure rational (key 0 only).
  std::optional<Rational> as_rational() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Rational& r);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Rational& r) { return a *= r; }
  friend Scalar operator*(const Rational& r, Scalar a) { return a *= r; }
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// True when every key is even (the π-power rendering is available).
  bool all_powers_even() const;

  /// Deterministic rendering. PiPower rewrites (2πi)^{2m} = (-1)^m 4^m π^{2m}
  /// and ζ(2) = π²/6; throws std::domain_error on odd keys.
  std::string render(RenderStyle style) const;

private:
  void insert(int power, MzvExpr expr);
  Terms terms_;
};

}  // namespace drinfeld
