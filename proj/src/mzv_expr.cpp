#include "drinfeld/mzv_expr.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

constexpr std::array<ZetaAtom, 7> kAllAtoms = {ZetaAtom::Z2, ZetaAtom::Z3, ZetaAtom::Z5, ZetaAtom::Z7,
                                               ZetaAtom::Z9, ZetaAtom::Z11, ZetaAtom::Z35};

mpz_class lcm_of_denominators(const std::vector<Rational>& cs) {
  mpz_class d = 1;
  for (const auto& c : cs) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get().get_den_mpz_t());
  return d;
}

// Integer-coefficient sum such as "2ζ(3,5)-7ζ(3)ζ(5)".
std::string integer_sum(const std::vector<std::pair<mpz_class, std::string>>& terms) {
  std::string s;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    mpz_class a = abs(c);
    if (c < 0) s += "-";
    else if (!first) s += "+";
    if (mono.empty()) s += a.get_str();
    else if (a != 1) s += a.get_str() + mono;
    else s += mono;
    first = false;
  }
  return s;
}

struct Group {
  std::vector<Rational> coeffs;
  std::vector<std::string> monos;
};

// Renders Σ coeffs[i]·monos[i] · base^exponent with one common denominator.
// base_sym is "(2πi)" or "π"; negative exponents go below the fraction bar.
std::string render_group(const Group& g, const std::string& base_sym, int exponent) {
  mpz_class den = lcm_of_denominators(g.coeffs);
  std::vector<std::pair<mpz_class, std::string>> ints;
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
    mpq_class scaled = g.coeffs[i].get() * den;
    ints.emplace_back(scaled.get_num(), g.monos[i]);
  }
  std::string num = integer_sum(ints);
  bool multi = ints.size() > 1;
  std::string power = base_sym + "^" + std::to_string(std::abs(exponent));
  if (exponent < 0) {
    std::string n = multi ? "(" + num + ")" : num;
    if (den == 1) return n + "/" + power;
    return n + "/(" + den.get_str() + power + ")";
  }
  if (exponent == 0) {
    if (den == 1) return num;
    return (multi ? "(" + num + ")" : num) + "/" + den.get_str();
  }
  std::string n = (multi ? "(" + num + ")" : (num == "1" ? "" : (num == "-1" ? "-" : num))) + power;
  if (den == 1) return n;
  return n + "/" + den.get_str();
}

std::string join_groups(const std::vector<std::string>& groups) {
  if (groups.empty()) return "0";
  std::string s = groups.front();
  for (std::size_t i = 1; i < groups.size(); ++i) {
    const std::string& g = groups[i];
    if (!g.empty() && g[0] == '-') s += " - " + g.substr(1);
    else s += " + " + g;
  }
  return s;
}

}  // namespace

int atom_weight(ZetaAtom a) {
  switch (a) {
    case ZetaAtom::Z2: return 2;
    case ZetaAtom::Z3: return 3;
    case ZetaAtom::Z5: return 5;
    case ZetaAtom::Z7: return 7;
    case ZetaAtom::Z9: return 9;
    case ZetaAtom::Z11: return 11;
    case ZetaAtom::Z35: return 8;
  }
  throw std::logic_error("unknown atom");
}

std::string atom_name(ZetaAtom a) {
  return a == ZetaAtom::Z35 ? "z35" : "z" + std::to_string(atom_weight(a));
}

std::string atom_symbol(ZetaAtom a) {
  return a == ZetaAtom::Z35 ? "ζ(3,5)" : "ζ(" + std::to_string(atom_weight(a)) + ")";
}

ZetaAtom atom_from_name(std::string_view name) {
  for (ZetaAtom a : kAllAtoms)
    if (atom_name(a) == name) return a;
  throw ParseError("unknown zeta atom '" + std::string(name) + "'");
}

std::optional<ZetaAtom> single_zeta_atom(int n) {
  switch (n) {
    case 2: return ZetaAtom::Z2;
    case 3: return ZetaAtom::Z3;
    case 5: return ZetaAtom::Z5;
    case 7: return ZetaAtom::Z7;
    case 9: return ZetaAtom::Z9;
    case 11: return ZetaAtom::Z11;
    default: return std::nullopt;
  }
}

ZetaMonomial::ZetaMonomial(std::initializer_list<ZetaAtom> atoms) : ZetaMonomial(std::vector<ZetaAtom>(atoms)) {}

ZetaMonomial::ZetaMonomial(std::vector<ZetaAtom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
}

int ZetaMonomial::weight() const {
  int w = 0;
  for (ZetaAtom a : atoms_) w += atom_weight(a);
  return w;
}

int ZetaMonomial::count(ZetaAtom a) const {
  return static_cast<int>(std::count(atoms_.begin(), atoms_.end(), a));
}

ZetaMonomial ZetaMonomial::operator*(const ZetaMonomial& o) const {
  std::vector<ZetaAtom> all = atoms_;
  all.insert(all.end(), o.atoms_.begin(), o.atoms_.end());
  return ZetaMonomial(std::move(all));
}

std::string ZetaMonomial::to_string() const {
  if (atoms_.empty()) return "1";
  std::string s;
  auto emit = [&](ZetaAtom a) {
    int k = count(a);
    if (k == 0) return;
    s += atom_symbol(a);
    if (k > 1) s += "^" + std::to_string(k);
  };
  for (ZetaAtom a : kAllAtoms)
    if (a != ZetaAtom::Z2) emit(a);
  emit(ZetaAtom::Z2);
  return s;
}

bool MonomialOrder::operator()(const ZetaMonomial& a, const ZetaMonomial& b) const {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  int za = a.count(ZetaAtom::Z2), zb = b.count(ZetaAtom::Z2);
  if (za != zb) return za < zb;
  if (a.atoms().size() != b.atoms().size()) return a.atoms().size() < b.atoms().size();
  return b.atoms() < a.atoms();
}

std::vector<ZetaMonomial> monomials_of_weight(int weight) {
  std::vector<ZetaMonomial> out;
  std::vector<ZetaAtom> current;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t i = start; i < kAllAtoms.size(); ++i) {
      int w = atom_weight(kAllAtoms[i]);
      if (w > remaining) continue;
      current.push_back(kAllAtoms[i]);
      self(self, i, remaining - w);
      current.pop_back();
    }
  };
  if (weight >= 0) rec(rec, 0, weight);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

MzvExpr::MzvExpr(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(ZetaMonomial{}, constant);
}

MzvExpr::MzvExpr(const ZetaMonomial& m, const Rational& coeff) {
  if (!coeff.is_zero()) terms_.emplace(m, coeff);
}

Rational MzvExpr::coefficient(const ZetaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MzvExpr::add_term(const ZetaMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> MzvExpr::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  int w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_)
    if (m.weight() != w) return std::nullopt;
  return w;
}

bool MzvExpr::is_homogeneous_of_weight(int w) const {
  for (const auto& [m, c] : terms_)
    if (m.weight() != w) return false;
  return true;
}

MzvExpr MzvExpr::weight_component(int w) const {
  MzvExpr r;
  for (const auto& [m, c] : terms_)
    if (m.weight() == w) r.terms_.emplace(m, c);
  return r;
}

MzvExpr& MzvExpr::operator+=(const MzvExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MzvExpr& MzvExpr::operator-=(const MzvExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MzvExpr& MzvExpr::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= r;
  return *this;
}

MzvExpr MzvExpr::operator*(const MzvExpr& o) const {
  MzvExpr r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

MzvExpr MzvExpr::operator-() const {
  MzvExpr r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

std::string MzvExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    if (m.is_one()) s += a.to_string();
    else if (a == Rational(1)) s += m.to_string();
    else s += a.to_string() + " " + m.to_string();
    first = false;
  }
  return s;
}

Scalar::Scalar(const Rational& r) {
  if (!r.is_zero()) terms_.emplace(0, MzvExpr(r));
}

Scalar::Scalar(int power, MzvExpr expr) { insert(power, std::move(expr)); }

void Scalar::insert(int power, MzvExpr expr) {
  if (expr.is_zero()) return;
  if (power < 0) throw std::invalid_argument("negative (2πi) power");
  if (!expr.is_homogeneous_of_weight(power))
    throw std::invalid_argument("scalar homogeneity violated: weight of '" + expr.to_string() +
                                "' differs from (2πi) power " + std::to_string(power));
  auto [it, inserted] = terms_.try_emplace(power, expr);
  if (!inserted) {
    it->second += expr;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MzvExpr Scalar::at(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? MzvExpr() : it->second;
}

std::optional<Rational> Scalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1 || terms_.begin()->first != 0) return std::nullopt;
  return terms_.begin()->second.coefficient(ZetaMonomial{});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [k, e] : o.terms_) insert(k, e);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [k, e] : o.terms_) insert(k, -e);
  return *this;
}

Scalar& Scalar::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, e] : terms_) e *= r;
  return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  for (const auto& [k1, e1] : terms_)
    for (const auto& [k2, e2] : o.terms_) r.insert(k1 + k2, e1 * e2);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [k, e] : r.terms_) e = -e;
  return r;
}

bool Scalar::all_powers_even() const {
  for (const auto& [k, e] : terms_)
    if (k % 2 != 0) return false;
  return true;
}

std::string Scalar::render(RenderStyle style) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> groups;
  if (style == RenderStyle::TwoPiI) {
    for (const auto& [k, e] : terms_) {
      Group g;
      for (const auto& [m, c] : e.terms()) {
        g.coeffs.push_back(c);
        g.monos.push_back(m.is_one() ? "" : m.to_string());
      }
      groups.push_back(render_group(g, "(2πi)", -k));
    }
    return join_groups(groups);
  }
  if (!all_powers_even())
    throw std::domain_error("pi-power rendering requires even powers of 2πi");
  // (2πi)^k = (-1)^{k/2} 2^k π^k and ζ(2)^j = π^{2j} / 6^j.
  std::map<int, MzvExpr> collected;
  for (const auto& [k, e] : terms_) {
    Rational base = Rational(neg_one_pow(k / 2)) * Rational::pow(Rational(2), static_cast<unsigned>(k));
    for (const auto& [m, c] : e.terms()) {
      int j = m.count(ZetaAtom::Z2);
      std::vector<ZetaAtom> rest;
      for (ZetaAtom a : m.atoms())
        if (a != ZetaAtom::Z2) rest.push_back(a);
      Rational coeff = c / (base * Rational::pow(Rational(6), static_cast<unsigned>(j)));
      collected[2 * j - k].add_term(ZetaMonomial(rest), coeff);
    }
  }
  for (const auto& [exponent, expr] : collected) {
    if (expr.is_zero()) continue;
    Group g;
    for (const auto& [m, c] : expr.terms()) {
      g.coeffs.push_back(c);
      g.monos.push_back(m.is_one() ? "" : m.to_string());
    }
    groups.push_back(render_group(g, "π", exponent));
  }
  return join_groups(groups);
}

}  // namespace drinfeld
