#include "drinfeld/lie.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

Word single(Letter l) {
  Word w;
  w.push_back(l);
  return w;
}

WordPoly poly_mul(const WordPoly& a, const WordPoly& b) {
  WordPoly out;
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) out.add(u.concat(v), c * d);
  return out;
}

WordPoly ad_poly(int a) {
  WordPoly p;
  for (int i = 0; i <= a; ++i) {
    Rational c(binomial(a, i));
    if ((a - i) % 2 != 0) c = -c;
    p.add(Word::xyx(i, a - i), c);
  }
  return p;
}

WordPoly bracket_poly(int alpha, int beta) {
  WordPoly pa = ad_poly(alpha), pb = ad_poly(beta);
  return poly_mul(pa, pb) - poly_mul(pb, pa);
}

// Splits a scalar into rational coordinates keyed by ((2πi) power, monomial).
using ScalarKey = std::pair<int, ZetaMonomial>;

void collect_keys(const Scalar& s, std::vector<ScalarKey>& keys) {
  for (const auto& [k, e] : s.terms())
    for (const auto& [m, r] : e.terms()) {
      ScalarKey key{k, m};
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
}

Rational coordinate(const Scalar& s, const ScalarKey& key) { return s.at(key.first).coefficient(key.second); }

Scalar from_coordinate(const ScalarKey& key, const Rational& r) {
  return r.is_zero() ? Scalar() : Scalar(key.first, MzvExpr(key.second, r));
}

}  // namespace

LieElement LieElement::ad(int a, const Scalar& coeff) {
  LieElement e;
  e.add_ad(a, coeff);
  return e;
}

LieElement LieElement::bracket(int alpha, int beta, const Scalar& coeff) {
  LieElement e;
  e.add_bracket(alpha, beta, coeff);
  return e;
}

Scalar LieElement::coeff(int a) const {
  auto it = deg1_.find(a);
  return it == deg1_.end() ? Scalar() : it->second;
}

Scalar LieElement::coeff(int alpha, int beta) const {
  if (alpha == beta) return Scalar();
  if (alpha > beta) return -coeff(beta, alpha);
  auto it = deg2_.find({alpha, beta});
  return it == deg2_.end() ? Scalar() : it->second;
}

void LieElement::add_ad(int a, const Scalar& s) {
  if (a < 0) throw std::invalid_argument("negative ad exponent");
  if (s.is_zero()) return;
  auto [it, inserted] = deg1_.try_emplace(a, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) deg1_.erase(it);
  }
}

void LieElement::add_bracket(int alpha, int beta, const Scalar& s) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("negative ad exponent");
  if (alpha == beta || s.is_zero()) return;
  if (alpha > beta) {
    add_bracket(beta, alpha, -s);
    return;
  }
  auto [it, inserted] = deg2_.try_emplace({alpha, beta}, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) deg2_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [a, s] : o.deg1_) add_ad(a, s);
  for (const auto& [ab, s] : o.deg2_) add_bracket(ab.first, ab.second, s);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [a, s] : o.deg1_) add_ad(a, -s);
  for (const auto& [ab, s] : o.deg2_) add_bracket(ab.first, ab.second, -s);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& r) {
  if (r.is_zero()) {
    deg1_.clear();
    deg2_.clear();
    return *this;
  }
  for (auto& [a, s] : deg1_) s *= r;
  for (auto& [ab, s] : deg2_) s *= r;
  return *this;
}

std::string LieElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto term = [&](const Scalar& s, const std::string& basis) {
    if (!out.empty()) out += " + ";
    out += "(" + s.render(RenderStyle::TwoPiI) + ")" + basis;
  };
  for (const auto& [a, s] : deg1_) term(s, "ad_x^" + std::to_string(a) + "(y)");
  for (const auto& [ab, s] : deg2_)
    term(s, "[ad_x^" + std::to_string(ab.first) + "(y),ad_x^" + std::to_string(ab.second) + "(y)]");
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (int k = 1; k < w.size(); ++k)
    if (!lex_less(w, w.rotated(k))) return false;
  return true;
}

std::vector<Word> lyndon_words(int length, int max_y_deg) {
  if (length < 1) throw std::invalid_argument("lyndon_words needs length >= 1");
  std::vector<Word> out;
  for (const Word& w : words_up_to(length, max_y_deg, length))
    if (is_lyndon(w)) out.push_back(w);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2 || !is_lyndon(w)) throw std::invalid_argument("standard factorization needs a Lyndon word of length >= 2");
  for (int i = 1; i < w.size(); ++i) {
    Word v = w.suffix_from(i);
    if (is_lyndon(v)) return {w.prefix(i), v};
  }
  throw std::logic_error("Lyndon word without Lyndon suffix");
}

WordPoly gamma_polynomial(const Word& w) {
  if (!is_lyndon(w)) throw std::invalid_argument(w.to_string() + " is not a Lyndon word");
  if (w.size() == 1) return WordPoly(single(w[0]));
  auto [u, v] = standard_factorization(w);
  WordPoly gu = gamma_polynomial(u), gv = gamma_polynomial(v);
  return poly_mul(gu, gv) - poly_mul(gv, gu);
}

LieElement gamma(const Word& w) {
  if (w.y_degree() < 1 || w.y_degree() > 2)
    throw std::invalid_argument("gamma into the ad basis needs y-degree 1 or 2");
  NCSeries s(w.size(), 2, Rational(0));
  const WordPoly p = gamma_polynomial(w);
  for (const auto& [v, c] : p.terms()) s.add(v, Scalar(c));
  return to_lie_element(s);
}

NCSeries expand(const LieElement& e, int max_len, int max_y_deg) {
  NCSeries out(max_len, max_y_deg, Rational(0));
  for (const auto& [a, s] : e.deg1())
    if (a + 1 <= max_len) {
      const WordPoly p = ad_poly(a);
      for (const auto& [w, c] : p.terms()) out.add(w, s * c);
    }
  for (const auto& [ab, s] : e.deg2())
    if (ab.first + ab.second + 2 <= max_len) {
      const WordPoly p = bracket_poly(ab.first, ab.second);
      for (const auto& [w, c] : p.terms()) out.add(w, s * c);
    }
  return out;
}

LieElement to_lie_element(const NCSeries& s) {
  if (!s.constant().is_zero()) throw MathError("a Lie element has no constant term");
  LieElement out;
  std::map<int, std::vector<std::pair<Word, Scalar>>> deg1_by_len, deg2_by_len;
  for (const auto& [w, c] : s.coefficients()) {
    int d = w.y_degree();
    if (d == 1) deg1_by_len[w.size()].emplace_back(w, c);
    else if (d == 2) deg2_by_len[w.size()].emplace_back(w, c);
    else if (w.size() == 1) throw MathError("the letter x lies outside the y-degree 1, 2 basis");
    else throw MathError("word " + w.to_string() + " cannot occur in a Lie element of y-degree 1 or 2");
  }
  for (const auto& [len, terms] : deg1_by_len) {
    int a = len - 1;
    Scalar lead = s.coeff(Word::xyx(a, 0));
    NCSeries check = expand(LieElement::ad(a, lead), len, 1);
    bool ok = std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return check.coeff(t.first) == t.second; }) &&
              std::all_of(check.coefficients().begin(), check.coefficients().end(),
                          [&](const auto& t) { return s.coeff(t.first) == t.second; });
    if (!ok) throw MathError("degree-1 part of length " + std::to_string(len) + " is not a multiple of ad_x^a(y)");
    out.add_ad(a, lead);
  }
  for (const auto& [len, terms] : deg2_by_len) {
    int total = len - 2;
    std::vector<std::pair<int, int>> pairs;
    for (int alpha = 0; 2 * alpha < total; ++alpha) pairs.emplace_back(alpha, total - alpha);
    if (pairs.empty()) throw MathError("no degree-2 Lie element of length " + std::to_string(len));
    std::vector<Word> rows_w;
    for (int a = 0; a <= total; ++a)
      for (int b = 0; a + b <= total; ++b) rows_w.push_back(Word::xyxyx(a, b, total - a - b));
    std::vector<RationalVector> rows(rows_w.size(), RationalVector(pairs.size()));
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      WordPoly bp = bracket_poly(pairs[j].first, pairs[j].second);
      for (std::size_t i = 0; i < rows_w.size(); ++i) rows[i][j] = bp.coefficient(rows_w[i]);
    }
    std::vector<ScalarKey> keys;
    for (const auto& [w, c] : terms) collect_keys(c, keys);
    std::vector<RationalVector> rhs;
    for (const auto& key : keys) {
      RationalVector b(rows_w.size());
      for (std::size_t i = 0; i < rows_w.size(); ++i) b[i] = coordinate(s.coeff(rows_w[i]), key);
      rhs.push_back(std::move(b));
    }
    std::vector<std::string> rl, cl;
    for (const auto& w : rows_w) rl.push_back(w.letters());
    for (const auto& p : pairs) cl.push_back(std::to_string(p.first) + "," + std::to_string(p.second));
    SolveResult res = solve_overdetermined(LabeledMatrix(rows, rl, cl), rhs);
    if (auto* bad = std::get_if<Inconsistent>(&res))
      throw MathError("degree-2 part is not a Lie element (word " + bad->witness_label + ")");
    if (std::holds_alternative<Underdetermined>(res)) throw std::logic_error("bracket basis is not independent");
    const auto& sol = std::get<Solution>(res);
    for (std::size_t k = 0; k < keys.size(); ++k)
      for (std::size_t j = 0; j < pairs.size(); ++j)
        out.add_bracket(pairs[j].first, pairs[j].second, from_coordinate(keys[k], sol.values[k][j]));
  }
  return out;
}

NCSeries y_derivation(const NCSeries& g, const NCSeries& s, int max_len, int max_y_deg) {
  NCSeries out(max_len, max_y_deg, Rational(0));
  const Word y = single(Letter::Y);
  for (const auto& [w, c] : s.coefficients()) {
    for (int i = 0; i < w.size(); ++i) {
      if (w[i] != Letter::Y) continue;
      Word pre = w.prefix(i), post = w.suffix_from(i + 1);
      for (const auto& [v, d] : g.coefficients()) {
        if (w.size() + v.size() > max_len || w.y_degree() + v.y_degree() > max_y_deg) continue;
        Scalar cd = c * d;
        out.add(pre.concat(y).concat(v).concat(post), cd);
        out.add(pre.concat(v).concat(y).concat(post), -cd);
      }
    }
  }
  return out;
}

NCSeries grt_lie_action(const LieElement& g, const NCSeries& phi) {
  NCSeries gs = expand(g, phi.max_len(), phi.max_y_deg());
  NCSeries out = series_mul(gs, phi, phi.max_len(), phi.max_y_deg());
  out += y_derivation(gs, phi, phi.max_len(), phi.max_y_deg());
  out.set_mu(phi.mu());
  return out;
}

NCSeries ihara_bracket_series(const NCSeries& p, const NCSeries& q, int max_len, int max_y_deg) {
  NCSeries out = series_mul(p, q, max_len, max_y_deg) - series_mul(q, p, max_len, max_y_deg);
  out += y_derivation(p, q, max_len, max_y_deg);
  out -= y_derivation(q, p, max_len, max_y_deg);
  return out;
}

LieElement ihara_bracket(const LieElement& p, const LieElement& q) {
  if (!p.deg2().empty() || !q.deg2().empty())
    throw std::invalid_argument("ihara_bracket: inputs must have y-degree 1 so the result stays within y-degree 2");
  if (p.is_zero() || q.is_zero()) return LieElement();
  int len = p.deg1().rbegin()->first + q.deg1().rbegin()->first + 2;
  NCSeries ps = expand(p, len, 2), qs = expand(q, len, 2);
  return to_lie_element(ihara_bracket_series(ps, qs, len, 2));
}

}  // namespace drinfeld
