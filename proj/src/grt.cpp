#include "drinfeld/grt.hpp"

#include <algorithm>

namespace drinfeld {

namespace {

void require_degree(const Word& w, int d, const char* who) {
  if (w.y_degree() != d)
    throw std::invalid_argument(std::string(who) + ": " + w.to_string() + " has y-degree " +
                                std::to_string(w.y_degree()) + ", expected " + std::to_string(d));
}

NCSeries scaled(const NCSeries& s, const Scalar& c, int max_len, int max_y_deg) {
  if (!s.constant().is_zero()) throw std::logic_error("scaled: series with a constant term");
  NCSeries out(max_len, max_y_deg, Rational(0));
  for (const auto& [w, d] : s.coefficients()) out.add(w, c * d);
  return out;
}

}  // namespace

Scalar product_deg1(const NCSeries& a, const NCSeries& b, const Word& w) {
  require_degree(w, 1, "product_deg1");
  return a.coeff(w) + b.coeff(w);
}

Scalar product_deg2(const NCSeries& a, const NCSeries& b, const Word& w) {
  require_degree(w, 2, "product_deg2");
  const std::vector<int> r = w.x_runs();
  const int p = r[0], q = r[1], t = r[2];
  Scalar s = a.coeff(w) + b.coeff(w);
  for (int j = 0; j <= q; ++j) s += a.coeff(Word::xyx(p, j)) * b.coeff(Word::xyx(q - j, t));
  for (int j = 0; j <= p; ++j) s -= b.coeff(Word::xyx(j, t)) * a.coeff(Word::xyx(p - j, q));
  for (int j = 0; j <= t; ++j) s += b.coeff(Word::xyx(p, j)) * a.coeff(Word::xyx(q, t - j));
  return s;
}

NCSeries product_closed_form(const NCSeries& a, const NCSeries& b) {
  const int len = std::min(a.max_len(), b.max_len()), deg = std::min(a.max_y_deg(), b.max_y_deg());
  NCSeries out(len, deg, Rational(1));
  for (const Word& w : words_up_to(len, deg, 1)) {
    if (w.y_degree() == 1) out.add(w, product_deg1(a, b, w));
    else if (w.y_degree() == 2) out.add(w, product_deg2(a, b, w));
  }
  return out;
}

NCSeries conjugated_y(const NCSeries& phi) {
  NCSeries y = NCSeries::monomial(Word::y_power(1), phi.max_len(), phi.max_y_deg());
  return series_mul(series_mul(series_inverse(phi), y), phi);
}

NCSeries substitution_product(const NCSeries& a, const NCSeries& b) {
  const int len = std::min(a.max_len(), b.max_len()), deg = std::min(a.max_y_deg(), b.max_y_deg());
  const NCSeries y_image = conjugated_y(a.truncated(len, deg));
  const NCSeries x_image = NCSeries::monomial(Word::x_power(1), len, deg);
  NCSeries substituted = NCSeries::constant_series(b.constant(), len, deg);
  for (const auto& [w, c] : b.coefficients()) {
    if (w.size() > len) continue;
    NCSeries img = NCSeries::constant_series(Rational(1), len, deg);
    for (int i = 0; i < w.size() && !img.is_zero(); ++i)
      img = series_mul(img, w[i] == Letter::X ? x_image : y_image, len, deg);
    substituted += scaled(img, c, len, deg);
  }
  NCSeries out = series_mul(a, substituted, len, deg);
  out.set_mu(b.mu());
  return out;
}

bool degree1_antisymmetric(const NCSeries& s) {
  for (const Word& w : words_up_to(s.max_len(), 1, 2)) {
    if (w.y_degree() != 1) continue;
    std::vector<int> r = w.x_runs();
    Scalar c = s.coeff(w);
    if (w.size() % 2 != 0) c = -c;
    if (!(s.coeff(Word::xyx(r[1], r[0])) == -c)) return false;
  }
  return true;
}

bool group_element_shape(const NCSeries& s) {
  if (s.constant() != Rational(1)) return false;
  return std::none_of(s.coefficients().begin(), s.coefficients().end(), [](const auto& kv) {
    const Word& w = kv.first;
    return w.size() == 1 || w.y_degree() == 0 || w.x_degree() == 0;
  });
}

}  // namespace drinfeld
