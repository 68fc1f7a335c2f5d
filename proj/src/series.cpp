#include "drinfeld/series.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

NCSeries::NCSeries(int max_len, int max_y_deg, Rational constant)
    : max_len_(max_len), max_y_deg_(max_y_deg), constant_(std::move(constant)) {
  if (max_len < 0 || max_len > Word::kMaxLength || max_y_deg < 0)
    throw std::invalid_argument("invalid truncation parameters");
}

NCSeries NCSeries::constant_series(const Rational& constant, int max_len, int max_y_deg) {
  return NCSeries(max_len, max_y_deg, constant);
}

NCSeries NCSeries::monomial(const Word& w, int max_len, int max_y_deg) {
  NCSeries s(max_len, max_y_deg, Rational(0));
  if (w.empty()) s.constant_ = Rational(1);
  else s.set(w, Scalar(1));
  return s;
}

Scalar NCSeries::coeff(const Word& w) const {
  if (w.empty()) return Scalar(constant_);
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void NCSeries::set(const Word& w, const Scalar& s) {
  if (!within_truncation(w)) throw RangeError("word " + w.to_string() + " outside series truncation");
  if (w.empty()) {
    auto r = s.as_rational();
    if (!r) throw std::invalid_argument("constant term must be rational");
    constant_ = *r;
    return;
  }
  if (s.is_zero()) coeffs_.erase(w);
  else coeffs_[w] = s;
}

void NCSeries::add(const Word& w, const Scalar& s) {
  if (!within_truncation(w) || s.is_zero()) return;
  if (w.empty()) {
    auto r = s.as_rational();
    if (!r) throw std::invalid_argument("constant term must be rational");
    constant_ += *r;
    return;
  }
  auto [it, inserted] = coeffs_.try_emplace(w, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

NCSeries NCSeries::truncated(int max_len, int max_y_deg) const {
  NCSeries r(max_len, max_y_deg, constant_);
  r.mu_ = mu_;
  for (const auto& [w, s] : coeffs_)
    if (r.within_truncation(w)) r.coeffs_.emplace(w, s);
  return r;
}

NCSeries NCSeries::swapped() const {
  // Swapping letters exchanges x- and y-degree; keep whatever lands inside the truncation.
  NCSeries r(max_len_, max_y_deg_, constant_);
  r.mu_ = mu_;
  for (const auto& [w, s] : coeffs_) r.add(w.swapped(), s);
  return r;
}

NCSeries NCSeries::negated_letters() const {
  NCSeries r = *this;
  for (auto& [w, s] : r.coeffs_)
    if (w.size() % 2 != 0) s = -s;
  return r;
}

NCSeries& NCSeries::operator+=(const NCSeries& o) {
  constant_ += o.constant_;
  for (const auto& [w, s] : o.coeffs_) add(w, s);
  return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& o) {
  constant_ -= o.constant_;
  for (const auto& [w, s] : o.coeffs_) add(w, -s);
  return *this;
}

NCSeries& NCSeries::operator*=(const Rational& r) {
  constant_ *= r;
  if (r.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [w, s] : coeffs_) s *= r;
  return *this;
}

bool NCSeries::same_coefficients(const NCSeries& o) const {
  return constant_ == o.constant_ && coeffs_ == o.coeffs_;
}

std::string NCSeries::to_string(RenderStyle style) const {
  std::string s = constant_.to_string();
  for (const auto& [w, c] : coeffs_) {
    RenderStyle st = (style == RenderStyle::PiPower && !c.all_powers_even()) ? RenderStyle::TwoPiI : style;
    s += " + [" + c.render(st) + "] " + w.to_string();
  }
  return s;
}

NCSeries series_mul(const NCSeries& a, const NCSeries& b, int max_len, int max_y_deg) {
  NCSeries r(max_len, max_y_deg, a.constant() * b.constant());
  if (!a.constant().is_zero())
    for (const auto& [w, s] : b.coefficients()) r.add(w, s * a.constant());
  if (!b.constant().is_zero())
    for (const auto& [w, s] : a.coefficients()) r.add(w, s * b.constant());
  for (const auto& [u, su] : a.coefficients()) {
    if (u.size() >= max_len || u.y_degree() > max_y_deg) continue;
    for (const auto& [v, sv] : b.coefficients()) {
      if (u.size() + v.size() > max_len || u.y_degree() + v.y_degree() > max_y_deg) continue;
      r.add(u.concat(v), su * sv);
    }
  }
  return r;
}

NCSeries series_mul(const NCSeries& a, const NCSeries& b) {
  return series_mul(a, b, std::min(a.max_len(), b.max_len()), std::min(a.max_y_deg(), b.max_y_deg()));
}

NCSeries series_inverse(const NCSeries& a) {
  if (a.constant() != Rational(1)) throw MathError("series_inverse: constant term must be 1");
  // r = a - 1 has no constant term, so r^k vanishes beyond k = max_len.
  NCSeries r = a;
  r.set_constant(Rational(0));
  NCSeries result = NCSeries::constant_series(Rational(1), a.max_len(), a.max_y_deg());
  NCSeries power = result;
  for (int k = 1; k <= a.max_len(); ++k) {
    power = series_mul(power, r, a.max_len(), a.max_y_deg());
    if (power.is_zero()) break;
    if (k % 2 == 1) result -= power;
    else result += power;
  }
  result.set_mu(a.mu());
  return result;
}

NCSeries commutator(const NCSeries& a, const NCSeries& b) { return series_mul(a, b) - series_mul(b, a); }

std::vector<Word> words_up_to(int max_len, int max_y_deg, int min_len) {
  std::vector<Word> out;
  for (int n = std::max(min_len, 0); n <= max_len; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      if (std::popcount(bits) > max_y_deg) continue;
      Word w;
      for (int i = 0; i < n; ++i) w.push_back(((bits >> i) & 1u) ? Letter::Y : Letter::X);
      out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace drinfeld
