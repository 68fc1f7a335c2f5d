#include "drinfeld/assoc_half.hpp"

#include <mutex>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

// The three convolution sums shared by c_w, d_w and f_w at w = x^a y x^b y x^c,
// with the degree-1 factors weighted by the δ parity of the first one.
template <class U>
Scalar delta_sums(const Word& w, U u) {
  const std::vector<int> r = w.x_runs();
  const int a = r[0], b = r[1], c = r[2];
  Scalar s;
  for (int j = 0; j <= b; ++j)
    if (delta(a, j)) s += u(Word::xyx(a, j)) * u(Word::xyx(b - j, c));
  for (int j = 0; j <= a; ++j)
    if (delta(a - j, b)) s -= u(Word::xyx(j, c)) * u(Word::xyx(a - j, b));
  for (int j = 0; j <= c; ++j)
    if (delta(b, c - j)) s += u(Word::xyx(a, j)) * u(Word::xyx(b, c - j));
  return s;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::KZ: return "kz";
    case Family::AKZ: return "akz";
    case Family::Psi: return "psi";
    case Family::HalfPsi: return "half-psi";
    case Family::Half: return "half";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::KZ, Family::AKZ, Family::Psi, Family::HalfPsi, Family::Half})
    if (family_name(f) == name) return f;
  throw ParseError("unknown family '" + std::string(name) + "' (expected kz, akz, psi, half-psi or half)");
}

AssociatorFamilies::AssociatorFamilies(const ReductionTable& table) : table_(&table) {}

void AssociatorFamilies::check(const Word& w) const {
  if (w.y_degree() > 2) throw RangeError("word " + w.to_string() + " has y-degree above 2");
  if (w.size() > table_->max_weight())
    throw RangeError("word " + w.to_string() + " is longer than the reduction table weight " +
                     std::to_string(table_->max_weight()));
}

template <class F>
Scalar AssociatorFamilies::memo(Family fam, const Word& w, F compute) const {
  check(w);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find({fam, w});
    if (it != cache_.end()) return it->second;
  }
  Scalar v = compute();
  std::unique_lock lock(mutex_);
  return cache_.try_emplace({fam, w}, std::move(v)).first->second;
}

Scalar AssociatorFamilies::u(const Word& w) const {
  return memo(Family::KZ, w, [&] {
    if (w.size() < 2) return Scalar();
    MzvExpr z = zeta_word(w, *table_);
    if (w.y_degree() % 2 != 0) z = -z;
    return Scalar(w.size(), std::move(z));
  });
}

Scalar AssociatorFamilies::akz(const Word& w) const {
  return w.size() % 2 == 0 ? u(w) : -u(w);
}

Scalar AssociatorFamilies::c(const Word& w) const {
  return memo(Family::Psi, w, [&] {
    switch (w.y_degree()) {
      case 0: return Scalar();
      case 1: return w.size() % 2 != 0 ? u(w) * Rational(-2) : Scalar();
      default: {
        Scalar s = akz(w) - u(w);
        return s + delta_sums(w, [&](const Word& v) { return u(v); }) * Rational(2);
      }
    }
  });
}

Scalar AssociatorFamilies::d(const Word& w) const {
  return memo(Family::HalfPsi, w, [&] {
    if (w.y_degree() == 0) return Scalar();
    if (w.y_degree() == 1 || w.size() % 2 != 0) return c(w) * Rational(1, 2);
    Scalar s = akz(w) - u(w) + delta_sums(w, [&](const Word& v) { return u(v); });
    return s * Rational(1, 2);
  });
}

Scalar AssociatorFamilies::f(const Word& w) const {
  return memo(Family::Half, w, [&] {
    if (w.y_degree() == 0 || w.size() % 2 != 0) return Scalar();
    if (w.y_degree() == 1) return u(w);
    return u(w) - delta_sums(w, [&](const Word& v) { return u(v); }) * Rational(1, 2);
  });
}

Scalar AssociatorFamilies::coeff(Family fam, const Word& w) const {
  switch (fam) {
    case Family::KZ: return u(w);
    case Family::AKZ: check(w); return akz(w);
    case Family::Psi: return c(w);
    case Family::HalfPsi: return d(w);
    case Family::Half: return f(w);
  }
  throw std::logic_error("unknown family");
}

NCSeries AssociatorFamilies::series(Family fam, int max_len, int max_y_deg) const {
  if (max_y_deg > 2) throw RangeError("coefficient families stop at y-degree 2");
  NCSeries s(max_len, max_y_deg, Rational(1));
  s.set_mu(fam == Family::Psi || fam == Family::HalfPsi ? Rational(0) : Rational(1));
  for (const Word& w : words_up_to(max_len, max_y_deg, 1)) s.add(w, coeff(fam, w));
  return s;
}

}  // namespace drinfeld
