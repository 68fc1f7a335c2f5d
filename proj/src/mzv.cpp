#include "drinfeld/mzv.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

Word letter_word(Letter l) {
  Word w;
  w.push_back(l);
  return w;
}

Word prepend(Letter l, const Word& w) { return letter_word(l).concat(w); }

bool admissible(const Word& w) {
  return w.empty() || (w[0] == Letter::X && w[w.size() - 1] == Letter::Y);
}

void shuffle_into(const Word& u, const Word& v, const Rational& c, WordPoly& out) {
  if (u.empty()) {
    out.add(v, c);
    return;
  }
  if (v.empty()) {
    out.add(u, c);
    return;
  }
  WordPoly left, right;
  shuffle_into(u.suffix_from(1), v, Rational(1), left);
  shuffle_into(u, v.suffix_from(1), Rational(1), right);
  for (const auto& [w, k] : left.terms()) out.add(prepend(u[0], w), c * k);
  for (const auto& [w, k] : right.terms()) out.add(prepend(v[0], w), c * k);
}

std::vector<int> tail(const Composition& c) {
  return std::vector<int>(c.parts().begin() + 1, c.parts().end());
}

// Memo for the regularizations; guarded since tables may be built from several threads.
std::mutex g_reg_mutex;
std::unordered_map<Word, WordPoly> g_shuffle_reg;

}  // namespace

std::string to_string(const WordPoly& p) {
  return p.to_string([](const Word& w) { return w.to_string(); });
}

std::string to_string(const CompositionPoly& p) {
  return p.to_string([](const Composition& c) { return c.to_string(); });
}

WordPoly shuffle(const Word& u, const Word& v) {
  WordPoly out;
  shuffle_into(u, v, Rational(1), out);
  return out;
}

WordPoly shuffle(const WordPoly& p, const WordPoly& q) {
  WordPoly out;
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) {
      WordPoly s = shuffle(u, v);
      out += s * (a * b);
    }
  return out;
}

CompositionPoly stuffle(const Composition& u, const Composition& v) {
  CompositionPoly out;
  if (u.empty()) return CompositionPoly(v);
  if (v.empty()) return CompositionPoly(u);
  Composition ut(tail(u)), vt(tail(v));
  const CompositionPoly first = stuffle(ut, v), merged = stuffle(ut, vt), second = stuffle(u, vt);
  for (const auto& [c, k] : first.terms()) out.add(c.prepend(u[0]), k);
  for (const auto& [c, k] : merged.terms()) out.add(c.prepend(u[0] + v[0]), k);
  for (const auto& [c, k] : second.terms()) out.add(c.prepend(v[0]), k);
  return out;
}

CompositionPoly stuffle(const CompositionPoly& p, const CompositionPoly& q) {
  CompositionPoly out;
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) out += stuffle(u, v) * (a * b);
  return out;
}

WordPoly shuffle_regularize(const Word& w) {
  if (admissible(w)) return WordPoly(w);
  {
    std::lock_guard lock(g_reg_mutex);
    auto it = g_shuffle_reg.find(w);
    if (it != g_shuffle_reg.end()) return it->second;
  }
  WordPoly result;
  const int n = w.size();
  if (w[n - 1] == Letter::X) {
    // w = u x^k with u not ending in x: x ⧢ u x^{k-1} contains w exactly k times.
    int k = 0;
    while (k < n && w[n - 1 - k] == Letter::X) ++k;
    if (k < n) {
      WordPoly rest = shuffle(letter_word(Letter::X), w.prefix(n - 1));
      rest.add(w, Rational(-k));
      for (const auto& [v, c] : rest.terms()) result += shuffle_regularize(v) * (-c / Rational(k));
    }
  } else {
    // w = y^s v with v starting with x (or empty): y ⧢ y^{s-1} v contains w exactly s times.
    int s = 0;
    while (s < n && w[s] == Letter::Y) ++s;
    if (s < n) {
      WordPoly rest = shuffle(letter_word(Letter::Y), w.suffix_from(1));
      rest.add(w, Rational(-s));
      for (const auto& [v, c] : rest.terms()) result += shuffle_regularize(v) * (-c / Rational(s));
    }
  }
  std::lock_guard lock(g_reg_mutex);
  g_shuffle_reg.emplace(w, result);
  return result;
}

WordPoly shuffle_regularize(const WordPoly& p) {
  WordPoly out;
  for (const auto& [w, c] : p.terms()) out += shuffle_regularize(w) * c;
  return out;
}

CompositionPoly stuffle_regularize(const Composition& c) {
  if (c.admissible()) return CompositionPoly(c);
  // Leading run of s ones: (1) ⧢ (1^{s-1}, rest) contains c exactly s times, and ζ(1) = 0.
  int s = 0;
  while (s < c.depth() && c[s] == 1) ++s;
  CompositionPoly rest = stuffle(Composition{1}, Composition(tail(c)));
  rest.add(c, Rational(-s));
  CompositionPoly out;
  for (const auto& [d, k] : rest.terms()) out += stuffle_regularize(d) * (-k / Rational(s));
  return out;
}

CompositionPoly zeta_deg1_closed_form(int a, int b) {
  if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("zeta_deg1_closed_form needs a, b >= 0 and a + b >= 1");
  Rational coeff(binomial(a + b, a));
  if (b % 2 != 0) coeff = -coeff;
  return CompositionPoly(Composition{a + b + 1}, coeff);
}

CompositionPoly to_compositions(const WordPoly& p) {
  CompositionPoly out;
  for (const auto& [w, c] : p.terms()) out.add(Composition::from_word(w), c);
  return out;
}

WordPoly to_words(const CompositionPoly& p) {
  WordPoly out;
  for (const auto& [c, k] : p.terms()) out.add(c.to_word(), k);
  return out;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    Rational s;
    for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(-s / Rational(m + 1));
  }
  return cache[n];
}

MzvExpr zeta_even(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw std::invalid_argument("zeta_even needs a positive even argument");
  int n = two_n / 2;
  // ζ(2n) = (-1)^{n-1} (2π)^{2n} B_{2n} / (2 (2n)!) and π^{2n} = 6^n ζ(2)^n.
  Rational r = Rational(neg_one_pow(n - 1)) * Rational::pow(Rational(24), n) * bernoulli(two_n) /
               Rational(mpz_class(2 * factorial(two_n)));
  return MzvExpr(ZetaMonomial(std::vector<ZetaAtom>(n, ZetaAtom::Z2)), r);
}

MzvExpr single_zeta(int n) {
  if (n < 1) throw std::invalid_argument("single_zeta needs n >= 1");
  if (n == 1) return MzvExpr();
  if (n % 2 == 0) return zeta_even(n);
  auto atom = single_zeta_atom(n);
  if (!atom) throw RangeError("ζ(" + std::to_string(n) + ") is outside the atom set");
  return MzvExpr::atom(*atom);
}

MzvExpr euler_a1(int a) {
  if (a < 2) throw std::invalid_argument("euler_a1 needs a >= 2");
  MzvExpr s = single_zeta(a + 1) * Rational(a);
  for (int b = 2; b <= a - 1; ++b) s -= single_zeta(b) * single_zeta(a + 1 - b);
  return s * Rational(1, 2);
}

}  // namespace drinfeld
