#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <sstream>

#include "drinfeld/errors.hpp"
#include "drinfeld/mzv.hpp"

namespace drinfeld {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

// Static reductions for weights <= 8, produced by the harvest and checked
// numerically whenever they are loaded. Monomials are '*'-joined atom names.
struct FallbackEntry {
  const char* composition;
  const char* expr;
};
constexpr FallbackEntry kFallback[] = {
#include "fallback_table.inc"
};

MzvExpr parse_fallback_expr(const std::string& text) {
  MzvExpr e;
  std::stringstream terms(text);
  std::string term;
  while (std::getline(terms, term, ';')) {
    auto colon = term.find(':');
    std::string mono = term.substr(0, colon);
    std::vector<ZetaAtom> atoms;
    if (mono != "1") {
      std::stringstream ms(mono);
      std::string name;
      while (std::getline(ms, name, '*')) atoms.push_back(atom_from_name(name));
    }
    e.add_term(ZetaMonomial(atoms), Rational::parse(term.substr(colon + 1)));
  }
  return e;
}

// A relation Σ unknowns + known = 0 at a fixed weight.
struct Relation {
  std::string label;
  std::map<Composition, Rational> unknowns;
  MzvExpr known;
};

void add_composition_value(Relation& r, const CompositionPoly& p, const Rational& scale) {
  for (const auto& [c, k] : p.terms()) {
    auto& slot = r.unknowns[c];
    slot += k * scale;
  }
}

CompositionPoly regularized(const Word& w) { return to_compositions(shuffle_regularize(w)); }

std::vector<Relation> harvest_relations(int n, const ReductionTable& lower) {
  std::vector<Relation> out;
  auto lower_single = [&](int k) { return k == 1 ? MzvExpr() : lower.at(Composition{k}); };

  // Shuffle products of degree-1 words, both sides regularized.
  for (int i = 1; i < n; ++i) {
    for (int p = 0; p < i; ++p) {
      Word u = Word::xyx(p, i - 1 - p);
      for (int q = 0; q < n - i; ++q) {
        Word v = Word::xyx(q, n - i - 1 - q);
        if (v < u) continue;
        Relation r{"shuffle " + u.to_string() + " * " + v.to_string(), {}, {}};
        const WordPoly product = shuffle(u, v);
        for (const auto& [w, c] : product.terms()) add_composition_value(r, regularized(w), c);
        MzvExpr lu = lower.reduce(regularized(u)), lv = lower.reduce(regularized(v));
        r.known = -(lu * lv);
        out.push_back(std::move(r));
      }
    }
  }
  // Stuffle products of single zetas; ζ(1) = 0 and ζ(1,b) taken shuffle-regularized.
  for (int a = 1; 2 * a <= n; ++a) {
    int b = n - a;
    if (a == 1 && b == 1) continue;
    Relation r{"stuffle (" + std::to_string(a) + ") * (" + std::to_string(b) + ")", {}, {}};
    add_composition_value(r, regularized(Composition{a, b}.to_word()), Rational(1));
    add_composition_value(r, regularized(Composition{b, a}.to_word()), Rational(1));
    add_composition_value(r, CompositionPoly(Composition{n}), Rational(1));
    r.known = -(lower_single(a) * lower_single(b));
    out.push_back(std::move(r));
  }
  if (n >= 3) {
    Relation r{"euler (" + std::to_string(n - 1) + ",1)", {{Composition{n - 1, 1}, Rational(1)}}, -euler_a1(n - 1)};
    out.push_back(std::move(r));
  }
  out.push_back(Relation{"single (" + std::to_string(n) + ")", {{Composition{n}, Rational(1)}}, -single_zeta(n)});
  if (n == 8) out.push_back(Relation{"atom (3,5)", {{Composition{3, 5}, Rational(1)}}, -MzvExpr::atom(ZetaAtom::Z35)});
  return out;
}

std::vector<Composition> weight_unknowns(int n) {
  std::vector<Composition> u{Composition{n}};
  for (int a = 2; a < n; ++a) u.push_back(Composition{a, n - a});
  return u;
}

void verify_numerically(const std::map<Composition, MzvExpr>& entries) {
  for (const auto& [c, e] : entries) {
    long double direct = c.depth() == 1 ? numeric_zeta(c[0]) : numeric_double_zeta(c[0], c[1]);
    long double symbolic = numeric_eval(e);
    if (std::fabs(static_cast<double>(direct - symbolic)) > 1e-8)
      throw MathError("reduction of ζ" + c.to_string() + " disagrees with numeric evaluation");
  }
}

}  // namespace

RankDeficient::RankDeficient(int weight, std::vector<std::string> unreduced)
    : MathError("relation harvest is rank deficient at weight " + std::to_string(weight) + "; unreduced: " +
                join(unreduced)),
      weight_(weight),
      unreduced_(std::move(unreduced)) {}

ReductionTable::ReductionTable(int max_weight, std::map<Composition, MzvExpr> entries, bool fallback)
    : max_weight_(max_weight), entries_(std::move(entries)), fallback_(fallback) {}

const MzvExpr& ReductionTable::at(const Composition& c) const {
  auto it = entries_.find(c);
  if (it == entries_.end())
    throw RangeError("ζ" + c.to_string() + " is not covered by the reduction table (max weight " +
                     std::to_string(max_weight_) + ")");
  return it->second;
}

MzvExpr ReductionTable::reduce(const CompositionPoly& p) const {
  MzvExpr out;
  for (const auto& [c, k] : p.terms()) {
    if (c.empty()) out += MzvExpr(k);
    else out += at(c) * k;
  }
  return out;
}

LabeledMatrix harvest_matrix(int n, const ReductionTable& lower) {
  std::vector<Composition> unknowns = weight_unknowns(n);
  std::vector<ZetaMonomial> basis = monomials_of_weight(n);
  std::vector<std::string> cols;
  for (const auto& c : unknowns) cols.push_back(c.to_string());
  for (const auto& m : basis) cols.push_back(m.to_string());
  LabeledMatrix mat({}, cols);
  for (const auto& r : harvest_relations(n, lower)) {
    RationalVector row(cols.size());
    bool nonzero = false;
    for (const auto& [c, k] : r.unknowns) {
      if (k.is_zero()) continue;
      auto it = std::find(unknowns.begin(), unknowns.end(), c);
      if (it == unknowns.end()) throw std::logic_error("relation outside the weight-" + std::to_string(n) + " unknowns");
      row[static_cast<std::size_t>(it - unknowns.begin())] = k;
      nonzero = true;
    }
    for (const auto& [m, k] : r.known.terms()) {
      auto it = std::find(basis.begin(), basis.end(), m);
      if (it == basis.end()) throw std::logic_error("monomial " + m.to_string() + " is not in the weight basis");
      row[unknowns.size() + static_cast<std::size_t>(it - basis.begin())] = k;
      nonzero = true;
    }
    if (nonzero) mat.add_row(std::move(row), r.label);
  }
  return mat;
}

ReductionTable build_reduction_table(int max_weight) {
  if (max_weight < 2 || max_weight > 11)
    throw RangeError("reduction tables are available for weights 2..11, got " + std::to_string(max_weight));
  std::map<Composition, MzvExpr> entries;
  for (int n = 2; n <= max_weight; ++n) {
    if (n == 10) {
      // Depth 2 at weight 10 would need a new irreducible; only ζ(10) is provided.
      entries.emplace(Composition{10}, zeta_even(10));
      continue;
    }
    ReductionTable lower(n - 1, entries, false);
    LabeledMatrix m = harvest_matrix(n, lower);
    std::vector<Composition> unknowns = weight_unknowns(n);
    std::vector<ZetaMonomial> basis = monomials_of_weight(n);
    RrefResult red = rref(m);
    std::vector<std::string> missing;
    std::vector<std::size_t> row_of(unknowns.size(), SIZE_MAX);
    for (std::size_t r = 0; r < red.pivot_columns.size(); ++r) {
      std::size_t c = red.pivot_columns[r];
      if (c < unknowns.size()) row_of[c] = r;
      else throw MathError("harvest at weight " + std::to_string(n) + " implies a relation among basis monomials");
    }
    for (std::size_t j = 0; j < unknowns.size(); ++j)
      if (row_of[j] == SIZE_MAX) missing.push_back("ζ" + unknowns[j].to_string());
    if (!missing.empty()) throw RankDeficient(n, missing);
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      MzvExpr e;
      for (std::size_t k = 0; k < basis.size(); ++k) e.add_term(basis[k], -red.matrix(row_of[j], unknowns.size() + k));
      entries.emplace(unknowns[j], std::move(e));
    }
  }
  verify_numerically(entries);
  return ReductionTable(max_weight, std::move(entries), false);
}

ReductionTable fallback_reduction_table() {
  std::map<Composition, MzvExpr> entries;
  for (const auto& f : kFallback) entries.emplace(parse_composition(f.composition), parse_fallback_expr(f.expr));
  verify_numerically(entries);
  return ReductionTable(8, std::move(entries), true);
}

ReductionTable load_reduction_table(int max_weight) {
  try {
    return build_reduction_table(max_weight);
  } catch (const RankDeficient&) {
    if (max_weight > 8) throw;
    ReductionTable full = fallback_reduction_table();
    std::map<Composition, MzvExpr> entries;
    for (const auto& [c, e] : full.entries())
      if (c.weight() <= max_weight) entries.emplace(c, e);
    return ReductionTable(max_weight, std::move(entries), true);
  }
}

const ReductionTable& shared_reduction_table(int max_weight) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ReductionTable>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.lower_bound(max_weight);
  if (it != cache.end()) return *it->second;
  auto table = std::make_unique<ReductionTable>(load_reduction_table(max_weight));
  return *cache.emplace(max_weight, std::move(table)).first->second;
}

MzvExpr zeta_word(const Word& w, const ReductionTable& table) {
  if (w.size() > table.max_weight())
    throw RangeError("word " + w.to_string() + " has weight " + std::to_string(w.size()) +
                     " beyond the reduction table (max weight " + std::to_string(table.max_weight()) + ")");
  return table.reduce(regularized(w));
}

MzvExpr zeta_composition(const Composition& c, const ReductionTable& table) {
  if (c.weight() > table.max_weight())
    throw RangeError("ζ" + c.to_string() + " has weight beyond the reduction table");
  return table.reduce(stuffle_regularize(c));
}

}  // namespace drinfeld
