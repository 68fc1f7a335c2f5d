// drinfeld: command-line front end for the MZV engine and the associator coefficients.
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "drinfeld/assoc_at.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/grt.hpp"
#include "drinfeld/output.hpp"
#include "json.hpp"

using namespace drinfeld;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;

int table_weight() {
  const char* env = std::getenv("ASSOC_MAX_WEIGHT");
  if (!env || !*env) return 8;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 2 || v > 11) throw ParseError("ASSOC_MAX_WEIGHT must be an integer in 2..11");
  return static_cast<int>(v);
}

std::optional<RenderStyle> parse_style(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "two-pi-i") return RenderStyle::TwoPiI;
  if (s == "pi-power") return RenderStyle::PiPower;
  throw ParseError("unknown style '" + s + "' (expected two-pi-i or pi-power)");
}

// Coefficient source for `assoc`: the KZ-derived families plus "at".
struct Coefficients {
  explicit Coefficients(int weight) : fam(shared_reduction_table(weight)), at(fam) {}
  Scalar get(const std::string& which, const Word& w) const {
    if (w.y_degree() > 2) throw RangeError("word " + w.to_string() + " has y-degree above 2");
    if (which == "at") {
      if (w.size() > fam.table().max_weight())
        throw RangeError("word " + w.to_string() + " is longer than the reduction table weight");
      return at.coeff(w);
    }
    return fam.coeff(parse_family(which), w);
  }
  AssociatorFamilies fam;
  AtCoefficients at;
};

void check_which(const std::string& which) {
  if (which != "at") parse_family(which);
}

int cmd_mzv_reduce(const std::string& text, std::ostream& out) {
  Composition c = parse_composition(text);
  const ReductionTable& table = shared_reduction_table(std::max(table_weight(), std::min(c.weight(), 11)));
  out << zeta_composition(c, table).to_string() << "\n";
  return 0;
}

int cmd_check_table(int max_weight, std::ostream& out) {
  ReductionTable t = build_reduction_table(max_weight);
  double worst = 0;
  for (const auto& [c, e] : t.entries()) {
    long double direct = c.depth() == 1 ? numeric_zeta(c[0]) : numeric_double_zeta(c[0], c[1]);
    worst = std::max(worst, static_cast<double>(std::fabs(direct - numeric_eval(e))));
  }
  std::ostringstream dev;
  dev << std::scientific << std::setprecision(2) << worst;
  out << "entries: " << t.entries().size() << "\nmax weight: " << max_weight << "\nmax deviation: " << dev.str() << "\n";
  return 0;
}

int cmd_assoc_coeff(const std::string& which, const std::string& word, bool json, const std::string& style,
                    std::ostream& out) {
  check_which(which);
  auto st = parse_style(style);
  Word w = parse_word(word);
  Coefficients src(table_weight());
  OutputRecord r = make_record(w, which, src.get(which, w), st);
  out << (json ? to_json(r, 2) : r.rendered) << "\n";
  return 0;
}

int cmd_assoc_table(const std::string& which, int max_len, bool json, const std::string& style, std::ostream& out) {
  check_which(which);
  auto st = parse_style(style);
  if (max_len < 2) throw ParseError("--max-len must be at least 2");
  Coefficients src(std::max(table_weight(), max_len));
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Word& w : words_up_to(max_len, 2, 2)) {
    OutputRecord r = make_record(w, which, src.get(which, w), st);
    if (json) arr.push_back(nlohmann::ordered_json::parse(to_json(r)));
    else out << r.word << "\t" << r.rendered << "\n";
  }
  if (json) out << arr.dump(2) << "\n";
  return 0;
}

int cmd_verify_theorems(std::ostream& out) {
  Coefficients src(table_weight());
  const AssociatorFamilies& fam = src.fam;
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  const Word w = parse_word("x^2yx^4y");
  report("f(x^2yx^4y) = (2ζ(3,5)-7ζ(3)ζ(5))/(512π^8)",
         fam.f(w).render(RenderStyle::PiPower) == "(2ζ(3,5)-7ζ(3)ζ(5))/(512π^8)");
  report("f~(x^2yx^4y) = (2048ζ(3,5)-6293ζ(3)ζ(5))/(524288π^8)",
         src.at.coeff(w).render(RenderStyle::PiPower) == "(2048ζ(3,5)-6293ζ(3)ζ(5))/(524288π^8)");

  const int len = std::min(8, fam.table().max_weight());
  auto kz = fam.series(Family::KZ, len), akz = fam.series(Family::AKZ, len), psi = fam.series(Family::Psi, len);
  auto half_psi = fam.series(Family::HalfPsi, len), half = fam.series(Family::Half, len);
  report("psi * Phi_KZ = Phi_AKZ", substitution_product(psi, kz).same_coefficients(akz));
  report("psi^(1/2) * psi^(1/2) = psi", substitution_product(half_psi, half_psi).same_coefficients(psi));
  report("psi^(1/2) * Phi_KZ = Phi_(1/2)", substitution_product(half_psi, kz).same_coefficients(half));
  report("closed product formulas = substitution product",
         product_closed_form(psi, kz).same_coefficients(substitution_product(psi, kz)));

  bool vanish = true, even_deg1 = true;
  auto at = src.at.series(len);
  for (const Word& v : words_up_to(len, 2, 2)) {
    if (v.size() % 2 != 0 && v.size() <= 7) vanish = vanish && half.coeff(v).is_zero() && at.coeff(v).is_zero();
    if (v.size() % 2 == 0 && v.y_degree() == 1)
      even_deg1 = even_deg1 && half.coeff(v) == fam.u(v) && at.coeff(v) == fam.u(v);
  }
  report("odd-length coefficients of Phi_(1/2) and Phi_AT vanish", vanish);
  report("even degree-1 coefficients of Phi_(1/2) and Phi_AT equal u_w", even_deg1);
  for (int n = 1; n <= 3; ++n) {
    bool ok = true;
    try {
      src.at.solution(n);
    } catch (const MathError&) {
      ok = false;
    }
    report("c_{α,β} system consistent at n = " + std::to_string(n), ok);
  }
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
  return failures == 0 ? 0 : kExitMath;
}

int cmd_at_solve(int n, bool json, bool extended, std::ostream& out) {
  if (n < 1 || n > 5) throw RangeError("at solve supports 1 <= n <= 5 (weights up to 11)");
  int need = 2 * n + 1;
  int weight = table_weight();
  if (need > weight) {
    if (need > 8 && !extended)
      throw RangeError("n = " + std::to_string(n) + " needs the reduction table to weight " + std::to_string(need) +
                       "; pass --extended");
    weight = need;
  }
  AssociatorFamilies fam(shared_reduction_table(std::max(weight, need)));
  AtSolution sol = solve_cab(n, fam);
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["equations"] = sol.equations;
    j["c2n"] = nlohmann::ordered_json::parse(to_json(make_record(Word(), "c" + std::to_string(2 * n), sol.c2n)));
    j["cab"] = nlohmann::ordered_json::array();
    for (const auto& [ab, s] : sol.cab) {
      auto rec = nlohmann::ordered_json::parse(
          to_json(make_record(Word(), "c" + std::to_string(ab.first) + "," + std::to_string(ab.second), s)));
      j["cab"].push_back({{"alpha", ab.first}, {"beta", ab.second}, {"value", rec}});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "c" << 2 * n << " = " << sol.c2n.render(RenderStyle::TwoPiI) << "\n";
  for (const auto& [ab, s] : sol.cab)
    out << "c" << ab.first << "," << ab.second << " = " << s.render(RenderStyle::TwoPiI) << "\n";
  out << "equations: " << sol.equations << ", residual: 0\n";
  return 0;
}

int cmd_at_integrals(int n, std::ostream& out) {
  if (n < 1 || n > 10) throw RangeError("at integrals supports 1 <= n <= 10");
  for (int k = 1; k <= n; ++k) out << "I1(" << k << ") = " << I1(k) << "\nJ1(" << k << ") = " << J1(k) << "\n";
  for (int l = 1; l <= n; ++l)
    for (int m = 1; m <= n; ++m)
      if (l + m <= n + 1) out << "J2(" << l << "," << m << ") = " << J2(l, m) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact MZV reductions and Drinfeld associator coefficients up to y-degree 2"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* mzv = app.add_subcommand("mzv", "multiple zeta values")->require_subcommand(1);
  std::string arg1, arg2;
  auto* reduce = mzv->add_subcommand("reduce", "reduce ζ(composition) to the basis");
  reduce->add_option("composition", arg1, "e.g. 4,2")->required();
  reduce->callback([&] { action = [&] { return cmd_mzv_reduce(arg1, std::cout); }; });
  auto* shuf = mzv->add_subcommand("shuffle", "shuffle product of two words");
  shuf->add_option("u", arg1)->required();
  shuf->add_option("v", arg2)->required();
  shuf->callback([&] {
    action = [&] {
      std::cout << to_string(shuffle(parse_word(arg1), parse_word(arg2))) << "\n";
      return 0;
    };
  });
  auto* stuf = mzv->add_subcommand("stuffle", "stuffle product of two compositions");
  stuf->add_option("u", arg1)->required();
  stuf->add_option("v", arg2)->required();
  stuf->callback([&] {
    action = [&] {
      std::cout << to_string(stuffle(parse_composition(arg1), parse_composition(arg2))) << "\n";
      return 0;
    };
  });
  int max_weight = 8;
  auto* check = mzv->add_subcommand("check-table", "harvest the reduction table and compare numerically");
  check->add_option("--max-weight", max_weight)->check(CLI::Range(2, 11));
  check->callback([&] { action = [&] { return cmd_check_table(max_weight, std::cout); }; });

  auto* assoc = app.add_subcommand("assoc", "associator coefficients")->require_subcommand(1);
  std::string which, word, style;
  bool json = false;
  int max_len = 8;
  auto* coeff = assoc->add_subcommand("coeff", "one coefficient");
  coeff->add_option("--which", which, "kz, akz, psi, half-psi, half or at")->required();
  coeff->add_option("--word", word)->required();
  coeff->add_flag("--json", json);
  coeff->add_option("--style", style, "two-pi-i or pi-power");
  coeff->callback([&] { action = [&] { return cmd_assoc_coeff(which, word, json, style, std::cout); }; });
  auto* table = assoc->add_subcommand("table", "all coefficients of y-degree <= 2 up to a length");
  table->add_option("--which", which)->required();
  table->add_option("--max-len", max_len);
  table->add_flag("--json", json);
  table->add_option("--style", style);
  table->callback([&] { action = [&] { return cmd_assoc_table(which, max_len, json, style, std::cout); }; });
  auto* verify = assoc->add_subcommand("verify-theorems", "recompute both theorem values and the invariant suite");
  verify->callback([&] { action = [&] { return cmd_verify_theorems(std::cout); }; });

  auto* atc = app.add_subcommand("at", "Alekseev-Torossian pipeline")->require_subcommand(1);
  int n = 1;
  bool extended = false;
  auto* solve = atc->add_subcommand("solve", "solve the c_{α,β} system");
  solve->add_option("--n", n)->required();
  solve->add_flag("--json", json);
  solve->add_flag("--extended", extended, "allow n = 4, 5 (builds the weight 9 and 11 tables)");
  solve->callback([&] { action = [&] { return cmd_at_solve(n, json, extended, std::cout); }; });
  auto* integrals = atc->add_subcommand("integrals", "I1, J1 and J2 values");
  integrals->add_option("--n", n)->required();
  integrals->callback([&] { action = [&] { return cmd_at_integrals(n, std::cout); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    return action();
  } catch (const RankDeficient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
