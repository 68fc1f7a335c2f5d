#include "drinfeld/output.hpp"

#include "drinfeld/errors.hpp"
#include "json.hpp"

namespace drinfeld {

RenderStyle preferred_style(const Scalar& s) {
  return s.all_powers_even() ? RenderStyle::PiPower : RenderStyle::TwoPiI;
}

OutputRecord make_record(const Word& w, const std::string& family, const Scalar& s, std::optional<RenderStyle> style) {
  OutputRecord r{w.to_string(), family, {}, s.render(style.value_or(preferred_style(s)))};
  for (const auto& [k, e] : s.terms())
    for (const auto& [m, c] : e.terms()) {
      OutputTerm t{c, {}, k};
      for (ZetaAtom a : m.atoms()) t.atoms.push_back(atom_name(a));
      r.terms.push_back(std::move(t));
    }
  return r;
}

Scalar record_scalar(const OutputRecord& r) {
  Scalar s;
  for (const auto& t : r.terms) {
    std::vector<ZetaAtom> atoms;
    for (const auto& name : t.atoms) atoms.push_back(atom_from_name(name));
    try {
      s += Scalar(t.two_pi_i_power, MzvExpr(ZetaMonomial(atoms), t.rational));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("inhomogeneous term: ") + e.what());
    }
  }
  return s;
}

std::string to_json(const OutputRecord& r, int indent) {
  nlohmann::ordered_json j;
  j["word"] = r.word;
  j["family"] = r.family;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : r.terms)
    j["terms"].push_back({{"rational", t.rational.to_string()}, {"atoms", t.atoms}, {"twoPiIPower", t.two_pi_i_power}});
  j["rendered"] = r.rendered;
  return j.dump(indent);
}

OutputRecord record_from_json(const std::string& text) {
  OutputRecord r;
  try {
    auto j = nlohmann::json::parse(text);
    r.word = j.at("word").get<std::string>();
    r.family = j.at("family").get<std::string>();
    for (const auto& t : j.at("terms"))
      r.terms.push_back({Rational::parse(t.at("rational").get<std::string>()),
                         t.at("atoms").get<std::vector<std::string>>(), t.at("twoPiIPower").get<int>()});
    r.rendered = j.at("rendered").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed output record: ") + e.what());
  }
  Scalar s = record_scalar(r);
  bool ok = s.render(RenderStyle::TwoPiI) == r.rendered ||
            (s.all_powers_even() && s.render(RenderStyle::PiPower) == r.rendered);
  if (!ok) throw ParseError("rendered field '" + r.rendered + "' does not match the terms");
  return r;
}

}  // namespace drinfeld
