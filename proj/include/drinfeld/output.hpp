#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drinfeld/mzv_expr.hpp"
#include "drinfeld/word.hpp"

namespace drinfeld {

struct OutputTerm {
  Rational rational;
  std::vector<std::string> atoms;  ///< atom names, e.g. {"z3", "z5"}
  int two_pi_i_power = 0;
  friend bool operator==(const OutputTerm&, const OutputTerm&) = default;
};

/// One coefficient as printed by the CLI.
struct OutputRecord {
  std::string word;
  std::string family;
  std::vector<OutputTerm> terms;
  std::string rendered;
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// π-power style when every (2πi) power is even, 2πi style otherwise.
RenderStyle preferred_style(const Scalar& s);

OutputRecord make_record(const Word& w, const std::string& family, const Scalar& s,
                         std::optional<RenderStyle> style = std::nullopt);
Scalar record_scalar(const OutputRecord& r);

/// {"word", "family", "terms": [{"rational", "atoms", "twoPiIPower"}], "rendered"}.
/// indent < 0 gives a single line.
std::string to_json(const OutputRecord& r, int indent = -1);
/// Inverse of to_json. Throws ParseError on malformed input or when
/// "rendered" is not a rendering of the terms.
OutputRecord record_from_json(const std::string& text);

}  // namespace drinfeld
