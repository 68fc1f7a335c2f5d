#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace drinfeld {

/// Malformed textual input (words, compositions, rationals).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A request outside the configured truncation or table range.
class RangeError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// A mathematical check failed: an inconsistent system, a non-reducible value,
/// a nonzero residual where zero is required.
class MathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Relation harvesting did not reduce every needed value at some weight.
class RankDeficient : public MathError {
public:
  RankDeficient(int weight, std::vector<std::string> unreduced);
  int weight() const { return weight_; }
  const std::vector<std::string>& unreduced() const { return unreduced_; }

private:
  int weight_;
  std::vector<std::string> unreduced_;
};

}  // namespace drinfeld
