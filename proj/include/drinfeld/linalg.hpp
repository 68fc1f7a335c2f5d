#pragma once

#include <string>
#include <variant>
#include <vector>

#include "drinfeld/rational.hpp"

namespace drinfeld {

using RationalVector = std::vector<Rational>;

/// Dense rational matrix with opaque row and column labels.
class LabeledMatrix {
public:
  LabeledMatrix() = default;
  LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);
  LabeledMatrix(std::vector<RationalVector> rows, std::vector<std::string> row_labels,
                std::vector<std::string> col_labels);
  /// Unlabeled convenience constructor: rows "r0", "r1", ..., columns "c0", ...
  static LabeledMatrix from_rows(std::vector<RationalVector> rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return col_labels_.size(); }
  const std::vector<RationalVector>& rows() const { return rows_; }
  const RationalVector& row(std::size_t i) const { return rows_[i]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  void add_row(RationalVector row, std::string label);
  /// A·x
  RationalVector apply(const RationalVector& x) const;

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;

private:
  std::vector<RationalVector> rows_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

struct RrefResult {
  LabeledMatrix matrix;  ///< reduced rows; zero rows are kept at the bottom
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Exact Gauss-Jordan elimination. The pivot of each column is the first row
/// (in current order) with a nonzero entry; columns are scanned left to right.
RrefResult rref(const LabeledMatrix& m);

struct Solution {
  /// One solution vector per right-hand side.
  std::vector<RationalVector> values;
};
struct Inconsistent {
  std::size_t rhs_index;
  std::size_t witness_row;  ///< original row whose residual is nonzero
  std::string witness_label;
};
struct Underdetermined {
  std::size_t rank;
  std::size_t unknowns;
};
using SolveResult = std::variant<Solution, Inconsistent, Underdetermined>;

/// Solves A·x = b for every right-hand side b (each of length row_count()).
/// A solution is only returned when the rank equals the column count, and
/// every returned solution has been checked to give an exactly zero residual.
SolveResult solve_overdetermined(const LabeledMatrix& a, const std::vector<RationalVector>& rhs);

}  // namespace drinfeld
