#include "drinfeld/linalg.hpp"

#include <set>
#include <stdexcept>

namespace drinfeld {

namespace {

void check_unique(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw std::invalid_argument(std::string("duplicate ") + what + " label '" + l + "'");
}

}  // namespace

LabeledMatrix::LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  check_unique(row_labels_, "row");
  check_unique(col_labels_, "column");
  rows_.assign(row_labels_.size(), RationalVector(col_labels_.size()));
}

LabeledMatrix::LabeledMatrix(std::vector<RationalVector> rows, std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels)
    : rows_(std::move(rows)), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  if (rows_.size() != row_labels_.size()) throw std::invalid_argument("row label count mismatch");
  for (const auto& r : rows_)
    if (r.size() != col_labels_.size()) throw std::invalid_argument("matrix is not rectangular");
  check_unique(row_labels_, "row");
  check_unique(col_labels_, "column");
}

LabeledMatrix LabeledMatrix::from_rows(std::vector<RationalVector> rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<std::string> rl, cl;
  for (std::size_t i = 0; i < rows.size(); ++i) rl.push_back("r" + std::to_string(i));
  for (std::size_t j = 0; j < cols; ++j) cl.push_back("c" + std::to_string(j));
  return LabeledMatrix(std::move(rows), std::move(rl), std::move(cl));
}

void LabeledMatrix::add_row(RationalVector row, std::string label) {
  if (row.size() != col_labels_.size()) throw std::invalid_argument("row length mismatch");
  for (const auto& l : row_labels_)
    if (l == label) throw std::invalid_argument("duplicate row label '" + label + "'");
  rows_.push_back(std::move(row));
  row_labels_.push_back(std::move(label));
}

RationalVector LabeledMatrix::apply(const RationalVector& x) const {
  if (x.size() != col_count()) throw std::invalid_argument("vector length mismatch");
  RationalVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!rows_[i][j].is_zero() && !x[j].is_zero()) out[i] += rows_[i][j] * x[j];
  return out;
}

RrefResult rref(const LabeledMatrix& m) {
  std::vector<RationalVector> rows = m.rows();
  std::vector<std::string> labels = m.row_labels();
  std::vector<std::size_t> pivots;
  std::size_t n_rows = rows.size(), n_cols = m.col_count();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t p = r;
    while (p < n_rows && rows[p][c].is_zero()) ++p;
    if (p == n_rows) continue;
    std::swap(rows[p], rows[r]);
    std::swap(labels[p], labels[r]);
    Rational inv = Rational(1) / rows[r][c];
    for (auto& v : rows[r])
      if (!v.is_zero()) v *= inv;
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < n_cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {LabeledMatrix(std::move(rows), std::move(labels), m.col_labels()), std::move(pivots)};
}

SolveResult solve_overdetermined(const LabeledMatrix& a, const std::vector<RationalVector>& rhs) {
  const std::size_t n_rows = a.row_count(), n_cols = a.col_count();
  for (const auto& b : rhs)
    if (b.size() != n_rows) throw std::invalid_argument("right-hand side length mismatch");

  // Augment with every right-hand side; pivots restricted to the coefficient block.
  std::vector<RationalVector> aug(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) {
    aug[i] = a.row(i);
    for (const auto& b : rhs) aug[i].push_back(b[i]);
  }
  std::vector<std::size_t> origin(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) origin[i] = i;
  const std::size_t width = n_cols + rhs.size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t p = r;
    while (p < n_rows && aug[p][c].is_zero()) ++p;
    if (p == n_rows) continue;
    std::swap(aug[p], aug[r]);
    std::swap(origin[p], origin[r]);
    Rational inv = Rational(1) / aug[r][c];
    for (auto& v : aug[r])
      if (!v.is_zero()) v *= inv;
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == r || aug[i][c].is_zero()) continue;
      Rational f = aug[i][c];
      for (std::size_t j = c; j < width; ++j)
        if (!aug[r][j].is_zero()) aug[i][j] -= f * aug[r][j];
    }
    pivots.push_back(c);
    ++r;
  }

  // Rows below the rank have a zero coefficient block; a nonzero right side there is a contradiction.
  for (std::size_t k = 0; k < rhs.size(); ++k)
    for (std::size_t i = r; i < n_rows; ++i)
      if (!aug[i][n_cols + k].is_zero())
        return Inconsistent{k, origin[i], a.row_labels()[origin[i]]};

  if (r < n_cols) return Underdetermined{r, n_cols};

  Solution sol;
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    RationalVector x(n_cols);
    for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = aug[i][n_cols + k];
    RationalVector ax = a.apply(x);
    for (std::size_t i = 0; i < n_rows; ++i)
      if (ax[i] != rhs[k][i]) throw std::logic_error("solve_overdetermined: nonzero residual in certified solution");
    sol.values.push_back(std::move(x));
  }
  return sol;
}

}  // namespace drinfeld
