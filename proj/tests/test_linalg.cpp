#include <gtest/gtest.h>

#include "drinfeld/linalg.hpp"
#include "drinfeld/mzv.hpp"

using namespace drinfeld;

namespace {
RationalVector v(std::initializer_list<long> xs) {
  RationalVector r;
  for (long x : xs) r.emplace_back(x);
  return r;
}
}  // namespace

TEST(Rref, Examples) {
  auto r = rref(LabeledMatrix::from_rows({v({1, 2}), v({2, 4})}));
  EXPECT_EQ(r.rank(), 1u);
  EXPECT_EQ(r.pivot_columns, std::vector<std::size_t>{0});

  auto id = LabeledMatrix::from_rows({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  EXPECT_EQ(rref(id).matrix, id);
}

TEST(Rref, Idempotent) {
  auto m = LabeledMatrix::from_rows({v({2, 4, 1, 3}), v({1, -1, 0, 2}), v({3, 3, 1, 5}), v({0, 6, 1, -1})});
  auto once = rref(m).matrix;
  EXPECT_EQ(rref(once).matrix, once);
}

TEST(Rref, LabelsMustBeUnique) {
  EXPECT_THROW(LabeledMatrix({"a", "a"}, {"c"}), std::invalid_argument);
}

TEST(Solve, Consistent) {
  auto a = LabeledMatrix::from_rows({v({1}), v({1}), v({1})});
  auto res = solve_overdetermined(a, {v({1, 1, 1})});
  ASSERT_TRUE(std::holds_alternative<Solution>(res));
  EXPECT_EQ(std::get<Solution>(res).values[0][0], Rational(1));
}

TEST(Solve, InconsistentAndUnderdetermined) {
  auto a = LabeledMatrix::from_rows({v({1}), v({1})});
  auto res = solve_overdetermined(a, {v({1, 2})});
  ASSERT_TRUE(std::holds_alternative<Inconsistent>(res));
  EXPECT_EQ(std::get<Inconsistent>(res).witness_row, 1u);

  auto b = LabeledMatrix::from_rows({v({1, 1})});
  auto res2 = solve_overdetermined(b, {v({3})});
  ASSERT_TRUE(std::holds_alternative<Underdetermined>(res2));
  EXPECT_EQ(std::get<Underdetermined>(res2).rank, 1u);
}

TEST(Solve, ResidualIsZero) {
  auto a = LabeledMatrix::from_rows({v({2, 1}), v({1, 3}), v({3, 4})});
  RationalVector b = v({5, 10, 15});
  auto res = solve_overdetermined(a, {b});
  ASSERT_TRUE(std::holds_alternative<Solution>(res));
  EXPECT_EQ(a.apply(std::get<Solution>(res).values[0]), b);
}

TEST(Rref, WeightSixHarvestLeavesTwoFreeMonomials) {
  ReductionTable lower = build_reduction_table(5);
  LabeledMatrix m = harvest_matrix(6, lower);
  auto r = rref(m);
  std::size_t unknowns = m.col_count() - monomials_of_weight(6).size();
  EXPECT_EQ(monomials_of_weight(6).size(), 2u);
  EXPECT_EQ(r.rank(), unknowns);
  for (auto c : r.pivot_columns) EXPECT_LT(c, unknowns);
}
