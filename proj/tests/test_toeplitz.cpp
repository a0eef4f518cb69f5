#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "pade/errors.hpp"
#include "pade/numrank.hpp"
#include "pade/toeplitz.hpp"

namespace pade {
namespace {

PowerSeries indexed_series(int count) {
  // c_k = k + 1, so every entry identifies its own index.
  std::vector<Complex> c;
  for (int k = 0; k < count; ++k) c.emplace_back(k + 1.0);
  return PowerSeries(std::move(c));
}

TEST(BuildTk, TmShapeAndFirstColumn) {
  const PowerSeries f = indexed_series(5);
  const Matrix t = build_Tk(f, {2, 2}, 2);
  ASSERT_EQ(t.rows(), 3);
  ASSERT_EQ(t.cols(), 2);
  EXPECT_EQ(t(0, 0), f.at(2));
  EXPECT_EQ(t(1, 0), f.at(3));
  EXPECT_EQ(t(2, 0), f.at(4));
  EXPECT_EQ(t(0, 1), f.at(1));
}

TEST(BuildTk, DenominatorSystemMatrix) {
  // T_{m+1} is n x (n+1) with first row (c_{m+1}, c_m, ..., c_{m-n+1}).
  const PowerSeries f = indexed_series(12);
  for (const PadeOrder o : {PadeOrder{3, 2}, PadeOrder{4, 4}, PadeOrder{1, 5}}) {
    const Matrix t = build_Tk(f, o, o.m + 1);
    ASSERT_EQ(t.rows(), o.n);
    ASSERT_EQ(t.cols(), o.n + 1);
    for (int j = 0; j <= o.n; ++j) EXPECT_EQ(t(0, j), f.at(o.m + 1 - j));
    for (int i = 0; i < o.n; ++i) EXPECT_EQ(t(i, 0), f.at(o.m + 1 + i));
  }
}

TEST(BuildTk, GeometricOneByOne) {
  const PowerSeries f = testing::real_series({1, 1, 1});
  const Matrix t = build_Tk(f, {1, 1}, 2);
  ASSERT_EQ(t.rows(), 1);
  ASSERT_EQ(t.cols(), 2);
  EXPECT_EQ(t(0, 0), Complex(1.0));
  EXPECT_EQ(t(0, 1), Complex(1.0));
}

TEST(BuildTk, FamilyBoundsAndEmptyMembers) {
  const PowerSeries f = indexed_series(9);
  EXPECT_THROW(build_Tk(f, {4, 4}, -1), IndexOutOfFamily);
  EXPECT_THROW(build_Tk(f, {4, 4}, 10), IndexOutOfFamily);
  const Matrix top = build_Tk(f, {4, 4}, 9);
  EXPECT_EQ(top.rows(), 0);
  EXPECT_EQ(top.cols(), 8 + 1);
  const Matrix bottom = build_Tk(f, {3, 0}, 3);
  EXPECT_EQ(bottom.rows(), 1);
  EXPECT_EQ(bottom.cols(), 0);
  EXPECT_THROW(build_Tk(indexed_series(3), {2, 2}, 2), InsufficientCoefficients);
}

TEST(BuildTk, ConsecutiveMembersOverlap) {
  // Row i of T_{k+1} is row i+1 of T_k with one extra trailing entry, and
  // also row i of T_k shifted right behind one extra leading entry.
  const PowerSeries f = indexed_series(14);
  for (const PadeOrder o : {PadeOrder{5, 3}, PadeOrder{2, 6}, PadeOrder{6, 6}}) {
    for (int k = o.m - o.n; k <= o.m + o.n; ++k) {
      const Matrix a = build_Tk(f, o, k);
      const Matrix b = build_Tk(f, o, k + 1);
      ASSERT_EQ(b.rows(), a.rows() - 1);
      ASSERT_EQ(b.cols(), a.cols() + 1);
      for (Eigen::Index i = 0; i < b.rows(); ++i) {
        EXPECT_EQ(b(i, 0), f.at(k + 1 + static_cast<int>(i)));
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
          EXPECT_EQ(b(i, j), a(i + 1, j));
          EXPECT_EQ(b(i, j + 1), a(i, j));
        }
      }
    }
  }
}

TEST(BuildTk, RandomizedEntryAudit) {
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> deg(0, 7);
  const PowerSeries f = indexed_series(16);
  for (int trial = 0; trial < 200; ++trial) {
    const PadeOrder o{deg(gen), deg(gen)};
    std::uniform_int_distribution<int> kd(o.m - o.n, o.m + o.n + 1);
    const int k = kd(gen);
    const Matrix t = build_Tk(f, o, k);
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      for (Eigen::Index j = 0; j < t.cols(); ++j) {
        const int idx = k + static_cast<int>(i - j);
        EXPECT_EQ(t(i, j), idx < 0 ? Complex(0.0) : Complex(idx + 1.0));
      }
    }
  }
}

TEST(DeleteColumn, RemovesOneBasedColumn) {
  Matrix t(2, 3);
  t << 1, 2, 3, 4, 5, 6;
  Matrix want(2, 2);
  want << 1, 3, 4, 6;
  EXPECT_EQ(delete_column(t, 2), want);
  EXPECT_THROW(delete_column(t, 0), IndexOutOfRange);
  EXPECT_THROW(delete_column(t, 4), IndexOutOfRange);
}

TEST(DeleteColumn, ReinsertRestoresOriginal) {
  std::mt19937 gen(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix t(4, 5);
  for (Eigen::Index i = 0; i < t.size(); ++i) t.data()[i] = {u(gen), u(gen)};
  for (int k = 1; k <= 5; ++k) {
    const Matrix d = delete_column(t, k);
    Matrix back(4, 5);
    back << d.leftCols(k - 1), t.col(k - 1), d.rightCols(5 - k);
    EXPECT_EQ(back, t);
  }
}

TEST(DeleteColumn, KernelMatrixShapeForBlockExample) {
  const PadeOrder o{4, 4};
  const PowerSeries f = testing::series_of(testing::example_block22(), o);
  const int kappa = numerical_rank(svd(build_Tk(f, o, o.m))).rank;
  const int mu1 = o.m - o.n + kappa;
  const Matrix t = build_Tk(f, o, mu1 + 1);
  EXPECT_EQ(t.rows(), 2 * o.n - kappa);
  EXPECT_EQ(t.cols(), kappa + 1);
  const Matrix d = delete_column(t, 1);
  EXPECT_EQ(d.rows(), 2 * o.n - kappa);
  EXPECT_EQ(d.cols(), kappa);
}

TEST(InsertRow, PrependsShiftedCoefficients) {
  const PowerSeries f = indexed_series(8);
  const Matrix t = Matrix::Ones(2, 3);
  const Matrix r0 = insert_row(t, f, 0, 2);
  ASSERT_EQ(r0.rows(), 3);
  EXPECT_EQ(r0(0, 0), f.at(0));
  EXPECT_EQ(r0(0, 1), Complex(0.0));
  EXPECT_EQ(r0(0, 2), Complex(0.0));
  EXPECT_EQ(r0.bottomRows(2), t);

  const Matrix rk = insert_row(t, f, 2, 2);
  EXPECT_EQ(rk(0, 0), f.at(2));
  EXPECT_EQ(rk(0, 1), f.at(1));
  EXPECT_EQ(rk(0, 2), f.at(0));
}

TEST(InsertRow, BlockExampleConstantRow) {
  const PadeOrder o{2, 2};
  const PowerSeries f = testing::series_of(testing::example_block22(), o);
  const Matrix t = build_Tk(f, o, 3);  // mu1 + 1 with kappa = 2
  const Matrix r = insert_row(t, f, 0, 2);
  EXPECT_NEAR(r(0, 0).real(), 0.95238, 1e-5);
  EXPECT_EQ(r(0, 1), Complex(0.0));
  EXPECT_EQ(r(0, 2), Complex(0.0));
}

TEST(InsertRow, ShapeMismatch) {
  const PowerSeries f = indexed_series(4);
  EXPECT_THROW(insert_row(Matrix::Ones(2, 3), f, 1, 1), ShapeMismatch);
  EXPECT_THROW(insert_row(Matrix::Ones(2, 3), f, -1, 2), IndexOutOfRange);
}

}  // namespace
}  // namespace pade
