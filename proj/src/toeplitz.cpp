#include "pade/toeplitz.hpp"

#include <string>

#include "pade/errors.hpp"

namespace pade {

Matrix build_Tk(const PowerSeries& f, PadeOrder order, int k) {
  const int m = order.m;
  const int n = order.n;
  if (m < 0 || n < 0) throw IndexOutOfFamily("negative Pade order");
  if (k < m - n || k > m + n + 1) {
    throw IndexOutOfFamily("T_" + std::to_string(k) + " is outside the family for order (" +
                           std::to_string(m) + "," + std::to_string(n) + ")");
  }
  const int rows = m + n - k + 1;
  const int cols = k - m + n;
  if (rows > 0 && cols > 0) f.require(static_cast<std::size_t>(m + n + 1), "build_Tk");

  Matrix t(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) t(i, j) = f.at(k + i - j);
  }
  return t;
}

Matrix delete_column(const Matrix& t, int k) {
  const auto cols = static_cast<int>(t.cols());
  if (k < 1 || k > cols) {
    throw IndexOutOfRange("column " + std::to_string(k) + " not in 1.." + std::to_string(cols));
  }
  Matrix out(t.rows(), cols - 1);
  out.leftCols(k - 1) = t.leftCols(k - 1);
  out.rightCols(cols - k) = t.rightCols(cols - k);
  return out;
}

Matrix insert_row(const Matrix& t, const PowerSeries& f, int k, int kappa) {
  if (t.cols() != kappa + 1) {
    throw ShapeMismatch("insert_row expects " + std::to_string(kappa + 1) +
                        " columns, matrix has " + std::to_string(t.cols()));
  }
  if (k < 0) throw IndexOutOfRange("insert_row: negative row index " + std::to_string(k));
  Matrix out(t.rows() + 1, t.cols());
  for (int j = 0; j <= kappa; ++j) out(0, j) = f.at(k - j);
  out.bottomRows(t.rows()) = t;
  return out;
}

}  // namespace pade
