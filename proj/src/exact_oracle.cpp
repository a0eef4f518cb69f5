#include "pade/exact_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace pade::exact {

namespace {

Rational coeff(const RationalVector& c, int k) {
  if (k < 0) return 0;
  if (static_cast<std::size_t>(k) >= c.size()) {
    throw std::out_of_range("exact series too short for c_" + std::to_string(k));
  }
  return c[static_cast<std::size_t>(k)];
}

// In-place reduced row echelon form; returns the pivot column of each
// non-zero row.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const Rational inv = 1 / a[r][col];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

RationalVector taylor_of_rational(const std::vector<long>& num, const std::vector<long>& den,
                                  std::size_t count) {
  if (den.empty() || den.front() == 0) {
    throw std::invalid_argument("exact taylor: den(0) must be non-zero");
  }
  RationalVector c(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rational acc = k < num.size() ? Rational(num[k]) : Rational(0);
    for (std::size_t j = 1; j <= std::min(k, den.size() - 1); ++j) acc -= den[j] * c[k - j];
    c[k] = acc / den.front();
  }
  return c;
}

RationalMatrix toeplitz(const RationalVector& c, PadeOrder order, int k) {
  const int rows = order.m + order.n - k + 1;
  const int cols = k - order.m + order.n;
  RationalMatrix t(static_cast<std::size_t>(std::max(rows, 0)),
                   RationalVector(static_cast<std::size_t>(std::max(cols, 0))));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coeff(c, k + i - j);
    }
  }
  return t;
}

std::size_t rank(RationalMatrix a) { return rref(a).size(); }

std::vector<RationalVector> kernel(const RationalMatrix& a_in) {
  RationalMatrix a = a_in;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  const std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Kernel width of an empty-row matrix: callers pass the column count.
namespace {
std::vector<RationalVector> kernel_with_cols(const RationalMatrix& a, std::size_t cols) {
  if (!a.empty()) return kernel(a);
  std::vector<RationalVector> basis;
  for (std::size_t j = 0; j < cols; ++j) {
    RationalVector v(cols);
    v[j] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}
}  // namespace

RationalVector poly_remainder(RationalVector num, RationalVector den) {
  while (!den.empty() && den.back() == 0) den.pop_back();
  if (den.empty()) throw std::invalid_argument("poly_remainder: zero divisor");
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const Rational lead = num.back() / den.back();
    const std::size_t offset = num.size() - 1 - dd;
    for (std::size_t j = 0; j <= dd; ++j) num[offset + j] -= lead * den[j];
    num.pop_back();
  }
  return num;
}

ExactPade exact_oracle(const RationalVector& c, PadeOrder order) {
  ExactPade out;
  const int m = order.m;
  const int n = order.n;
  out.kappa = n == 0 ? 0 : static_cast<int>(rank(toeplitz(c, order, m)));
  out.mu1 = m - n + out.kappa;

  const int k = out.mu1 + 1;
  const auto cols = static_cast<std::size_t>(k - m + n);
  const std::vector<RationalVector> ker = kernel_with_cols(toeplitz(c, order, k), cols);
  out.kernel_dimension = ker.size();
  if (ker.size() != 1) return out;

  out.q = ker.front();
  for (std::size_t j = 0; j < out.q.size(); ++j) {
    if (out.q[j] == 0) out.zeroed_q.insert(static_cast<int>(j));
  }
  while (out.zeroed_q.contains(out.deficiency)) ++out.deficiency;

  out.p.assign(static_cast<std::size_t>(m + 1), Rational(0));
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= std::min(i, out.kappa); ++j) {
      out.p[static_cast<std::size_t>(i)] += coeff(c, i - j) * out.q[static_cast<std::size_t>(j)];
    }
    if (out.p[static_cast<std::size_t>(i)] == 0) out.zeroed_p.insert(i);
  }
  return out;
}

std::vector<double> to_double(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(x.get_d());
  return out;
}

}  // namespace pade::exact
