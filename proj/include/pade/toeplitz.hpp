#ifndef PADE_TOEPLITZ_HPP
#define PADE_TOEPLITZ_HPP

#include <Eigen/Core>

#include "pade/series.hpp"

namespace pade {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct PadeOrder {
  int m = 0;
  int n = 0;

  friend bool operator==(const PadeOrder&, const PadeOrder&) = default;
};

/// Member T_k of the Toeplitz family built from the window
/// c_{m-n+1} ... c_{m+n}: entry (i, j) = c_{k+i-j} (0-based), shape
/// (m+n-k+1) x (k-m+n), with c_{<0} = 0.
///
/// Valid for m-n <= k <= m+n+1. T_m is (n+1) x n and T_{m+1} is the
/// n x (n+1) matrix whose kernel holds the Pade denominators. k = m-n gives
/// the empty (2n+1) x 0 member, needed when n = 0.
Matrix build_Tk(const PowerSeries& f, PadeOrder order, int k);

/// Removes column k, counted from 1 as in T^{(k)}.
Matrix delete_column(const Matrix& t, int k);

/// Prepends the row (c_k, c_{k-1}, ..., c_{k-kappa}); requires
/// t.cols() == kappa + 1.
Matrix insert_row(const Matrix& t, const PowerSeries& f, int k, int kappa);

}  // namespace pade

#endif  // PADE_TOEPLITZ_HPP
