#include "pade/numrank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "pade/errors.hpp"

namespace pade {

SvdResult svd(const Matrix& a) {
  SvdResult out;
  out.rows = a.rows();
  out.cols = a.cols();
  if (a.rows() == 0 || a.cols() == 0) {
    out.u = Matrix::Identity(a.rows(), a.rows());
    out.v = Matrix::Identity(a.cols(), a.cols());
    return out;
  }
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
        throw ConvergenceFailure("svd: non-finite matrix entry");
      }
    }
  }

  // Two-sided Jacobi keeps small singular values accurate, which the rank
  // decisions depend on.
  Eigen::JacobiSVD<Matrix, Eigen::FullPivHouseholderQRPreconditioner> solver(
      a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("svd: Jacobi sweeps did not converge");
  }
  out.u = solver.matrixU();
  out.v = solver.matrixV();
  const auto& sv = solver.singularValues();
  out.singular.assign(sv.data(), sv.data() + sv.size());
  return out;
}

double default_rank_tolerance(const SvdResult& s) {
  const double sigma1 = s.singular.empty() ? 0.0 : s.singular.front();
  const double ulp =
      std::nextafter(sigma1, std::numeric_limits<double>::infinity()) - sigma1;
  const auto dim = std::max<Eigen::Index>({s.rows, s.cols, 1});
  return static_cast<double>(dim) * ulp;
}

RankReport numerical_rank(const SvdResult& s, std::optional<double> tol,
                          double gap_threshold) {
  RankReport r;
  r.singular = s.singular;
  r.tolerance = tol.value_or(default_rank_tolerance(s));
  r.rank = static_cast<int>(std::count_if(s.singular.begin(), s.singular.end(),
                                          [&](double x) { return x > r.tolerance; }));
  const auto count = static_cast<int>(s.singular.size());
  if (r.rank == 0 || r.rank == count || s.singular[r.rank] == 0.0) {
    r.gap = std::numeric_limits<double>::infinity();
  } else {
    r.gap = s.singular[r.rank - 1] / s.singular[r.rank];
  }
  r.well_determined = r.gap >= gap_threshold;
  return r;
}

std::vector<Vector> null_space(const Matrix& a, std::optional<double> tol,
                               RankReport* report) {
  const SvdResult s = svd(a);
  const RankReport r = numerical_rank(s, tol);
  if (report != nullptr) *report = r;
  std::vector<Vector> basis;
  for (Eigen::Index j = r.rank; j < s.cols; ++j) basis.emplace_back(s.v.col(j));
  return basis;
}

}  // namespace pade
