#ifndef PADE_NUMRANK_HPP
#define PADE_NUMRANK_HPP

#include <optional>
#include <vector>

#include "pade/toeplitz.hpp"

namespace pade {

/// Full SVD A = U * Sigma * V^H with unitary U (M x M) and V (N x N).
struct SvdResult {
  Matrix u;
  std::vector<double> singular;  // min(M, N) values, descending
  Matrix v;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
};

struct RankReport {
  int rank = 0;
  double tolerance = 0.0;
  /// sigma_r / sigma_{r+1}; +inf when r = 0, r = min(M, N) or sigma_{r+1} = 0.
  double gap = 0.0;
  std::vector<double> singular;
  bool well_determined = true;
};

inline constexpr double kDefaultGapThreshold = 1e6;

SvdResult svd(const Matrix& a);

/// max(M, N) * ulp(sigma_1), the usual floating-point rank threshold.
double default_rank_tolerance(const SvdResult& s);

/// Number of singular values strictly above tol (default:
/// default_rank_tolerance).
RankReport numerical_rank(const SvdResult& s, std::optional<double> tol = std::nullopt,
                          double gap_threshold = kDefaultGapThreshold);

/// Orthonormal basis of the numerical null space: the trailing N - r columns
/// of V. `report`, when given, receives the rank decision.
std::vector<Vector> null_space(const Matrix& a, std::optional<double> tol = std::nullopt,
                               RankReport* report = nullptr);

}  // namespace pade

#endif  // PADE_NUMRANK_HPP
