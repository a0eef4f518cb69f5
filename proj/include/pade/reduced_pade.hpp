#ifndef PADE_REDUCED_PADE_HPP
#define PADE_REDUCED_PADE_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pade/numrank.hpp"
#include "pade/series.hpp"
#include "pade/toeplitz.hpp"

namespace pade {

/// Essential indices of the window c_{m-n+1} ... c_{m+n}:
/// kappa = rank T_m, mu1 = m - n + kappa, mu2 = m + n - kappa + 1.
class EssentialIndices {
 public:
  EssentialIndices(PadeOrder order, int kappa, RankReport rank_report);

  PadeOrder order() const noexcept { return order_; }
  int kappa() const noexcept { return kappa_; }
  int mu1() const noexcept { return order_.m - order_.n + kappa_; }
  int mu2() const noexcept { return order_.m + order_.n - kappa_ + 1; }
  const RankReport& rank_report() const noexcept { return rank_report_; }

 private:
  PadeOrder order_;
  int kappa_;
  RankReport rank_report_;
};

struct DenominatorResult {
  Polynomial q;
  RankReport kernel_report;
  std::vector<std::string> warnings;
};

/// Outcome of the vanishing-coefficient rank tests. `vanishing` lists the
/// indices whose coefficient is zero in exact arithmetic; `poly` has them set
/// to exactly 0.
struct CleanupResult {
  Polynomial poly;
  std::set<int> vanishing;
  std::vector<std::string> warnings;
};

struct ReducedPade {
  PadeOrder order;
  Complex center;
  Polynomial numerator;    // formal degree m
  Polynomial denominator;  // formal degree kappa
  EssentialIndices indices;
  int deficiency = 0;
  bool baker_exists = true;
  std::set<int> zeroed_q;
  std::set<int> zeroed_p;
  RankReport kernel_rank_report;
  bool cleanup_applied = true;
  bool degenerate_window = false;
  std::vector<std::string> warnings;
};

/// Multiplies q by a unimodular scalar so that its lowest-index non-zero
/// coefficient is real and positive.
Polynomial fix_phase(const Polynomial& q);

EssentialIndices essential_indices(const PowerSeries& f, PadeOrder order,
                                   std::optional<double> tol = std::nullopt);

/// Unit-norm basis vector of ker T_{mu1+1}, read as the coefficients
/// q_0 ... q_kappa of the minimal-degree denominator. Throws
/// KernelDimensionMismatch if the numerical kernel is not one-dimensional.
DenominatorResult minimal_denominator(const PowerSeries& f, const EssentialIndices& idx,
                                      std::optional<double> tol = std::nullopt);

/// q_k vanishes iff rank T_{mu1+1}^{(k+1)} = kappa - 1.
CleanupResult cleanup_denominator(const PowerSeries& f, const EssentialIndices& idx,
                                  const Polynomial& q,
                                  std::optional<double> tol = std::nullopt);

/// p_k = sum_j c_{k-j} q_j for k = 0 ... m.
Polynomial numerator_from_denominator(const PowerSeries& f, PadeOrder order,
                                      const Polynomial& q);

/// p_k vanishes iff rank T_{mu1+1}^{[k]} = kappa.
CleanupResult cleanup_numerator(const PowerSeries& f, const EssentialIndices& idx,
                                const Polynomial& p,
                                std::optional<double> tol = std::nullopt);

/// Reduced (m, n) Pade approximant of f.
///
/// The vanishing tests always run and determine the deficiency index and
/// the Baker flag; `cleanup` controls whether the vanishing coefficients are
/// written as exact zeros. Denominator cleanup precedes numerator synthesis.
ReducedPade reduced_pade(const PowerSeries& f, PadeOrder order, bool cleanup = true,
                         std::optional<double> tol = std::nullopt);

/// Classical baseline: the right-singular vector of T_{m+1} belonging to
/// its smallest singular value, with the numerator from the Toeplitz
/// product. Any kernel element is accepted, so no minimality is enforced.
std::pair<Polynomial, Polynomial> classical_pade(const PowerSeries& f, PadeOrder order);

/// |coefficients| of f*Q - P, for every index the series supplies. The first
/// m+n+1 entries vanish for a valid approximant.
std::vector<double> order_condition_residual(const PowerSeries& f, const Polynomial& p,
                                             const Polynomial& q, PadeOrder order);

/// Coefficients of f - P/Q after the common factor (z-a)^s is divided out
/// of P and Q, where s is the number of leading zero coefficients of Q.
/// Requires the first s coefficients of P to be zero as well.
struct DividedError {
  std::vector<Complex> coeffs;
  int shift = 0;
};
DividedError divided_error(const PowerSeries& f, const Polynomial& p, const Polynomial& q);

}  // namespace pade

#endif  // PADE_REDUCED_PADE_HPP
