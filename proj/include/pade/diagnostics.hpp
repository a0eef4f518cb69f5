#ifndef PADE_DIAGNOSTICS_HPP
#define PADE_DIAGNOSTICS_HPP

#include <optional>
#include <vector>

#include "pade/reduced_pade.hpp"

namespace pade {

struct RootSet {
  std::vector<Complex> roots;  // absolute positions, i.e. center + w
  int effective_degree = 0;
  int trimmed_leading = 0;
};

/// Roots of p via companion-matrix eigenvalues, each refined by one Newton
/// step. Leading coefficients with |c| <= trim_tol * max|c| are dropped
/// first; trim_tol = 0 only drops exact zeros, so a tiny spurious leading
/// coefficient shows up as a huge root.
RootSet poly_roots(const Polynomial& p, double trim_tol = 0.0);

struct Doublet {
  Complex zero;
  Complex pole;
  double distance = 0.0;
};

struct DoubletReport {
  std::vector<Doublet> doublets;
  std::vector<Complex> unpaired_zeros;
  std::vector<Complex> unpaired_poles;
  double pairing_tol = 0.0;
};

inline constexpr double kDefaultPairingTol = 1e-3;

/// Greedy matching: the globally closest (zero, pole) pair with
/// |zero - pole| <= pairing_tol * max(1, |zero|) is paired and removed,
/// repeatedly. Not an optimal assignment.
DoubletReport detect_doublets(const std::vector<Complex>& zeros,
                              const std::vector<Complex>& poles, double pairing_tol);

/// Zeros and poles of P/Q with the common factor (z-a)^s removed, s being
/// the smaller number of leading zero coefficients of P and Q. A zero
/// numerator has no zeros.
struct ZeroPoleSet {
  RootSet zeros;
  RootSet poles;
  int common_shift = 0;
};
ZeroPoleSet zeros_and_poles(const Polynomial& p, const Polynomial& q, double trim_tol = 0.0);

struct ApproximantSummary {
  Polynomial numerator;
  Polynomial denominator;
  ZeroPoleSet roots;
  DoubletReport doublets;
};

struct Comparison {
  ApproximantSummary classical;
  ApproximantSummary reduced_summary;
  ReducedPade reduced;
};

Comparison compare(const PowerSeries& f, PadeOrder order, std::optional<double> tol = std::nullopt,
                   double pairing_tol = kDefaultPairingTol, bool cleanup = true);

}  // namespace pade

#endif  // PADE_DIAGNOSTICS_HPP
