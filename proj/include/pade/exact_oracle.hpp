#ifndef PADE_EXACT_ORACLE_HPP
#define PADE_EXACT_ORACLE_HPP

#include <set>
#include <vector>

#include <gmpxx.h>

#include "pade/toeplitz.hpp"

namespace pade::exact {

/// Exact-rational reference computations. Used by the test suites as ground
/// truth for the floating-point pipeline; nothing here depends on it.

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

/// c_0 ... c_{count-1} of num/den about 0 by exact power-series division.
/// Coefficient lists are lowest order first; den[0] must be non-zero.
RationalVector taylor_of_rational(const std::vector<long>& num, const std::vector<long>& den,
                                  std::size_t count);

/// T_k with entry (i, j) = c_{k+i-j}, c_{<0} = 0.
RationalMatrix toeplitz(const RationalVector& c, PadeOrder order, int k);

std::size_t rank(RationalMatrix a);

/// Basis of the exact kernel from the reduced row echelon form: one vector
/// per free column, with a 1 in that column.
std::vector<RationalVector> kernel(const RationalMatrix& a);

/// Remainder of num / den as polynomials (lowest order first). `den` must
/// have a non-zero coefficient.
RationalVector poly_remainder(RationalVector num, RationalVector den);

struct ExactPade {
  RationalVector p;  // p_0 ... p_m
  RationalVector q;  // q_0 ... q_kappa
  int kappa = 0;
  int mu1 = 0;
  int deficiency = 0;
  std::size_t kernel_dimension = 0;  // dim ker T_{mu1+1}
  std::set<int> zeroed_q;
  std::set<int> zeroed_p;
};

/// Reduced Pade approximant in exact arithmetic. Vanishing coefficients are
/// read off directly from the exact kernel vector and the exact numerator.
ExactPade exact_oracle(const RationalVector& c, PadeOrder order);

std::vector<double> to_double(const RationalVector& v);

}  // namespace pade::exact

#endif  // PADE_EXACT_ORACLE_HPP
