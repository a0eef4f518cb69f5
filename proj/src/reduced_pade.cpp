#include "pade/reduced_pade.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pade/errors.hpp"

namespace pade {

EssentialIndices::EssentialIndices(PadeOrder order, int kappa, RankReport rank_report)
    : order_(order), kappa_(kappa), rank_report_(std::move(rank_report)) {
  if (kappa_ < 0 || kappa_ > order_.n) {
    throw Error("essential indices: kappa " + std::to_string(kappa_) +
                " outside 0.." + std::to_string(order_.n));
  }
  // mu1 + mu2 = 2m + 1 and mu1 <= m < mu2 follow from 0 <= kappa <= n.
}

Polynomial fix_phase(const Polynomial& q) {
  for (const Complex& c : q.coeffs()) {
    if (c != Complex{0.0}) {
      const Complex unit = std::conj(c) / std::abs(c);
      std::vector<Complex> out(q.coeffs());
      for (Complex& x : out) x *= unit;
      return Polynomial(std::move(out), q.center());
    }
  }
  return q;
}

EssentialIndices essential_indices(const PowerSeries& f, PadeOrder order,
                                   std::optional<double> tol) {
  if (order.m < 0 || order.n < 0) throw InputError("negative Pade order");
  f.require(static_cast<std::size_t>(order.m + order.n + 1), "essential_indices");
  const Matrix tm = build_Tk(f, order, order.m);
  RankReport report = numerical_rank(svd(tm), tol);
  const int kappa = report.rank;
  return EssentialIndices(order, kappa, std::move(report));
}

DenominatorResult minimal_denominator(const PowerSeries& f, const EssentialIndices& idx,
                                      std::optional<double> tol) {
  const Matrix t = build_Tk(f, idx.order(), idx.mu1() + 1);
  RankReport report;
  const std::vector<Vector> kernel = null_space(t, tol, &report);
  if (kernel.size() != 1) {
    std::ostringstream msg;
    msg << "numerical kernel of T_" << idx.mu1() + 1 << " has dimension " << kernel.size()
        << " (expected 1; kappa = " << idx.kappa() << ", tolerance " << report.tolerance
        << ")";
    throw KernelDimensionMismatch(kernel.size(), msg.str());
  }

  DenominatorResult out;
  const Vector& v = kernel.front();
  out.q = fix_phase(Polynomial(std::vector<Complex>(v.data(), v.data() + v.size()), f.center()));
  if (!report.well_determined) {
    std::ostringstream msg;
    msg << "rank gap of T_" << idx.mu1() + 1 << " is " << report.gap
        << "; kernel may be ill-determined";
    out.warnings.push_back(msg.str());
  }
  out.kernel_report = std::move(report);
  return out;
}

CleanupResult cleanup_denominator(const PowerSeries& f, const EssentialIndices& idx,
                                  const Polynomial& q, std::optional<double> tol) {
  const int kappa = idx.kappa();
  if (q.formal_degree() != kappa) {
    throw ShapeMismatch("denominator must have formal degree kappa = " + std::to_string(kappa));
  }
  const Matrix t = build_Tk(f, idx.order(), idx.mu1() + 1);
  CleanupResult out;
  std::vector<Complex> coeffs = q.coeffs();
  for (int k = 0; k <= kappa; ++k) {
    const int r = numerical_rank(svd(delete_column(t, k + 1)), tol).rank;
    if (r == kappa - 1) {
      coeffs[static_cast<std::size_t>(k)] = 0.0;
      out.vanishing.insert(k);
    } else if (r != kappa) {
      out.warnings.push_back("rank of T^(" + std::to_string(k + 1) + ") is " +
                             std::to_string(r) + ", expected kappa or kappa-1");
    }
  }
  out.poly = Polynomial(std::move(coeffs), q.center());
  return out;
}

Polynomial numerator_from_denominator(const PowerSeries& f, PadeOrder order,
                                      const Polynomial& q) {
  f.require(static_cast<std::size_t>(order.m + 1), "numerator_from_denominator");
  std::vector<Complex> p(static_cast<std::size_t>(order.m + 1));
  for (int k = 0; k <= order.m; ++k) {
    Complex acc{0.0};
    for (int j = 0; j <= std::min(k, q.formal_degree()); ++j) {
      acc += f.at(k - j) * q[static_cast<std::size_t>(j)];
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  return Polynomial(std::move(p), f.center());
}

CleanupResult cleanup_numerator(const PowerSeries& f, const EssentialIndices& idx,
                                const Polynomial& p, std::optional<double> tol) {
  const int kappa = idx.kappa();
  const int m = idx.order().m;
  if (p.formal_degree() != m) {
    throw ShapeMismatch("numerator must have formal degree m = " + std::to_string(m));
  }
  const Matrix t = build_Tk(f, idx.order(), idx.mu1() + 1);
  CleanupResult out;
  std::vector<Complex> coeffs = p.coeffs();
  for (int k = 0; k <= m; ++k) {
    const int r = numerical_rank(svd(insert_row(t, f, k, kappa)), tol).rank;
    if (r == kappa) {
      coeffs[static_cast<std::size_t>(k)] = 0.0;
      out.vanishing.insert(k);
    } else if (r != kappa + 1) {
      out.warnings.push_back("rank of T^[" + std::to_string(k) + "] is " + std::to_string(r) +
                             ", expected kappa or kappa+1");
    }
  }
  out.poly = Polynomial(std::move(coeffs), p.center());
  return out;
}

ReducedPade reduced_pade(const PowerSeries& f, PadeOrder order, bool cleanup,
                         std::optional<double> tol) {
  EssentialIndices idx = essential_indices(f, order, tol);
  std::vector<std::string> warnings;
  if (!idx.rank_report().well_determined) {
    std::ostringstream msg;
    msg << "rank gap of T_" << order.m << " is " << idx.rank_report().gap
        << "; kappa may be ill-determined";
    warnings.push_back(msg.str());
  }
  const bool degenerate = order.n > 0 && idx.kappa() == 0;
  if (degenerate) warnings.emplace_back("degenerate_window: coefficient window is zero");

  DenominatorResult den = minimal_denominator(f, idx, tol);
  CleanupResult qtest = cleanup_denominator(f, idx, den.q, tol);
  const Polynomial q = cleanup ? fix_phase(qtest.poly) : den.q;
  const Polynomial p_raw = numerator_from_denominator(f, order, q);
  CleanupResult ptest = cleanup_numerator(f, idx, p_raw, tol);

  for (auto* w : {&den.warnings, &qtest.warnings, &ptest.warnings}) {
    warnings.insert(warnings.end(), w->begin(), w->end());
  }

  int deficiency = 0;
  while (qtest.vanishing.contains(deficiency)) ++deficiency;

  return ReducedPade{
      .order = order,
      .center = f.center(),
      .numerator = cleanup ? ptest.poly : p_raw,
      .denominator = q,
      .indices = std::move(idx),
      .deficiency = deficiency,
      .baker_exists = !qtest.vanishing.contains(0),
      .zeroed_q = std::move(qtest.vanishing),
      .zeroed_p = std::move(ptest.vanishing),
      .kernel_rank_report = std::move(den.kernel_report),
      .cleanup_applied = cleanup,
      .degenerate_window = degenerate,
      .warnings = std::move(warnings),
  };
}

std::pair<Polynomial, Polynomial> classical_pade(const PowerSeries& f, PadeOrder order) {
  if (order.m < 0 || order.n < 0) throw InputError("negative Pade order");
  f.require(static_cast<std::size_t>(order.m + order.n + 1), "classical_pade");
  const SvdResult s = svd(build_Tk(f, order, order.m + 1));
  const Vector v = s.v.col(s.v.cols() - 1);
  Polynomial q = fix_phase(Polynomial(std::vector<Complex>(v.data(), v.data() + v.size()),
                                      f.center()));
  Polynomial p = numerator_from_denominator(f, order, q);
  return {std::move(p), std::move(q)};
}

std::vector<double> order_condition_residual(const PowerSeries& f, const Polynomial& p,
                                             const Polynomial& q, PadeOrder order) {
  f.require(static_cast<std::size_t>(order.m + order.n + 1), "order_condition_residual");
  if (p.center() != f.center() || q.center() != f.center()) {
    throw CenterMismatch("order_condition_residual: centers differ");
  }
  const PowerSeries fq = series_mul_poly(f, q, f.size());
  std::vector<double> out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Complex pk = k < p.size() ? p[k] : Complex{0.0};
    out[k] = std::abs(fq.coeffs()[k] - pk);
  }
  return out;
}

DividedError divided_error(const PowerSeries& f, const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw ZeroPolynomial("divided_error: zero denominator");
  if (p.center() != f.center() || q.center() != f.center()) {
    throw CenterMismatch("divided_error: centers differ");
  }
  std::size_t shift = 0;
  while (q[shift] == Complex{0.0}) ++shift;
  for (std::size_t k = 0; k < std::min(shift, p.size()); ++k) {
    if (p[k] != Complex{0.0}) {
      throw InputError("divided_error: numerator does not share the factor (z-a)^" +
                       std::to_string(shift));
    }
  }
  const std::size_t len = f.size() > shift ? f.size() - shift : 0;
  const PowerSeries fq = series_mul_poly(f, q, f.size());
  // r = (f*Q - P) / (z-a)^shift, then divide by Q / (z-a)^shift.
  std::vector<Complex> r(len);
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t src = k + shift;
    r[k] = fq.coeffs()[src] - (src < p.size() ? p[src] : Complex{0.0});
  }
  const std::size_t qlen = q.size() - shift;
  const Complex q0 = q[shift];
  DividedError out;
  out.shift = static_cast<int>(shift);
  out.coeffs.resize(len);
  for (std::size_t k = 0; k < len; ++k) {
    Complex acc = r[k];
    for (std::size_t j = 1; j <= std::min(k, qlen - 1); ++j) {
      acc -= q[shift + j] * out.coeffs[k - j];
    }
    out.coeffs[k] = acc / q0;
  }
  return out;
}

}  // namespace pade
