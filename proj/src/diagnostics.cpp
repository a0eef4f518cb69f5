#include "pade/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/Polynomials>

#include "pade/errors.hpp"

namespace pade {

namespace {

// Horner evaluation of p and p' at w (coefficients in powers of w).
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& c, Complex w) {
  Complex value{0.0};
  Complex deriv{0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv = deriv * w + value;
    value = value * w + *it;
  }
  return {value, deriv};
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

RootSet poly_roots(const Polynomial& p, double trim_tol) {
  if (p.is_zero()) throw ZeroPolynomial("poly_roots: zero polynomial has no root set");
  std::vector<Complex> c = p.coeffs();
  double scale = 0.0;
  for (const Complex& x : c) scale = std::max(scale, std::abs(x));

  RootSet out;
  while (c.size() > 1 && std::abs(c.back()) <= trim_tol * scale) {
    c.pop_back();
    ++out.trimmed_leading;
  }
  const auto degree = static_cast<Eigen::Index>(c.size()) - 1;
  out.effective_degree = static_cast<int>(degree);
  if (degree == 0) return out;

  Eigen::VectorXcd poly(degree + 1);
  for (Eigen::Index k = 0; k <= degree; ++k) poly[k] = c[static_cast<std::size_t>(k)];

  std::vector<Complex> raw;
  if (degree == 1) {
    raw.push_back(-poly[0] / poly[1]);
  } else {
    Eigen::PolynomialSolver<Complex, Eigen::Dynamic> solver(poly);
    const auto& r = solver.roots();
    raw.assign(r.data(), r.data() + r.size());
  }

  out.roots.reserve(raw.size());
  for (Complex w : raw) {
    const auto [value, deriv] = eval_with_derivative(c, w);
    if (deriv != Complex{0.0}) {
      const Complex refined = w - value / deriv;
      if (is_finite(refined) &&
          std::abs(eval_with_derivative(c, refined).first) <= std::abs(value)) {
        w = refined;
      }
    }
    out.roots.push_back(p.center() + w);
  }
  return out;
}

DoubletReport detect_doublets(const std::vector<Complex>& zeros,
                              const std::vector<Complex>& poles, double pairing_tol) {
  if (!(pairing_tol > 0.0)) throw InputError("detect_doublets: pairing_tol must be positive");

  struct Candidate {
    double distance;
    std::size_t zero;
    std::size_t pole;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    for (std::size_t j = 0; j < poles.size(); ++j) {
      const double d = std::abs(zeros[i] - poles[j]);
      if (d <= pairing_tol * std::max(1.0, std::abs(zeros[i]))) candidates.push_back({d, i, j});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });

  DoubletReport report;
  report.pairing_tol = pairing_tol;
  std::vector<bool> zero_used(zeros.size(), false);
  std::vector<bool> pole_used(poles.size(), false);
  for (const Candidate& c : candidates) {
    if (zero_used[c.zero] || pole_used[c.pole]) continue;
    zero_used[c.zero] = true;
    pole_used[c.pole] = true;
    report.doublets.push_back({zeros[c.zero], poles[c.pole], c.distance});
  }
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (!zero_used[i]) report.unpaired_zeros.push_back(zeros[i]);
  }
  for (std::size_t j = 0; j < poles.size(); ++j) {
    if (!pole_used[j]) report.unpaired_poles.push_back(poles[j]);
  }
  return report;
}

ZeroPoleSet zeros_and_poles(const Polynomial& p, const Polynomial& q, double trim_tol) {
  if (q.is_zero()) throw ZeroPolynomial("zeros_and_poles: zero denominator");
  auto leading_zeros = [](const Polynomial& x) {
    std::size_t s = 0;
    while (s < x.size() && x[s] == Complex{0.0}) ++s;
    return s;
  };
  const std::size_t shift = p.is_zero() ? leading_zeros(q)
                                        : std::min(leading_zeros(p), leading_zeros(q));
  auto drop = [shift](const Polynomial& x) {
    return Polynomial(std::vector<Complex>(x.coeffs().begin() + static_cast<std::ptrdiff_t>(shift),
                                           x.coeffs().end()),
                      x.center());
  };

  ZeroPoleSet out;
  out.common_shift = static_cast<int>(shift);
  out.poles = poly_roots(drop(q), trim_tol);
  if (!p.is_zero()) out.zeros = poly_roots(drop(p), trim_tol);
  return out;
}

namespace {

ApproximantSummary summarize(Polynomial p, Polynomial q, double pairing_tol) {
  ApproximantSummary s{std::move(p), std::move(q), {}, {}};
  s.roots = zeros_and_poles(s.numerator, s.denominator);
  s.doublets = detect_doublets(s.roots.zeros.roots, s.roots.poles.roots, pairing_tol);
  return s;
}

}  // namespace

Comparison compare(const PowerSeries& f, PadeOrder order, std::optional<double> tol,
                   double pairing_tol, bool cleanup) {
  auto [cp, cq] = classical_pade(f, order);
  ReducedPade reduced = reduced_pade(f, order, cleanup, tol);
  ApproximantSummary classical = summarize(std::move(cp), std::move(cq), pairing_tol);
  ApproximantSummary red = summarize(reduced.numerator, reduced.denominator, pairing_tol);
  return Comparison{std::move(classical), std::move(red), std::move(reduced)};
}

}  // namespace pade
