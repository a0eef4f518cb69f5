#ifndef PADE_TESTS_FIXTURES_HPP
#define PADE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pade/exact_oracle.hpp"
#include "pade/reduced_pade.hpp"

namespace pade::testing {

inline Polynomial real_poly(std::initializer_list<double> c) {
  return Polynomial(std::vector<Complex>(c.begin(), c.end()));
}

inline Polynomial real_poly(const std::vector<long>& c) {
  std::vector<Complex> v;
  for (long x : c) v.emplace_back(static_cast<double>(x));
  return Polynomial(std::move(v));
}

// (z+1)(z-2) / ((z+2.1)(z-1)), the non-normal example with a (2,2) block.
inline RationalSpec example_block22() {
  return RationalSpec(real_poly({-2.0, -1.0, 1.0}), real_poly({-2.1, 1.1, 1.0}));
}

// (z+1.01) / ((z+2)(z-2.01)).
inline RationalSpec example_type12() {
  return RationalSpec(real_poly({1.01, 1.0}), real_poly({-4.02, -0.01, 1.0}));
}

// (z+1.01) / (z^4 + 3z^2 - 4.01); its denominator is even.
inline RationalSpec example_even_den() {
  return RationalSpec(real_poly({1.01, 1.0}), real_poly({-4.01, 0.0, 3.0, 0.0, 1.0}));
}

inline PowerSeries series_of(const RationalSpec& s, PadeOrder o, std::size_t extra = 0) {
  return taylor_of_rational(s, Complex{}, static_cast<std::size_t>(o.m + o.n + 1) + extra);
}

inline PowerSeries real_series(std::initializer_list<double> c) {
  return PowerSeries(std::vector<Complex>(c.begin(), c.end()));
}

/// Integer-coefficient rational function with an order at which to
/// approximate it, plus its exact Taylor coefficients.
struct RandomFixture {
  std::vector<long> num;
  std::vector<long> den;
  PadeOrder order;
  exact::RationalVector exact_coeffs;
  PowerSeries series;
};

/// Degrees <= 4, coefficients in [-5, 5], den(0) != 0, orders with
/// m <= 6 and 1 <= n <= 6, coefficient window c_{m-n+1..m+n} not all zero.
inline std::vector<RandomFixture> random_fixtures(std::size_t count, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<int> degree(0, 4);
  std::uniform_int_distribution<int> m_dist(0, 6);
  std::uniform_int_distribution<int> n_dist(1, 6);

  auto draw_poly = [&](int deg, bool nonzero_constant) {
    std::vector<long> p(static_cast<std::size_t>(deg + 1));
    for (auto& x : p) x = coef(gen);
    while (p.back() == 0) p.back() = coef(gen);
    while (nonzero_constant && p.front() == 0) p.front() = coef(gen);
    return p;
  };

  std::vector<RandomFixture> out;
  while (out.size() < count) {
    RandomFixture fx;
    fx.num = draw_poly(degree(gen), false);
    fx.den = draw_poly(degree(gen), true);
    fx.order = {m_dist(gen), n_dist(gen)};
    const auto len = static_cast<std::size_t>(fx.order.m + fx.order.n + 1);
    fx.exact_coeffs = exact::taylor_of_rational(fx.num, fx.den, len);
    bool window_zero = true;
    for (int k = std::max(0, fx.order.m - fx.order.n + 1); k <= fx.order.m + fx.order.n; ++k) {
      if (fx.exact_coeffs[static_cast<std::size_t>(k)] != 0) window_zero = false;
    }
    if (window_zero) continue;
    std::vector<Complex> c;
    for (const auto& x : fx.exact_coeffs) c.emplace_back(x.get_d());
    fx.series = PowerSeries(std::move(c));
    out.push_back(std::move(fx));
  }
  return out;
}

/// Scales (p, q) jointly so that q has unit 2-norm and its lowest-index
/// non-zero coefficient is real positive.
inline std::pair<std::vector<Complex>, std::vector<Complex>> normalize_pair(
    std::vector<Complex> p, std::vector<Complex> q) {
  double norm = 0.0;
  for (const Complex& x : q) norm += std::norm(x);
  norm = std::sqrt(norm);
  Complex scale = 1.0 / norm;
  for (const Complex& x : q) {
    if (x != Complex{0.0}) {
      scale *= std::conj(x) / std::abs(x);
      break;
    }
  }
  for (Complex& x : p) x *= scale;
  for (Complex& x : q) x *= scale;
  return {std::move(p), std::move(q)};
}

inline std::vector<Complex> to_complex(const exact::RationalVector& v) {
  std::vector<Complex> out;
  for (const auto& x : v) out.emplace_back(x.get_d());
  return out;
}

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

inline double max_abs(const std::vector<Complex>& a) {
  double d = 0.0;
  for (const Complex& x : a) d = std::max(d, std::abs(x));
  return d;
}

}  // namespace pade::testing

#endif  // PADE_TESTS_FIXTURES_HPP
