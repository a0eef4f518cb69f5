#include "pade/series.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "pade/errors.hpp"

namespace pade {

Polynomial::Polynomial(std::vector<Complex> coeffs, Complex center)
    : coeffs_(std::move(coeffs)), center_(center) {
  if (coeffs_.empty()) coeffs_.push_back(Complex{0.0});
}

int Polynomial::effective_degree() const noexcept {
  for (int k = formal_degree(); k >= 0; --k) {
    if (coeffs_[static_cast<std::size_t>(k)] != Complex{0.0}) return k;
  }
  return -1;
}

Complex Polynomial::operator()(Complex z) const noexcept {
  const Complex w = z - center_;
  Complex acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * w + *it;
  }
  return acc;
}

Polynomial Polynomial::recentered(Complex new_center) const {
  // Taylor shift: n passes of synthetic division by (w - h), h = new - old.
  std::vector<Complex> c = coeffs_;
  const Complex h = new_center - center_;
  const std::size_t n = c.size();
  if (h != Complex{0.0}) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) {
        c[j - 1] += h * c[j];
      }
    }
  }
  return Polynomial(std::move(c), new_center);
}

Complex PowerSeries::at(int k) const {
  if (k < 0) return Complex{0.0};
  if (static_cast<std::size_t>(k) >= coeffs_.size()) {
    throw InsufficientCoefficients("coefficient c_" + std::to_string(k) +
                                   " requested but only " +
                                   std::to_string(coeffs_.size()) +
                                   " are available");
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

void PowerSeries::require(std::size_t count, const char* context) const {
  if (coeffs_.size() < count) {
    throw InsufficientCoefficients(std::string(context) + ": need " +
                                   std::to_string(count) +
                                   " coefficients, have " +
                                   std::to_string(coeffs_.size()));
  }
}

double PowerSeries::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

RationalSpec::RationalSpec(Polynomial num, Polynomial den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (denominator.is_zero()) {
    throw InputError("rational function with zero denominator");
  }
}

Complex poly_eval(const Polynomial& p, Complex z) { return p(z); }

PowerSeries taylor_of_rational(const RationalSpec& spec, Complex a,
                               std::size_t count, double guard_tol) {
  const Polynomial num = spec.numerator.recentered(a);
  const Polynomial den = spec.denominator.recentered(a);

  double den_scale = 0.0;
  for (const Complex& d : den.coeffs()) den_scale = std::max(den_scale, std::abs(d));
  const Complex d0 = den[0];
  if (!(std::abs(d0) > guard_tol * den_scale)) {
    std::ostringstream msg;
    msg << "denominator vanishes at the expansion point " << a;
    throw PoleAtCenter(msg.str());
  }

  std::vector<Complex> c(count);
  for (std::size_t k = 0; k < count; ++k) {
    Complex acc = k < num.size() ? num[k] : Complex{0.0};
    const std::size_t jmax = std::min(k, den.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) acc -= den[j] * c[k - j];
    c[k] = acc / d0;
  }
  return PowerSeries(std::move(c), a);
}

PowerSeries series_mul_poly(const PowerSeries& f, const Polynomial& q,
                            std::size_t upto) {
  if (f.center() != q.center()) {
    throw CenterMismatch("series and polynomial are expanded about different points");
  }
  f.require(upto, "series_mul_poly");
  std::vector<Complex> out(upto);
  for (std::size_t k = 0; k < upto; ++k) {
    Complex acc{0.0};
    const std::size_t jmax = std::min(k, q.size() - 1);
    for (std::size_t j = 0; j <= jmax; ++j) acc += q[j] * f.coeffs()[k - j];
    out[k] = acc;
  }
  return PowerSeries(std::move(out), f.center());
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses one or two whitespace-separated doubles; nothing else may follow.
bool parse_complex(const std::string& text, Complex& out) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double re = 0.0;
  double im = 0.0;
  if (!(in >> re)) return false;
  if (!(in >> im)) {
    if (!in.eof()) return false;
    im = 0.0;
  } else {
    std::string rest;
    if (in >> rest) return false;
  }
  if (!std::isfinite(re) || !std::isfinite(im)) return false;
  out = Complex{re, im};
  return true;
}

}  // namespace

PowerSeries parse_coefficients(std::istream& in) {
  std::vector<Complex> coeffs;
  Complex center{};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const std::string body = trim(t.substr(1));
      if (body.rfind("center", 0) == 0 &&
          (body.size() == 6 || std::isspace(static_cast<unsigned char>(body[6])))) {
        if (!coeffs.empty()) {
          throw ParseError(lineno, "center header after coefficient data");
        }
        if (!parse_complex(trim(body.substr(6)), center)) {
          throw ParseError(lineno, "malformed center header '" + t + "'");
        }
      }
      continue;
    }
    Complex c;
    if (!parse_complex(t, c)) {
      throw ParseError(lineno, "expected '<re>' or '<re> <im>', got '" + t + "'");
    }
    coeffs.push_back(c);
  }
  if (coeffs.empty()) throw EmptyInput("no coefficients in input");
  return PowerSeries(std::move(coeffs), center);
}

PowerSeries read_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open coefficient file " + path.string());
  return parse_coefficients(in);
}

void write_coefficients(std::ostream& out, const PowerSeries& f) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "# center " << f.center().real() << ' ' << f.center().imag() << '\n';
  for (const Complex& c : f.coeffs()) out << c.real() << ' ' << c.imag() << '\n';
  out.flags(flags);
  out.precision(prec);
}

void write_coefficients(const std::filesystem::path& path, const PowerSeries& f) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write coefficient file " + path.string());
  write_coefficients(out, f);
}

}  // namespace pade
