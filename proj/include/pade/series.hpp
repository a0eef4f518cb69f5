#ifndef PADE_SERIES_HPP
#define PADE_SERIES_HPP

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace pade {

using Complex = std::complex<double>;

/// Dense polynomial in powers of (z - center), lowest order first.
///
/// The zero polynomial is stored as the single coefficient 0; an empty
/// coefficient list is normalized to that on construction.
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{0.0}} {}
  explicit Polynomial(std::vector<Complex> coeffs, Complex center = {});

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex center() const noexcept { return center_; }

  Complex operator[](std::size_t k) const { return coeffs_.at(k); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  int formal_degree() const noexcept {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  /// Largest k with a non-zero coefficient, or -1 for the zero polynomial.
  int effective_degree() const noexcept;
  bool is_zero() const noexcept { return effective_degree() < 0; }

  /// Horner evaluation at z.
  Complex operator()(Complex z) const noexcept;

  /// Same polynomial expanded in powers of (z - new_center).
  Polynomial recentered(Complex new_center) const;

 private:
  std::vector<Complex> coeffs_;
  Complex center_;
};

/// Finite prefix c_0 ... c_N of a Taylor series about `center`.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Complex> coeffs, Complex center = {})
      : coeffs_(std::move(coeffs)), center_(center) {}

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex center() const noexcept { return center_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// c_k, with c_k = 0 for every k < 0. Throws InsufficientCoefficients when
  /// k is beyond the stored prefix.
  Complex at(int k) const;

  /// Throws InsufficientCoefficients unless c_0 ... c_{count-1} are stored.
  void require(std::size_t count, const char* context) const;

  /// Largest coefficient magnitude, 0 for an empty series.
  double max_abs() const noexcept;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
  Complex center_;
};

struct RationalSpec {
  Polynomial numerator;
  Polynomial denominator;

  /// Throws InputError if the denominator is the zero polynomial.
  RationalSpec(Polynomial num, Polynomial den);
};

inline constexpr double kDefaultPoleGuard = 1e-12;

Complex poly_eval(const Polynomial& p, Complex z);

/// Taylor coefficients c_0 ... c_{count-1} of num/den about a.
///
/// Both polynomials are shifted to the new center by repeated synthetic
/// division, then divided as power series. Throws PoleAtCenter when
/// |den(a)| <= guard_tol * max|den coefficient|.
PowerSeries taylor_of_rational(const RationalSpec& spec, Complex a,
                               std::size_t count,
                               double guard_tol = kDefaultPoleGuard);

/// First `upto` coefficients of the Cauchy product f * q.
PowerSeries series_mul_poly(const PowerSeries& f, const Polynomial& q,
                            std::size_t upto);

/// Coefficient file I/O. Grammar: an optional `# center <re> [<im>]` header,
/// then one coefficient per line as `<re>` or `<re> <im>`. Lines starting
/// with `#` are comments, blank lines are ignored.
PowerSeries read_coefficients(const std::filesystem::path& path);
PowerSeries parse_coefficients(std::istream& in);
void write_coefficients(std::ostream& out, const PowerSeries& f);
void write_coefficients(const std::filesystem::path& path, const PowerSeries& f);

}  // namespace pade

#endif  // PADE_SERIES_HPP
