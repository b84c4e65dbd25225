// Exact integer polynomials used for f-, h- and gamma-polynomials.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace flagcx {

using Integer = boost::multiprecision::cpp_int;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Polynomial with exact integer coefficients, index = degree.
///
/// Trailing zero coefficients are always stripped, so two polynomials are
/// equal iff their coefficient vectors are equal.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<std::int64_t> coeffs);
  explicit Polynomial(std::vector<Integer> coeffs);

  static Polynomial constant(Integer c);
  static Polynomial monomial(Integer c, int degree);
  /// (1 + x)^n
  static Polynomial one_plus_x_pow(int n);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^i; zero outside the stored range.
  [[nodiscard]] Integer coeff(int i) const;
  [[nodiscard]] const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  /// Multiply by x^k.
  [[nodiscard]] Polynomial shifted(int k) const;
  /// Exact division by x^k; throws std::domain_error if not divisible.
  [[nodiscard]] Polynomial divided_by_x(int k = 1) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form, e.g. "1 + 3x + 3x^2 + x^3".
  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Coefficientwise order: true iff every coefficient of p - q is >= 0.
bool poly_ge(const Polynomial& p, const Polynomial& q);

/// True iff every coefficient is >= 0.
bool nonnegative(const Polynomial& p);

Integer binomial(int n, int k);

}  // namespace flagcx
