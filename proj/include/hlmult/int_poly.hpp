#pragma once

#include <gmpxx.h>

#include <climits>
#include <optional>
#include <string>
#include <vector>

namespace hlm {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficient i multiplies q^i. The highest stored coefficient is never
/// zero; the zero polynomial has no coefficients and degree kZeroDegree.
class IntPoly {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(long c);  // NOLINT(google-explicit-constructor): constants convert freely
  IntPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static IntPoly monomial(const mpz_class& c, int exponent);
  /// The indeterminate q.
  static IntPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coeff(int i) const;
  const mpz_class& leading() const { return coeffs_.back(); }

  /// Largest absolute value of a coefficient.
  mpz_class max_norm() const;
  /// Non-negative gcd of the coefficients (zero for the zero polynomial).
  mpz_class content() const;
  /// this / content with a positive leading coefficient.
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(const mpz_class& c) const;
  /// Divides every coefficient by c; c must divide the content.
  IntPoly divided_exactly(const mpz_class& c) const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  /// p(q^n).
  IntPoly compose_power(int n) const;
  IntPoly pow(unsigned e) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  /// Total order (degree, then coefficients from the top) for use as a map key.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  /// Renders like "q^2 + 3q - 1"; the zero polynomial is "0".
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// a = quotient * b + remainder over Z[q]; empty if the division is not exact
/// or b is zero.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd of a and b by the primitive Euclidean remainder sequence.
/// Positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd_euclid(const IntPoly& a, const IntPoly& b);

/// Greatest common divisor in Z[q]: integer content gcd times the primitive
/// gcd, with positive leading coefficient. Tries the heuristic evaluation gcd
/// first and falls back to gcd_euclid.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Primitive part of gcd(a, b); cheaper when only the polynomial factor matters.
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b);

/// The m-th cyclotomic polynomial.
IntPoly cyclotomic_polynomial(int m);

}  // namespace hlm
