#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hlmult/int_poly.hpp"

namespace hlm {

/// Element Σ_j c_j ζ^j of the group ring Z[C_m], ζ a primitive m-th root of
/// unity. Equality as a cyclotomic number goes through reduction mod Φ_m.
class Cyclo {
 public:
  explicit Cyclo(int m);
  static Cyclo constant(int m, const mpz_class& c);
  /// ζ^j, j taken mod m.
  static Cyclo root(int m, long j);

  int order() const { return m_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo scaled(const mpz_class& s) const;
  /// Complex conjugate: ζ^j ↦ ζ^{−j}.
  Cyclo conj() const;

  /// Representative of degree < φ(m) in Z[x]/Φ_m.
  IntPoly reduced() const;
  bool is_zero() const { return reduced().is_zero(); }
  /// The integer this element equals, if it is one.
  std::optional<mpz_class> as_integer() const;

  std::string to_string() const;

 private:
  void check(const Cyclo& o) const;
  int m_;
  std::vector<mpz_class> c_;
};

}  // namespace hlm
