#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "hlmult/int_poly.hpp"

namespace hlm {

/// a/b in lowest terms.
inline mpq_class ratio(long a, long b) {
  mpq_class r(a, b);
  r.canonicalize();
  return r;
}

/// Reduced quotient num/den of integer polynomials in q: an element of Q(q).
///
/// Canonical form: den != 0, gcd(num, den) = 1 in Q[q], the leading
/// coefficient of den is positive and the integer contents of num and den are
/// coprime. Zero is 0/1. Two equal elements therefore have identical
/// representations.
class RatFunc {
 public:
  RatFunc() : den_(1L) {}
  RatFunc(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const mpz_class& c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  RatFunc(IntPoly p) : num_(std::move(p)), den_(1L) {}  // NOLINT(google-explicit-constructor)

  /// num/den brought to canonical form. Throws DivisionByZero if den is zero.
  static RatFunc make(IntPoly num, IntPoly den);
  static RatFunc q() { return RatFunc(IntPoly::q()); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_ == IntPoly(1L) && num_ == IntPoly(1L); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws DivisionByZero when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  /// Exact value at q = q0. Throws PoleError if den(q0) = 0.
  mpq_class eval(const mpz_class& q0) const;
  /// The integer polynomial this element equals. Throws NotPolynomial,
  /// naming the offending denominator, otherwise.
  IntPoly as_poly() const;
  /// f(q^n); the canonical form is preserved so no reduction is needed.
  RatFunc substitute_power(int n) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num" or "(num)/(den)".
  std::string to_string() const;

 private:
  RatFunc(IntPoly num, IntPoly den, int /*already_canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  IntPoly num_;
  IntPoly den_;
};

enum class ArithOp { add, sub, mul, div };

/// Single entry point over the four field operations.
RatFunc arith(const RatFunc& a, const RatFunc& b, ArithOp op);

/// Accumulates a sum of many rational functions, adding numerators over
/// equal denominators before doing any gcd work.
class RatFuncSum {
 public:
  void add(const RatFunc& x);
  void add_scaled(const RatFunc& x, const mpq_class& c);
  RatFunc total() const;
  bool empty() const { return groups_.empty(); }

 private:
  struct Group {
    IntPoly den;
    IntPoly num;
  };
  std::vector<Group> groups_;
};

}  // namespace hlm
