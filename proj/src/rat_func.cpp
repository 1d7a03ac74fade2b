#include "hlmult/rat_func.hpp"

#include <algorithm>

#include "hlmult/error.hpp"

namespace hlm {

RatFunc::RatFunc(const mpq_class& c)
    : num_(mpz_class(c.get_num())), den_(mpz_class(c.get_den())) {}

RatFunc RatFunc::make(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RatFunc();
  if (!num.is_constant() && !den.is_constant()) {
    IntPoly g = primitive_gcd(num, den);
    if (!g.is_constant()) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  mpz_class c;
  const mpz_class cn = num.content();
  const mpz_class cd = den.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den.leading() < 0) c = -c;
  if (c != 1) {
    num = num.divided_exactly(c);
    den = den.divided_exactly(c);
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc::make(a.num_ + b.num_, a.den_);
  if (a.den_.is_constant() && b.den_.is_constant()) {
    return RatFunc::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  // Scale by den / gcd so the common denominator stays the lcm.
  IntPoly g = primitive_gcd(a.den_, b.den_);
  if (g.is_constant()) {
    return RatFunc::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  IntPoly ca = *divide_exact(b.den_, g);
  IntPoly cb = *divide_exact(a.den_, g);
  return RatFunc::make(a.num_ * ca + b.num_ * cb, a.den_ * ca);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_constant() && b.den_.is_constant()) {
    return RatFunc::make(a.num_ * b.num_, a.den_ * b.den_);
  }
  // Cross-cancel so each gcd runs on the smaller factors.
  IntPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!an.is_constant() && !bd.is_constant()) {
    IntPoly g = primitive_gcd(an, bd);
    if (!g.is_constant()) {
      an = *divide_exact(an, g);
      bd = *divide_exact(bd, g);
    }
  }
  if (!bn.is_constant() && !ad.is_constant()) {
    IntPoly g = primitive_gcd(bn, ad);
    if (!g.is_constant()) {
      bn = *divide_exact(bn, g);
      ad = *divide_exact(ad, g);
    }
  }
  IntPoly num = an * bn;
  IntPoly den = ad * bd;
  mpz_class c;
  const mpz_class cn = num.content();
  const mpz_class cd = den.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den.leading() < 0) c = -c;
  if (c != 1) {
    num = num.divided_exactly(c);
    den = den.divided_exactly(c);
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (num_.leading() < 0) return RatFunc(-den_, -num_, 0);
  return RatFunc(den_, num_, 0);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), 0);
}

mpq_class RatFunc::eval(const mpz_class& q0) const {
  mpz_class d = den_.eval(q0);
  if (d == 0) {
    throw PoleError("pole at q = " + q0.get_str() + " of " + to_string());
  }
  mpq_class r(num_.eval(q0), d);
  r.canonicalize();
  return r;
}

IntPoly RatFunc::as_poly() const {
  if (den_ == IntPoly(1L)) return num_;
  throw NotPolynomial("not an integer polynomial: denominator " + den_.to_string() +
                      " in " + to_string());
}

RatFunc RatFunc::substitute_power(int n) const {
  return RatFunc(num_.compose_power(n), den_.compose_power(n), 0);
}

std::string RatFunc::to_string() const {
  if (den_ == IntPoly(1L)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return {};
}

void RatFuncSum::add(const RatFunc& x) {
  if (x.is_zero()) return;
  auto it = std::find_if(groups_.begin(), groups_.end(),
                         [&](const Group& g) { return g.den == x.den(); });
  if (it == groups_.end()) {
    groups_.push_back({x.den(), x.num()});
  } else {
    it->num += x.num();
  }
}

void RatFuncSum::add_scaled(const RatFunc& x, const mpq_class& c) {
  if (x.is_zero() || c == 0) return;
  const mpz_class cn(c.get_num());
  const mpz_class cd(c.get_den());
  if (cd == 1) {
    auto it = std::find_if(groups_.begin(), groups_.end(),
                           [&](const Group& g) { return g.den == x.den(); });
    if (it == groups_.end()) {
      groups_.push_back({x.den(), x.num().scaled(cn)});
    } else {
      it->num += x.num().scaled(cn);
    }
    return;
  }
  add(x * RatFunc(c));
}

RatFunc RatFuncSum::total() const {
  RatFunc acc;
  for (const auto& g : groups_) {
    if (!g.num.is_zero()) acc += RatFunc::make(g.num, g.den);
  }
  return acc;
}

}  // namespace hlm
