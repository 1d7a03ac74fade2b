#include "hlmult/cyclotomic.hpp"

#include <stdexcept>

#include "hlmult/error.hpp"

namespace hlm {

Cyclo::Cyclo(int m) : m_(m), c_(static_cast<std::size_t>(m)) {
  if (m < 1) throw std::invalid_argument("Cyclo: order must be >= 1");
}

Cyclo Cyclo::constant(int m, const mpz_class& c) {
  Cyclo x(m);
  x.c_[0] = c;
  return x;
}

Cyclo Cyclo::root(int m, long j) {
  Cyclo x(m);
  x.c_[static_cast<std::size_t>(((j % m) + m) % m)] = 1;
  return x;
}

void Cyclo::check(const Cyclo& o) const {
  if (o.m_ != m_) throw SizeMismatch("Cyclo: mismatched orders");
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  a.check(b);
  Cyclo out(a.m_);
  const std::size_t m = a.c_.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b.c_[j] == 0) continue;
      out.c_[(i + j) % m] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

Cyclo Cyclo::scaled(const mpz_class& s) const {
  Cyclo out = *this;
  for (auto& x : out.c_) x *= s;
  return out;
}

Cyclo Cyclo::conj() const {
  Cyclo out(m_);
  const std::size_t m = c_.size();
  for (std::size_t i = 0; i < m; ++i) out.c_[(m - i) % m] = c_[i];
  return out;
}

IntPoly Cyclo::reduced() const {
  // Φ_m is monic, so the pseudo-remainder is the remainder.
  return pseudo_remainder(IntPoly(c_), cyclotomic_polynomial(m_));
}

std::optional<mpz_class> Cyclo::as_integer() const {
  const IntPoly r = reduced();
  if (r.degree() > 0) return std::nullopt;
  return r.coeff(0);
}

std::string Cyclo::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += c_[i].get_str() + "*z^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace hlm
