#include "hlmult/int_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hlm {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

IntPoly::IntPoly(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

IntPoly IntPoly::monomial(const mpz_class& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("IntPoly::monomial: negative exponent");
  if (c == 0) return {};
  std::vector<mpz_class> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPoly::max_norm() const {
  mpz_class m = 0;
  for (const auto& c : coeffs_) {
    mpz_class a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  if (leading() < 0) c = -c;
  return divided_exactly(c);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPoly IntPoly::divided_exactly(const mpz_class& c) const {
  if (c == 1) return *this;
  IntPoly r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::compose_power(int n) const {
  if (n < 1) throw std::invalid_argument("IntPoly::compose_power: exponent must be positive");
  if (n == 1 || is_constant()) return *this;
  std::vector<mpz_class> r((coeffs_.size() - 1) * static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i * static_cast<std::size_t>(n)] = coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result(1L);
  IntPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> quot(rem.size() - db);
  mpz_class t;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), bc[db].get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), rem[i].get_mpz_t(), bc[db].get_mpz_t());
    const std::size_t shift = i - db;
    quot[shift] = t;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lb = bc[db];
  for (std::size_t i = r.size(); i-- > db;) {
    mpz_class lead = r[i];
    // r = lb * r - lead * q^(i-db) * b
    for (auto& c : r) c *= lb;
    const std::size_t shift = i - db;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
    }
    r.pop_back();
  }
  return IntPoly(std::move(r));
}

IntPoly gcd_euclid(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

namespace {

// Symmetric xi-adic reconstruction of a polynomial from gamma = G(xi).
IntPoly from_xi_adic(mpz_class gamma, const mpz_class& xi) {
  std::vector<mpz_class> out;
  const mpz_class half = xi / 2;
  mpz_class digit;
  while (gamma != 0) {
    mpz_fdiv_r(digit.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
    if (digit > half) digit -= xi;
    out.push_back(digit);
    gamma -= digit;
    mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

std::optional<IntPoly> heuristic_gcd(const IntPoly& a, const IntPoly& b) {
  mpz_class xi = 2 * std::min(a.max_norm(), b.max_norm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class va = a.eval(xi);
    mpz_class vb = b.eval(xi);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    IntPoly cand = from_xi_adic(g, xi).primitive_part();
    if (!cand.is_zero() && divide_exact(a, cand) && divide_exact(b, cand)) return cand;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return IntPoly(1L);
  IntPoly pa = a.primitive_part();
  IntPoly pb = b.primitive_part();
  if (pa == pb) return pa;
  if (auto g = heuristic_gcd(pa, pb)) return *g;
  return gcd_euclid(pa, pb);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  mpz_class c;
  const mpz_class ca = a.content();
  const mpz_class cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  return primitive_gcd(a, b).scaled(c);
}

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(1, m) - IntPoly(1L);
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = *divide_exact(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  cache.emplace(m, p);
  return p;
}

}  // namespace hlm
