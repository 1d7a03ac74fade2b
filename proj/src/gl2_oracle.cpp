#include "hlmult/gl2_oracle.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "hlmult/multiplicity.hpp"

namespace hlm {

namespace {

bool supported_q(int q) { return q == 3 || q == 5 || q == 7; }

void require_supported(int q) {
  if (!supported_q(q)) {
    throw OracleError("unsupported q = " + std::to_string(q) + " (supported: 3, 5, 7)");
  }
}

long mod(long x, long m) { return ((x % m) + m) % m; }

}  // namespace

TypeT CharGL2::type_tag() const {
  switch (kind) {
    case Kind::linear: return TypeT({{1, Partition{1, 1}}});
    case Kind::steinberg_twist: return TypeT({{1, Partition{2}}});
    case Kind::principal: return TypeT({{1, Partition{1}}, {1, Partition{1}}});
    case Kind::cuspidal: return TypeT({{2, Partition{1}}});
  }
  throw std::logic_error("CharGL2: bad kind");
}

std::string CharGL2::to_string() const {
  switch (kind) {
    case Kind::linear: return "U(" + std::to_string(a) + ")";
    case Kind::steinberg_twist: return "V(" + std::to_string(a) + ")";
    case Kind::principal: return "W(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::cuspidal: return "X(" + std::to_string(a) + ")";
  }
  return "?";
}

namespace {

TableGL2 make_table(int q) {
  TableGL2 t;
  t.q = q;
  t.m = q * q - 1;
  const long m = t.m;
  const long e = q + 1;  // F_q exponent i is ζ-exponent e·i
  const long qq = q;
  t.group_order = mpz_class((qq * qq - 1) * (qq * qq - qq));

  using CK = ConjClassGL2::Kind;
  for (long i = 0; i < q - 1; ++i) t.classes.push_back({CK::central, i, 0, 1, 4});
  for (long i = 0; i < q - 1; ++i) t.classes.push_back({CK::nonsemisimple, i, 0, qq * qq - 1, 2});
  for (long i = 0; i < q - 1; ++i) {
    for (long j = i + 1; j < q - 1; ++j) t.classes.push_back({CK::split, i, j, qq * qq + qq, 2});
  }
  for (long j = 1; j < m; ++j) {
    if (j % e != 0 && j < mod(qq * j, m)) t.classes.push_back({CK::anisotropic, j, 0, qq * qq - qq, 2});
  }

  auto z = [m](long j) { return Cyclo::root(static_cast<int>(m), j); };
  const Cyclo zero(static_cast<int>(m));

  using XK = CharGL2::Kind;
  auto add_char = [&](XK kind, long a, long b, long degree) {
    CharGL2 c{kind, q, a, b, degree, {}};
    for (const auto& cl : t.classes) {
      const long i = cl.a;
      const long j = cl.b;
      Cyclo v = zero;
      switch (kind) {
        case XK::linear:
          switch (cl.kind) {
            case CK::central:
            case CK::nonsemisimple: v = z(e * a * 2 * i); break;
            case CK::split: v = z(e * a * (i + j)); break;
            case CK::anisotropic: v = z(e * a * i); break;
          }
          break;
        case XK::steinberg_twist:
          switch (cl.kind) {
            case CK::central: v = z(e * a * 2 * i).scaled(qq); break;
            case CK::nonsemisimple: break;
            case CK::split: v = z(e * a * (i + j)); break;
            case CK::anisotropic: v = z(e * a * i).scaled(-1); break;
          }
          break;
        case XK::principal:
          switch (cl.kind) {
            case CK::central: v = z(e * (a + b) * i).scaled(qq + 1); break;
            case CK::nonsemisimple: v = z(e * (a + b) * i); break;
            case CK::split: v = z(e * (a * i + b * j)) + z(e * (a * j + b * i)); break;
            case CK::anisotropic: break;
          }
          break;
        case XK::cuspidal:
          switch (cl.kind) {
            case CK::central: v = z(a * e * i).scaled(qq - 1); break;
            case CK::nonsemisimple: v = z(a * e * i).scaled(-1); break;
            case CK::split: break;
            case CK::anisotropic: v = (z(a * i) + z(a * qq * i)).scaled(-1); break;
          }
          break;
      }
      c.values.push_back(std::move(v));
    }
    t.characters.push_back(std::move(c));
  };

  for (long a = 0; a < q - 1; ++a) add_char(XK::linear, a, 0, 1);
  for (long a = 0; a < q - 1; ++a) add_char(XK::steinberg_twist, a, 0, q);
  for (long a = 0; a < q - 1; ++a) {
    for (long b = a + 1; b < q - 1; ++b) add_char(XK::principal, a, b, q + 1);
  }
  for (long a = 1; a < m; ++a) {
    if (a % e != 0 && a < mod(qq * a, m)) add_char(XK::cuspidal, a, 0, q - 1);
  }
  return t;
}

}  // namespace

const TableGL2& build_table_gl2(int q) {
  require_supported(q);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TableGL2>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<TableGL2>(make_table(q));
  return *slot;
}

bool table_orthogonal(const TableGL2& t) {
  const std::size_t nc = t.classes.size();
  if (t.characters.size() != nc) return false;
  for (std::size_t x = 0; x < nc; ++x) {
    for (std::size_t y = x; y < nc; ++y) {
      Cyclo s(t.m);
      for (std::size_t c = 0; c < nc; ++c) {
        s += (t.characters[x].values[c] * t.characters[y].values[c].conj()).scaled(t.classes[c].size);
      }
      const auto v = s.as_integer();
      if (!v || *v != (x == y ? t.group_order : mpz_class(0))) return false;
    }
  }
  // Column relation: Σ_χ χ(c) conj χ(d) = δ_cd |G| / size(c).
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t d = c; d < nc; ++d) {
      Cyclo s(t.m);
      for (const auto& ch : t.characters) s += ch.values[c] * ch.values[d].conj();
      const auto v = s.as_integer();
      const mpz_class want = c == d ? mpz_class(t.group_order / t.classes[c].size) : mpz_class(0);
      if (!v || *v != want) return false;
    }
  }
  return true;
}

bool is_generic_tuple(const std::vector<CharGL2>& chars) {
  if (chars.empty()) throw std::invalid_argument("is_generic_tuple: empty tuple");
  const int q = chars.front().q;
  for (const auto& c : chars) {
    if (c.q != q) throw std::invalid_argument("is_generic_tuple: characters from different tables");
  }
  const long p = q - 1;
  const long m = static_cast<long>(q) * q - 1;
  using XK = CharGL2::Kind;
  bool any_principal = false;
  bool any_cuspidal = false;
  long central = 0;
  for (const auto& c : chars) {
    switch (c.kind) {
      case XK::linear:
      case XK::steinberg_twist: central += 2 * c.a; break;
      case XK::principal: central += c.a + c.b; any_principal = true; break;
      case XK::cuspidal: central += c.a; any_cuspidal = true; break;
    }
  }
  // Z_G = F_q^×: the product of the central characters is trivial.
  if (mod(central, p) != 0) return false;
  const std::size_t k = chars.size();
  // Split torus: no choice of orientations makes the product trivial on it.
  if (!any_cuspidal) {
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      long s1 = 0, s2 = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& c = chars[i];
        const bool flip = c.kind == XK::principal && ((mask >> i) & 1UL);
        if (c.kind == XK::principal) {
          s1 += flip ? c.b : c.a;
          s2 += flip ? c.a : c.b;
        } else {
          s1 += c.a;
          s2 += c.a;
        }
      }
      if (mod(s1, p) == 0 && mod(s2, p) == 0) return false;
    }
  }
  // Nonsplit torus F_{q²}^×, with the Frobenius orbit of each cuspidal parameter.
  if (!any_principal) {
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      long s = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& c = chars[i];
        if (c.kind == XK::cuspidal) {
          s += ((mask >> i) & 1UL) ? c.a * q : c.a;
        } else {
          s += c.a * (q + 1);
        }
      }
      if (mod(s, m) == 0) return false;
    }
  }
  return true;
}

mpz_class oracle_multiplicity(const std::vector<CharGL2>& chars, int g) {
  if (chars.empty()) throw std::invalid_argument("oracle_multiplicity: empty tuple");
  const TableGL2& t = build_table_gl2(chars.front().q);
  for (const auto& c : chars) {
    if (c.q != t.q) throw std::invalid_argument("oracle_multiplicity: characters from different tables");
  }
  Cyclo total(t.m);
  mpz_class qz = t.q;
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    Cyclo prod = Cyclo::constant(t.m, 1);
    for (const auto& ch : chars) prod = prod * ch.values[c];
    mpz_class lambda;
    mpz_pow_ui(lambda.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(g * t.classes[c].centralizer_dim));
    total += prod.scaled(t.classes[c].size * lambda);
  }
  const auto v = total.as_integer();
  if (!v) throw std::logic_error("oracle_multiplicity: class sum is not rational");
  if (!mpz_divisible_p(v->get_mpz_t(), t.group_order.get_mpz_t())) {
    throw std::logic_error("oracle_multiplicity: result is not an integer");
  }
  return *v / t.group_order;
}

bool is_generic_gl1(int q, const std::vector<long>& exponents) {
  long s = 0;
  for (long a : exponents) s += a;
  return mod(s, q - 1) == 0;
}

mpz_class oracle_multiplicity_gl1(int q, const std::vector<long>& exponents, int g) {
  const int p = q - 1;
  Cyclo total(p);
  mpz_class lambda;
  mpz_ui_pow_ui(lambda.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(g));
  for (long x = 0; x < p; ++x) {
    long e = 0;
    for (long a : exponents) e += a * x;
    total += Cyclo::root(p, e).scaled(lambda);
  }
  const auto v = total.as_integer();
  if (!v || !mpz_divisible_p(v->get_mpz_t(), mpz_class(p).get_mpz_t())) {
    throw std::logic_error("oracle_multiplicity_gl1: result is not an integer");
  }
  return *v / p;
}

std::optional<std::vector<CharGL2>> find_generic_tuple(const MultiType& mt, int q) {
  if (mt.n() != 2) throw OracleError("find_generic_tuple: GL2 tuples need n = 2");
  const TableGL2& t = build_table_gl2(q);
  std::vector<std::vector<const CharGL2*>> pools;
  for (const auto& type : mt.types()) {
    std::vector<const CharGL2*> pool;
    for (const auto& c : t.characters) {
      if (c.type_tag() == type) pool.push_back(&c);
    }
    if (pool.empty()) return std::nullopt;
    pools.push_back(std::move(pool));
  }
  std::vector<std::size_t> idx(pools.size(), 0);
  while (true) {
    std::vector<CharGL2> tuple;
    for (std::size_t i = 0; i < idx.size(); ++i) tuple.push_back(*pools[i][idx[i]]);
    if (is_generic_tuple(tuple)) return tuple;
    std::size_t i = idx.size();
    while (i > 0) {
      --i;
      if (++idx[i] < pools[i].size()) break;
      idx[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

OracleReport oracle_vs_formula(const MultiType& mt, int q) {
  require_supported(q);
  if (mt.n() > 2) throw OracleError("oracle supports n <= 2 (got n = " + std::to_string(mt.n()) + ")");
  OracleReport r{mt, q, 0, 0, false, ""};
  if (mt.n() == 1) {
    std::vector<long> exps(static_cast<std::size_t>(mt.k()), 0);
    // Σ a_i = 0: take α_1 nontrivial where possible, the last one balancing.
    if (mt.k() >= 2) {
      exps.front() = 1;
      exps.back() = q - 2;
    }
    if (!is_generic_gl1(q, exps)) throw OracleError("insufficient q");
    r.oracle = oracle_multiplicity_gl1(q, exps, mt.genus());
    for (long a : exps) r.tuple += (r.tuple.empty() ? "" : " ") + std::string("a(") + std::to_string(a) + ")";
  } else {
    const auto tuple = find_generic_tuple(mt, q);
    if (!tuple) {
      throw OracleError("insufficient q: no generic tuple of type " + mt.to_string() + " at q = " +
                        std::to_string(q));
    }
    r.oracle = oracle_multiplicity(*tuple, mt.genus());
    for (const auto& c : *tuple) r.tuple += (r.tuple.empty() ? "" : " ") + c.to_string();
  }
  r.formula = h_omega(mt).eval(mpz_class(q));
  r.match = r.formula == r.oracle;
  return r;
}

}  // namespace hlm
