#include "hlmult/sym_series.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace hlm {

namespace {

// union_index(a, b)[i][j] = position of partitions_of(a)[i] ∪ partitions_of(b)[j]
// in partitions_of(a + b).
const std::vector<std::vector<int>>& union_index(int a, int b) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<std::vector<int>>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{a, b}];
  if (!slot) {
    const auto& pa = partitions_of(a);
    const auto& pb = partitions_of(b);
    auto t = std::make_unique<std::vector<std::vector<int>>>(pa.size(), std::vector<int>(pb.size()));
    for (std::size_t i = 0; i < pa.size(); ++i) {
      for (std::size_t j = 0; j < pb.size(); ++j) {
        (*t)[i][j] = partition_index(partition_union(pa[i], pb[j]));
      }
    }
    slot = std::move(t);
  }
  return *slot;
}

using Accumulator = std::map<SeriesKey, RatFuncSum>;

// Adds scale · (A_a · B_b) into acc, where A_a, B_b are level maps.
void accumulate_product(const SymSeries::Level& la, int a, const SymSeries::Level& lb, int b,
                        const mpq_class& scale, Accumulator& acc) {
  if (la.empty() || lb.empty()) return;
  const auto& table = union_index(a, b);
  SeriesKey key;
  for (const auto& [ka, ca] : la) {
    for (const auto& [kb, cb] : lb) {
      key.resize(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i) {
        key[i] = table[static_cast<std::size_t>(ka[i])][static_cast<std::size_t>(kb[i])];
      }
      acc[key].add_scaled(ca * cb, scale);
    }
  }
}

void flush(Accumulator& acc, SymSeries& out, int m) {
  for (auto& [key, sum] : acc) out.add_term(m, key, sum.total());
  acc.clear();
}

}  // namespace

SymSeries::SymSeries(int k, int truncation) : k_(k), n_(truncation) {
  if (k < 1) throw std::invalid_argument("SymSeries: need at least one alphabet");
  if (truncation < 0) throw std::invalid_argument("SymSeries: negative truncation");
  levels_.resize(static_cast<std::size_t>(truncation) + 1);
}

SymSeries SymSeries::one(int k, int truncation) {
  SymSeries s(k, truncation);
  s.add_term(0, SeriesKey(static_cast<std::size_t>(k), 0), RatFunc(1L));
  return s;
}

SymSeries SymSeries::monomial(int k, int truncation, int m, const std::vector<SymFunc>& factors,
                              const RatFunc& c) {
  if (static_cast<int>(factors.size()) != k) throw std::invalid_argument("SymSeries::monomial: need k factors");
  SymSeries s(k, truncation);
  if (m > truncation) return s;
  std::vector<std::vector<std::pair<int, RatFunc>>> per;
  for (const auto& f : factors) {
    std::vector<std::pair<int, RatFunc>> v;
    const SymFunc fp = convert(f, Basis::power);
    for (const auto& [rho, x] : fp.terms()) {
      if (rho.size() != m) throw std::invalid_argument("SymSeries::monomial: factor not homogeneous of degree m");
      v.emplace_back(partition_index(rho), x);
    }
    if (v.empty()) return s;
    per.push_back(std::move(v));
  }
  std::vector<std::size_t> pos(per.size(), 0);
  while (true) {
    SeriesKey key(per.size());
    RatFunc x = c;
    for (std::size_t i = 0; i < per.size(); ++i) {
      key[i] = per[i][pos[i]].first;
      x *= per[i][pos[i]].second;
    }
    s.add_term(m, key, x);
    std::size_t i = 0;
    while (i < per.size() && ++pos[i] == per[i].size()) pos[i++] = 0;
    if (i == per.size()) break;
  }
  return s;
}

RatFunc SymSeries::coeff(int m, const std::vector<Partition>& rhos) const {
  if (m < 0 || m > n_) return {};
  SeriesKey key;
  for (const auto& r : rhos) {
    if (r.size() != m) return {};
    key.push_back(partition_index(r));
  }
  const auto& l = levels_[static_cast<std::size_t>(m)];
  auto it = l.find(key);
  return it == l.end() ? RatFunc() : it->second;
}

void SymSeries::add_term(int m, const SeriesKey& key, const RatFunc& c) {
  if (m > n_ || c.is_zero()) return;
  if (static_cast<int>(key.size()) != k_) throw std::invalid_argument("SymSeries: key arity differs from k");
  auto& l = levels_[static_cast<std::size_t>(m)];
  auto [it, inserted] = l.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) l.erase(it);
  }
}

void SymSeries::add_term(int m, const std::vector<Partition>& rhos, const RatFunc& c) {
  SeriesKey key;
  for (const auto& r : rhos) {
    if (r.size() != m) throw std::invalid_argument("SymSeries: partition size differs from level");
    key.push_back(partition_index(r));
  }
  add_term(m, key, c);
}

bool SymSeries::is_zero() const {
  for (const auto& l : levels_) {
    if (!l.empty()) return false;
  }
  return true;
}

bool SymSeries::has_unit_constant() const {
  const auto& l0 = levels_[0];
  return l0.size() == 1 && l0.begin()->second.is_one();
}

SymSeries& SymSeries::operator+=(const SymSeries& o) {
  if (o.k_ != k_) throw std::invalid_argument("SymSeries: alphabet counts differ");
  for (int m = 0; m <= std::min(n_, o.n_); ++m) {
    for (const auto& [key, c] : o.levels_[static_cast<std::size_t>(m)]) add_term(m, key, c);
  }
  return *this;
}

SymSeries& SymSeries::operator-=(const SymSeries& o) { return *this += o.scaled(RatFunc(-1L)); }

SymSeries SymSeries::scaled(const RatFunc& c) const {
  SymSeries r(k_, n_);
  if (c.is_zero()) return r;
  for (int m = 0; m <= n_; ++m) {
    for (const auto& [key, x] : levels_[static_cast<std::size_t>(m)]) {
      r.levels_[static_cast<std::size_t>(m)].emplace(key, x * c);
    }
  }
  return r;
}

SymSeries operator*(const SymSeries& a, const SymSeries& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("SymSeries: alphabet counts differ");
  const int n = std::min(a.n_, b.n_);
  SymSeries out(a.k_, n);
  for (int m = 0; m <= n; ++m) {
    Accumulator acc;
    for (int i = 0; i <= m; ++i) {
      accumulate_product(a.level(i), i, b.level(m - i), m - i, mpq_class(1), acc);
    }
    flush(acc, out, m);
  }
  return out;
}

std::string SymSeries::to_string() const {
  std::string s;
  for (int m = 0; m <= n_; ++m) {
    const auto& parts = partitions_of(m);
    for (const auto& [key, c] : levels_[static_cast<std::size_t>(m)]) {
      if (!s.empty()) s += "\n";
      s += "T^" + std::to_string(m) + " (" + c.to_string() + ")";
      for (std::size_t i = 0; i < key.size(); ++i) {
        s += " p" + parts[static_cast<std::size_t>(key[i])].to_string() + "(x" + std::to_string(i + 1) + ")";
      }
    }
  }
  return s.empty() ? "0" : s;
}

int mobius(int n) {
  if (n < 1) throw std::invalid_argument("mobius: argument must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

SymSeries adams(int n, const SymSeries& f) {
  if (n < 1) throw std::invalid_argument("adams: degree must be >= 1");
  if (n == 1) return f;
  SymSeries out(f.alphabets(), f.truncation());
  for (int m = 0; m * n <= f.truncation(); ++m) {
    const auto& parts = partitions_of(m);
    for (const auto& [key, c] : f.level(m)) {
      SeriesKey scaled(key.size());
      for (std::size_t i = 0; i < key.size(); ++i) {
        scaled[i] = partition_index(partition_scale(n, parts[static_cast<std::size_t>(key[i])]));
      }
      out.add_term(m * n, scaled, c.substitute_power(n));
    }
  }
  return out;
}

SymSeries pleth_log(const SymSeries& f) {
  if (!f.has_unit_constant()) throw std::domain_error("pleth_log: constant term must be 1");
  const int n = f.truncation();
  // L = log f from f' = f L':  m L_m = m F_m - Σ_{j=1}^{m-1} j L_j F_{m-j}.
  SymSeries log_f(f.alphabets(), n);
  for (int m = 1; m <= n; ++m) {
    Accumulator acc;
    for (const auto& [key, c] : f.level(m)) acc[key].add(c);
    for (int j = 1; j < m; ++j) {
      accumulate_product(log_f.level(j), j, f.level(m - j), m - j, ratio(-j, m), acc);
    }
    flush(acc, log_f, m);
  }
  SymSeries out(f.alphabets(), n);
  for (int d = 1; d <= n; ++d) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    out += adams(d, log_f).scaled(RatFunc(ratio(mu, d)));
  }
  return out;
}

SymSeries pleth_exp(const SymSeries& f) {
  if (!f.has_zero_constant()) throw std::domain_error("pleth_exp: constant term must be 0");
  const int n = f.truncation();
  SymSeries psi(f.alphabets(), n);
  for (int d = 1; d <= n; ++d) {
    psi += adams(d, f).scaled(RatFunc(ratio(1, d)));
  }
  // E = exp(G) from E' = G' E:  m E_m = Σ_{j=1}^{m} j G_j E_{m-j}.
  SymSeries e = SymSeries::one(f.alphabets(), n);
  for (int m = 1; m <= n; ++m) {
    Accumulator acc;
    for (int j = 1; j <= m; ++j) {
      accumulate_product(psi.level(j), j, e.level(m - j), m - j, ratio(j, m), acc);
    }
    flush(acc, e, m);
  }
  return e;
}

const std::vector<RatFunc>& hall_littlewood_power(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, std::unique_ptr<std::vector<RatFunc>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(lambda); it != cache.end()) return *it->second;
  }
  auto v = std::make_unique<std::vector<RatFunc>>(partitions_of(lambda.size()).size());
  const SymFunc hp = convert(hall_littlewood_transformed(lambda), Basis::power);
  for (const auto& [rho, c] : hp.terms()) {
    (*v)[static_cast<std::size_t>(partition_index(rho))] = c;
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(lambda, std::move(v));
  return *it->second;
}

SymSeries cauchy_omega(int g, int k, int truncation) {
  if (g < 0) throw std::invalid_argument("cauchy_omega: genus must be >= 0");
  SymSeries omega = SymSeries::one(k, truncation);
  for (int m = 1; m <= truncation; ++m) {
    const auto& parts = partitions_of(m);
    // Common denominator D = lcm_λ a_λ(q); each λ contributes q^{g⟨λ,λ⟩} D / a_λ.
    IntPoly lcm(1L);
    for (const auto& lambda : parts) {
      const IntPoly a = centralizer_poly(lambda);
      lcm = *divide_exact(lcm * a, gcd(lcm, a));
    }
    std::vector<IntPoly> weight;
    for (const auto& lambda : parts) {
      weight.push_back(*divide_exact(lcm, centralizer_poly(lambda)) *
                       IntPoly::monomial(1, static_cast<int>(g * stats(lambda).norm)));
    }
    const std::size_t np = parts.size();
    std::map<SeriesKey, RatFuncSum> acc;
    SeriesKey key(static_cast<std::size_t>(k), 0);
    for (std::size_t li = 0; li < np; ++li) {
      const auto& h = hall_littlewood_power(parts[li]);
      std::fill(key.begin(), key.end(), 0);
      while (true) {
        RatFunc x = RatFunc(weight[li]);
        for (int i = 0; i < k && !x.is_zero(); ++i) x *= h[static_cast<std::size_t>(key[static_cast<std::size_t>(i)])];
        if (!x.is_zero()) acc[key].add(x);
        std::size_t i = 0;
        while (i < key.size() && ++key[i] == static_cast<int>(np)) key[i++] = 0;
        if (i == key.size()) break;
      }
    }
    const RatFunc inv_lcm = RatFunc(lcm).inverse();
    for (auto& [key2, sum] : acc) omega.add_term(m, key2, sum.total() * inv_lcm);
  }
  return omega;
}

}  // namespace hlm
