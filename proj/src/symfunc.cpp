#include "hlmult/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>

#include "hlmult/error.hpp"

namespace hlm {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::power: return "p";
    case Basis::schur: return "s";
    case Basis::monomial: return "m";
    case Basis::complete: return "h";
  }
  return "?";
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, const RatFunc& c) {
  SymFunc f(basis);
  f.add_term(lambda, c);
  return f;
}

RatFunc SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? RatFunc() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  const SymFunc& other = o.basis_ == basis_ ? o : convert(o, basis_);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += o.scaled(RatFunc(-1L)); }

SymFunc SymFunc::scaled(const RatFunc& c) const {
  SymFunc r(basis_);
  if (c.is_zero()) return r;
  for (const auto& [lambda, x] : terms_) r.terms_.emplace(lambda, x * c);
  return r;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.to_string() + ")*" + basis_name(basis_) + it->first.to_string();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama

namespace {

long mn_rule(const Partition& lambda, const Partition& rho);

struct CharacterCache {
  std::mutex mu;
  std::map<std::pair<Partition, Partition>, long> values;
};

CharacterCache& character_cache() {
  static CharacterCache c;
  return c;
}

long mn_rule(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  {
    auto& c = character_cache();
    std::lock_guard lock(c.mu);
    if (auto it = c.values.find({lambda, rho}); it != c.values.end()) return it->second;
  }
  const int r = rho.part(0);
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const int len = lambda.length();
  // Beta numbers λ_i + (ℓ-1-i); removing an r-rim hook moves one bead down by r.
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + (len - 1 - i);
  const std::set<int> beads(beta.begin(), beta.end());
  long total = 0;
  for (int b : beta) {
    const int target = b - r;
    if (target < 0 || beads.count(target) != 0) continue;
    int between = 0;
    for (int x : beta) {
      if (x > target && x < b) ++between;
    }
    std::vector<int> nb = beta;
    std::replace(nb.begin(), nb.end(), b, target);
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
      const int p = nb[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (p > 0) parts.push_back(p);
    }
    const long sub = mn_rule(Partition(std::move(parts)), rest);
    total += (between % 2 == 0 ? 1 : -1) * sub;
  }
  auto& c = character_cache();
  std::lock_guard lock(c.mu);
  c.values.emplace(std::make_pair(lambda, rho), total);
  return total;
}

}  // namespace

long sn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) {
    throw SizeMismatch("sn_character: |" + lambda.to_string() + "| != |" + rho.to_string() + "|");
  }
  return mn_rule(lambda, rho);
}

// ---------------------------------------------------------------------------
// Transition matrices to and from the power-sum basis

namespace {

using Matrix = std::vector<std::vector<mpq_class>>;

Matrix invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const mpq_class p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const mpq_class f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Number of ways to distribute the parts of rho into ℓ(lambda) labelled bins
// whose sums are the parts of lambda: the coefficient of m_λ in p_ρ.
long count_distributions(const std::vector<int>& rho, std::size_t next, std::vector<int>& room) {
  if (next == rho.size()) {
    return std::all_of(room.begin(), room.end(), [](int x) { return x == 0; }) ? 1 : 0;
  }
  long total = 0;
  for (auto& r : room) {
    if (r >= rho[next]) {
      r -= rho[next];
      total += count_distributions(rho, next + 1, room);
      r += rho[next];
    }
  }
  return total;
}

Matrix build_to_power(Basis b, int n) {
  const auto& parts = partitions_of(n);
  const std::size_t np = parts.size();
  Matrix m(np, std::vector<mpq_class>(np, 0));
  switch (b) {
    case Basis::power:
      for (std::size_t i = 0; i < np; ++i) m[i][i] = 1;
      break;
    case Basis::schur:
      for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
          m[i][j] = mpq_class(sn_character(parts[i], parts[j]), z_of(parts[j]));
          m[i][j].canonicalize();
        }
      }
      break;
    case Basis::complete:
      for (std::size_t i = 0; i < np; ++i) {
        // h_λ = ∏ h_{λ_j}, h_m = Σ_{ρ⊢m} p_ρ / z_ρ.
        std::map<Partition, mpq_class> acc{{Partition(), mpq_class(1)}};
        for (int part : parts[i].parts()) {
          std::map<Partition, mpq_class> next;
          for (const auto& [sigma, c] : acc) {
            for (const auto& rho : partitions_of(part)) {
              mpq_class w(1, z_of(rho));
              w.canonicalize();
              next[partition_union(sigma, rho)] += c * w;
            }
          }
          acc = std::move(next);
        }
        for (const auto& [rho, c] : acc) m[i][static_cast<std::size_t>(partition_index(rho))] = c;
      }
      break;
    case Basis::monomial: {
      // p_ρ = Σ_λ L[ρ][λ] m_λ, so m = L^{-1} p.
      Matrix l(np, std::vector<mpq_class>(np, 0));
      for (std::size_t r = 0; r < np; ++r) {
        for (std::size_t c = 0; c < np; ++c) {
          std::vector<int> room = parts[c].parts();
          l[r][c] = count_distributions(parts[r].parts(), 0, room);
        }
      }
      m = invert(std::move(l));
      break;
    }
  }
  return m;
}

struct Transition {
  Matrix to_power;
  Matrix from_power;
};

const Transition& transition(Basis b, int n) {
  static std::mutex mu;
  static std::map<std::pair<Basis, int>, std::unique_ptr<Transition>> cache;
  std::unique_lock lock(mu);
  auto& slot = cache[{b, n}];
  if (!slot) {
    lock.unlock();
    auto t = std::make_unique<Transition>();
    t->to_power = build_to_power(b, n);
    t->from_power = invert(t->to_power);
    lock.lock();
    if (!slot) slot = std::move(t);
  }
  return *slot;
}

SymFunc to_power(const SymFunc& f) {
  if (f.basis() == Basis::power) return f;
  std::map<Partition, RatFuncSum> acc;
  for (const auto& [lambda, c] : f.terms()) {
    const auto& row = transition(f.basis(), lambda.size()).to_power[static_cast<std::size_t>(partition_index(lambda))];
    const auto& parts = partitions_of(lambda.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) acc[parts[j]].add_scaled(c, row[j]);
    }
  }
  SymFunc out(Basis::power);
  for (const auto& [rho, s] : acc) out.add_term(rho, s.total());
  return out;
}

SymFunc from_power(const SymFunc& f, Basis target) {
  if (target == Basis::power) return f;
  std::map<Partition, RatFuncSum> acc;
  for (const auto& [rho, c] : f.terms()) {
    const auto& row = transition(target, rho.size()).from_power[static_cast<std::size_t>(partition_index(rho))];
    const auto& parts = partitions_of(rho.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) acc[parts[j]].add_scaled(c, row[j]);
    }
  }
  SymFunc out(target);
  for (const auto& [lambda, s] : acc) out.add_term(lambda, s.total());
  return out;
}

}  // namespace

const std::vector<mpq_class>& to_power_row(Basis b, const Partition& lambda) {
  return transition(b, lambda.size()).to_power[static_cast<std::size_t>(partition_index(lambda))];
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  return from_power(to_power(f), target);
}

bool same_function(const SymFunc& a, const SymFunc& b) {
  return convert(a, Basis::power) == convert(b, Basis::power);
}

// ---------------------------------------------------------------------------
// Tableaux, charge and Kostka–Foulkes polynomials

namespace {

void fill_tableaux(const Partition& shape, std::vector<int>& remaining, Tableau& t, int row, int col,
                   std::vector<Tableau>& out) {
  if (row == shape.length()) {
    out.push_back(t);
    return;
  }
  if (col == shape.part(row)) {
    fill_tableaux(shape, remaining, t, row + 1, 0, out);
    return;
  }
  const auto r = static_cast<std::size_t>(row);
  const auto c = static_cast<std::size_t>(col);
  int lo = 1;
  if (col > 0) lo = std::max(lo, t[r][c - 1]);
  if (row > 0) lo = std::max(lo, t[r - 1][c] + 1);
  for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
    auto& left = remaining[static_cast<std::size_t>(v - 1)];
    if (left == 0) continue;
    --left;
    t[r][c] = v;
    fill_tableaux(shape, remaining, t, row, col + 1, out);
    ++left;
  }
}

// Charge of a standard subword given by the positions of 1, 2, ..., r.
long standard_charge(const std::vector<std::size_t>& pos) {
  long index = 0;
  long total = 0;
  for (std::size_t r = 1; r < pos.size(); ++r) {
    if (pos[r] > pos[r - 1]) ++index;
    total += index;
  }
  return total;
}

}  // namespace

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content) {
  std::vector<Tableau> out;
  if (shape.size() != content.size()) return out;
  Tableau t;
  for (int p : shape.parts()) t.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<int> remaining = content.parts();
  fill_tableaux(shape, remaining, t, 0, 0, out);
  return out;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto row = t.rbegin(); row != t.rend(); ++row) w.insert(w.end(), row->begin(), row->end());
  return w;
}

long charge(const std::vector<int>& word) {
  std::vector<int> w = word;
  std::vector<bool> used(w.size(), false);
  std::size_t left = w.size();
  long total = 0;
  while (left > 0) {
    int largest = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!used[i]) largest = std::max(largest, w[i]);
    }
    // Extract a standard subword: scan leftwards cyclically from the right end
    // for 1, then 2, ... up to the largest remaining letter.
    std::vector<std::size_t> pos;
    std::size_t cursor = w.size();
    for (int letter = 1; letter <= largest; ++letter) {
      bool found = false;
      for (std::size_t step = 0; step < w.size(); ++step) {
        cursor = (cursor + w.size() - 1) % w.size();
        if (!used[cursor] && w[cursor] == letter) {
          found = true;
          break;
        }
      }
      if (!found) throw std::invalid_argument("charge: word content is not a partition");
      pos.push_back(cursor);
    }
    total += standard_charge(pos);
    for (std::size_t p : pos) used[p] = true;
    left -= pos.size();
  }
  return total;
}

IntPoly kostka_foulkes(const Partition& nu, const Partition& lambda) {
  if (nu.size() != lambda.size()) {
    throw SizeMismatch("kostka_foulkes: |" + nu.to_string() + "| != |" + lambda.to_string() + "|");
  }
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({nu, lambda}); it != cache.end()) return it->second;
  }
  std::vector<mpz_class> coeffs;
  for (const auto& t : semistandard_tableaux(nu, lambda)) {
    const auto c = static_cast<std::size_t>(charge(reading_word(t)));
    if (coeffs.size() <= c) coeffs.resize(c + 1);
    coeffs[c] += 1;
  }
  IntPoly k(std::move(coeffs));
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(nu, lambda), k);
  return k;
}

SymFunc hall_littlewood_transformed(const Partition& lambda) {
  SymFunc h(Basis::schur);
  const long top = n_of(lambda);
  for (const auto& nu : partitions_of(lambda.size())) {
    const IntPoly k = kostka_foulkes(nu, lambda);
    if (k.is_zero()) continue;
    // q^n(λ) K(1/q): coefficient of t^c moves to q^(n(λ)-c).
    std::vector<mpz_class> rev(static_cast<std::size_t>(top) + 1);
    for (int c = 0; c <= k.degree(); ++c) rev[static_cast<std::size_t>(top - c)] = k.coeff(c);
    h.add_term(nu, RatFunc(IntPoly(std::move(rev))));
  }
  return h;
}

RatFunc hall_pairing(const SymFunc& f, const SymFunc& g) {
  const SymFunc pf = to_power(f);
  const SymFunc pg = to_power(g);
  RatFuncSum acc;
  for (const auto& [rho, c] : pf.terms()) {
    auto it = pg.terms().find(rho);
    if (it == pg.terms().end()) continue;
    acc.add_scaled(c * it->second, mpq_class(z_of(rho)));
  }
  return acc.total();
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  const SymFunc pf = to_power(f);
  const SymFunc pg = to_power(g);
  std::map<Partition, RatFuncSum> acc;
  for (const auto& [a, ca] : pf.terms()) {
    for (const auto& [b, cb] : pg.terms()) acc[partition_union(a, b)].add(ca * cb);
  }
  SymFunc out(Basis::power);
  for (const auto& [rho, s] : acc) out.add_term(rho, s.total());
  return out;
}

SymFunc adams(int d, const SymFunc& f) {
  if (d < 1) throw std::invalid_argument("adams: degree must be >= 1");
  const SymFunc pf = to_power(f);
  if (d == 1) return pf;
  SymFunc out(Basis::power);
  for (const auto& [rho, c] : pf.terms()) out.add_term(partition_scale(d, rho), c.substitute_power(d));
  return out;
}

}  // namespace hlm
