#include "hlmult/multiplicity.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hlmult/error.hpp"

namespace hlm {

namespace testing {
namespace {
std::atomic<bool> g_sign_mutation{false};
}
void set_sign_mutation(bool on) { g_sign_mutation = on; }
bool sign_mutation() { return g_sign_mutation; }
}  // namespace testing

long r_omega(const MultiType& mt) {
  long r = static_cast<long>(mt.k()) * mt.n();
  for (const auto& t : mt.types()) {
    for (const auto& p : t.pairs()) r += p.partition.size();
  }
  return r;
}

namespace {

struct LogCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::shared_ptr<const SymSeries>> series;
};

LogCache& log_cache() {
  static LogCache c;
  return c;
}

}  // namespace

SymSeries::Level log_omega_level(int g, int k, int n) {
  if (n < 1 || k < 1 || g < 0) throw std::invalid_argument("log_omega_level: need n, k >= 1 and g >= 0");
  auto& cache = log_cache();
  std::lock_guard lock(cache.mu);
  auto& slot = cache.series[{g, k}];
  if (!slot || slot->truncation() < n) {
    slot = std::make_shared<const SymSeries>(pleth_log(cauchy_omega(g, k, n)));
  }
  return slot->level(n);
}

RatFunc paired_value(const MultiType& mt) {
  const int n = mt.n();
  const int k = mt.k();
  // Power-sum rows of s_{ω_i'}, indexed like partitions_of(n).
  const auto& parts = partitions_of(n);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& t : mt.types()) {
    const SymFunc s = type_symfunc(type_dual(t), Basis::schur);
    std::vector<mpq_class> row(parts.size());
    for (const auto& [rho, c] : s.terms()) {
      if (!c.is_polynomial() || c.num().degree() > 0) {
        throw std::logic_error("paired_value: type Schur function has non-constant coefficient");
      }
      row[static_cast<std::size_t>(partition_index(rho))] =
          mpq_class(c.num().coeff(0), c.den().coeff(0)) * z_of(rho);
    }
    for (auto& x : row) x.canonicalize();
    rows.push_back(std::move(row));
  }
  RatFuncSum sum;
  for (const auto& [key, value] : log_omega_level(mt.genus(), k, n)) {
    mpq_class w = 1;
    for (int i = 0; i < k && w != 0; ++i) {
      w *= rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(key[static_cast<std::size_t>(i)])];
    }
    if (w != 0) sum.add_scaled(value, w);
  }
  return sum.total();
}

IntPoly h_omega(const MultiType& mt) {
  const RatFunc paired = paired_value(mt);
  const IntPoly q_minus_1 = IntPoly::q() - IntPoly(1L);
  // The denominator of the pairing must divide q − 1.
  if (!divide_exact(q_minus_1, paired.den())) {
    throw NotPolynomial("H_omega for " + mt.to_string() + ": denominator " + paired.den().to_string() +
                        " does not divide q - 1");
  }
  const bool odd = (r_omega(mt) % 2 != 0) != testing::sign_mutation();
  const RatFunc h = paired * RatFunc(odd ? IntPoly(1L) - IntPoly::q() : q_minus_1);
  return h.as_poly();
}

std::map<std::vector<Partition>, long> type_schur_decomposition(const TypeT& omega,
                                                                const std::vector<int>& block_sizes) {
  const auto& pairs = omega.pairs();
  std::size_t total = 0;
  for (int b : block_sizes) {
    if (b < 1) throw std::invalid_argument("type_schur_decomposition: empty block");
    total += static_cast<std::size_t>(b);
  }
  if (block_sizes.empty() || total != pairs.size()) {
    throw std::invalid_argument("type_schur_decomposition: blocks cover " + std::to_string(total) +
                                " pairs but the type has " + std::to_string(pairs.size()));
  }
  std::map<std::vector<Partition>, long> out{{{}, 1}};
  std::size_t start = 0;
  for (int b : block_sizes) {
    const TypeT block(std::vector<TypePair>(pairs.begin() + static_cast<std::ptrdiff_t>(start),
                                            pairs.begin() + static_cast<std::ptrdiff_t>(start) + b));
    start += static_cast<std::size_t>(b);
    std::vector<std::pair<Partition, long>> expansion;
    for (const auto& mu : partitions_of(block.size())) {
      if (long c = twisted_lr(block, mu); c != 0) expansion.emplace_back(mu, c);
    }
    std::map<std::vector<Partition>, long> next;
    for (const auto& [tuple, c] : out) {
      for (const auto& [mu, d] : expansion) {
        auto t = tuple;
        t.push_back(mu);
        next[std::move(t)] = c * d;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace hlm
