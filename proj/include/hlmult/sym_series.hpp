#pragma once

#include <map>
#include <vector>

#include "hlmult/partition.hpp"
#include "hlmult/rat_func.hpp"
#include "hlmult/symfunc.hpp"

namespace hlm {

/// Index tuple (ρ_1, ..., ρ_k) at level m: entry i is the position of ρ_i in
/// partitions_of(m).
using SeriesKey = std::vector<int>;

/// Element of Λ_k[[T]] truncated above T^N.
///
/// The T^m coefficient is a k-alphabet symmetric function homogeneous of
/// degree m in every alphabet, stored as power-sum products
/// p_{ρ_1}(x_1)···p_{ρ_k}(x_k) with ρ_i ⊢ m. Zero coefficients are never stored.
class SymSeries {
 public:
  using Level = std::map<SeriesKey, RatFunc>;

  SymSeries(int k, int truncation);
  /// The constant series 1.
  static SymSeries one(int k, int truncation);
  /// c · T^m · ∏_i f_i(x_i), each f_i homogeneous of degree m.
  static SymSeries monomial(int k, int truncation, int m, const std::vector<SymFunc>& factors,
                            const RatFunc& c = RatFunc(1L));

  int alphabets() const { return k_; }
  int truncation() const { return n_; }
  const Level& level(int m) const { return levels_.at(static_cast<std::size_t>(m)); }
  RatFunc coeff(int m, const std::vector<Partition>& rhos) const;
  void add_term(int m, const SeriesKey& key, const RatFunc& c);
  void add_term(int m, const std::vector<Partition>& rhos, const RatFunc& c);

  bool is_zero() const;
  bool has_unit_constant() const;
  bool has_zero_constant() const { return levels_[0].empty(); }

  SymSeries& operator+=(const SymSeries& o);
  SymSeries& operator-=(const SymSeries& o);
  friend SymSeries operator+(SymSeries a, const SymSeries& b) { return a += b; }
  friend SymSeries operator-(SymSeries a, const SymSeries& b) { return a -= b; }
  friend SymSeries operator*(const SymSeries& a, const SymSeries& b);
  SymSeries scaled(const RatFunc& c) const;

  friend bool operator==(const SymSeries& a, const SymSeries& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.levels_ == b.levels_;
  }

  /// Human-readable dump of every term.
  std::string to_string() const;

 private:
  int k_;
  int n_;
  std::vector<Level> levels_;
};

/// Möbius function.
int mobius(int n);

/// ψ_n: p_ρ ↦ p_{nρ} in every alphabet, q ↦ q^n, T^m ↦ T^{nm}.
SymSeries adams(int n, const SymSeries& f);

/// Getzler's plethystic logarithm Ψ^{-1}(log f). Requires constant term 1.
SymSeries pleth_log(const SymSeries& f);
/// exp(Ψ(f)). Requires zero constant term.
SymSeries pleth_exp(const SymSeries& f);

/// The k-point Cauchy function Σ_λ ∏_i H̃_λ(x_i;q) · q^{g⟨λ,λ⟩}/a_λ(q) · T^|λ|.
SymSeries cauchy_omega(int g, int k, int truncation);

/// H̃_λ in the power basis as a vector indexed by partitions_of(|λ|). Cached.
const std::vector<RatFunc>& hall_littlewood_power(const Partition& lambda);

}  // namespace hlm
