#pragma once

#include <map>
#include <string>
#include <vector>

#include "hlmult/partition.hpp"
#include "hlmult/rat_func.hpp"

namespace hlm {

enum class Basis { power, schur, monomial, complete };

std::string basis_name(Basis b);

/// Symmetric function in one alphabet over Q(q): a finite combination of
/// basis elements indexed by partitions (not necessarily homogeneous).
class SymFunc {
 public:
  explicit SymFunc(Basis basis = Basis::power) : basis_(basis) {}
  static SymFunc element(Basis basis, const Partition& lambda, const RatFunc& c = RatFunc(1L));

  Basis basis() const { return basis_; }
  const std::map<Partition, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of lambda, dropping it if it cancels.
  void add_term(const Partition& lambda, const RatFunc& c);

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  SymFunc scaled(const RatFunc& c) const;

  /// Structural equality: same basis and same coefficients.
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Basis basis_;
  std::map<Partition, RatFunc> terms_;
};

/// Irreducible character χ^λ of S_|λ| at cycle type ρ (χ^(n) trivial, χ^(1^n)
/// sign), by the Murnaghan–Nakayama rule. Throws SizeMismatch if |λ| != |ρ|.
long sn_character(const Partition& lambda, const Partition& rho);

/// Re-expresses f in the target basis.
SymFunc convert(const SymFunc& f, Basis target);

/// Same element, compared after conversion to the power basis.
bool same_function(const SymFunc& a, const SymFunc& b);

/// Semistandard tableaux of shape nu and content lambda, as rows.
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content);

/// Lascoux–Schützenberger charge of a word whose content is a partition.
long charge(const std::vector<int>& word);
/// Reading word: rows left to right, bottom row first.
std::vector<int> reading_word(const Tableau& t);

/// Kostka–Foulkes polynomial K_{νλ}(t) = Σ_T t^charge(T). Throws SizeMismatch
/// if |ν| != |λ|.
IntPoly kostka_foulkes(const Partition& nu, const Partition& lambda);

/// Transformed Hall–Littlewood function H̃_λ(x;q) in the Schur basis, with
/// coefficients q^n(λ) K_{νλ}(1/q).
SymFunc hall_littlewood_transformed(const Partition& lambda);

/// Hall scalar product, ⟨p_λ, p_μ⟩ = z_λ δ_λμ.
RatFunc hall_pairing(const SymFunc& f, const SymFunc& g);

/// Product, returned in the power basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// ψ_d on one alphabet: p_ρ ↦ p_{dρ} and q ↦ q^d. Returned in the power basis.
SymFunc adams(int d, const SymFunc& f);

/// Row λ of the matrix expressing basis element b_λ in power sums:
/// b_λ = Σ_ρ to_power_row(b, λ)[ρ] p_ρ, with ρ indexed by partitions_of(|λ|).
const std::vector<mpq_class>& to_power_row(Basis b, const Partition& lambda);

}  // namespace hlm
