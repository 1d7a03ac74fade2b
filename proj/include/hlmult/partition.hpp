#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hlmult/rat_func.hpp"

namespace hlm {

/// Integer partition stored densely as its weakly decreasing list of parts.
/// The empty list is the partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// Sorts, dropping zero parts.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// |λ|, the sum of the parts.
  int size() const { return size_; }
  /// ℓ(λ), the number of parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); zero beyond the length.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  /// m[i] = number of parts equal to i, for i in 0..largest part.
  std::vector<int> multiplicities() const;

  /// Lexicographic order on the part sequences.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  /// "[3,1]"; the empty partition is "[]".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// λ'.
Partition conjugate(const Partition& lambda);
/// Componentwise sum λ + μ.
Partition partition_sum(const Partition& lambda, const Partition& mu);
/// Multiset union λ ∪ μ.
Partition partition_union(const Partition& lambda, const Partition& mu);
/// d·λ, every part multiplied by d ≥ 1.
Partition partition_scale(int d, const Partition& lambda);

struct PartitionStats {
  int size;
  long n_of;   // Σ (i-1) λ_i
  long norm;   // 2 n(λ) + |λ|, the dimension of the unipotent centralizer
  mpz_class z_of;
};

long n_of(const Partition& lambda);
mpz_class z_of(const Partition& lambda);
PartitionStats stats(const Partition& lambda);

/// a_λ(q), the order of the centralizer of a unipotent element of Jordan
/// type λ in GL_|λ|(F_q), as a polynomial in q.
IntPoly centralizer_poly(const Partition& lambda);
RatFunc centralizer_order(const Partition& lambda);
/// |GL_n(F_q)| as a polynomial in q.
IntPoly gl_order_poly(int n);

/// Partial sums of λ never exceed those of μ. Throws SizeMismatch if |λ| != |μ|.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// All partitions of n in reverse lexicographic order, (n) first and (1^n)
/// last. This order indexes every basis in the library.
const std::vector<Partition>& partitions_of(int n);
/// Position of λ in partitions_of(|λ|).
int partition_index(const Partition& lambda);

/// Parses "[3,1]" (whitespace tolerated). Offsets in errors are relative to
/// text plus base_offset.
Partition parse_partition(std::string_view text, std::size_t base_offset = 0);

}  // namespace hlm
