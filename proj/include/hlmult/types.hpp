#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hlmult/partition.hpp"
#include "hlmult/symfunc.hpp"

namespace hlm {

/// One (degree, partition) pair of a type.
struct TypePair {
  int degree;
  Partition partition;

  /// (d,μ) ≤ (d',λ) iff μ < λ lexicographically, or μ = λ and d ≤ d'.
  friend std::strong_ordering operator<=>(const TypePair& a, const TypePair& b) {
    if (auto c = a.partition <=> b.partition; c != 0) return c;
    return a.degree <=> b.degree;
  }
  friend bool operator==(const TypePair&, const TypePair&) = default;
};

/// Element of T_n: a multiset of pairs (d_i, ω^i), kept in non-increasing
/// order, of size Σ d_i |ω^i|.
class TypeT {
 public:
  /// Sorts the pairs; throws std::invalid_argument for a zero degree or an
  /// empty partition.
  explicit TypeT(std::vector<TypePair> pairs);

  const std::vector<TypePair>& pairs() const { return pairs_; }
  int size() const { return size_; }
  /// All degrees equal to one.
  bool is_split() const;

  friend auto operator<=>(const TypeT&, const TypeT&) = default;
  friend bool operator==(const TypeT&, const TypeT&) = default;

  /// "2:[2,1],1:[1]".
  std::string to_string() const;

 private:
  std::vector<TypePair> pairs_;
  int size_ = 0;
};

/// A genus and k ≥ 1 types of a common size n.
class MultiType {
 public:
  /// Throws SizeMismatch if the types have different sizes.
  MultiType(std::vector<TypeT> types, int genus);

  const std::vector<TypeT>& types() const { return types_; }
  int genus() const { return genus_; }
  int k() const { return static_cast<int>(types_.size()); }
  int n() const { return types_.front().size(); }

  friend auto operator<=>(const MultiType&, const MultiType&) = default;
  friend bool operator==(const MultiType&, const MultiType&) = default;

  /// "g=0; 1:[3] ; 1:[3] ; 1:[3]", the form parse_multitype reads.
  std::string to_string() const;

 private:
  std::vector<TypeT> types_;
  int genus_;
};

/// Parses `d:[p1,p2,...],d:[...]`.
TypeT parse_type(std::string_view text, std::size_t base_offset = 0);
/// Parses `g=<int>; <type> ; <type> ; ...`. ParseError carries the byte offset.
MultiType parse_multitype(std::string_view text);

/// ω': every partition conjugated, degrees kept.
TypeT type_dual(const TypeT& omega);

/// u_ω = ∏_i ψ_{d_i}(u_{ω^i}) for u in the given family; result in the power basis.
SymFunc type_symfunc(const TypeT& omega, Basis family);

/// ω^+ = Σ_i d_i·ω^i.
Partition omega_plus(const TypeT& omega);

/// Coefficient of s_μ in s_ω, by the S_n character formula. Throws
/// SizeMismatch if |μ| != |ω|.
long twisted_lr(const TypeT& omega, const Partition& mu);

/// All types of size n, in increasing order.
const std::vector<TypeT>& types_of_size(int n);

/// All multitypes of size n with k types and genus g, taking each multiset of
/// types once (types in non-decreasing order).
std::vector<MultiType> enumerate_multitypes(int n, int k, int g);

}  // namespace hlm
