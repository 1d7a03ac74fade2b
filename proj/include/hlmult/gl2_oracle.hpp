#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlmult/cyclotomic.hpp"
#include "hlmult/types.hpp"

namespace hlm {

// Unsupported q, or no generic tuple of the requested type at this q.
class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fix a generator γ of F_{q²}^×; ζ is a primitive (q²−1)-th root of unity.
/// F_q^× = ⟨γ^{q+1}⟩, so its elements and characters are indexed mod q−1.
struct ConjClassGL2 {
  enum class Kind { central, nonsemisimple, split, anisotropic };
  Kind kind;
  /// central / nonsemisimple: eigenvalue γ^{(q+1)a}. split: diag(γ^{(q+1)a}, γ^{(q+1)b}),
  /// a < b. anisotropic: eigenvalues γ^a, γ^{qa}, a the smaller of the two exponents.
  long a = 0;
  long b = 0;
  mpz_class size;
  int centralizer_dim;
};

struct CharGL2 {
  enum class Kind { linear, steinberg_twist, principal, cuspidal };
  Kind kind;
  int q;
  /// linear / steinberg_twist: α_a. principal: α_a ≠ α_b, a < b. cuspidal: φ_a
  /// on F_{q²}^×, a ≢ 0 mod q+1, a the smaller of a and qa mod q²−1.
  long a = 0;
  long b = 0;
  long degree;
  std::vector<Cyclo> values;  // indexed like the table's classes

  TypeT type_tag() const;
  std::string to_string() const;
};

struct TableGL2 {
  int q;
  int m;  // q² − 1
  mpz_class group_order;
  std::vector<ConjClassGL2> classes;
  std::vector<CharGL2> characters;
};

/// Character table of GL₂(F_q) for q ∈ {3, 5, 7}. Cached. Throws OracleError otherwise.
const TableGL2& build_table_gl2(int q);

/// Both orthogonality relations, exactly.
bool table_orthogonal(const TableGL2& t);

/// Genericity for a tuple of GL₂ characters. Throws std::invalid_argument if
/// they come from different tables.
bool is_generic_tuple(const std::vector<CharGL2>& chars);

/// (1/|G|) Σ_classes size · q^{g·dim C(x)} · ∏ X_i(x). Throws std::logic_error
/// if the result is not an integer.
mpz_class oracle_multiplicity(const std::vector<CharGL2>& chars, int g);

/// GL₁(F_q): characters α_{a_i}. Generic iff Σ a_i ≡ 0 mod q−1.
bool is_generic_gl1(int q, const std::vector<long>& exponents);
mpz_class oracle_multiplicity_gl1(int q, const std::vector<long>& exponents, int g);

/// First generic tuple of characters of GL₂(F_q) with the given types, in a
/// fixed search order; nullopt if there is none.
std::optional<std::vector<CharGL2>> find_generic_tuple(const MultiType& mt, int q);

struct OracleReport {
  MultiType mt;
  int q;
  mpz_class formula;
  mpz_class oracle;
  bool match;
  std::string tuple;  // the characters used
};

/// H_ω(q0) against the brute-force multiplicity, for n ≤ 2. Throws
/// OracleError for n > 2, an unsupported q, or no generic tuple ("insufficient q").
OracleReport oracle_vs_formula(const MultiType& mt, int q);

}  // namespace hlm
