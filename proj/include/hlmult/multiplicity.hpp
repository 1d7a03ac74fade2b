#pragma once

#include <map>
#include <vector>

#include "hlmult/int_poly.hpp"
#include "hlmult/rat_func.hpp"
#include "hlmult/sym_series.hpp"
#include "hlmult/types.hpp"

namespace hlm {

/// r(ω) = kn + Σ_{i,j} |ω_i^j|.
long r_omega(const MultiType& mt);

/// Level n of Log Ω for genus g and k alphabets. Cached per (g, k); the
/// truncation only ever grows.
SymSeries::Level log_omega_level(int g, int k, int n);

/// ⟨s_{ω'}, [T^n] Log Ω⟩, before the (q−1) and sign factors.
RatFunc paired_value(const MultiType& mt);

/// H_ω(q). Throws NotPolynomial if (q−1)·⟨...⟩ is not an integer polynomial.
IntPoly h_omega(const MultiType& mt);

/// Schur expansion of s_ω block by block. `block_sizes` splits the pairs of
/// ω (in stored order) into contiguous blocks; the result maps
/// (λ^1, ..., λ^b) to ∏_i c_{block_i}^{λ^i}. Throws std::invalid_argument for
/// blocks that do not cover the pairs exactly.
std::map<std::vector<Partition>, long> type_schur_decomposition(const TypeT& omega,
                                                                const std::vector<int>& block_sizes);

namespace testing {
/// Flips the sign (−1)^{r(ω)} inside h_omega. Used by the selftest mutation check.
void set_sign_mutation(bool on);
bool sign_mutation();
}  // namespace testing

}  // namespace hlm
