#pragma once

#include <string>
#include <vector>

#include "hlmult/types.hpp"

namespace hlm {

/// Comet-shaped quiver: a central vertex with g loops and k legs of type A.
/// A leg of length zero contributes no vertices.
struct CometQuiver {
  int g = 0;
  std::vector<int> legs;

  /// 1 + Σ leg lengths. Vertex 0 is the center, then the legs in order.
  int vertex_count() const;
};

/// Dimension vector on a comet-shaped quiver.
struct DimVector {
  long v0 = 0;
  std::vector<std::vector<long>> legs;

  /// Flattened in vertex order.
  std::vector<long> flat() const;
  friend bool operator==(const DimVector&, const DimVector&) = default;
};

using CartanMatrix = std::vector<std::vector<long>>;

enum class RootClass { not_root, real, imaginary };
std::string root_class_name(RootClass c);

struct QuiverData {
  CometQuiver quiver;
  DimVector v;
};

/// Γ_ω and v_ω: per type, the column lengths of the Young diagrams (each
/// repeated d_i times) give the leg v_j = n − n_1 − ... − n_j.
QuiverData build_quiver(const MultiType& mt);

CartanMatrix cartan_matrix(const CometQuiver& qv);

struct TitsData {
  CartanMatrix cartan;
  long pairing;
  long p_of_a;
};
/// (a,b) = aᵀCb and p(a) = 1 − (a,a)/2. Throws SizeMismatch on a shape mismatch.
TitsData tits_data(const CometQuiver& qv, const DimVector& a, const DimVector& b);

/// Kac classification by reflection down to a unit vector or the fundamental set.
/// Throws std::invalid_argument for a zero, negative or misshaped vector.
RootClass classify_root(const CometQuiver& qv, const DimVector& v);
/// Same on a flat vector over an arbitrary Cartan matrix; `reflectable[i]`
/// marks the loop-free vertices.
RootClass classify_root(const CartanMatrix& c, const std::vector<bool>& reflectable, std::vector<long> v);

/// 2 − vᵀCv.
long d_omega(const CometQuiver& qv, const DimVector& v);

/// gcd over all i, j of |ω_i^j| equals one.
bool generic_exists(const MultiType& mt);

}  // namespace hlm
