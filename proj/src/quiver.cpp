#include "hlmult/quiver.hpp"

#include <numeric>
#include <stdexcept>

#include "hlmult/error.hpp"

namespace hlm {

int CometQuiver::vertex_count() const { return 1 + std::accumulate(legs.begin(), legs.end(), 0); }

std::vector<long> DimVector::flat() const {
  std::vector<long> out{v0};
  for (const auto& leg : legs) out.insert(out.end(), leg.begin(), leg.end());
  return out;
}

std::string root_class_name(RootClass c) {
  switch (c) {
    case RootClass::not_root: return "not_root";
    case RootClass::real: return "real";
    case RootClass::imaginary: return "imaginary";
  }
  return "?";
}

QuiverData build_quiver(const MultiType& mt) {
  QuiverData out;
  out.quiver.g = mt.genus();
  out.v.v0 = mt.n();
  for (const auto& t : mt.types()) {
    std::vector<long> leg;
    long v = mt.n();
    for (const auto& p : t.pairs()) {
      const Partition cols = conjugate(p.partition);
      for (int rep = 0; rep < p.degree; ++rep) {
        for (int c : cols.parts()) {
          v -= c;
          if (v > 0) leg.push_back(v);
        }
      }
    }
    out.quiver.legs.push_back(static_cast<int>(leg.size()));
    out.v.legs.push_back(std::move(leg));
  }
  return out;
}

CartanMatrix cartan_matrix(const CometQuiver& qv) {
  const auto n = static_cast<std::size_t>(qv.vertex_count());
  CartanMatrix c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  c[0][0] = 2 - 2L * qv.g;
  std::size_t next = 1;
  for (int len : qv.legs) {
    std::size_t prev = 0;
    for (int j = 0; j < len; ++j, ++next) {
      c[prev][next] = c[next][prev] = -1;
      prev = next;
    }
  }
  return c;
}

namespace {

void check_shape(const CometQuiver& qv, const DimVector& v) {
  bool ok = v.legs.size() == qv.legs.size();
  for (std::size_t i = 0; ok && i < v.legs.size(); ++i) {
    ok = static_cast<int>(v.legs[i].size()) == qv.legs[i];
  }
  if (!ok) throw SizeMismatch("dimension vector does not match the quiver shape");
}

long bilinear(const CartanMatrix& c, const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * c[i][j] * b[j];
  }
  return s;
}

bool support_connected(const CartanMatrix& c, const std::vector<long>& v) {
  const std::size_t n = v.size();
  std::vector<bool> seen(n, false);
  std::size_t start = n;
  std::size_t support = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) {
      ++support;
      if (start == n) start = i;
    }
  }
  if (support == 0) return false;
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && !seen[j] && v[j] != 0 && c[i][j] != 0) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return reached == support;
}

}  // namespace

TitsData tits_data(const CometQuiver& qv, const DimVector& a, const DimVector& b) {
  check_shape(qv, a);
  check_shape(qv, b);
  TitsData out{cartan_matrix(qv), 0, 0};
  const auto fa = a.flat();
  out.pairing = bilinear(out.cartan, fa, b.flat());
  out.p_of_a = 1 - bilinear(out.cartan, fa, fa) / 2;
  return out;
}

RootClass classify_root(const CartanMatrix& c, const std::vector<bool>& reflectable, std::vector<long> v) {
  const std::size_t n = v.size();
  if (c.size() != n || reflectable.size() != n) throw SizeMismatch("classify_root: shape mismatch");
  bool nonzero = false;
  for (long x : v) {
    if (x < 0) throw std::invalid_argument("classify_root: negative coordinate");
    nonzero = nonzero || x != 0;
  }
  if (!nonzero) throw std::invalid_argument("classify_root: zero vector");
  while (true) {
    for (long x : v) {
      if (x < 0) return RootClass::not_root;
    }
    if (!support_connected(c, v)) return RootClass::not_root;
    std::size_t support = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] != 0) {
        ++support;
        last = i;
      }
    }
    if (support == 1 && v[last] == 1 && reflectable[last]) return RootClass::real;
    // Reflect where (v,e_i) is largest and positive; lowest index on ties.
    std::size_t best = n;
    long best_val = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!reflectable[i]) continue;
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += c[i][j] * v[j];
      if (s > best_val) {
        best_val = s;
        best = i;
      }
    }
    if (best == n) return RootClass::imaginary;
    v[best] -= best_val;
  }
}

RootClass classify_root(const CometQuiver& qv, const DimVector& v) {
  check_shape(qv, v);
  const CartanMatrix c = cartan_matrix(qv);
  std::vector<bool> reflectable(c.size(), true);
  reflectable[0] = qv.g == 0;
  return classify_root(c, reflectable, v.flat());
}

long d_omega(const CometQuiver& qv, const DimVector& v) {
  check_shape(qv, v);
  const auto f = v.flat();
  return 2 - bilinear(cartan_matrix(qv), f, f);
}

bool generic_exists(const MultiType& mt) {
  long d = 0;
  for (const auto& t : mt.types()) {
    for (const auto& p : t.pairs()) d = std::gcd(d, static_cast<long>(p.partition.size()));
  }
  return d == 1;
}

}  // namespace hlm
