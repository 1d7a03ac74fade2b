#include "hlmult/selftest.hpp"

#include <chrono>
#include <sstream>

#include "hlmult/gl2_oracle.hpp"
#include "hlmult/multiplicity.hpp"
#include "hlmult/quiver.hpp"
#include "hlmult/symfunc.hpp"
#include "hlmult/types.hpp"

namespace hlm {

namespace {

TypeT unipotent(const Partition& p) { return TypeT({{1, p}}); }

MultiType unipotent3(const Partition& a, const Partition& b, const Partition& c) {
  return MultiType({unipotent(a), unipotent(b), unipotent(c)}, 0);
}

std::vector<MultiType> all_multitypes(int max_n, int max_k, int min_g, int max_g) {
  std::vector<MultiType> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= max_k; ++k) {
      for (int g = min_g; g <= max_g; ++g) {
        auto v = enumerate_multitypes(n, k, g);
        out.insert(out.end(), v.begin(), v.end());
      }
    }
  }
  return out;
}

bool all_degrees_one(const MultiType& mt) {
  for (const auto& t : mt.types()) {
    if (!t.is_split()) return false;
  }
  return true;
}

using Check = std::function<std::string()>;  // empty string on success

std::string check_unipotent_regression() {
  const IntPoly q = IntPoly::q();
  const Partition p3{3}, p21{2, 1}, p111{1, 1, 1};
  std::ostringstream err;
  for (const auto& a : partitions_of(3)) {
    for (const auto& b : partitions_of(3)) {
      for (const auto& c : partitions_of(3)) {
        const IntPoly h = h_omega(unipotent3(a, b, c));
        const int n3 = (a == p3) + (b == p3) + (c == p3);
        const int n21 = (a == p21) + (b == p21) + (c == p21);
        IntPoly want(0L);
        if (n3 == 3) want = q;
        if (n3 == 2 && n21 == 1) want = IntPoly(1L);
        if (h != want) err << a.to_string() << b.to_string() << c.to_string() << " gave " << h.to_string() << "; ";
      }
    }
  }
  return err.str();
}

std::string check_quiver_anchors() {
  const Partition p3{3}, p21{2, 1};
  std::ostringstream err;
  auto qa = build_quiver(unipotent3(p3, p3, p3));
  const DimVector e6t{3, {{2, 1}, {2, 1}, {2, 1}}};
  if (!(qa.v == e6t)) err << "affine E6 vector wrong; ";
  if (classify_root(qa.quiver, qa.v) != RootClass::imaginary) err << "affine E6 not imaginary; ";
  if (d_omega(qa.quiver, qa.v) != 2) err << "affine E6 d != 2; ";
  auto qb = build_quiver(unipotent3(p21, p3, p3));
  if (classify_root(qb.quiver, qb.v) != RootClass::real) err << "E6 not real; ";
  if (d_omega(qb.quiver, qb.v) != 0) err << "E6 d != 0; ";
  return err.str();
}

std::string check_character_orthogonality(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const auto& parts = partitions_of(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        mpq_class s = 0;
        for (const auto& rho : parts) {
          s += mpq_class(sn_character(a, rho) * sn_character(b, rho)) / mpq_class(z_of(rho));
        }
        if (s != (a == b ? 1 : 0)) return "row relation fails at " + a.to_string() + "," + b.to_string();
      }
    }
  }
  return {};
}

std::string check_kostka_foulkes() {
  IntPoly t = IntPoly::q();
  if (kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1}) != t + t * t) return "K_{21,111} != t + t^2";
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n)) {
      if (kostka_foulkes(Partition{n}, lam) != IntPoly::monomial(1, static_cast<int>(n_of(lam)))) {
        return "K_{(n)," + lam.to_string() + "} != t^{n(lambda)}";
      }
    }
  }
  return {};
}

std::string check_hall_littlewood_at_one(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lam : partitions_of(n)) {
      SymFunc at_one(Basis::schur);
      const SymFunc h = hall_littlewood_transformed(lam);
      for (const auto& [nu, c] : h.terms()) at_one.add_term(nu, c.eval(1));
      if (!same_function(at_one, SymFunc::element(Basis::complete, lam))) return "H~ at q=1 != h at " + lam.to_string();
    }
  }
  return {};
}

std::string check_adams(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const SymFunc s = SymFunc::element(Basis::schur, lam);
      for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
          if (!same_function(adams(a, adams(b, s)), adams(a * b, s))) return "psi composition at " + lam.to_string();
        }
      }
    }
  }
  return {};
}

std::string check_exp_log(int k, int truncation) {
  for (int g = 0; g <= 1; ++g) {
    const SymSeries omega = cauchy_omega(g, k, truncation);
    if (!(pleth_exp(pleth_log(omega)) == omega)) return "Exp(Log(Omega)) != Omega at g=" + std::to_string(g);
    SymSeries f = pleth_log(omega);
    if (!(pleth_log(pleth_exp(f)) == f)) return "Log(Exp(f)) != f at g=" + std::to_string(g);
  }
  return {};
}

std::string check_gl2_tables(const std::vector<int>& qs) {
  for (int q : qs) {
    const auto& t = build_table_gl2(q);
    if (t.characters.size() != static_cast<std::size_t>(q * q - 1)) return "character count at q=" + std::to_string(q);
    if (!table_orthogonal(t)) return "orthogonality fails at q=" + std::to_string(q);
  }
  return {};
}

std::string check_shape(int max_n, int max_k, int max_g) {
  std::ostringstream err;
  for (const auto& mt : all_multitypes(max_n, max_k, 0, max_g)) {
    const IntPoly h = h_omega(mt);
    if (h.is_zero()) continue;
    const auto qd = build_quiver(mt);
    const long d = d_omega(qd.quiver, qd.v);
    if (h.leading() != 1 || 2L * h.degree() != d) err << mt.to_string() << " gave " << h.to_string() << " (d=" << d << "); ";
    if (all_degrees_one(mt)) {
      for (const auto& c : h.coefficients()) {
        if (c < 0) {
          err << mt.to_string() << " has a negative coefficient; ";
          break;
        }
      }
    }
  }
  return err.str();
}

std::string check_root_correspondence(int max_n, int max_k, int max_g) {
  std::ostringstream err;
  for (const auto& mt : all_multitypes(max_n, max_k, 0, max_g)) {
    const IntPoly h = h_omega(mt);
    const auto qd = build_quiver(mt);
    const RootClass rc = classify_root(qd.quiver, qd.v);
    bool ok = h.is_zero() == (rc == RootClass::not_root);
    if (mt.genus() == 0) ok = ok && ((h == IntPoly(1L)) == (rc == RootClass::real));
    if (!ok) err << mt.to_string() << " H=" << h.to_string() << " class=" << root_class_name(rc) << "; ";
  }
  return err.str();
}

std::string check_positive_genus(int max_n, int max_k) {
  std::ostringstream err;
  for (const auto& mt : all_multitypes(max_n, max_k, 1, 2)) {
    const auto qd = build_quiver(mt);
    if (classify_root(qd.quiver, qd.v) != RootClass::imaginary) err << mt.to_string() << " not imaginary; ";
    if (h_omega(mt).is_zero()) err << mt.to_string() << " has H = 0; ";
  }
  return err.str();
}

std::string check_oracle(const std::vector<int>& qs, int max_k, int max_g) {
  std::ostringstream err;
  for (int q : qs) {
    for (int k = 2; k <= max_k; ++k) {
      for (int g = 0; g <= max_g; ++g) {
        for (const auto& mt : enumerate_multitypes(2, k, g)) {
          if (!find_generic_tuple(mt, q)) continue;
          const auto r = oracle_vs_formula(mt, q);
          if (!r.match) err << mt.to_string() << " q=" << q << ": " << r.formula << " vs " << r.oracle << "; ";
        }
      }
    }
  }
  return err.str();
}

std::string check_sign_mutation() {
  const Partition p3{3};
  const MultiType mt = unipotent3(p3, p3, p3);
  testing::set_sign_mutation(true);
  bool caught = false;
  try {
    caught = h_omega(mt) != IntPoly::q();
  } catch (const std::exception&) {
    caught = true;
  }
  testing::set_sign_mutation(false);
  if (!caught) return "a sign flip in r(omega) went unnoticed";
  if (h_omega(mt) != IntPoly::q()) return "regression does not recover after the mutation is removed";
  return {};
}

std::string check_reconstruction(int max_k, int max_g, int truncation) {
  for (int k = 1; k <= max_k; ++k) {
    for (int g = 0; g <= max_g; ++g) {
      const SymSeries omega = cauchy_omega(g, k, truncation);
      for (auto fam : {OmegaFamily::semisimple, OmegaFamily::nilpotent, OmegaFamily::power}) {
        if (!(reconstruct_omega(fam, g, k, truncation) == omega)) {
          return "family " + std::to_string(static_cast<int>(fam)) + " fails at k=" + std::to_string(k) +
                 " g=" + std::to_string(g);
        }
      }
    }
  }
  return {};
}

}  // namespace

SymSeries reconstruct_omega(OmegaFamily family, int g, int k, int truncation) {
  SymSeries inner(k, truncation);
  const RatFunc inv_q1 = RatFunc(IntPoly::q() - IntPoly(1L)).inverse();
  for (int m = 1; m <= truncation; ++m) {
    const auto& parts = partitions_of(m);
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<TypeT> types;
      std::vector<SymFunc> factors;
      mpz_class z = 1;
      for (std::size_t i : idx) {
        const Partition& lam = parts[i];
        std::vector<TypePair> pairs;
        switch (family) {
          case OmegaFamily::semisimple:
            for (int p : lam.parts()) pairs.push_back({1, Partition(std::vector<int>(static_cast<std::size_t>(p), 1))});
            factors.push_back(SymFunc::element(Basis::monomial, lam));
            break;
          case OmegaFamily::nilpotent:
            pairs.push_back({1, conjugate(lam)});
            factors.push_back(SymFunc::element(Basis::schur, lam));
            break;
          case OmegaFamily::power:
            for (int p : lam.parts()) pairs.push_back({p, Partition{1}});
            factors.push_back(SymFunc::element(Basis::power, lam));
            z *= z_of(lam);
            break;
        }
        types.emplace_back(std::move(pairs));
      }
      const MultiType mt(std::move(types), g);
      RatFunc c = RatFunc(h_omega(mt)) * inv_q1;
      if (family == OmegaFamily::power) {
        c *= RatFunc(mpq_class(r_omega(mt) % 2 ? -1 : 1, 1) / mpq_class(z));
      }
      inner += SymSeries::monomial(k, truncation, m, factors, c);
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == parts.size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return pleth_exp(inner);
}

std::vector<CheckResult> run_selftest(Depth depth, const std::function<void(const CheckResult&)>& progress) {
  const bool full = depth == Depth::full;
  std::vector<std::pair<std::string, Check>> checks = {
      {"unipotent_regression_n3", check_unipotent_regression},
      {"quiver_anchors", check_quiver_anchors},
      {"sign_mutation_detected", check_sign_mutation},
      {"sn_character_orthogonality", [full] { return check_character_orthogonality(full ? 6 : 4); }},
      {"kostka_foulkes_values", check_kostka_foulkes},
      {"hall_littlewood_at_q1", [full] { return check_hall_littlewood_at_one(full ? 6 : 4); }},
      {"adams_composition", [full] { return check_adams(full ? 5 : 3); }},
      {"exp_log_roundtrip", [full] { return check_exp_log(1, full ? 6 : 4); }},
      {"gl2_table_orthogonality", [full] { return check_gl2_tables(full ? std::vector<int>{3, 5, 7} : std::vector<int>{3}); }},
      {"polynomial_shape", [full] { return check_shape(full ? 4 : 3, 3, 1); }},
      {"root_correspondence", [full] { return check_root_correspondence(full ? 4 : 3, 3, 1); }},
      {"positive_genus_imaginary", [full] { return check_positive_genus(full ? 3 : 2, 3); }},
  };
  if (full) {
    checks.emplace_back("oracle_equivalence", [] { return check_oracle({3, 5}, 4, 1); });
    checks.emplace_back("omega_reconstruction", [] { return check_reconstruction(3, 1, 3); });
  } else {
    checks.emplace_back("oracle_equivalence", [] { return check_oracle({3}, 3, 1); });
  }
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r{name, false, "", 0};
    try {
      r.detail = fn();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hlm
