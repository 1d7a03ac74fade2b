#include <doctest.h>

#include <algorithm>

#include "hlmult/error.hpp"
#include "hlmult/multiplicity.hpp"
#include "hlmult/types.hpp"

using namespace hlm;

namespace {

TypeT ty(std::initializer_list<std::pair<int, Partition>> pairs) {
  std::vector<TypePair> v;
  for (const auto& [d, p] : pairs) v.push_back({d, p});
  return TypeT(v);
}

long partition_count(int n) { return static_cast<long>(partitions_of(n).size()); }

// |T_n| from ∏_{d,s ≥ 1} (1 − x^{ds})^{−p(s)}.
long type_count(int n) {
  std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int d = 1; d <= n; ++d) {
    for (int s = 1; d * s <= n; ++s) {
      const int w = d * s;
      for (long rep = 0; rep < partition_count(s); ++rep) {
        for (int m = w; m <= n; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - w)];
      }
    }
  }
  return c[static_cast<std::size_t>(n)];
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const IntPoly q = IntPoly::q();

}  // namespace

TEST_CASE("parse_multitype accepts the grammar and normalizes") {
  const MultiType mt = parse_multitype("g=0; 1:[3] ; 1:[3] ; 1:[3]");
  CHECK(mt.genus() == 0);
  CHECK(mt.k() == 3);
  CHECK(mt.n() == 3);
  CHECK(mt.to_string() == "g=0; 1:[3] ; 1:[3] ; 1:[3]");
  const MultiType m2 = parse_multitype("  g = 2 ;1:[1] , 2:[2,1];  1:[7]");
  CHECK(m2.genus() == 2);
  CHECK(m2.types()[0] == ty({{2, Partition{2, 1}}, {1, Partition{1}}}));
  CHECK(m2.to_string() == "g=2; 2:[2,1],1:[1] ; 1:[7]");
  CHECK(parse_multitype(m2.to_string()) == m2);
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset_of = [](const char* s) -> long {
    try {
      parse_multitype(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("x=0; 1:[1]") == 0);
  CHECK(offset_of("g=0 1:[1]") == 4);
  CHECK(offset_of("g=0; 1:[1] ; ") == 12);
  CHECK(offset_of("g=0; 1[1]") == 6);
  CHECK(offset_of("g=0; 1:[1,x]") == 10);
  CHECK(offset_of("g=0; 0:[1]") == 5);
  CHECK(offset_of("g=0; 1:[]") == 7);
  CHECK(offset_of("g=0; 1:[1,2]") == 10);
  // Size mismatch points at the offending type.
  CHECK(offset_of("g=0; 1:[2] ; 1:[3]") == 12);
  CHECK_THROWS_AS(MultiType({ty({{1, Partition{2}}}), ty({{1, Partition{3}}})}, 0), SizeMismatch);
}

TEST_CASE("TypeT ordering and size") {
  const TypeT t = ty({{1, Partition{1}}, {2, Partition{2, 1}}, {1, Partition{2, 1}}});
  CHECK(t.size() == 1 + 6 + 3);
  CHECK(t.pairs()[0] == TypePair{2, Partition{2, 1}});
  CHECK(t.pairs()[1] == TypePair{1, Partition{2, 1}});
  CHECK(t.pairs()[2] == TypePair{1, Partition{1}});
  CHECK_FALSE(t.is_split());
  CHECK_THROWS_AS(ty({{0, Partition{1}}}), std::invalid_argument);
}

TEST_CASE("types_of_size counts and enumeration") {
  for (int n = 1; n <= 6; ++n) {
    const auto& all = types_of_size(n);
    CHECK(static_cast<long>(all.size()) == type_count(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& t : all) CHECK(t.size() == n);
    for (int k = 1; k <= 3; ++k) {
      const auto mts = enumerate_multitypes(n, k, 0);
      CHECK(static_cast<long>(mts.size()) == binomial(static_cast<long>(all.size()) + k - 1, k));
    }
  }
}

TEST_CASE("type_dual examples") {
  CHECK(type_dual(ty({{1, Partition{3}}})) == ty({{1, Partition{1, 1, 1}}}));
  CHECK(type_dual(ty({{2, Partition{2, 1}}})) == ty({{2, Partition{2, 1}}}));
  CHECK(type_dual(ty({{1, Partition{2}}, {1, Partition{1}}})) == ty({{1, Partition{1, 1}}, {1, Partition{1}}}));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : types_of_size(n)) CHECK(type_dual(type_dual(t)) == t);
  }
}

TEST_CASE("type_symfunc examples") {
  const SymFunc s = type_symfunc(ty({{2, Partition{1}}}), Basis::schur);
  CHECK(s == SymFunc::element(Basis::power, Partition{2}));
  CHECK(same_function(s, SymFunc::element(Basis::schur, Partition{2}) - SymFunc::element(Basis::schur, Partition{1, 1})));
  for (const auto& l : partitions_of(4)) {
    CHECK(same_function(type_symfunc(ty({{1, l}}), Basis::schur), SymFunc::element(Basis::schur, l)));
  }
  CHECK(type_symfunc(ty({{1, Partition{2}}, {1, Partition{3}}}), Basis::power) ==
        SymFunc::element(Basis::power, Partition{3, 2}));
}

TEST_CASE("regular semisimple types give power sums") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      std::vector<TypePair> pairs;
      for (int d : lam.parts()) pairs.push_back({d, Partition{1}});
      CHECK(type_symfunc(TypeT(pairs), Basis::schur) == SymFunc::element(Basis::power, lam));
    }
  }
}

TEST_CASE("omega_plus examples") {
  CHECK(omega_plus(ty({{2, Partition{1}}})) == Partition{2});
  CHECK(omega_plus(ty({{1, Partition{2, 1}}, {1, Partition{1, 1, 1}}})) == Partition{3, 2, 1});
  CHECK(omega_plus(ty({{1, Partition{4, 2}}})) == Partition{4, 2});
}

TEST_CASE("twisted_lr examples") {
  CHECK(twisted_lr(ty({{2, Partition{1}}}), Partition{2}) == 1);
  CHECK(twisted_lr(ty({{2, Partition{1}}}), Partition{1, 1}) == -1);
  for (const auto& l : partitions_of(4)) {
    for (const auto& m : partitions_of(4)) CHECK(twisted_lr(ty({{1, l}}), m) == (l == m ? 1 : 0));
  }
  CHECK(twisted_lr(ty({{1, Partition{1}}, {1, Partition{1}}}), Partition{2}) == 1);
  CHECK_THROWS_AS(twisted_lr(ty({{1, Partition{1}}}), Partition{2}), SizeMismatch);
}

TEST_CASE("twisted_lr equals the Schur coefficient of s_ω, and vanishes off μ ⊴ ω^+") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : types_of_size(n)) {
      const SymFunc s = convert(type_symfunc(t, Basis::schur), Basis::schur);
      const Partition plus = omega_plus(t);
      for (const auto& mu : partitions_of(n)) {
        const long c = twisted_lr(t, mu);
        CHECK(s.coeff(mu) == RatFunc(c));
        if (!dominance_leq(mu, plus)) CHECK(c == 0);
      }
    }
  }
}

TEST_CASE("r_omega") {
  CHECK(r_omega(parse_multitype("g=0; 1:[3] ; 1:[3] ; 1:[3]")) == 9 + 9);
  CHECK(r_omega(parse_multitype("g=0; 2:[1] ; 1:[1],1:[1]")) == 4 + 1 + 2);
}

TEST_CASE("h_omega examples") {
  CHECK(h_omega(parse_multitype("g=0; 1:[3] ; 1:[3] ; 1:[3]")) == q);
  CHECK(h_omega(parse_multitype("g=0; 1:[2,1] ; 1:[3] ; 1:[3]")) == IntPoly(1L));
  CHECK(h_omega(parse_multitype("g=0; 1:[3] ; 1:[2,1] ; 1:[3]")) == IntPoly(1L));
  CHECK(h_omega(parse_multitype("g=0; 1:[3] ; 1:[3] ; 1:[2,1]")) == IntPoly(1L));
  CHECK(h_omega(parse_multitype("g=1; 1:[1] ; 1:[1]")) == q);
  CHECK(h_omega(parse_multitype("g=0; 1:[1,1,1] ; 1:[1,1,1] ; 1:[1,1,1]")).is_zero());
}

TEST_CASE("the other unipotent triples at n = 3 vanish") {
  const Partition p3{3}, p21{2, 1};
  for (const auto& a : partitions_of(3)) {
    for (const auto& b : partitions_of(3)) {
      for (const auto& c : partitions_of(3)) {
        const int n3 = (a == p3) + (b == p3) + (c == p3);
        const int n21 = (a == p21) + (b == p21) + (c == p21);
        if (n3 == 3 || (n3 == 2 && n21 == 1)) continue;
        CHECK(h_omega(MultiType({ty({{1, a}}), ty({{1, b}}), ty({{1, c}})}, 0)).is_zero());
      }
    }
  }
}

TEST_CASE("h_omega is invariant under permuting the types") {
  for (int n = 1; n <= 3; ++n) {
    for (int g = 0; g <= 1; ++g) {
      for (const auto& mt : enumerate_multitypes(n, 3, g)) {
        std::vector<TypeT> types = mt.types();
        const IntPoly h = h_omega(mt);
        std::sort(types.begin(), types.end());
        while (std::next_permutation(types.begin(), types.end())) CHECK(h_omega(MultiType(types, g)) == h);
      }
    }
  }
}

TEST_CASE("split semisimple types pair against complete symmetric functions") {
  for (int n = 1; n <= 4; ++n) {
    for (int g = 0; g <= 1; ++g) {
      const int k = 2;
      const auto level = log_omega_level(g, k, n);
      for (const auto& l1 : partitions_of(n)) {
        for (const auto& l2 : partitions_of(n)) {
          std::vector<TypeT> types;
          for (const auto* l : {&l1, &l2}) {
            std::vector<TypePair> pairs;
            for (int p : l->parts()) pairs.push_back({1, Partition(std::vector<int>(static_cast<std::size_t>(p), 1))});
            types.emplace_back(pairs);
            CHECK(same_function(type_symfunc(type_dual(types.back()), Basis::schur),
                                SymFunc::element(Basis::complete, *l)));
          }
          // ⟨h_λ1 h_λ2, Σ c p_ρ1 p_ρ2⟩ = Σ c · [p_ρ1]h_λ1 · z_ρ1 · [p_ρ2]h_λ2 · z_ρ2
          RatFunc pair;
          const auto& r1 = to_power_row(Basis::complete, l1);
          const auto& r2 = to_power_row(Basis::complete, l2);
          for (const auto& [key, c] : level) {
            const auto i = static_cast<std::size_t>(key[0]);
            const auto j = static_cast<std::size_t>(key[1]);
            const mpq_class w = r1[i] * mpq_class(z_of(partitions_of(n)[i])) * r2[j] * mpq_class(z_of(partitions_of(n)[j]));
            if (w != 0) pair += c * RatFunc(w);
          }
          const RatFunc want = RatFunc(q - IntPoly(1L)) * pair;
          CHECK(RatFunc(h_omega(MultiType(types, g))) == want);
        }
      }
    }
  }
}

TEST_CASE("type_schur_decomposition") {
  const TypeT t = ty({{2, Partition{1}}, {1, Partition{2}}});
  // Stored order: (1,[2]) then (2,[1]).
  REQUIRE(t.pairs()[0] == TypePair{1, Partition{2}});
  const auto d = type_schur_decomposition(t, {1, 1});
  CHECK(d.size() == 2);
  CHECK(d.at({Partition{2}, Partition{2}}) == 1);
  CHECK(d.at({Partition{2}, Partition{1, 1}}) == -1);

  CHECK_THROWS_AS(type_schur_decomposition(t, {1}), std::invalid_argument);
  CHECK_THROWS_AS(type_schur_decomposition(t, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(type_schur_decomposition(t, {0, 2}), std::invalid_argument);

  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : types_of_size(n)) {
      const int r = static_cast<int>(w.pairs().size());
      // Single block: the twisted LR coefficients themselves.
      const auto single = type_schur_decomposition(w, {r});
      for (const auto& mu : partitions_of(n)) {
        const long c = twisted_lr(w, mu);
        const auto it = single.find({mu});
        CHECK((it == single.end() ? 0 : it->second) == c);
      }
      // One pair per block, recombined.
      const auto split = type_schur_decomposition(w, std::vector<int>(static_cast<std::size_t>(r), 1));
      SymFunc total(Basis::power);
      for (const auto& [lams, c] : split) {
        SymFunc prod = SymFunc::element(Basis::power, Partition());
        for (const auto& l : lams) prod = multiply(prod, SymFunc::element(Basis::schur, l));
        total += prod.scaled(RatFunc(c));
      }
      CHECK(same_function(total, type_symfunc(w, Basis::schur)));
    }
  }
}
