#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hlmult/error.hpp"
#include "hlmult/symfunc.hpp"

using namespace hlm;

namespace {

const IntPoly t = IntPoly::q();

// Kostka numbers by chains of horizontal strips.
long kostka_number(const Partition& shape, const Partition& content) {
  std::function<long(const std::vector<int>&, std::size_t)> count = [&](const std::vector<int>& cur,
                                                                         std::size_t step) -> long {
    if (step == static_cast<std::size_t>(content.length())) {
      return Partition::from_unsorted(cur) == shape ? 1 : 0;
    }
    const int strip = content.parts()[step];
    long total = 0;
    // Add `strip` boxes, at most one per column: row r may grow up to the
    // previous row's old length, and never past the target shape.
    std::vector<int> next = cur;
    next.resize(static_cast<std::size_t>(shape.length()), 0);
    std::vector<int> base = next;
    std::function<void(std::size_t, int)> place = [&](std::size_t r, int left) {
      if (r == next.size()) {
        if (left == 0) total += count(next, step + 1);
        return;
      }
      const int cap_prev_row = r == 0 ? shape.part(0) : base[r - 1];
      const int cap = std::min(cap_prev_row, shape.part(static_cast<int>(r)));
      for (int add = 0; add <= left && base[r] + add <= cap; ++add) {
        next[r] = base[r] + add;
        place(r + 1, left - add);
      }
      next[r] = base[r];
    };
    place(0, strip);
    return total;
  };
  if (shape.size() != content.size()) return 0;
  return count(std::vector<int>(static_cast<std::size_t>(shape.length()), 0), 0);
}

// Permutation character of S_n on tabloids of shape μ at cycle type ρ.
long tabloid_character(const Partition& mu, const Partition& rho) {
  std::vector<int> room = mu.parts();
  std::function<long(std::size_t)> go = [&](std::size_t i) -> long {
    if (i == static_cast<std::size_t>(rho.length())) return 1;
    long s = 0;
    for (auto& r : room) {
      if (r >= rho.parts()[i]) {
        r -= rho.parts()[i];
        s += go(i + 1);
        r += rho.parts()[i];
      }
    }
    return s;
  };
  return go(0);
}

// χ^λ from π^μ = Σ_λ K_{λμ} χ^λ, solved from the top of the lexicographic order.
std::map<std::pair<Partition, Partition>, long> character_table_oracle(int n) {
  std::map<std::pair<Partition, Partition>, long> chi;
  const auto& parts = partitions_of(n);  // decreasing lexicographic order
  for (const auto& mu : parts) {
    for (const auto& rho : parts) {
      long v = tabloid_character(mu, rho);
      for (const auto& lam : parts) {
        if (lam == mu) break;
        v -= kostka_number(lam, mu) * chi.at({lam, rho});
      }
      chi[{mu, rho}] = v;
    }
  }
  return chi;
}

// Lusztig's t-analogue of Kostant's formula:
// K_{λμ}(t) = Σ_w sgn(w) P_t(w(λ+δ) − (μ+δ)).
IntPoly kostant_kostka(const Partition& lambda, const Partition& mu) {
  const int n = lambda.size();
  std::vector<std::pair<int, int>> roots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) roots.emplace_back(i, j);
  }
  std::map<std::pair<std::vector<int>, std::size_t>, IntPoly> memo;
  std::function<IntPoly(std::vector<int>, std::size_t)> P = [&](std::vector<int> g, std::size_t r) -> IntPoly {
    if (r == roots.size()) {
      return std::all_of(g.begin(), g.end(), [](int x) { return x == 0; }) ? IntPoly(1L) : IntPoly();
    }
    // Partial sums must stay non-negative for γ to be a sum of positive roots.
    int partial = 0;
    for (int x : g) {
      partial += x;
      if (partial < 0) return IntPoly();
    }
    auto key = std::make_pair(g, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    IntPoly total;
    const auto [i, j] = roots[r];
    for (int c = 0;; ++c) {
      std::vector<int> h = g;
      h[static_cast<std::size_t>(i)] -= c;
      h[static_cast<std::size_t>(j)] += c;
      if (h[static_cast<std::size_t>(i)] < -4 * n) break;
      int ps = 0;
      bool ok = true;
      for (int x : h) {
        ps += x;
        if (ps < 0) ok = false;
      }
      if (!ok) break;
      total += IntPoly::monomial(1, c) * P(h, r + 1);
    }
    memo[key] = total;
    return total;
  };
  std::vector<int> lam_rho(static_cast<std::size_t>(n)), mu_rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    lam_rho[static_cast<std::size_t>(i)] = lambda.part(i) + n - i;
    mu_rho[static_cast<std::size_t>(i)] = mu.part(i) + n - i;
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  IntPoly result;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    }
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      g[static_cast<std::size_t>(a)] = lam_rho[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] - mu_rho[static_cast<std::size_t>(a)];
    }
    const IntPoly term = P(g, 0);
    result += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

SymFunc e(Basis b, std::initializer_list<int> parts) { return SymFunc::element(b, Partition(parts)); }

}  // namespace

TEST_CASE("sn_character examples") {
  for (const auto& rho : partitions_of(5)) CHECK(sn_character(Partition{5}, rho) == 1);
  CHECK(sn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
  CHECK(sn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK_THROWS_AS(sn_character(Partition{2}, Partition{1}), SizeMismatch);
}

TEST_CASE("Murnaghan–Nakayama against permutation characters and Kostka numbers") {
  for (int n = 1; n <= 6; ++n) {
    const auto table = character_table_oracle(n);
    for (const auto& [key, v] : table) CHECK(sn_character(key.first, key.second) == v);
  }
}

TEST_CASE("S_n character orthogonality, rows and columns") {
  for (int n = 1; n <= 6; ++n) {
    const auto& parts = partitions_of(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        mpq_class row = 0;
        long col = 0;
        for (const auto& r : parts) {
          row += mpq_class(sn_character(a, r) * sn_character(b, r)) / mpq_class(z_of(r));
          col += sn_character(r, a) * sn_character(r, b);
        }
        CHECK(row == (a == b ? 1 : 0));
        CHECK(mpz_class(col) == (a == b ? z_of(a) : mpz_class(0)));
      }
    }
  }
}

TEST_CASE("convert examples") {
  CHECK(convert(e(Basis::schur, {1}), Basis::power) == e(Basis::power, {1}));
  SymFunc s2(Basis::power);
  s2.add_term(Partition{1, 1}, RatFunc(mpq_class(1, 2)));
  s2.add_term(Partition{2}, RatFunc(mpq_class(1, 2)));
  CHECK(convert(e(Basis::schur, {2}), Basis::power) == s2);
  SymFunc s11(Basis::power);
  s11.add_term(Partition{1, 1}, RatFunc(mpq_class(1, 2)));
  s11.add_term(Partition{2}, RatFunc(mpq_class(-1, 2)));
  CHECK(convert(e(Basis::schur, {1, 1}), Basis::power) == s11);
}

TEST_CASE("basis round trips up to degree 6") {
  const Basis all[] = {Basis::power, Basis::schur, Basis::monomial, Basis::complete};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (Basis a : all) {
        const SymFunc f = SymFunc::element(a, l, RatFunc::q() + RatFunc(2L));
        for (Basis b : all) CHECK(convert(convert(f, b), a) == f);
      }
    }
  }
}

TEST_CASE("Jacobi–Trudi: s_λ = det(h_{λ_i − i + j})") {
  // Expand the determinant by permutations, products through multiply().
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const int l = lam.length();
      std::vector<int> perm(static_cast<std::size_t>(l));
      std::iota(perm.begin(), perm.end(), 0);
      SymFunc det(Basis::power);
      do {
        SymFunc term = SymFunc::element(Basis::power, Partition());
        int sign = 1;
        bool zero = false;
        for (int i = 0; i < l; ++i) {
          for (int j = i + 1; j < l; ++j) {
            if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) sign = -sign;
          }
          const int d = lam.part(i) - i + perm[static_cast<std::size_t>(i)];
          if (d < 0) {
            zero = true;
            break;
          }
          if (d > 0) term = multiply(term, SymFunc::element(Basis::complete, Partition{d}));
        }
        if (!zero) det += term.scaled(RatFunc(static_cast<long>(sign)));
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(same_function(det, SymFunc::element(Basis::schur, lam)));
    }
  }
}

TEST_CASE("hall_pairing examples and orthonormality") {
  CHECK(hall_pairing(e(Basis::schur, {2}), e(Basis::schur, {2})) == RatFunc(1L));
  CHECK(hall_pairing(e(Basis::complete, {1, 1}), e(Basis::monomial, {1, 1})) == RatFunc(1L));
  CHECK(hall_pairing(e(Basis::complete, {1, 1}), e(Basis::monomial, {2})) == RatFunc(0L));
  CHECK(hall_pairing(e(Basis::power, {2, 1}), e(Basis::power, {2, 1})) == RatFunc(2L));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (const auto& b : partitions_of(n)) {
        const RatFunc want(a == b ? 1L : 0L);
        CHECK(hall_pairing(SymFunc::element(Basis::schur, a), SymFunc::element(Basis::schur, b)) == want);
        CHECK(hall_pairing(SymFunc::element(Basis::complete, a), SymFunc::element(Basis::monomial, b)) == want);
      }
    }
  }
}

TEST_CASE("multiply examples") {
  CHECK(multiply(e(Basis::power, {1}), e(Basis::power, {1})) == e(Basis::power, {1, 1}));
  CHECK(same_function(multiply(e(Basis::schur, {1}), e(Basis::schur, {1})),
                      e(Basis::schur, {2}) + e(Basis::schur, {1, 1})));
  const SymFunc f = e(Basis::schur, {2, 1});
  CHECK(same_function(multiply(SymFunc::element(Basis::power, Partition()), f), f));
}

TEST_CASE("reading word and charge") {
  // Rows read left to right, bottom row first.
  CHECK(reading_word({{1, 1, 2}, {2}}) == std::vector<int>{2, 1, 1, 2});
  CHECK(charge({1, 2}) == 1);
  CHECK(charge({2, 1}) == 0);
  CHECK(charge({1, 2, 3}) == 3);
}

TEST_CASE("kostka_foulkes examples") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) {
      CHECK(kostka_foulkes(l, l) == IntPoly(1L));
      CHECK(kostka_foulkes(Partition{n}, l) == IntPoly::monomial(1, static_cast<int>(n_of(l))));
    }
  }
  CHECK(kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1}) == t + t * t);
  CHECK_THROWS_AS(kostka_foulkes(Partition{2}, Partition{1}), SizeMismatch);
}

TEST_CASE("Kostka–Foulkes against the t-Kostant formula") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (const auto& m : partitions_of(n)) CHECK(kostka_foulkes(l, m) == kostant_kostka(l, m));
    }
  }
}

TEST_CASE("Kostka–Foulkes at (1^n): fake degree formula") {
  for (int n = 1; n <= 6; ++n) {
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& l : partitions_of(n)) {
      // t^{n(λ')} ∏_{i≤n}(1 − t^i) / ∏_{hooks}(1 − t^h)
      IntPoly num = IntPoly::monomial(1, static_cast<int>(n_of(conjugate(l))));
      for (int i = 1; i <= n; ++i) num *= IntPoly(1L) - IntPoly::monomial(1, i);
      IntPoly den(1L);
      const Partition lc = conjugate(l);
      for (int r = 0; r < l.length(); ++r) {
        for (int c = 0; c < l.part(r); ++c) {
          const int hook = (l.part(r) - c - 1) + (lc.part(c) - r - 1) + 1;
          den *= IntPoly(1L) - IntPoly::monomial(1, hook);
        }
      }
      const auto k = divide_exact(num, den);
      REQUIRE(k.has_value());
      CHECK(kostka_foulkes(l, ones) == *k);
    }
  }
}

TEST_CASE("Kostka–Foulkes shape: dominance support, degree, value at 1") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (const auto& lam : partitions_of(n)) {
        const IntPoly k = kostka_foulkes(nu, lam);
        CHECK(k.is_zero() == !dominance_leq(lam, nu));
        if (!k.is_zero()) CHECK(k.degree() == n_of(lam) - n_of(nu));
        CHECK(k.eval(mpz_class(1)) == kostka_number(nu, lam));
      }
    }
  }
}

TEST_CASE("transformed Hall–Littlewood examples") {
  CHECK(hall_littlewood_transformed(Partition{1}) == e(Basis::schur, {1}));
  SymFunc h11(Basis::schur);
  h11.add_term(Partition{2}, RatFunc(1L));
  h11.add_term(Partition{1, 1}, RatFunc::q());
  CHECK(hall_littlewood_transformed(Partition{1, 1}) == h11);
  CHECK(hall_littlewood_transformed(Partition{2}) == e(Basis::schur, {2}));
}

TEST_CASE("H~_λ at q = 1 is h_λ, at q = 0 is s_(n); diagonal is q^{n(λ)}") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const SymFunc h = hall_littlewood_transformed(lam);
      SymFunc at1(Basis::schur), at0(Basis::schur);
      for (const auto& [nu, c] : h.terms()) {
        at1.add_term(nu, c.eval(1));
        at0.add_term(nu, c.eval(0));
      }
      CHECK(same_function(at1, SymFunc::element(Basis::complete, lam)));
      CHECK(at0 == SymFunc::element(Basis::schur, Partition{n}));
      CHECK(h.coeff(lam) == RatFunc(IntPoly::monomial(1, static_cast<int>(n_of(lam)))));
    }
  }
}

TEST_CASE("adams on one alphabet") {
  CHECK(adams(2, e(Basis::power, {2, 1})) == e(Basis::power, {4, 2}));
  const SymFunc f = SymFunc::element(Basis::schur, Partition{2, 1}, RatFunc::q());
  const SymFunc g = adams(3, f);
  const RatFunc c(IntPoly::monomial(1, 3) * IntPoly(1L));
  SymFunc want(Basis::power);
  want.add_term(Partition{3, 3, 3}, c * RatFunc(mpq_class(1, 3)));
  want.add_term(Partition{9}, c * RatFunc(mpq_class(-1, 3)));
  CHECK(g == want);
}
