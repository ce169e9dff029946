#include <gtest/gtest.h>

#include <random>

#include "../common/oracles.hpp"
#include "bds/charkernel.hpp"

using namespace bds;

namespace {

EmbeddedDatum whole(Family f, int n) { return EmbeddedDatum::whole(RootDatum::build({f, n})); }

BigInt binom(BigInt n, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<SimpleType> small_types() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
          {Family::B, 3}, {Family::C, 3}, {Family::G, 2}};
}

}  // namespace

TEST(CharKernel, WeylDim) {
  EXPECT_EQ(weyl_dim(whole(Family::C, 3), Weight{0, 0, 1}), 14);
  EXPECT_EQ(weyl_dim(whole(Family::F, 4), Weight{0, 0, 0, 0}), 1);
  EXPECT_EQ(weyl_dim(whole(Family::D, 7), Weight{0, 0, 0, 0, 0, 0, 1}), 64);
  EXPECT_THROW(weyl_dim(whole(Family::A, 2), Weight{-1, 0}), std::invalid_argument);
}

TEST(CharKernel, FreudenthalSmall) {
  auto a2 = whole(Family::A, 2);
  EXPECT_EQ(freudenthal(a2, Weight{1, 1}).at(Weight{0, 0}), 2);
  auto a1 = whole(Family::A, 1);
  auto w = freudenthal(a1, Weight{5});
  EXPECT_EQ(w.entries.size(), 6u);
  for (const auto& [x, m] : w.entries) EXPECT_EQ(m, 1);
  auto b2 = whole(Family::B, 2);
  auto s = freudenthal(b2, Weight{0, 1});
  EXPECT_EQ(s.entries.size(), 4u);
  for (const auto& [x, m] : s.entries) EXPECT_EQ(m, 1);
}

TEST(CharKernel, FreudenthalMatchesKostant) {
  for (const auto& t : small_types()) {
    auto e = EmbeddedDatum::whole(RootDatum::build(t));
    oracle::Kostant k(e);
    const int n = e.rank();
    std::vector<int> lab(n, 0);
    while (true) {
      Weight hw = Weight::from(lab);
      auto dom = dominant_weights(e, hw);
      BigInt total = 0;
      for (const auto& [x, m] : freudenthal(e, hw).entries) total += m;
      EXPECT_EQ(total, weyl_dim(e, hw)) << t.name() << hw.str();
      for (const auto& [x, m] : dom.entries) EXPECT_EQ(m, k.multiplicity(hw, x)) << t.name() << hw.str() << x.str();
      int i = 0;
      while (i < n && ++lab[i] > 3) lab[i++] = 0;
      if (i == n) break;
    }
  }
}

TEST(CharKernel, TensorSmall) {
  auto a1 = whole(Family::A, 1);
  auto p = tensor(a1, OrbitCharacter::irreducible(a1, Weight{1}), OrbitCharacter::irreducible(a1, Weight{1}));
  EXPECT_EQ(p.terms.size(), 2u);
  EXPECT_EQ(p.terms.at(Weight{2}), 1);
  EXPECT_EQ(p.terms.at(Weight{0}), 1);
  auto a2 = whole(Family::A, 2);
  auto adj = OrbitCharacter::irreducible(a2, Weight{1, 1});
  EXPECT_EQ(tensor(a2, adj, adj).terms.at(Weight{0, 0}), 1);
}

TEST(CharKernel, TensorMatchesPeeling) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> u(0, 2);
  for (const auto& t : small_types()) {
    auto e = EmbeddedDatum::whole(RootDatum::build(t));
    oracle::Kostant k(e);
    for (int trial = 0; trial < 3; ++trial) {
      Weight a(e.rank()), b(e.rank());
      for (int i = 0; i < e.rank(); ++i) {
        a[i] = u(rng);
        b[i] = u(rng) % 2;
      }
      auto got = tensor(e, OrbitCharacter::irreducible(e, a), OrbitCharacter::irreducible(e, b));
      auto want = oracle::peel(e, k, oracle::product(oracle::weights(e, k, a), oracle::weights(e, k, b)));
      EXPECT_EQ(got.terms, want) << t.name() << a.str() << b.str();
    }
  }
}

TEST(CharKernel, TensorDimensionIdentity) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> u(0, 3);
  std::vector<SimpleType> types{{Family::A, 4}, {Family::B, 4}, {Family::C, 4}, {Family::D, 4}, {Family::F, 4}};
  for (const auto& t : types) {
    auto e = EmbeddedDatum::whole(RootDatum::build(t));
    for (int trial = 0; trial < 4; ++trial) {
      Weight a(4), b(4);
      for (int i = 0; i < 4; ++i) {
        a[i] = u(rng) % (t.family == Family::F ? 2 : 4);
        b[i] = u(rng) % 2;
      }
      auto ca = OrbitCharacter::irreducible(e, a), cb = OrbitCharacter::irreducible(e, b);
      auto p = tensor(e, ca, cb);
      EXPECT_TRUE(p.is_nonnegative());
      EXPECT_EQ(dimension(e, p), weyl_dim(e, a) * weyl_dim(e, b)) << t.name();
    }
  }
}

TEST(CharKernel, Adams) {
  auto a1 = whole(Family::A, 1);
  auto c = OrbitCharacter::irreducible(a1, Weight{1});
  auto p = adams(a1, c, 2);
  EXPECT_EQ(p.terms.size(), 2u);
  EXPECT_EQ(p.terms.at(Weight{2}), 1);
  EXPECT_EQ(p.terms.at(Weight{0}), -1);
  EXPECT_EQ(adams(a1, c, 1), c);
  auto b3 = whole(Family::B, 3);
  auto s = OrbitCharacter::irreducible(b3, Weight{1, 0, 1});
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(dimension(b3, adams(b3, s, r)), weyl_dim(b3, Weight{1, 0, 1}));
}

TEST(CharKernel, SymAndAltPowers) {
  auto a1 = whole(Family::A, 1);
  auto v = OrbitCharacter::irreducible(a1, Weight{1});
  EXPECT_EQ(sym_power(a1, v, 2), OrbitCharacter::irreducible(a1, Weight{2}));
  EXPECT_EQ(alt_power(a1, v, 2), OrbitCharacter::trivial(a1));

  auto c3 = whole(Family::C, 3);
  auto x3 = OrbitCharacter::irreducible(c3, Weight{0, 0, 1});
  auto s = sym_powers(c3, x3, 4);
  EXPECT_EQ(trivial_multiplicity(c3, s[2]), 0);
  EXPECT_EQ(trivial_multiplicity(c3, s[3]), 0);
  EXPECT_GE(trivial_multiplicity(c3, s[4]), 1);
  EXPECT_EQ(trivial_multiplicity(c3, alt_power(c3, x3, 2)), 1);

  auto b3 = whole(Family::B, 3);
  auto spin = OrbitCharacter::irreducible(b3, Weight{0, 0, 1});
  EXPECT_EQ(trivial_multiplicity(b3, alt_power(b3, spin, 2)), 0);
  EXPECT_EQ(trivial_multiplicity(b3, sym_power(b3, spin, 2)), 1);

  auto adj = OrbitCharacter::irreducible(a1, Weight{2});
  EXPECT_EQ(trivial_multiplicity(a1, sym_power(a1, adj, 2)), 1);
  EXPECT_EQ(trivial_multiplicity(a1, OrbitCharacter::trivial(a1)), 1);
}

TEST(CharKernel, PowerDimensions) {
  auto d7 = whole(Family::D, 7);
  auto hs = OrbitCharacter::irreducible(d7, Weight{0, 0, 0, 0, 0, 0, 1});
  EXPECT_EQ(dimension(d7, sym_power(d7, hs, 3)), binom(66, 3));
  EXPECT_EQ(dimension(d7, alt_power(d7, hs, 3)), binom(64, 3));
}

TEST(CharKernel, SymPlusAltIsSquare) {
  for (const auto& t : small_types()) {
    auto e = EmbeddedDatum::whole(RootDatum::build(t));
    Weight hw(e.rank());
    hw[0] = 1;
    hw[e.rank() - 1] += 1;
    auto c = OrbitCharacter::irreducible(e, hw);
    auto sum = sym_power(e, c, 2);
    sum += alt_power(e, c, 2);
    EXPECT_EQ(sum, tensor(e, c, c)) << t.name();
  }
}

TEST(CharKernel, PowersMatchMonomialEnumeration) {
  for (const auto& t : small_types()) {
    auto e = EmbeddedDatum::whole(RootDatum::build(t));
    oracle::Kostant k(e);
    Weight hw(e.rank());
    hw[0] = 1;
    auto c = OrbitCharacter::irreducible(e, hw);
    auto w = oracle::weights(e, k, hw);
    for (int m = 2; m <= 3; ++m) {
      EXPECT_EQ(sym_power(e, c, m).terms, oracle::peel(e, k, oracle::power(w, m, false))) << t.name() << m;
      EXPECT_EQ(alt_power(e, c, m).terms, oracle::peel(e, k, oracle::power(w, m, true))) << t.name() << m;
    }
  }
}

TEST(CharKernel, CacheIsTransparent) {
  auto b3 = whole(Family::B, 3);
  auto c = OrbitCharacter::irreducible(b3, Weight{1, 0, 1});
  auto warm = sym_power(b3, c, 3);
  clear_kernel_cache();
  EXPECT_EQ(kernel_cache_size(), 0u);
  EXPECT_EQ(sym_power(b3, c, 3), warm);
}
