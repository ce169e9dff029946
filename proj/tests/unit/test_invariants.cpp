#include <gtest/gtest.h>

#include "../common/oracles.hpp"
#include "bds/invariants.hpp"

using namespace bds;

namespace {

BdsCase by_id(const std::string& id) {
  auto [t, nu] = parse_case_id(id);
  return make_case(t, nu);
}

EmbeddedDatum levi_of(const BdsCase& c) { return levi(grade(RootDatum::build(c.g), c.nu)).l; }

// trivial multiplicity of S^r(tau_1) by monomial enumeration and peeling
BigInt oracle_trivial(const BdsCase& c, int r) {
  EmbeddedDatum l = levi_of(c);
  oracle::Kostant k(l);
  auto w = oracle::weights(l, k, c.tau1_hw);
  auto dec = oracle::peel(l, k, oracle::power(w, r, false));
  BigInt total = 0;
  for (const auto& [hw, m] : dec) {
    bool triv = true;
    for (int x : l.local_labels(hw))
      if (x != 0) triv = false;
    if (triv) total += m;
  }
  return total;
}

}  // namespace

TEST(Invariants, SelfDual) {
  auto a1 = EmbeddedDatum::whole(RootDatum::build({Family::A, 1}));
  EXPECT_TRUE(is_self_dual(a1, Weight{1}));
  EXPECT_EQ(bilinear_type(a1, Weight{1}), Bilinear::Antisymmetric);
  EXPECT_EQ(bilinear_type(a1, Weight{2}), Bilinear::Symmetric);
  auto a2 = EmbeddedDatum::whole(RootDatum::build({Family::A, 2}));
  EXPECT_FALSE(is_self_dual(a2, Weight{1, 0}));
  EXPECT_EQ(bilinear_type(a2, Weight{1, 0}), Bilinear::None);

  auto e6 = by_id("E6_A1A5_1");
  EXPECT_FALSE(is_self_dual(levi_of(e6), e6.tau1_hw));
  auto e8 = by_id("E8_A1E7");
  EXPECT_TRUE(is_self_dual(levi_of(e8), e8.tau1_hw));
}

TEST(Invariants, BilinearFromCaseNotes) {
  auto c3 = EmbeddedDatum::whole(RootDatum::build({Family::C, 3}));
  EXPECT_EQ(bilinear_type(c3, Weight{0, 0, 1}), Bilinear::Antisymmetric);
  auto b3 = EmbeddedDatum::whole(RootDatum::build({Family::B, 3}));
  EXPECT_EQ(bilinear_type(b3, Weight{0, 0, 1}), Bilinear::Symmetric);
  EXPECT_EQ(bilinear_type(levi_of(by_id("F4_B4")), by_id("F4_B4").tau1_hw), Bilinear::Symmetric);
  EXPECT_EQ(bilinear_type(levi_of(by_id("G2_A1A1")), by_id("G2_A1A1").tau1_hw), Bilinear::Antisymmetric);
}

TEST(Invariants, ScanMatchesMonomialOracle) {
  for (const char* id : {"G2_A1A1", "F4_B4", "Spin_4_5", "Spin_6_1", "Sp_2_1", "Spin_4_3"}) {
    BdsCase c = by_id(id);
    EmbeddedDatum l = levi_of(c);
    auto chr = OrbitCharacter::irreducible(l, c.tau1_hw);
    const int top = c.deg_tau1 > 8 ? 4 : 5;
    for (int r = 1; r <= top; ++r)
      EXPECT_EQ(trivial_multiplicity(l, sym_power(l, chr, r)), oracle_trivial(c, r)) << id << " r=" << r;
  }
}

TEST(Invariants, FirstDegreeExamples) {
  EXPECT_EQ(first_invariant_degree(by_id("G2_A1A1"), 8), 4);
  EXPECT_EQ(first_invariant_degree(by_id("F4_B4"), 8), 2);
  EXPECT_EQ(first_invariant_degree(by_id("E6_A1A5_1"), 8), std::nullopt);
  EXPECT_EQ(first_invariant_degree(by_id("E7_A7"), 6), std::nullopt);
  EXPECT_THROW(first_invariant_degree(by_id("G2_A1A1"), 1), std::invalid_argument);
}

TEST(Invariants, ClosedForms) {
  EXPECT_EQ(classical_invariant_degree(by_id("Spin_4_5")), 4);
  EXPECT_EQ(classical_invariant_degree(by_id("Spin_8_1")), std::nullopt);
  EXPECT_EQ(classical_invariant_degree(by_id("Sp_3_2")), std::nullopt);
  EXPECT_EQ(classical_invariant_degree(by_id("Sp_2_3")), 2);
  EXPECT_EQ(classical_invariant_degree(by_id("Sp_4_1")), std::nullopt);
  EXPECT_THROW(classical_invariant_degree(by_id("E8_D8")), std::invalid_argument);
}

TEST(Invariants, ReportProperties) {
  for (const auto& c : enumerate_cases(4)) {
    if (!c.exceptional) continue;
    InvariantReport r = relative_invariant_report(c, 8, true);
    if (r.bilinear != Bilinear::None) EXPECT_TRUE(r.self_dual) << c.id;
    EXPECT_EQ(r.invariant_degree == 2, r.bilinear == Bilinear::Symmetric) << c.id;
    if (r.invariant_degree) {
      EXPECT_EQ(r.first_multiplicity, 1) << c.id;
      const int d = *r.invariant_degree;
      if (d <= 4) {
        // powers of the generator
        EmbeddedDatum l = levi_of(c);
        auto chr = OrbitCharacter::irreducible(l, c.tau1_hw);
        EXPECT_GE(trivial_multiplicity(l, sym_power(l, chr, 2 * d)), 1) << c.id;
      }
    }
    if (r.bilinear == Bilinear::Antisymmetric) EXPECT_EQ(r.invariant_degree, 4) << c.id;
  }
}

TEST(Invariants, SlowGate) {
  EXPECT_THROW(relative_invariant_report(by_id("E8_D8")), SlowScanGated);
  EXPECT_NO_THROW(relative_invariant_report(by_id("E8_D8"), 6));
}

TEST(Invariants, ClassicalAgreementAwayFromBoundary) {
  EXPECT_EQ(relative_invariant_report(by_id("Spin_4_5")).invariant_degree, 4);
  EXPECT_EQ(relative_invariant_report(by_id("Sp_2_3")).invariant_degree, 2);
  EXPECT_EQ(relative_invariant_report(by_id("Spin_8_1")).invariant_degree, std::nullopt);
  // p = r: det z is an invariant of degree p, below the printed 2p
  EXPECT_THROW(relative_invariant_report(by_id("Spin_6_3")), InvariantMismatch);
  EXPECT_EQ(first_invariant_degree(by_id("Spin_6_3"), 8), 3);
}
