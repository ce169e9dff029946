#pragma once

// Gradings by the coefficient of a noncompact simple root and the case atlas.
//
// Simple-root indices in this header are 1-based (psi_1 .. psi_l) to match the
// usual Bourbaki labels; RootVec/Weight coordinates stay 0-based.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bds/charkernel.hpp"
#include "bds/lattice.hpp"

namespace bds {

/// The coefficient of nu in the maximal root is 1.
class HermitianCaseExcluded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The coefficient of nu in the maximal root is 3 or more.
class NotBorelDeSiebenthal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Grading {
  DatumPtr datum;
  int nu = 0;  // 1-based
  /// parts[i + 2] = roots with nu-coefficient i, each list in root order.
  std::array<std::vector<RootVec>, 5> parts;
  RootVec mu;
  Weight nu_star;
  int s = 0;

  const std::vector<RootVec>& delta(int i) const { return parts.at(i + 2); }
  int level(const RootVec& r) const { return r[nu - 1]; }
  RootVec nu_root() const;
};

struct LeviStructure {
  /// Reductive part l: simple system Psi minus nu.
  EmbeddedDatum l;
  /// k with the positive system Delta_0^+ u Delta_2; its simple system is
  /// Psi minus nu plus the lowest root of Delta_2, k1 component first.
  EmbeddedDatum k;
  /// k with simple system Psi minus nu plus -mu (positive system Delta_0^+ u Delta_-2).
  EmbeddedDatum k_psi;
  RootVec beta0;  // lowest root of Delta_2
  Weight nu_star;
  std::vector<SimpleType> l_types, k1_types, k2_types;
  /// Local simple indices of k belonging to k1 (resp. k2).
  std::vector<int> k1_simple, k2_simple;

  std::string l_name() const;  // "T1" + semisimple types
  std::string k1_name() const;
  std::string k2_name() const;  // "-" when k2 = 0
};

/// All psi_i (1-based) with coefficient 2 in the maximal root, one per orbit of
/// the diagram automorphism group.
std::vector<int> admissible_nus(const RootDatum& d);

Grading grade(const DatumPtr& d, int nu);
LeviStructure levi(const Grading& g);

/// Highest weight (ambient labels) of the l-module u_i, i in {-2,-1,1,2}.
Weight tau_weight(const Grading& g, const LeviStructure& lev, int i);
/// The l-character of u_i; a single irreducible.
OrbitCharacter u_character(const Grading& g, const LeviStructure& lev, int i);
/// Weights of u_i read off from Delta_i directly.
WeightMultiset delta_weights(const Grading& g, int i);
/// -w0_l(hw).
Weight dual_hw(const LeviStructure& lev, const Weight& hw);

/// gamma = gamma0 + t nu*, with gamma0 having zero nu-label.
std::pair<Weight, Rational> decompose_gamma(const Grading& g, const Weight& gamma);
/// psi_nu coordinate of a weight: the eigenvalue of the centre of l, scaled so
/// that roots in Delta_i have central label i.
Rational central_label(const Grading& g, const Weight& x);

struct BdsCase {
  std::string id;
  std::string real_form;  // e.g. "Spin(4,5)", "E8,D8"
  SimpleType g;
  int nu = 0;  // 1-based
  bool exceptional = false;
  int p = 0, q = 0;  // classical parameters (SO(2p,q) or Sp(p,q)); 0 for exceptional
  std::string k1_type, k2_type, l_type;
  long dim_u1 = 0, dim_u2 = 0;
  Weight tau1_hw, tau2_hw;
  BigInt deg_tau1 = 0;
  int s = 0;
};

/// Canonical id for a BdS pair (g, nu); throws for non-BdS input.
std::string case_id(SimpleType g, int nu);
/// Parses an id ("E8_D8", "E7,A1D6,2", "Spin_4_5", "Sp_2_3", "SO_4_4",
/// "Spin(4,5)", or "<type>:<nu>" such as "B4:3").  Throws std::invalid_argument.
std::pair<SimpleType, int> parse_case_id(const std::string& id);

BdsCase make_case(SimpleType g, int nu);
/// The ten exceptional cases plus all classical B/C/D cases of rank <= bound.
std::vector<BdsCase> enumerate_cases(int max_classical_rank);

}  // namespace bds
