#pragma once

// Character arithmetic over a (possibly embedded) root system.
//
// Every function takes the EmbeddedDatum whose Weyl group defines dominance;
// weights are ambient labels, so a Levi factor's central coordinate rides along
// unchanged.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bds/lattice.hpp"

namespace bds {

/// Full weight system: every weight with its multiplicity, sorted by weight.
struct WeightMultiset {
  std::vector<std::pair<Weight, BigInt>> entries;

  BigInt total() const;
  /// Multiplicity of w (0 when absent).
  BigInt at(const Weight& w) const;
};

/// Irreducible decomposition: dominant highest weight -> multiplicity.
/// Multiplicities may be negative for virtual characters.
struct OrbitCharacter {
  std::string datum;  // EmbeddedDatum fingerprint
  std::map<Weight, BigInt> terms;

  static OrbitCharacter irreducible(const EmbeddedDatum& e, const Weight& hw);
  static OrbitCharacter trivial(const EmbeddedDatum& e);

  void add(const Weight& hw, const BigInt& mult);
  OrbitCharacter& operator+=(const OrbitCharacter& o);
  OrbitCharacter& operator-=(const OrbitCharacter& o);
  bool is_nonnegative() const;
  bool operator==(const OrbitCharacter& o) const { return datum == o.datum && terms == o.terms; }
  /// Canonical text form "hw:mult;..." used for cache keys.
  std::string canonical() const;
};

BigInt weyl_dim(const EmbeddedDatum& e, const Weight& hw);
BigInt dimension(const EmbeddedDatum& e, const OrbitCharacter& c);

/// Dominant weights of V(hw) with multiplicities (Freudenthal).
WeightMultiset dominant_weights(const EmbeddedDatum& e, const Weight& hw);
/// All weights of V(hw) with multiplicities.
WeightMultiset freudenthal(const EmbeddedDatum& e, const Weight& hw);
/// All weights of a non-virtual character.
WeightMultiset weights_of(const EmbeddedDatum& e, const OrbitCharacter& c);
/// Virtual character whose weights are the given multiset (Weyl-chamber reduction).
OrbitCharacter character_of(const EmbeddedDatum& e, const WeightMultiset& w);

OrbitCharacter tensor(const EmbeddedDatum& e, const OrbitCharacter& a, const OrbitCharacter& b);
/// a tensored with a module given by its weight system (Brauer-Klimyk).
OrbitCharacter tensor_weights(const EmbeddedDatum& e, const OrbitCharacter& a, const WeightMultiset& w);

OrbitCharacter adams(const EmbeddedDatum& e, const OrbitCharacter& c, int r);
OrbitCharacter sym_power(const EmbeddedDatum& e, const OrbitCharacter& c, int m);
OrbitCharacter alt_power(const EmbeddedDatum& e, const OrbitCharacter& c, int m);
/// S^0..S^m (resp. Lambda^0..Lambda^m) in one pass.
std::vector<OrbitCharacter> sym_powers(const EmbeddedDatum& e, const OrbitCharacter& c, int m);
std::vector<OrbitCharacter> alt_powers(const EmbeddedDatum& e, const OrbitCharacter& c, int m);

/// Multiplicity of the module that is trivial on the semisimple part of e.
BigInt trivial_multiplicity(const EmbeddedDatum& e, const OrbitCharacter& c);

/// Drops all memoized results (for tests and benchmarks).
void clear_kernel_cache();
std::size_t kernel_cache_size();

}  // namespace bds
