#pragma once

// Self-duality, bilinear invariants and relative invariants of (L, u_1).
//
// Invariance is always tested on the semisimple part L' of l.  The centre of l
// acts on u_1 by one scalar, so every L'-invariant is an L-semiinvariant.

#include <optional>
#include <stdexcept>
#include <string>

#include "bds/bdscore.hpp"

namespace bds {

enum class Bilinear { None, Symmetric, Antisymmetric };
std::string to_string(Bilinear b);

/// Plethysm scan disagrees with a classical closed form, or S^2 and Lambda^2
/// both contain the trivial module.
class InvariantMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested scan is tagged slow and was not explicitly allowed.
class SlowScanGated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr int kDefaultSearchBound = 8;

struct InvariantReport {
  std::string case_id;
  BigInt deg_tau1 = 0;
  bool self_dual = false;
  Bilinear bilinear = Bilinear::None;
  std::optional<int> invariant_degree;  // none means none up to search_bound
  int search_bound = kDefaultSearchBound;
  /// Multiplicity of the trivial module in S^r at the first invariant degree r.
  BigInt first_multiplicity = 0;
  /// Closed form, classical cases only.
  std::optional<int> closed_form;
  bool closed_form_checked = false;
};

bool is_self_dual(const EmbeddedDatum& l, const Weight& hw);
Bilinear bilinear_type(const EmbeddedDatum& l, const Weight& hw);

/// Smallest r <= max_deg with an L'-invariant in S^r(tau_1); also returns its
/// multiplicity through *mult when given.
std::optional<int> first_invariant_degree(const BdsCase& c, int max_deg, BigInt* mult = nullptr);

/// Closed forms for the classical families as printed: SO(2p,r) gives 2p when
/// p <= r, Sp(p,q) gives p when p is even and p <= 2q.
std::optional<int> classical_invariant_degree(const BdsCase& c);

/// True for scans known to take minutes (E7,A7 and E8,D8 at their full degree).
bool is_slow_scan(const BdsCase& c, int max_deg);

InvariantReport relative_invariant_report(const BdsCase& c, int max_deg = kDefaultSearchBound,
                                          bool allow_slow = false);

}  // namespace bds
