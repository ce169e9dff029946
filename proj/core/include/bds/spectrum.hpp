#pragma once

// Negativity thresholds, Bott-Borel-Weil on Y = K_1/L_1 and the K-type spectrum
// of the Borel-de Siebenthal discrete series.
//
// All K-types are dominant for the fixed positive system Delta_0^+ u Delta_2 of k.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bds/bdscore.hpp"

namespace bds {

/// Raised when a spectrum is requested for a k that is not sufficiently positive.
class InsufficientNegativity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A consistency check between two independent computations failed.
class SpectrumMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Doubled half-sums (ambient labels), so everything stays integral.
struct RhoParts {
  Weight two_rho_g;      // Delta^+
  Weight two_rho_k;      // Delta_0^+ u Delta_2
  Weight two_rho_l;      // Delta_0^+
  Weight two_rho_k_psi;  // Delta_0^+ u Delta_-2 (simple system Psi minus nu plus -mu)
};
RhoParts rho_parts(const Grading& g);
/// psi-coordinates of x / 2 for a doubled weight x.
QVec half_psi(const RootDatum& d, const Weight& two_x);

/// The bound t < -(sum_i coef_i n_i + rho_pair) / den on t, where the n_i are
/// the labels of gamma_0 and alpha is the root the bound comes from.
struct AffineBound {
  int nu = 0;              // 1-based index of the central variable (skipped)
  std::vector<int> coef;   // <xi_i, alpha^vee>
  int den = 1;             // <nu*, alpha^vee>
  Rational rho_pair = 0;   // <rho, alpha^vee>

  Rational evaluate(const Weight& gamma0) const;
  /// e.g. "-(1/2)(3n2 + 4n3 + 6n4) - 29/2"
  std::string str() const;
};

struct NegativityReport {
  Rational t;
  Rational t_bound_mu, t_bound_nu;
  /// k-level bound with rho over Delta_0^+ u Delta_-2 (the simple system Psi_k).
  Rational k_bound_mu;
  /// k-level bound with rho over Delta_0^+ u Delta_2 (the BBW positive system).
  Rational k_bound_mu_bbw;
  AffineBound form_mu, form_nu, form_k, form_k_bbw;
  bool sufficient = false;       // t below both bounds
  bool scan_sufficient = false;  // every alpha in Delta_1 u Delta_2 pairs negatively
  bool k_negative = false;       // <gamma + rho_k, mu^vee> < 0, rho_k over Delta_0^+ u Delta_2
  RootVec beta;                  // highest root of Delta_1, w0_l(nu)
};

/// gamma must have integral labels and be l-dominant away from nu.
NegativityReport negativity(const Grading& g, const LeviStructure& lev, const Weight& gamma);

struct HcParameter {
  Weight lambda;  // gamma_0 - k nu* + rho_g
  bool nonsingular = false;
};
HcParameter hc_parameter(const Grading& g, const Weight& gamma0, int k);

struct BbwResult {
  int degree = 0;
  Weight hw;  // k-dominant, ambient labels
};
/// Bott-Borel-Weil on Y for an l-dominant integral phi; none when phi + rho_k is singular.
std::optional<BbwResult> bbw_on_Y(const LeviStructure& lev, const Weight& phi);

struct KType {
  int m = 0;
  Weight hw;                     // ambient labels, dominant for Delta_0^+ u Delta_2
  std::vector<int> hw_k1, hw_k2;  // local labels on k1 and k2
  BigInt multiplicity = 0;
  int cohomology_degree = 0;
  BigInt dim = 0;
  Rational central_label;  // psi_nu coordinate of the l-constituent
};

struct SpectrumTable {
  std::string case_id;
  Weight gamma;  // gamma_k
  int k = 0;
  int m_max = 0;
  bool forced = false;  // sufficiency gate bypassed
  std::vector<KType> rows;  // sorted by m, then hw
  KType lowest;
  /// Constituents at each m that have no cohomology (singular) or land off degree s.
  std::vector<long> singular_count, off_degree_count;
};

/// Local label helper data for a case.
struct SpectrumContext {
  DatumPtr datum;
  Grading g;
  LeviStructure lev;
  EmbeddedDatum k1;
  std::optional<EmbeddedDatum> k2;  // empty when k2 = 0
  std::string case_id;
};
SpectrumContext spectrum_context(const BdsCase& c);

/// Spectrum for an arbitrary l-dominant gamma (integral).  Throws
/// InsufficientNegativity unless force is set.  threads > 1 computes the m-rows
/// concurrently.
SpectrumTable ktype_spectrum_gamma(const SpectrumContext& ctx, const Weight& gamma, int m_max, bool force = false,
                                   int threads = 1);
/// gamma_k = gamma_0 - k nu*.
SpectrumTable ktype_spectrum(const SpectrumContext& ctx, const Weight& gamma0, int k, int m_max, bool force = false,
                             int threads = 1);

struct LowestKType {
  KType ktype;
  /// Lambda = lambda + rho'_g - 2 rho'_k in the order defined by lambda = gamma + rho_g.
  Weight lambda_standard;
  Weight lambda_translated;  // its dominant conjugate for Delta_0^+ u Delta_2
};
/// The m = 0 entry, cross-checked against the Lambda formula; SpectrumMismatch on disagreement.
LowestKType lowest_ktype(const SpectrumContext& ctx, const Weight& gamma, bool force = false);

struct AdmissibilityReport {
  bool monotone = true;  // central label strictly decreasing in m with slope -1
  bool disjoint = true;  // K_1-types at different m never coincide
  Rational slope;        // central label of u_-1
  /// (k1 labels, total K_1-multiplicity up to m_max), sorted.
  std::vector<std::pair<std::vector<int>, BigInt>> k1_totals;
};
AdmissibilityReport admissibility_check(const SpectrumContext& ctx, const SpectrumTable& table);

/// The quaternionic parametrization gamma = -(k/2) mu; none when not integral.
std::optional<Weight> quaternionic_gamma(const Grading& g, int k);
bool is_quaternionic(const LeviStructure& lev);

}  // namespace bds
