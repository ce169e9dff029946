#pragma once

// Root data, Weyl group actions and sub-root-systems.
//
// Conventions used throughout the library:
//   * simple roots are numbered as in Bourbaki;
//   * cartan(i, j) = <psi_i, psi_j^vee>, so row i holds the Dynkin labels of psi_i;
//   * the invariant form is normalized so that long roots have squared length 2,
//     and norm(i) = |psi_i|^2 / 2 (1 for long roots);
//   * weights are integral Dynkin label vectors (bds::Weight), roots are integral
//     simple-root coordinate vectors (bds::RootVec).

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bds/arith.hpp"

namespace bds {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  /// Throws std::invalid_argument for ranks outside the family's range.
  void validate() const;
  std::string name() const;
  /// Parses "E8", "B4", ... (case-insensitive family letter).
  static SimpleType parse(const std::string& text);
  /// dim g computed from the closed formula of the family.
  long dimension() const;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType& a, const SimpleType& b) {
    if (auto c = static_cast<char>(a.family) <=> static_cast<char>(b.family); c != 0) return c;
    return a.rank <=> b.rank;
  }
};

/// Concatenated names, e.g. "A1C3"; "" for the empty list.
std::string type_string(std::span<const SimpleType> types);

using IntMatrix = std::vector<std::vector<int>>;

class RootDatum {
 public:
  static std::shared_ptr<const RootDatum> build(SimpleType t);
  /// Block-diagonal semisimple datum; components keep the given order.
  static std::shared_ptr<const RootDatum> build(const std::vector<SimpleType>& types);
  /// From a Cartan matrix already in block Bourbaki order, with root norms.
  static std::shared_ptr<const RootDatum> from_cartan(IntMatrix cartan, QVec norms,
                                                      std::vector<SimpleType> types);

  int rank() const { return static_cast<int>(cartan_.size()); }
  const std::vector<SimpleType>& types() const { return types_; }
  bool is_simple() const { return types_.size() == 1; }
  std::string type_name() const { return type_string(types_); }

  int cartan(int i, int j) const { return cartan_[i][j]; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  /// |psi_i|^2 / 2.
  const Rational& norm(int i) const { return norms_[i]; }

  /// Positive roots ordered by height, then lexicographically.
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  /// Fundamental weights xi_i expressed in simple-root coordinates.
  const std::vector<QVec>& fundamental_weights() const { return fundamental_; }
  long dimension() const { return rank() + 2 * static_cast<long>(positive_.size()); }

  bool is_root(const RootVec& r) const;
  /// Dynkin labels of an integral combination of simple roots.
  Weight labels_of(const RootVec& r) const;
  /// Simple-root coordinates of a weight (exact rationals).
  QVec to_psi(const Weight& w) const;
  QVec to_psi(const QVec& labels) const;
  /// Coefficients of r^vee in the basis of simple coroots.
  RootVec coroot(const RootVec& r) const;
  /// |r|^2 / 2 for an integral combination r of simple roots.
  Rational half_norm(const RootVec& r) const;
  /// Invariant form between two weights given by labels.
  Rational inner(const Weight& a, const Weight& b) const;
  Rational inner(const QVec& a, const QVec& b) const;
  /// Invariant form between a weight and a root.
  Rational inner_root(const Weight& w, const RootVec& r) const;
  /// <w, r^vee>; integral for integral w.
  int coroot_pairing(const Weight& w, const RootVec& r) const;
  Rational coroot_pairing(const QVec& labels, const RootVec& r) const;

  /// Stable identity for caching ("E8" or "A1xB3:<cartan>").
  const std::string& fingerprint() const { return fingerprint_; }

 private:
  RootDatum() = default;
  void finish();

  std::vector<SimpleType> types_;
  IntMatrix cartan_;
  QVec norms_;
  std::vector<RootVec> positive_;
  std::vector<QVec> fundamental_;
  std::vector<std::vector<Rational>> form_;  // (xi_i, xi_j)
  std::string fingerprint_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

/// Positive roots of the abstract root system with Cartan matrix c, in simple-root
/// coordinates, ordered by height.  Throws if c is not of finite type.
std::vector<RootVec> positive_roots_from_cartan(const IntMatrix& c);

RootVec highest_root(const RootDatum& d);
/// rho = sum of the fundamental weights.
Weight rho(const RootDatum& d);

struct DynkinComponent {
  SimpleType type;
  /// nodes[k] is the input index playing the role of Bourbaki node k+1.
  std::vector<int> nodes;
};

/// Splits a Cartan matrix into connected components, recognizes each one and
/// returns the Bourbaki ordering of its nodes.  Components are sorted by
/// (family, rank, smallest node); when `first` is a valid node its component
/// is moved to the front.  Throws std::invalid_argument when a component is not
/// of finite type.
std::vector<DynkinComponent> classify_dynkin(const IntMatrix& cartan, int first = -1);

struct DominantResult {
  Weight dominant;
  int length = 0;
  bool singular = false;
  int sign() const { return (length % 2 == 0) ? 1 : -1; }
};

/// A reflection subgroup of the ambient Weyl group, generated by a simple system
/// of ambient roots, acting on ambient weights.
///
/// The whole algebra, a Levi factor and the compact subalgebra k all use this
/// type; weights keep their ambient labels so the centre of a Levi factor is
/// tracked exactly.
class EmbeddedDatum {
 public:
  struct PositiveRoot {
    RootVec psi;       // ambient simple-root coordinates
    Weight labels;     // ambient Dynkin labels
    RootVec coroot;    // ambient simple-coroot coordinates
    int coroot_height; // height of the coroot in the local simple coroots
  };

  /// Builds the subsystem with the given simple roots.  The simple roots are
  /// reordered into Bourbaki order, component by component (component containing
  /// `first` leads when given).  Throws std::invalid_argument if the input is not
  /// a simple system.
  EmbeddedDatum(DatumPtr ambient, const std::vector<RootVec>& simple_roots,
                std::optional<RootVec> first = std::nullopt);
  static EmbeddedDatum whole(DatumPtr ambient);

  const RootDatum& ambient() const { return *ambient_; }
  const DatumPtr& ambient_ptr() const { return ambient_; }
  const RootDatum& local() const { return *local_; }
  const DatumPtr& local_ptr() const { return local_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  int ambient_rank() const { return ambient_->rank(); }

  const std::vector<RootVec>& simple_roots() const { return simple_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  const std::vector<DynkinComponent>& components() const { return components_; }
  /// Index of the component containing the local simple root j.
  int component_of(int j) const { return component_of_[j]; }

  /// <x, beta_j^vee> for the local simple root j.
  int pairing(const Weight& x, int j) const;
  /// Labels of x relative to the local simple coroots.
  std::vector<int> local_labels(const Weight& x) const;
  bool is_dominant(const Weight& x) const;
  /// Ambient labels of 2 rho for this subsystem.
  const Weight& two_rho() const { return two_rho_; }

  Weight reflect(const Weight& x, int j) const;
  DominantResult dominant_conjugate(const Weight& x) const;
  /// Dominant conjugate of x + rho, minus rho (the dot action), with the sign of
  /// the Weyl element used and a singularity flag for x + rho.
  DominantResult dot_dominant(const Weight& x) const;
  /// Image of x under the longest element of this reflection group.
  Weight longest_element_image(const Weight& x) const;
  /// Word (local simple indices, rightmost applied first) of the longest element.
  const std::vector<int>& longest_word() const { return w0_word_; }

  /// Weyl dimension polynomial evaluated at x (zero or signed for non-dominant x).
  BigInt weyl_polynomial(const Weight& x) const;
  /// Weyl dimension; throws std::invalid_argument when x is not dominant.
  BigInt weyl_dim(const Weight& x) const;

  const std::string& fingerprint() const { return fingerprint_; }

 private:
  EmbeddedDatum() = default;
  void finish();

  DatumPtr ambient_;
  DatumPtr local_;
  std::vector<RootVec> simple_;
  std::vector<Weight> simple_labels_;
  std::vector<RootVec> simple_coroots_;
  std::vector<PositiveRoot> positive_;
  std::vector<DynkinComponent> components_;
  std::vector<int> component_of_;
  Weight two_rho_;
  std::vector<int> w0_word_;
  std::string fingerprint_;
};

/// Convenience wrappers on the full algebra.
DominantResult dominant_conjugate(const RootDatum& d, const Weight& w);
Weight longest_element_image(const RootDatum& d, const Weight& w);
/// The sub-root-system generated by `simple_set`: its abstract datum and the
/// ambient roots playing the role of its simple roots (Bourbaki order).
std::pair<DatumPtr, std::vector<RootVec>> sub_root_datum(const DatumPtr& d,
                                                         const std::vector<RootVec>& simple_set);

}  // namespace bds
