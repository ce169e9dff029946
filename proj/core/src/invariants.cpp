#include "bds/invariants.hpp"

namespace bds {

namespace {

struct Tau1 {
  DatumPtr datum;
  Grading g;
  LeviStructure lev;
  OrbitCharacter chr;
};

Tau1 tau1_of(const BdsCase& c) {
  auto d = RootDatum::build(c.g);
  Grading g = grade(d, c.nu);
  LeviStructure lev = levi(g);
  OrbitCharacter chr = OrbitCharacter::irreducible(lev.l, c.tau1_hw);
  return {d, std::move(g), std::move(lev), std::move(chr)};
}

}  // namespace

std::string to_string(Bilinear b) {
  switch (b) {
    case Bilinear::Symmetric:
      return "symmetric";
    case Bilinear::Antisymmetric:
      return "antisymmetric";
    default:
      return "none";
  }
}

bool is_self_dual(const EmbeddedDatum& l, const Weight& hw) {
  return l.local_labels(-l.longest_element_image(hw)) == l.local_labels(hw);
}

Bilinear bilinear_type(const EmbeddedDatum& l, const Weight& hw) {
  OrbitCharacter c = OrbitCharacter::irreducible(l, hw);
  const BigInt s = trivial_multiplicity(l, sym_power(l, c, 2));
  const BigInt a = trivial_multiplicity(l, alt_power(l, c, 2));
  if (s > 0 && a > 0) throw InvariantMismatch("both S^2 and Lambda^2 contain the trivial module");
  if (s > 0) return Bilinear::Symmetric;
  if (a > 0) return Bilinear::Antisymmetric;
  return Bilinear::None;
}

std::optional<int> first_invariant_degree(const BdsCase& c, int max_deg, BigInt* mult) {
  if (max_deg < 2) throw std::invalid_argument("max degree must be at least 2");
  Tau1 t = tau1_of(c);
  // powers are built incrementally so that an early hit stops the scan
  for (int r = 1; r <= max_deg; ++r) {
    const BigInt m = trivial_multiplicity(t.lev.l, sym_power(t.lev.l, t.chr, r));
    if (m > 0) {
      if (mult) *mult = m;
      return r;
    }
  }
  if (mult) *mult = 0;
  return std::nullopt;
}

std::optional<int> classical_invariant_degree(const BdsCase& c) {
  switch (c.g.family) {
    case Family::B:
    case Family::D:
      if (c.p <= c.q) return 2 * c.p;
      return std::nullopt;
    case Family::C:
      if (c.p % 2 == 0 && c.p <= 2 * c.q) return c.p;
      return std::nullopt;
    default:
      throw std::invalid_argument("no closed form for exceptional case " + c.id);
  }
}

bool is_slow_scan(const BdsCase& c, int max_deg) {
  return (c.id == "E7_A7" && max_deg >= 7) || (c.id == "E8_D8" && max_deg >= 7);
}

InvariantReport relative_invariant_report(const BdsCase& c, int max_deg, bool allow_slow) {
  if (is_slow_scan(c, max_deg) && !allow_slow)
    throw SlowScanGated(c.id + " at degree " + std::to_string(max_deg) + " is a slow scan; pass --allow-slow");
  InvariantReport rep;
  rep.case_id = c.id;
  rep.deg_tau1 = c.deg_tau1;
  rep.search_bound = max_deg;
  Tau1 t = tau1_of(c);
  rep.self_dual = is_self_dual(t.lev.l, c.tau1_hw);
  rep.bilinear = bilinear_type(t.lev.l, c.tau1_hw);
  if (rep.bilinear != Bilinear::None && !rep.self_dual)
    throw InvariantMismatch(c.id + ": bilinear invariant on a module that is not self-dual");
  rep.invariant_degree = first_invariant_degree(c, max_deg, &rep.first_multiplicity);
  if ((rep.invariant_degree == 2) != (rep.bilinear == Bilinear::Symmetric))
    throw InvariantMismatch(c.id + ": degree-2 invariant and symmetric form disagree");
  if (!c.exceptional) {
    rep.closed_form = classical_invariant_degree(c);
    // comparable when the closed form lies inside the scanned range or is none
    if (!rep.closed_form || *rep.closed_form <= max_deg) {
      rep.closed_form_checked = true;
      if (rep.closed_form != rep.invariant_degree) {
        auto show = [](const std::optional<int>& d) { return d ? std::to_string(*d) : std::string("none"); };
        throw InvariantMismatch(c.id + ": plethysm scan gives " + show(rep.invariant_degree) +
                                " but the closed form gives " + show(rep.closed_form));
      }
    }
  }
  return rep;
}

}  // namespace bds
