#include "bds/bdscore.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bds {

namespace {

RootVec unit(int rank, int i) {
  RootVec e(rank);
  e[i] = 1;
  return e;
}

int height(const RootVec& r) {
  int h = 0;
  for (int i = 0; i < r.rank(); ++i) h += r[i];
  return h;
}

struct ExceptionalEntry {
  const char* id;
  const char* real_form;
  SimpleType g;
  int nu;
};

const std::vector<ExceptionalEntry>& exceptional_table() {
  static const std::vector<ExceptionalEntry> t{
      {"G2_A1A1", "G2,A1A1", {Family::G, 2}, 2},       {"F4_A1C3", "F4,A1C3", {Family::F, 4}, 1},
      {"F4_B4", "F4,B4", {Family::F, 4}, 4},           {"E6_A1A5_1", "E6,A1A5,1", {Family::E, 6}, 3},
      {"E6_A1A5_2", "E6,A1A5,2", {Family::E, 6}, 2},   {"E7_A1D6_1", "E7,A1D6,1", {Family::E, 7}, 1},
      {"E7_A1D6_2", "E7,A1D6,2", {Family::E, 7}, 6},   {"E7_A7", "E7,A7", {Family::E, 7}, 2},
      {"E8_D8", "E8,D8", {Family::E, 8}, 1},           {"E8_A1E7", "E8,A1E7", {Family::E, 8}, 8},
  };
  return t;
}

// E6 diagram automorphism on 1-based nodes
int e6_flip(int i) {
  static const int f[] = {0, 6, 2, 5, 4, 3, 1};
  return f[i];
}

std::string names(const std::vector<SimpleType>& ts) {
  return type_string(std::span<const SimpleType>(ts.data(), ts.size()));
}

}  // namespace

RootVec Grading::nu_root() const { return unit(datum->rank(), nu - 1); }

std::string LeviStructure::l_name() const { return "T1" + names(l_types); }
std::string LeviStructure::k1_name() const { return names(k1_types); }
std::string LeviStructure::k2_name() const { return k2_types.empty() ? "-" : names(k2_types); }

std::vector<int> admissible_nus(const RootDatum& d) {
  if (!d.is_simple()) throw std::invalid_argument("admissible_nus needs a simple datum");
  const RootVec mu = highest_root(d);
  const bool e6 = d.types()[0] == SimpleType{Family::E, 6};
  std::vector<int> out;
  for (int i = 1; i <= d.rank(); ++i) {
    if (mu[i - 1] != 2) continue;
    if (e6 && e6_flip(i) < i) continue;
    out.push_back(i);
  }
  return out;
}

Grading grade(const DatumPtr& d, int nu) {
  if (!d->is_simple()) throw std::invalid_argument("grading needs a simple datum");
  if (nu < 1 || nu > d->rank()) throw std::invalid_argument("nu index out of range");
  Grading g;
  g.datum = d;
  g.nu = nu;
  g.mu = highest_root(*d);
  const int c = g.mu[nu - 1];
  if (c == 1)
    throw HermitianCaseExcluded("coefficient of psi_" + std::to_string(nu) + " in the maximal root of " +
                                d->type_name() + " is 1 (hermitian case)");
  if (c >= 3)
    throw NotBorelDeSiebenthal("coefficient of psi_" + std::to_string(nu) + " in the maximal root of " +
                               d->type_name() + " is " + std::to_string(c));
  for (const auto& r : d->positive_roots()) {
    const int lv = r[nu - 1];
    g.parts[lv + 2].push_back(r);
    if (lv > 0) g.parts[2 - lv].push_back(-r);
  }
  // negative roots of Delta_0
  for (const auto& r : d->positive_roots())
    if (r[nu - 1] == 0) g.parts[2].push_back(-r);
  g.nu_star = Weight(d->rank());
  g.nu_star[nu - 1] = 1;
  g.s = static_cast<int>(g.delta(2).size());
  return g;
}

LeviStructure levi(const Grading& g) {
  const int n = g.datum->rank();
  std::vector<RootVec> ls;
  for (int i = 0; i < n; ++i)
    if (i != g.nu - 1) ls.push_back(unit(n, i));
  RootVec beta0 = *std::min_element(g.delta(2).begin(), g.delta(2).end(),
                                    [](const RootVec& a, const RootVec& b) { return height(a) < height(b); });
  std::vector<RootVec> ks = ls, kp = ls;
  ks.push_back(beta0);
  kp.push_back(-g.mu);
  LeviStructure lev{EmbeddedDatum(g.datum, ls), EmbeddedDatum(g.datum, ks, beta0), EmbeddedDatum(g.datum, kp, -g.mu),
                    beta0, g.nu_star, {}, {}, {}, {}, {}};
  for (const auto& c : lev.l.components()) lev.l_types.push_back(c.type);
  const auto& kc = lev.k.components();
  lev.k1_types.push_back(kc[0].type);
  lev.k1_simple = kc[0].nodes;
  for (std::size_t i = 1; i < kc.size(); ++i) {
    lev.k2_types.push_back(kc[i].type);
    lev.k2_simple.insert(lev.k2_simple.end(), kc[i].nodes.begin(), kc[i].nodes.end());
  }
  return lev;
}

Weight tau_weight(const Grading& g, const LeviStructure& lev, int i) {
  if (i == 0 || i < -2 || i > 2) throw std::invalid_argument("tau index must be in {-2,-1,1,2}");
  // the highest root of Delta_i: no l-simple root can be added inside Delta_i
  std::set<RootVec> level(g.delta(i).begin(), g.delta(i).end());
  std::optional<Weight> found;
  for (const auto& r : g.delta(i)) {
    bool top = true;
    for (const auto& a : lev.l.simple_roots())
      if (level.count(r + a)) top = false;
    if (!top) continue;
    if (found) throw std::logic_error("u_i is not l-irreducible");
    found = g.datum->labels_of(r);
  }
  if (!found) throw std::logic_error("no l-dominant root in Delta_i");
  return *found;
}

OrbitCharacter u_character(const Grading& g, const LeviStructure& lev, int i) {
  return OrbitCharacter::irreducible(lev.l, tau_weight(g, lev, i));
}

WeightMultiset delta_weights(const Grading& g, int i) {
  WeightMultiset out;
  for (const auto& r : g.delta(i)) out.entries.emplace_back(g.datum->labels_of(r), BigInt(1));
  std::sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Weight dual_hw(const LeviStructure& lev, const Weight& hw) { return -lev.l.longest_element_image(hw); }

std::pair<Weight, Rational> decompose_gamma(const Grading& g, const Weight& gamma) {
  Weight g0 = gamma;
  g0[g.nu - 1] = 0;
  return {g0, Rational(gamma[g.nu - 1])};
}

Rational central_label(const Grading& g, const Weight& x) { return g.datum->to_psi(x)[g.nu - 1]; }

// ---- case atlas ---------------------------------------------------------

std::string case_id(SimpleType g, int nu) {
  for (const auto& e : exceptional_table())
    if (e.g == g && e.nu == nu) return e.id;
  if (g == SimpleType{Family::E, 6} && nu == 5) return "E6_A1A5_1";
  const int l = g.rank, p = nu;
  switch (g.family) {
    case Family::B:
      if (p >= 2 && p <= l) return "Spin_" + std::to_string(2 * p) + "_" + std::to_string(2 * l - 2 * p + 1);
      break;
    case Family::C:
      if (p >= 1 && p < l) return "Sp_" + std::to_string(p) + "_" + std::to_string(l - p);
      break;
    case Family::D:
      if (l == 4 && p == 2) return "SO_4_4";
      if (p >= 2 && p <= l - 2) return "Spin_" + std::to_string(2 * p) + "_" + std::to_string(2 * l - 2 * p);
      break;
    default:
      break;
  }
  throw std::invalid_argument("not a Borel-de Siebenthal pair: " + g.name() + " with nu = psi_" + std::to_string(nu));
}

std::pair<SimpleType, int> parse_case_id(const std::string& raw) {
  if (auto colon = raw.find(':'); colon != std::string::npos) {
    SimpleType t = SimpleType::parse(raw.substr(0, colon));
    std::vector<int> v = parse_int_list(raw.substr(colon + 1));
    if (v.size() != 1) throw std::invalid_argument("bad case id: '" + raw + "'");
    return {t, v[0]};
  }
  std::string s;
  for (char c : raw) {
    const char d = (c == ',' || c == '(' || c == ')' || c == ' ') ? '_' : c;
    if (d == '_' && (s.empty() || s.back() == '_')) continue;
    s.push_back(d);
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  for (const auto& e : exceptional_table())
    if (s == e.id) return {e.g, e.nu};

  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, '_');) parts.push_back(tok);
  auto num = [&](const std::string& t) {
    std::vector<int> v = parse_int_list(t);
    if (v.size() != 1 || v[0] < 1) throw std::invalid_argument("bad case id: '" + raw + "'");
    return v[0];
  };
  if (parts.size() == 3 && (parts[0] == "Spin" || parts[0] == "SO")) {
    const int a = num(parts[1]), r = num(parts[2]);
    if (a % 2) throw std::invalid_argument("bad case id: '" + raw + "' (first index must be even)");
    const int p = a / 2;
    if (r % 2) return {SimpleType{Family::B, p + (r - 1) / 2}, p};
    return {SimpleType{Family::D, p + r / 2}, p};
  }
  if (parts.size() == 3 && parts[0] == "Sp") {
    const int p = num(parts[1]), q = num(parts[2]);
    return {SimpleType{Family::C, p + q}, p};
  }
  throw std::invalid_argument("unknown case id: '" + raw + "'");
}

BdsCase make_case(SimpleType t, int nu) {
  t.validate();
  auto d = RootDatum::build(t);
  Grading g = grade(d, nu);
  LeviStructure lev = levi(g);
  BdsCase c;
  c.id = case_id(t, nu);
  c.g = t;
  c.nu = nu;
  const int l = t.rank;
  switch (t.family) {
    case Family::B:
      c.p = nu;
      c.q = 2 * l - 2 * nu + 1;
      c.real_form = "Spin(" + std::to_string(2 * c.p) + "," + std::to_string(c.q) + ")";
      break;
    case Family::C:
      c.p = nu;
      c.q = l - nu;
      c.real_form = "Sp(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
      break;
    case Family::D:
      c.p = nu;
      c.q = 2 * l - 2 * nu;
      c.real_form = (c.id == "SO_4_4" ? "SO(" : "Spin(") + std::to_string(2 * c.p) + "," + std::to_string(c.q) + ")";
      break;
    default:
      c.exceptional = true;
      for (const auto& e : exceptional_table())
        if (e.id == c.id) c.real_form = e.real_form;
      break;
  }
  c.k1_type = lev.k1_name();
  c.k2_type = lev.k2_name();
  c.l_type = lev.l_name();
  c.dim_u1 = static_cast<long>(g.delta(1).size());
  c.dim_u2 = static_cast<long>(g.delta(2).size());
  c.tau1_hw = tau_weight(g, lev, 1);
  c.tau2_hw = tau_weight(g, lev, 2);
  c.deg_tau1 = lev.l.weyl_dim(c.tau1_hw);
  c.s = g.s;
  return c;
}

std::vector<BdsCase> enumerate_cases(int max_classical_rank) {
  if (max_classical_rank < 4) throw std::invalid_argument("max classical rank must be at least 4");
  if (max_classical_rank > kMaxRank) throw std::invalid_argument("max classical rank too large");
  std::vector<BdsCase> out;
  for (const auto& e : exceptional_table()) out.push_back(make_case(e.g, e.nu));
  for (Family f : {Family::B, Family::C, Family::D}) {
    const int lo = f == Family::B ? 2 : f == Family::C ? 3 : 4;
    for (int l = lo; l <= max_classical_rank; ++l) {
      SimpleType t{f, l};
      for (int nu : admissible_nus(*RootDatum::build(t))) out.push_back(make_case(t, nu));
    }
  }
  return out;
}

}  // namespace bds
