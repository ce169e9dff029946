#include "bds/spectrum.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "bds/charkernel.hpp"

namespace bds {

namespace {

bool is_positive(const RootVec& r) {
  for (int i = 0; i < r.rank(); ++i)
    if (r[i] < 0) return false;
  return true;
}

RootVec sum_roots(int rank, const std::vector<RootVec>& rs, bool positive_only) {
  RootVec s(rank);
  for (const auto& r : rs)
    if (!positive_only || is_positive(r)) s += r;
  return s;
}

std::string show(const Rational& q) { return to_string(q); }

AffineBound make_bound(const Grading& g, const RootVec& alpha, const Rational& rho_pair) {
  const RootDatum& d = *g.datum;
  const RootVec co = d.coroot(alpha);
  AffineBound b;
  b.nu = g.nu;
  b.coef.resize(d.rank());
  for (int i = 0; i < d.rank(); ++i) b.coef[i] = co[i];
  b.den = co[g.nu - 1];
  b.rho_pair = rho_pair;
  return b;
}

Rational half_pairing(const RootDatum& d, const Weight& two_x, const RootVec& r) {
  return Rational(d.coroot_pairing(two_x, r), 2);
}

std::vector<int> pick(const std::vector<int>& labels, const std::vector<int>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(labels[i]);
  return out;
}

EmbeddedDatum sub_datum(const EmbeddedDatum& k, const std::vector<int>& idx) {
  std::vector<RootVec> s;
  for (int i : idx) s.push_back(k.simple_roots()[i]);
  return EmbeddedDatum(k.ambient_ptr(), s);
}

}  // namespace

RhoParts rho_parts(const Grading& g) {
  const RootDatum& d = *g.datum;
  const int n = d.rank();
  const RootVec l0 = sum_roots(n, g.delta(0), true);
  const RootVec s2 = sum_roots(n, g.delta(2), false);
  const RootVec s1 = sum_roots(n, g.delta(1), false);
  RhoParts r;
  r.two_rho_l = d.labels_of(l0);
  r.two_rho_k = d.labels_of(l0 + s2);
  r.two_rho_k_psi = d.labels_of(l0 - s2);
  r.two_rho_g = d.labels_of(l0 + s1 + s2);
  return r;
}

QVec half_psi(const RootDatum& d, const Weight& two_x) {
  QVec q = d.to_psi(two_x);
  for (auto& x : q) x /= 2;
  return q;
}

Rational AffineBound::evaluate(const Weight& gamma0) const {
  Rational s = rho_pair;
  for (int i = 0; i < static_cast<int>(coef.size()); ++i)
    if (i != nu - 1) s += coef[i] * gamma0[i];
  return -s / den;
}

std::string AffineBound::str() const {
  std::ostringstream terms;
  bool any = false;
  for (int i = 0; i < static_cast<int>(coef.size()); ++i) {
    if (i == nu - 1 || coef[i] == 0) continue;
    if (any) terms << " + ";
    if (coef[i] != 1) terms << coef[i];
    terms << 'n' << (i + 1);
    any = true;
  }
  std::string out;
  if (any) {
    out = den == 1 ? "-(" + terms.str() + ")" : "-(1/" + std::to_string(den) + ")(" + terms.str() + ")";
  }
  const Rational c = -rho_pair / den;
  if (!any) return show(c);
  if (c < 0) out += " - " + show(-c);
  if (c > 0) out += " + " + show(c);
  return out;
}

NegativityReport negativity(const Grading& g, const LeviStructure& lev, const Weight& gamma) {
  const RootDatum& d = *g.datum;
  if (gamma.rank() != d.rank()) throw std::invalid_argument("weight has the wrong number of labels");
  const RhoParts rp = rho_parts(g);
  NegativityReport rep;
  rep.t = gamma[g.nu - 1];
  Weight gamma0 = gamma;
  gamma0[g.nu - 1] = 0;

  const Weight tau1 = tau_weight(g, lev, 1);
  for (const auto& r : g.delta(1))
    if (d.labels_of(r) == tau1) rep.beta = r;

  rep.form_mu = make_bound(g, g.mu, half_pairing(d, rp.two_rho_g, g.mu));
  rep.form_nu = make_bound(g, rep.beta, half_pairing(d, rp.two_rho_g, rep.beta));
  rep.form_k = make_bound(g, g.mu, half_pairing(d, rp.two_rho_k_psi, g.mu));
  rep.form_k_bbw = make_bound(g, g.mu, half_pairing(d, rp.two_rho_k, g.mu));
  rep.t_bound_mu = rep.form_mu.evaluate(gamma0);
  rep.t_bound_nu = rep.form_nu.evaluate(gamma0);
  rep.k_bound_mu = rep.form_k.evaluate(gamma0);
  rep.k_bound_mu_bbw = rep.form_k_bbw.evaluate(gamma0);
  rep.sufficient = rep.t < rep.t_bound_mu && rep.t < rep.t_bound_nu;

  const Weight lam = gamma + rho(d);
  rep.scan_sufficient = true;
  for (int i : {1, 2})
    for (const auto& r : g.delta(i))
      if (d.coroot_pairing(lam, r) >= 0) rep.scan_sufficient = false;
  // <gamma + rho_k, mu^vee> < 0, in doubled form
  rep.k_negative = d.coroot_pairing(2 * gamma + rp.two_rho_k, g.mu) < 0;
  if (rep.sufficient != rep.scan_sufficient)
    throw SpectrumMismatch("two-threshold negativity test disagrees with the exhaustive scan");
  return rep;
}

HcParameter hc_parameter(const Grading& g, const Weight& gamma0, int k) {
  const RootDatum& d = *g.datum;
  if (gamma0[g.nu - 1] != 0) throw std::invalid_argument("gamma_0 must have zero label at nu");
  HcParameter h;
  h.lambda = gamma0 - k * g.nu_star + rho(d);
  h.nonsingular = true;
  for (const auto& r : d.positive_roots())
    if (d.coroot_pairing(h.lambda, r) == 0) h.nonsingular = false;
  return h;
}

std::optional<BbwResult> bbw_on_Y(const LeviStructure& lev, const Weight& phi) {
  DominantResult r = lev.k.dot_dominant(phi);
  if (r.singular) return std::nullopt;
  return BbwResult{r.length, r.dominant};
}

SpectrumContext spectrum_context(const BdsCase& c) {
  auto d = RootDatum::build(c.g);
  Grading g = grade(d, c.nu);
  LeviStructure lev = levi(g);
  EmbeddedDatum k1 = sub_datum(lev.k, lev.k1_simple);
  std::optional<EmbeddedDatum> k2;
  if (!lev.k2_simple.empty()) k2 = sub_datum(lev.k, lev.k2_simple);
  return SpectrumContext{d, std::move(g), std::move(lev), std::move(k1), std::move(k2), c.id};
}

namespace {

struct Row {
  std::vector<KType> ktypes;
  long singular = 0, off_degree = 0;
};

Row spectrum_row(const SpectrumContext& ctx, const OrbitCharacter& v, const OrbitCharacter& sm, int m) {
  const EmbeddedDatum& l = ctx.lev.l;
  Row row;
  std::map<std::pair<int, Weight>, KType> acc;
  for (const auto& [phi, mult] : tensor(l, v, sm).terms) {
    if (mult <= 0) throw SpectrumMismatch("negative multiplicity in E_gamma (x) S^m");
    auto b = bbw_on_Y(ctx.lev, phi);
    if (!b) {
      ++row.singular;
      continue;
    }
    if (b->degree != ctx.g.s) ++row.off_degree;
    auto key = std::make_pair(b->degree, b->hw);
    auto it = acc.find(key);
    if (it == acc.end()) {
      KType t;
      t.m = m;
      t.hw = b->hw;
      const auto labels = ctx.lev.k.local_labels(b->hw);
      t.hw_k1 = pick(labels, ctx.lev.k1_simple);
      t.hw_k2 = pick(labels, ctx.lev.k2_simple);
      t.cohomology_degree = b->degree;
      t.dim = ctx.lev.k.weyl_dim(b->hw);
      t.central_label = central_label(ctx.g, phi);
      it = acc.emplace(key, std::move(t)).first;
    }
    it->second.multiplicity += mult;
  }
  for (auto& [key, t] : acc) row.ktypes.push_back(std::move(t));
  std::sort(row.ktypes.begin(), row.ktypes.end(), [](const KType& a, const KType& b) { return a.hw < b.hw; });
  return row;
}

}  // namespace

SpectrumTable ktype_spectrum_gamma(const SpectrumContext& ctx, const Weight& gamma, int m_max, bool force,
                                   int threads) {
  if (m_max < 0) throw std::invalid_argument("m_max must be nonnegative");
  const EmbeddedDatum& l = ctx.lev.l;
  if (gamma.rank() != ctx.datum->rank()) throw std::invalid_argument("weight has the wrong number of labels");
  if (!l.is_dominant(gamma)) throw std::invalid_argument("gamma is not dominant for l");
  NegativityReport neg = negativity(ctx.g, ctx.lev, gamma);
  if (!neg.sufficient && !force)
    throw InsufficientNegativity("gamma is not sufficiently negative: need t < " + to_string(neg.t_bound_mu) +
                                 " (from mu) and t < " + to_string(neg.t_bound_nu) + " (from w0_l(nu)), got t = " +
                                 to_string(neg.t));

  SpectrumTable tab;
  tab.case_id = ctx.case_id;
  tab.gamma = gamma;
  tab.k = -static_cast<int>(gamma[ctx.g.nu - 1]);
  tab.m_max = m_max;
  tab.forced = !neg.sufficient;

  const OrbitCharacter v = OrbitCharacter::irreducible(l, gamma);
  const OrbitCharacter um = OrbitCharacter::irreducible(l, tau_weight(ctx.g, ctx.lev, -1));
  const std::vector<OrbitCharacter> sm = sym_powers(l, um, m_max);

  std::vector<Row> rows(m_max + 1);
  if (threads <= 1) {
    for (int m = 0; m <= m_max; ++m) rows[m] = spectrum_row(ctx, v, sm[m], m);
  } else {
    for (int start = 0; start <= m_max; start += threads) {
      std::vector<std::future<Row>> fut;
      for (int m = start; m <= std::min(m_max, start + threads - 1); ++m)
        fut.push_back(std::async(std::launch::async, spectrum_row, std::cref(ctx), std::cref(v), std::cref(sm[m]), m));
      for (std::size_t i = 0; i < fut.size(); ++i) rows[start + i] = fut[i].get();
    }
  }
  for (auto& r : rows) {
    tab.singular_count.push_back(r.singular);
    tab.off_degree_count.push_back(r.off_degree);
    for (auto& t : r.ktypes) tab.rows.push_back(std::move(t));
  }
  if (!tab.forced) {
    for (long c : tab.off_degree_count)
      if (c) throw SpectrumMismatch("a constituent landed outside degree s under sufficient negativity");
    const auto m0 = std::count_if(tab.rows.begin(), tab.rows.end(), [](const KType& t) { return t.m == 0; });
    if (m0 != 1 || tab.rows[0].multiplicity != 1)
      throw SpectrumMismatch("the m = 0 row is not a single K-type of multiplicity 1");
  }
  if (!tab.rows.empty() && tab.rows[0].m == 0) tab.lowest = tab.rows[0];
  return tab;
}

SpectrumTable ktype_spectrum(const SpectrumContext& ctx, const Weight& gamma0, int k, int m_max, bool force,
                             int threads) {
  if (gamma0.rank() != ctx.datum->rank()) throw std::invalid_argument("gamma_0 has the wrong number of labels");
  if (gamma0[ctx.g.nu - 1] != 0) throw std::invalid_argument("gamma_0 must have zero label at nu");
  return ktype_spectrum_gamma(ctx, gamma0 - k * ctx.g.nu_star, m_max, force, threads);
}

LowestKType lowest_ktype(const SpectrumContext& ctx, const Weight& gamma, bool force) {
  const RootDatum& d = *ctx.datum;
  SpectrumTable tab = ktype_spectrum_gamma(ctx, gamma, 0, force);
  const Weight lam = gamma + rho(d);
  // standard order: roots positive on lambda
  RootVec two_rho_g(d.rank()), two_rho_k(d.rank());
  for (const auto& r : d.positive_roots()) {
    const int p = d.coroot_pairing(lam, r);
    if (p == 0) throw std::invalid_argument("lambda is singular; no discrete series parameter");
    const RootVec pos = p > 0 ? r : -r;
    two_rho_g += pos;
    const int lv = ctx.g.level(r);
    if (lv == 0 || lv == 2) two_rho_k += pos;
  }
  const Weight two_lambda = 2 * lam + d.labels_of(two_rho_g) - 2 * d.labels_of(two_rho_k);
  Weight big(d.rank());
  for (int i = 0; i < d.rank(); ++i) {
    if (two_lambda[i] % 2) throw SpectrumMismatch("Lambda is not integral");
    big[i] = two_lambda[i] / 2;
  }
  LowestKType out;
  out.lambda_standard = big;
  out.lambda_translated = ctx.lev.k.dominant_conjugate(big).dominant;
  if (tab.rows.empty()) throw SpectrumMismatch("no m = 0 K-type");
  out.ktype = tab.lowest;
  if (out.lambda_translated != out.ktype.hw)
    throw SpectrumMismatch("lowest K-type " + out.ktype.hw.str() + " differs from the Lambda formula " +
                           out.lambda_translated.str());
  if (ctx.lev.k.weyl_dim(out.lambda_translated) != out.ktype.dim) throw SpectrumMismatch("dimension mismatch");
  return out;
}

AdmissibilityReport admissibility_check(const SpectrumContext& ctx, const SpectrumTable& table) {
  AdmissibilityReport rep;
  rep.slope = central_label(ctx.g, tau_weight(ctx.g, ctx.lev, -1));
  std::optional<Rational> c0;
  std::map<std::vector<int>, std::set<int>> levels;
  std::map<std::vector<int>, BigInt> totals;
  for (const auto& t : table.rows) {
    if (t.m == 0 && !c0) c0 = t.central_label;
    if (!c0 || t.central_label != *c0 + rep.slope * t.m) rep.monotone = false;
    levels[t.hw_k1].insert(t.m);
    const BigInt d2 = ctx.k2 ? ctx.k2->weyl_dim(t.hw) : BigInt(1);
    totals[t.hw_k1] += t.multiplicity * d2;
  }
  if (rep.slope >= 0) rep.monotone = false;
  for (const auto& [hw, ms] : levels)
    if (ms.size() > 1) rep.disjoint = false;
  for (auto& [hw, n] : totals) rep.k1_totals.emplace_back(hw, n);
  return rep;
}

std::optional<Weight> quaternionic_gamma(const Grading& g, int k) {
  const Weight mu = g.datum->labels_of(g.mu);
  Weight out(mu.rank());
  for (int i = 0; i < mu.rank(); ++i) {
    if ((k * mu[i]) % 2) return std::nullopt;
    out[i] = -(k * mu[i]) / 2;
  }
  return out;
}

bool is_quaternionic(const LeviStructure& lev) {
  return lev.k1_types.size() == 1 && lev.k1_types[0] == SimpleType{Family::A, 1};
}

}  // namespace bds
