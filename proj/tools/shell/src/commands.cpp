#include "bds/shell/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "bds/charkernel.hpp"
#include "bds/invariants.hpp"
#include "bds/shell/golden.hpp"
#include "bds/spectrum.hpp"

namespace bds::shell {

using json = nlohmann::ordered_json;

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string labels(const Weight& w) { return join_ints(w.to_vector()); }

// Integers beyond 2^53 go out as strings so no JSON reader loses digits.
json big_json(const BigInt& x) {
  static const BigInt limit = BigInt(1) << 53;
  if (x < limit && x > -limit) return static_cast<long long>(x);
  return to_string(x);
}

std::string tsv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += '\t';
    s += cells[i];
  }
  return s + '\n';
}

std::string dump(const json& j) { return j.dump(2) + '\n'; }

std::string yn(bool b) { return b ? "y" : "n"; }

std::string bilinear_short(Bilinear b) {
  switch (b) {
    case Bilinear::Symmetric:
      return "sym";
    case Bilinear::Antisymmetric:
      return "anti";
    default:
      return "none";
  }
}

std::string degree_str(const std::optional<int>& d) { return d ? std::to_string(*d) : "none"; }

Weight parse_weight(const std::string& text, int rank, const char* what) {
  std::vector<int> v = parse_int_list(text);
  if (static_cast<int>(v.size()) != rank)
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(rank) + " labels, got " +
                                std::to_string(v.size()));
  return Weight::from(v);
}

BdsCase case_by_id(const std::string& id) {
  auto [t, nu] = parse_case_id(id);
  return make_case(t, nu);
}

int rank_of_type(const std::string& g_type) { return SimpleType::parse(g_type).rank; }

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "tsv") return Format::Tsv;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + s + "' (expected tsv or json)");
}

int threads_from_env() {
  const char* v = std::getenv("BDS_THREADS");
  if (!v || !*v) return 1;
  try {
    const int n = std::stoi(v);
    return n > 0 ? n : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

// ---------------------------------------------------------------- case atlas

json case_to_json(const BdsCase& c) {
  json j;
  j["id"] = c.id;
  j["family"] = std::string(1, static_cast<char>(c.g.family));
  j["rank"] = c.g.rank;
  j["nu"] = c.nu;
  if (!c.exceptional) {
    j["p"] = c.p;
    j["q"] = c.q;
  }
  j["real_form"] = c.real_form;
  j["exceptional"] = c.exceptional;
  j["g_type"] = c.g.name();
  j["k1_type"] = c.k1_type;
  j["k2_type"] = c.k2_type;
  j["l_type"] = c.l_type;
  j["dim_u1"] = c.dim_u1;
  j["dim_u2"] = c.dim_u2;
  j["s"] = c.s;
  j["deg_tau1"] = big_json(c.deg_tau1);
  j["tau1_hw"] = c.tau1_hw.to_vector();
  j["tau2_hw"] = c.tau2_hw.to_vector();
  return j;
}

BdsCase case_from_json(const json& j) {
  try {
    const std::string fam = j.at("family").get<std::string>();
    if (fam.size() != 1) throw std::invalid_argument("bad family");
    SimpleType t = SimpleType::parse(fam + std::to_string(j.at("rank").get<int>()));
    BdsCase c = make_case(t, j.at("nu").get<int>());
    if (case_to_json(c) != j) throw std::invalid_argument("case descriptor fields disagree with the recomputed case");
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed case descriptor: ") + e.what());
  }
}

namespace {

std::map<std::string, std::string> structural_cells(const BdsCase& c) {
  return {{"g_type", c.g.name()},
          {"nu", std::to_string(c.nu)},
          {"k1_type", c.k1_type},
          {"k2_type", c.k2_type},
          {"l_type", c.l_type},
          {"dim_u1", std::to_string(c.dim_u1)},
          {"dim_u2", std::to_string(c.dim_u2)},
          {"s", std::to_string(c.s)},
          {"deg_tau1", to_string(c.deg_tau1)}};
}

struct Mismatch {
  std::string id, column, golden, computed;
};

struct Skip {
  std::string id, column, reason;
};

CommandResult verify_cases(const CasesOptions& o) {
  const auto& golden = embedded_golden();
  auto is_exceptional = [](const GoldenRow& r) { return std::string("EFG").find(r.at("g_type")[0]) != std::string::npos; };
  int corpus_rank = 0;
  for (const auto& r : golden)
    if (!is_exceptional(r)) corpus_rank = std::max(corpus_rank, rank_of_type(r.at("g_type")));
  const int rank_limit = std::min(o.max_rank, corpus_rank);

  std::vector<BdsCase> cases = enumerate_cases(std::max(4, rank_limit));
  std::map<std::string, const BdsCase*> by_id;
  for (const auto& c : cases)
    if (c.exceptional || c.g.rank <= rank_limit) by_id[c.id] = &c;

  std::vector<Mismatch> bad;
  std::vector<Skip> skipped;
  long rows = 0, cells = 0;
  std::set<std::string> seen;
  for (const auto& r : golden) {
    const bool exceptional = is_exceptional(r);
    if (!exceptional && rank_of_type(r.at("g_type")) > rank_limit) continue;
    ++rows;
    seen.insert(r.id());
    auto it = by_id.find(r.id());
    if (it == by_id.end()) {
      bad.push_back({r.id(), "case_id", r.id(), "(not produced)"});
      continue;
    }
    const BdsCase& c = *it->second;
    const auto mine = structural_cells(c);
    for (const auto& col : kStructuralColumns) {
      if (!r.has(col)) continue;
      ++cells;
      if (mine.at(col) != r.at(col)) bad.push_back({r.id(), col, r.at(col), mine.at(col)});
    }
    if (!o.invariants) continue;
    if (exceptional) {
      const LeviStructure lev = levi(grade(RootDatum::build(c.g), c.nu));
      const bool sd = is_self_dual(lev.l, c.tau1_hw);
      const Bilinear bil = bilinear_type(lev.l, c.tau1_hw);
      if (r.has("self_dual")) {
        ++cells;
        if (yn(sd) != r.at("self_dual")) bad.push_back({r.id(), "self_dual", r.at("self_dual"), yn(sd)});
      }
      if (r.has("bilinear")) {
        ++cells;
        if (bilinear_short(bil) != r.at("bilinear"))
          bad.push_back({r.id(), "bilinear", r.at("bilinear"), bilinear_short(bil)});
      }
    }
    if (r.has("inv_degree")) {
      const std::string& want = r.at("inv_degree");
      if (want != "none" && std::stoi(want) > kDefaultSearchBound) {
        skipped.push_back({r.id(), "inv_degree", "beyond search bound " + std::to_string(kDefaultSearchBound)});
        continue;
      }
      if (is_slow_scan(c, kDefaultSearchBound) && !o.allow_slow) {
        skipped.push_back({r.id(), "inv_degree", "slow scan (pass --allow-slow)"});
        continue;
      }
      ++cells;
      const std::string got = degree_str(first_invariant_degree(c, kDefaultSearchBound));
      if (got != want) bad.push_back({r.id(), "inv_degree", want, got});
    }
  }
  for (const auto& [id, c] : by_id)
    if (!seen.count(id)) bad.push_back({id, "case_id", "(not in corpus)", id});

  CommandResult res;
  res.code = bad.empty() ? kOk : kMismatch;
  if (o.format == Format::Json) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "verify";
    j["max_rank"] = rank_limit;
    j["rows"] = rows;
    j["cells"] = cells;
    j["ok"] = bad.empty();
    j["mismatches"] = json::array();
    for (const auto& m : bad)
      j["mismatches"].push_back({{"case_id", m.id}, {"column", m.column}, {"golden", m.golden}, {"computed", m.computed}});
    j["skipped"] = json::array();
    for (const auto& s : skipped)
      j["skipped"].push_back({{"case_id", s.id}, {"column", s.column}, {"reason", s.reason}});
    res.out = dump(j);
  } else {
    std::string out = tsv_line({"status", "case_id", "column", "golden", "computed"});
    for (const auto& m : bad) out += tsv_line({"MISMATCH", m.id, m.column, m.golden, m.computed});
    for (const auto& s : skipped) out += tsv_line({"SKIPPED", s.id, s.column, "-", s.reason});
    out += "# rows=" + std::to_string(rows) + " cells=" + std::to_string(cells) +
           " mismatches=" + std::to_string(bad.size()) + " skipped=" + std::to_string(skipped.size()) + '\n';
    res.out = out;
  }
  if (!bad.empty()) res.err = "golden corpus mismatch: " + std::to_string(bad.size()) + " cell(s)\n";
  return res;
}

}  // namespace

CommandResult cmd_cases(const CasesOptions& o) {
  if (o.max_rank < 2 || o.max_rank > kMaxRank)
    throw std::invalid_argument("--max-rank must lie in [2, " + std::to_string(kMaxRank) + "]");
  if (o.verify) return verify_cases(o);
  std::vector<BdsCase> cases = enumerate_cases(std::max(4, o.max_rank));
  cases.erase(std::remove_if(cases.begin(), cases.end(),
                             [&](const BdsCase& c) { return !c.exceptional && c.g.rank > o.max_rank; }),
              cases.end());
  CommandResult res;
  if (o.format == Format::Json) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "cases";
    j["max_rank"] = o.max_rank;
    j["cases"] = json::array();
    for (const auto& c : cases) j["cases"].push_back(case_to_json(c));
    res.out = dump(j);
    return res;
  }
  res.out = tsv_line({"case_id", "real_form", "g_type", "nu", "k1_type", "k2_type", "l_type", "dim_u1", "dim_u2", "s",
                      "deg_tau1", "tau1_labels", "tau2_labels"});
  for (const auto& c : cases)
    res.out += tsv_line({c.id, c.real_form, c.g.name(), std::to_string(c.nu), c.k1_type, c.k2_type, c.l_type,
                         std::to_string(c.dim_u1), std::to_string(c.dim_u2), std::to_string(c.s), to_string(c.deg_tau1),
                         labels(c.tau1_hw), labels(c.tau2_hw)});
  return res;
}

CommandResult cmd_case(const std::string& id, Format f) {
  const BdsCase c = case_by_id(id);
  json cj = case_to_json(c);
  CommandResult res;
  if (f == Format::Json) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "case";
    j["case"] = cj;
    res.out = dump(j);
    return res;
  }
  res.out = tsv_line({"field", "value"});
  for (const auto& [k, v] : cj.items()) {
    std::string val;
    if (v.is_string())
      val = v.get<std::string>();
    else if (v.is_array())
      val = join_ints(v.get<std::vector<int>>());
    else if (v.is_boolean())
      val = v.get<bool>() ? "true" : "false";
    else
      val = v.dump();
    res.out += tsv_line({k, val});
  }
  return res;
}

// ---------------------------------------------------------------- invariants

CommandResult cmd_invariants(const InvariantsOptions& o) {
  if (o.max_degree < 2) throw std::invalid_argument("--max-degree must be at least 2");
  std::vector<BdsCase> cases;
  if (o.id) {
    cases.push_back(case_by_id(*o.id));
  } else {
    for (auto& c : enumerate_cases(4))
      if (c.exceptional) cases.push_back(std::move(c));
  }
  struct Line {
    InvariantReport rep;
    bool gated = false;
  };
  std::vector<Line> lines;
  for (const auto& c : cases) {
    Line ln;
    if (!o.id && is_slow_scan(c, o.max_degree) && !o.allow_slow) {
      // list mode keeps going; the cheap columns are still filled in
      const LeviStructure lev = levi(grade(RootDatum::build(c.g), c.nu));
      ln.rep.case_id = c.id;
      ln.rep.deg_tau1 = c.deg_tau1;
      ln.rep.self_dual = is_self_dual(lev.l, c.tau1_hw);
      ln.rep.bilinear = bilinear_type(lev.l, c.tau1_hw);
      ln.rep.search_bound = o.max_degree;
      ln.gated = true;
    } else {
      ln.rep = relative_invariant_report(c, o.max_degree, o.allow_slow);
    }
    lines.push_back(std::move(ln));
  }
  CommandResult res;
  if (o.format == Format::Json) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "invariants";
    j["rows"] = json::array();
    for (const auto& ln : lines) {
      const auto& r = ln.rep;
      json row;
      row["case_id"] = r.case_id;
      row["deg_tau1"] = big_json(r.deg_tau1);
      row["self_dual"] = r.self_dual;
      row["bilinear"] = bilinear_short(r.bilinear);
      if (ln.gated)
        row["inv_degree"] = "gated";
      else if (r.invariant_degree)
        row["inv_degree"] = *r.invariant_degree;
      else
        row["inv_degree"] = nullptr;
      row["search_bound"] = r.search_bound;
      row["first_multiplicity"] = big_json(r.first_multiplicity);
      if (r.closed_form_checked || r.closed_form) row["closed_form"] = degree_str(r.closed_form);
      j["rows"].push_back(row);
    }
    res.out = dump(j);
    return res;
  }
  res.out = tsv_line({"case_id", "deg_tau1", "self_dual", "bilinear", "inv_degree", "search_bound",
                      "first_multiplicity", "closed_form"});
  for (const auto& ln : lines) {
    const auto& r = ln.rep;
    const std::string cf = (r.closed_form_checked || r.closed_form) ? degree_str(r.closed_form) : "-";
    res.out += tsv_line({r.case_id, to_string(r.deg_tau1), yn(r.self_dual), bilinear_short(r.bilinear),
                         ln.gated ? "gated" : degree_str(r.invariant_degree), std::to_string(r.search_bound),
                         ln.gated ? "-" : to_string(r.first_multiplicity), cf});
  }
  return res;
}

// ---------------------------------------------------------------- spectrum

CommandResult cmd_spectrum(const SpectrumOptions& o) {
  const BdsCase c = case_by_id(o.id);
  const SpectrumContext ctx = spectrum_context(c);
  const int rank = ctx.datum->rank();
  Weight gamma;
  if (o.gamma) {
    if (o.k || o.gamma0) throw std::invalid_argument("--gamma replaces --k and --gamma0");
    gamma = parse_weight(*o.gamma, rank, "--gamma");
  } else {
    if (!o.k) throw std::invalid_argument("spectrum needs --k (or --gamma)");
    Weight g0 = o.gamma0 ? parse_weight(*o.gamma0, rank, "--gamma0") : Weight(rank);
    if (g0[c.nu - 1] != 0) throw std::invalid_argument("--gamma0 must have zero label at nu = " + std::to_string(c.nu));
    gamma = g0 - *o.k * ctx.g.nu_star;
  }
  const SpectrumTable tab = ktype_spectrum_gamma(ctx, gamma, o.m_max, o.force, std::max(1, o.threads));
  const std::string warning =
      "sufficiency gate bypassed with --force; K-types outside degree s are included and the list is not the "
      "discrete-series spectrum";

  CommandResult res;
  if (o.format == Format::Json) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "spectrum";
    j["case_id"] = c.id;
    j["gamma"] = gamma.to_vector();
    j["k"] = tab.k;
    j["m_max"] = tab.m_max;
    j["s"] = c.s;
    j["forced"] = tab.forced;
    if (tab.forced) j["warning"] = warning;
    j["rows"] = json::array();
    for (const auto& t : tab.rows)
      j["rows"].push_back({{"m", t.m},
                           {"k1_labels", t.hw_k1},
                           {"k2_labels", t.hw_k2},
                           {"central_label", to_string(t.central_label)},
                           {"multiplicity", big_json(t.multiplicity)},
                           {"dim", big_json(t.dim)},
                           {"degree", t.cohomology_degree}});
    j["singular_count"] = tab.singular_count;
    j["off_degree_count"] = tab.off_degree_count;
    res.out = dump(j);
  } else {
    std::string out = "# " + std::string(kSchema) + " spectrum case=" + c.id + " gamma=" + labels(gamma) +
                      " k=" + std::to_string(tab.k) + " m_max=" + std::to_string(tab.m_max) +
                      " s=" + std::to_string(c.s) + '\n';
    if (tab.forced) out += "# WARNING: " + warning + '\n';
    std::vector<std::string> head = {"m", "k1_labels", "k2_labels", "central_label", "multiplicity", "dim"};
    if (tab.forced) head.push_back("degree");
    out += tsv_line(head);
    for (const auto& t : tab.rows) {
      std::vector<std::string> cells = {std::to_string(t.m), join_ints(t.hw_k1), join_ints(t.hw_k2),
                                        to_string(t.central_label), to_string(t.multiplicity), to_string(t.dim)};
      if (tab.forced) cells.push_back(std::to_string(t.cohomology_degree));
      out += tsv_line(cells);
    }
    res.out = out;
  }
  if (tab.forced) res.err = "warning: " + warning + '\n';
  return res;
}

// ---------------------------------------------------------------- negativity

CommandResult cmd_check_negativity(const NegativityOptions& o) {
  const BdsCase c = case_by_id(o.id);
  const DatumPtr d = RootDatum::build(c.g);
  const Grading g = grade(d, c.nu);
  const LeviStructure lev = levi(g);
  const int rank = d->rank();

  Weight gamma(rank);
  bool have_gamma0 = false, have_t = false;
  if (o.gamma) {
    if (o.gamma0 || o.t) throw std::invalid_argument("--gamma replaces --gamma0 and --t");
    gamma = parse_weight(*o.gamma, rank, "--gamma");
    have_gamma0 = have_t = true;
  } else {
    Weight g0 = o.gamma0 ? parse_weight(*o.gamma0, rank, "--gamma0") : Weight(rank);
    if (g0[c.nu - 1] != 0) throw std::invalid_argument("--gamma0 must have zero label at nu = " + std::to_string(c.nu));
    have_gamma0 = o.gamma0.has_value();
    have_t = o.t.has_value();
    gamma = g0 + o.t.value_or(0) * g.nu_star;
  }
  if (!lev.l.is_dominant(gamma)) throw std::invalid_argument("gamma is not dominant for l");
  const NegativityReport rep = negativity(g, lev, gamma);

  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("case_id", c.id);
  fields.emplace_back("form_t_mu", "t < " + rep.form_mu.str());
  fields.emplace_back("form_t_nu", "t < " + rep.form_nu.str());
  fields.emplace_back("form_k", "t < " + rep.form_k.str());
  fields.emplace_back("form_k_bbw", "t < " + rep.form_k_bbw.str());
  if (have_gamma0) {
    fields.emplace_back("gamma0", labels(decompose_gamma(g, gamma).first));
    fields.emplace_back("t_bound_mu", to_string(rep.t_bound_mu));
    fields.emplace_back("t_bound_nu", to_string(rep.t_bound_nu));
    fields.emplace_back("k_bound_mu", to_string(rep.k_bound_mu));
    fields.emplace_back("k_bound_mu_bbw", to_string(rep.k_bound_mu_bbw));
  }
  if (have_t) {
    fields.emplace_back("gamma", labels(gamma));
    fields.emplace_back("t", to_string(rep.t));
    fields.emplace_back("sufficient", rep.sufficient ? "true" : "false");
    fields.emplace_back("scan_sufficient", rep.scan_sufficient ? "true" : "false");
    fields.emplace_back("k_negative", rep.k_negative ? "true" : "false");
  }

  CommandResult res;
  if (o.format == Format::Json) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "negativity";
    for (const auto& [k, v] : fields) {
      if (v == "true" || v == "false")
        j[k] = (v == "true");
      else
        j[k] = v;
    }
    res.out = dump(j);
  } else {
    res.out = tsv_line({"field", "value"});
    for (const auto& [k, v] : fields) res.out += tsv_line({k, v});
  }
  return res;
}

// ---------------------------------------------------------------- tensor / sym

namespace {

struct Algebra {
  DatumPtr datum;
  EmbeddedDatum e;
};

Algebra algebra(const std::string& type) {
  std::vector<SimpleType> types;
  std::stringstream ss(type);
  for (std::string tok; std::getline(ss, tok, 'x');) {
    if (tok.empty()) throw std::invalid_argument("bad type '" + type + "'");
    types.push_back(SimpleType::parse(tok));
  }
  if (types.empty()) throw std::invalid_argument("empty type");
  DatumPtr d = types.size() == 1 ? RootDatum::build(types[0]) : RootDatum::build(types);
  return {d, EmbeddedDatum::whole(d)};
}

Weight dominant_weight(const Algebra& a, const std::string& text, const char* what) {
  Weight w = parse_weight(text, a.datum->rank(), what);
  for (int i = 0; i < w.rank(); ++i)
    if (w[i] < 0) throw std::invalid_argument(std::string(what) + " must have nonnegative labels");
  return w;
}

using Terms = std::vector<std::pair<Weight, BigInt>>;

std::string encode(const Terms& t) {
  std::string s;
  for (const auto& [w, m] : t) s += labels(w) + '\t' + to_string(m) + '\n';
  return s;
}

std::optional<Terms> decode(const std::string& payload, int rank) {
  Terms t;
  std::stringstream ss(payload);
  try {
    for (std::string line; std::getline(ss, line);) {
      const auto tab = line.find('\t');
      if (tab == std::string::npos) return std::nullopt;
      std::vector<int> v = parse_int_list(line.substr(0, tab));
      if (static_cast<int>(v.size()) != rank) return std::nullopt;
      t.emplace_back(Weight::from(v), BigInt(line.substr(tab + 1)));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return t;
}

template <class F>
Terms cached_terms(const DiskCache& cache, const std::string& key, int rank, F compute) {
  if (auto hit = cache.get(key))
    if (auto t = decode(*hit, rank)) return *t;
  const OrbitCharacter ch = compute();
  if (!ch.is_nonnegative()) throw std::runtime_error("negative multiplicity in a public result");
  Terms t(ch.terms.begin(), ch.terms.end());
  cache.put(key, encode(t));
  return t;
}

CommandResult emit_terms(const Algebra& a, const Terms& terms, Format f, json header) {
  BigInt total = 0;
  std::vector<BigInt> dims;
  for (const auto& [w, m] : terms) {
    dims.push_back(a.e.weyl_dim(w));
    total += m * dims.back();
  }
  CommandResult res;
  if (f == Format::Json) {
    header["terms"] = json::array();
    for (std::size_t i = 0; i < terms.size(); ++i)
      header["terms"].push_back({{"labels", terms[i].first.to_vector()},
                                 {"multiplicity", big_json(terms[i].second)},
                                 {"dim", big_json(dims[i])}});
    header["total_dim"] = big_json(total);
    res.out = dump(header);
    return res;
  }
  res.out = tsv_line({"labels", "multiplicity", "dim"});
  for (std::size_t i = 0; i < terms.size(); ++i)
    res.out += tsv_line({labels(terms[i].first), to_string(terms[i].second), to_string(dims[i])});
  return res;
}

}  // namespace

CommandResult cmd_tensor(const TensorOptions& o, const DiskCache& cache) {
  const Algebra a = algebra(o.type);
  const Weight h1 = dominant_weight(a, o.hw1, "HW1"), h2 = dominant_weight(a, o.hw2, "HW2");
  const std::string key =
      std::string(kSchema) + "|tensor|" + a.datum->fingerprint() + "|" + labels(h1) + "|" + labels(h2);
  const Terms terms = cached_terms(cache, key, a.datum->rank(), [&] {
    return tensor(a.e, OrbitCharacter::irreducible(a.e, h1), OrbitCharacter::irreducible(a.e, h2));
  });
  json h;
  h["schema"] = kSchema;
  h["kind"] = "tensor";
  h["type"] = a.datum->type_name();
  h["hw1"] = h1.to_vector();
  h["hw2"] = h2.to_vector();
  return emit_terms(a, terms, o.format, h);
}

CommandResult cmd_sym(const SymOptions& o, const DiskCache& cache) {
  if (o.m < 0) throw std::invalid_argument("M must be nonnegative");
  const Algebra a = algebra(o.type);
  const Weight hw = dominant_weight(a, o.hw, "HW");
  const std::string op = o.alt ? "alt" : "sym";
  const std::string key =
      std::string(kSchema) + "|" + op + "|" + a.datum->fingerprint() + "|" + labels(hw) + "|" + std::to_string(o.m);
  const Terms terms = cached_terms(cache, key, a.datum->rank(), [&] {
    const OrbitCharacter v = OrbitCharacter::irreducible(a.e, hw);
    return o.alt ? alt_power(a.e, v, o.m) : sym_power(a.e, v, o.m);
  });
  json h;
  h["schema"] = kSchema;
  h["kind"] = op;
  h["type"] = a.datum->type_name();
  h["hw"] = hw.to_vector();
  h["m"] = o.m;
  return emit_terms(a, terms, o.format, h);
}

}  // namespace bds::shell
