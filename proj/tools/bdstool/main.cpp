#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bds/invariants.hpp"
#include "bds/shell/commands.hpp"
#include "bds/spectrum.hpp"

using namespace bds;
using namespace bds::shell;

namespace {

const char* kFooter = R"(Exit codes:
  0  success
  2  verification mismatch (golden corpus, closed form or internal cross-check)
  3  insufficient negativity (spectrum without --force)
  4  bad input

Environment:
  BDS_CACHE_DIR   cache directory for tensor/sym results
                  (default $XDG_CACHE_HOME/bds, else $HOME/.cache/bds)
  BDS_NO_CACHE    set to anything but 0 to bypass the cache entirely
  BDS_THREADS     default worker count for spectrum rows (overridden by --threads)

Cache layout: <dir>/v1/<hh>/<16 hex>.entry, keyed by FNV-1a of
"bds/1|<op>|<datum>|<args>"; the full key is stored in the entry and checked on read.)";

void add_format(CLI::App* sub, std::string& fmt) {
  sub->add_option("--format", fmt, "Output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borel-de Siebenthal discrete series toolkit", "bdstool"};
  app.footer(kFooter);
  app.require_subcommand(1);

  CasesOptions cases_o;
  std::string cases_fmt = "tsv";
  auto* cases = app.add_subcommand("cases", "Print the case atlas or verify it against the golden corpus");
  cases->add_option("--max-rank", cases_o.max_rank, "Largest classical rank")->capture_default_str();
  cases->add_flag("--verify", cases_o.verify, "Diff against the embedded golden corpus");
  cases->add_flag("--invariants", cases_o.invariants, "With --verify: also check self-duality, bilinear and invariant degree");
  cases->add_flag("--allow-slow", cases_o.allow_slow, "Run the slow invariant scans");
  add_format(cases, cases_fmt);

  std::string case_id, case_fmt = "json";
  auto* one = app.add_subcommand("case", "Describe one case");
  one->add_option("ID", case_id, "Case id, e.g. E8_D8, Spin_4_5, Sp_2_3, B4:3")->required();
  add_format(one, case_fmt);

  InvariantsOptions inv_o;
  std::string inv_id, inv_fmt = "tsv";
  auto* inv = app.add_subcommand("invariants", "Self-duality, bilinear form and first relative invariant of (L, u1)");
  inv->add_option("ID", inv_id, "Case id (default: the ten exceptional rows)");
  inv->add_option("--max-degree", inv_o.max_degree, "Search bound")->capture_default_str();
  inv->add_flag("--allow-slow", inv_o.allow_slow, "Run the E7,A7 and E8,D8 full-degree scans");
  add_format(inv, inv_fmt);

  SpectrumOptions sp_o;
  std::string sp_fmt = "tsv", sp_gamma0, sp_gamma;
  int sp_k = 0;
  int sp_threads = 0;
  auto* sp = app.add_subcommand("spectrum", "K-type spectrum up to degree m_max in S(V*)");
  sp->add_option("ID", sp_o.id, "Case id")->required();
  auto* k_opt = sp->add_option("--k", sp_k, "gamma = gamma0 - k nu*");
  auto* g0_opt = sp->add_option("--gamma0", sp_gamma0, "Labels of gamma0, zero at nu (default 0)");
  auto* g_opt = sp->add_option("--gamma", sp_gamma, "Full labels of gamma (instead of --k/--gamma0)");
  sp->add_option("--m-max", sp_o.m_max, "Largest m")->capture_default_str();
  sp->add_flag("--force", sp_o.force, "Bypass the sufficiency gate");
  sp->add_option("--threads", sp_threads, "Worker threads (default BDS_THREADS or 1)");
  add_format(sp, sp_fmt);

  NegativityOptions neg_o;
  std::string neg_fmt = "tsv", neg_gamma, neg_gamma0;
  int neg_t = 0;
  auto* neg = app.add_subcommand("check-negativity", "Negativity thresholds, symbolic and evaluated");
  neg->add_option("ID", neg_o.id, "Case id")->required();
  auto* ng_opt = neg->add_option("--gamma", neg_gamma, "Full labels of gamma");
  auto* ng0_opt = neg->add_option("--gamma0", neg_gamma0, "Labels of gamma0, zero at nu");
  auto* nt_opt = neg->add_option("--t", neg_t, "Central coordinate t of gamma = gamma0 + t nu*");
  add_format(neg, neg_fmt);

  TensorOptions ten_o;
  std::string ten_fmt = "tsv";
  auto* ten = app.add_subcommand("tensor", "Decompose V(HW1) (x) V(HW2)");
  ten->add_option("TYPE", ten_o.type, "Type, e.g. B4 or A1xB3")->required();
  ten->add_option("HW1", ten_o.hw1, "Comma-separated labels")->required();
  ten->add_option("HW2", ten_o.hw2, "Comma-separated labels")->required();
  add_format(ten, ten_fmt);

  SymOptions sym_o;
  std::string sym_fmt = "tsv";
  auto* sym = app.add_subcommand("sym", "Decompose S^M V(HW) (or the exterior power with --alt)");
  sym->add_option("TYPE", sym_o.type, "Type, e.g. D7 or A1xD5")->required();
  sym->add_option("HW", sym_o.hw, "Comma-separated labels")->required();
  sym->add_option("M", sym_o.m, "Degree")->required();
  sym->add_flag("--alt", sym_o.alt, "Exterior power instead");
  add_format(sym, sym_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  CommandResult res;
  try {
    if (*cases) {
      cases_o.format = parse_format(cases_fmt);
      res = cmd_cases(cases_o);
    } else if (*one) {
      res = cmd_case(case_id, parse_format(case_fmt));
    } else if (*inv) {
      if (!inv_id.empty()) inv_o.id = inv_id;
      inv_o.format = parse_format(inv_fmt);
      res = cmd_invariants(inv_o);
    } else if (*sp) {
      if (*k_opt) sp_o.k = sp_k;
      if (*g0_opt) sp_o.gamma0 = sp_gamma0;
      if (*g_opt) sp_o.gamma = sp_gamma;
      sp_o.threads = sp_threads > 0 ? sp_threads : threads_from_env();
      sp_o.format = parse_format(sp_fmt);
      res = cmd_spectrum(sp_o);
    } else if (*neg) {
      if (*ng_opt) neg_o.gamma = neg_gamma;
      if (*ng0_opt) neg_o.gamma0 = neg_gamma0;
      if (*nt_opt) neg_o.t = neg_t;
      neg_o.format = parse_format(neg_fmt);
      res = cmd_check_negativity(neg_o);
    } else if (*ten) {
      ten_o.format = parse_format(ten_fmt);
      res = cmd_tensor(ten_o, DiskCache::from_env());
    } else if (*sym) {
      sym_o.format = parse_format(sym_fmt);
      res = cmd_sym(sym_o, DiskCache::from_env());
    }
  } catch (const InsufficientNegativity& e) {
    std::cerr << "error: " << e.what() << "\n(pass --force to compute anyway)\n";
    return kInsufficient;
  } catch (const InvariantMismatch& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const SpectrumMismatch& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cout << res.out;
  std::cerr << res.err;
  return res.code;
}
