#pragma once

// The bdstool verbs as library calls returning the exact bytes to print.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bds/bdscore.hpp"
#include "bds/shell/cache.hpp"

namespace bds::shell {

inline constexpr const char* kSchema = "bds/1";

enum ExitCode : int { kOk = 0, kMismatch = 2, kInsufficient = 3, kBadInput = 4 };

enum class Format { Tsv, Json };
Format parse_format(const std::string& s);

struct CommandResult {
  std::string out;
  std::string err;
  int code = kOk;
};

/// Lossless wire form of a case; case_from_json rebuilds it and checks every field.
nlohmann::ordered_json case_to_json(const BdsCase& c);
BdsCase case_from_json(const nlohmann::ordered_json& j);

struct CasesOptions {
  int max_rank = 9;
  Format format = Format::Tsv;
  bool verify = false;
  bool invariants = false;  // with verify: also the self_dual/bilinear/inv_degree columns
  bool allow_slow = false;
};
CommandResult cmd_cases(const CasesOptions& o);

CommandResult cmd_case(const std::string& id, Format f);

struct InvariantsOptions {
  std::optional<std::string> id;  // none: the ten exceptional rows in table order
  int max_degree = 8;
  bool allow_slow = false;
  Format format = Format::Tsv;
};
CommandResult cmd_invariants(const InvariantsOptions& o);

struct SpectrumOptions {
  std::string id;
  std::optional<int> k;
  std::optional<std::string> gamma0;  // labels with zero at nu
  std::optional<std::string> gamma;   // full labels; replaces gamma0 and k
  int m_max = 6;
  bool force = false;
  int threads = 1;
  Format format = Format::Tsv;
};
CommandResult cmd_spectrum(const SpectrumOptions& o);

struct NegativityOptions {
  std::string id;
  std::optional<std::string> gamma;
  std::optional<std::string> gamma0;
  std::optional<int> t;
  Format format = Format::Tsv;
};
CommandResult cmd_check_negativity(const NegativityOptions& o);

struct TensorOptions {
  std::string type;  // "B4" or a product such as "A1xB3"
  std::string hw1, hw2;
  Format format = Format::Tsv;
};
CommandResult cmd_tensor(const TensorOptions& o, const DiskCache& cache);

struct SymOptions {
  std::string type;
  std::string hw;
  int m = 2;
  bool alt = false;
  Format format = Format::Tsv;
};
CommandResult cmd_sym(const SymOptions& o, const DiskCache& cache);

/// BDS_THREADS when set to a positive integer, else 1.
int threads_from_env();

}  // namespace bds::shell
