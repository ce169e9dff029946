#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <vector>

#include <unistd.h>

#include "bds/shell/cache.hpp"
#include "bds/shell/commands.hpp"
#include "bds/shell/golden.hpp"
#include "bds/spectrum.hpp"

using namespace bds;
using namespace bds::shell;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("bds_shell_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Golden, ParsesAndCoversTheAtlas) {
  const auto& rows = embedded_golden();
  int exceptional = 0;
  for (const auto& r : rows) exceptional += std::string("EFG").find(r.at("g_type")[0]) != std::string::npos;
  EXPECT_EQ(exceptional, 10);
  EXPECT_EQ(rows.size(), enumerate_cases(9).size());
  for (const auto& r : rows)
    if (r.id() == "E8_D8") {
      EXPECT_EQ(r.at("dim_u1"), "64");
      EXPECT_EQ(r.at("dim_u2"), "14");
    }
}

TEST(Golden, RejectsMalformedText) {
  EXPECT_THROW(parse_golden("a\tb\n"), std::invalid_argument);
  EXPECT_THROW(parse_golden(""), std::invalid_argument);
  std::string bad(embedded_golden_text().substr(0, embedded_golden_text().find('\n') + 1));
  bad += "X\t1\n";
  EXPECT_THROW(parse_golden(bad), std::invalid_argument);
}

TEST(Cache, RoundTripAndCorruption) {
  DiskCache c(fresh_dir("rt"));
  EXPECT_FALSE(c.get("k1"));
  c.put("k1", "payload\nwith lines\n");
  ASSERT_TRUE(c.get("k1"));
  EXPECT_EQ(*c.get("k1"), "payload\nwith lines\n");
  EXPECT_FALSE(c.get("k2"));
  // truncated entry reads as a miss
  {
    std::ofstream out(c.entry_path("k1"), std::ios::trunc);
    out << "bds-cache/1\nk1\n100\nshort";
  }
  EXPECT_FALSE(c.get("k1"));
  c.put("k1", "again");
  EXPECT_EQ(*c.get("k1"), "again");
  // an entry stored under the same hash but a different key is not returned
  {
    std::ofstream out(c.entry_path("k3"), std::ios::trunc);
    out << "bds-cache/1\nsomething else\n1\nx\nend\n";
  }
  EXPECT_FALSE(c.get("k3"));
  fs::remove_all(c.dir());
}

TEST(Cache, DisabledCacheStoresNothing) {
  DiskCache off;
  EXPECT_FALSE(off.enabled());
  off.put("k", "v");
  EXPECT_FALSE(off.get("k"));
}

TEST(Cache, ColdWarmAndDisabledGiveIdenticalBytes) {
  DiskCache c(fresh_dir("cw"));
  SymOptions o{"D7", "0,0,0,0,0,0,1", 4, false, Format::Tsv};
  const std::string cold = cmd_sym(o, c).out;
  const std::string warm = cmd_sym(o, c).out;
  const std::string none = cmd_sym(o, DiskCache{}).out;
  EXPECT_EQ(cold, warm);
  EXPECT_EQ(cold, none);
  TensorOptions t{"B3", "1,0,1", "0,1,0", Format::Json};
  EXPECT_EQ(cmd_tensor(t, c).out, cmd_tensor(t, c).out);
  EXPECT_EQ(cmd_tensor(t, c).out, cmd_tensor(t, DiskCache{}).out);
  fs::remove_all(c.dir());
}

TEST(Cache, ConcurrentWritersLeaveAValidEntry) {
  DiskCache c(fresh_dir("cc"));
  SymOptions o{"E6", "1,0,0,0,0,0", 5, false, Format::Tsv};
  const std::string want = cmd_sym(o, DiskCache{}).out;
  std::vector<std::future<std::string>> fut;
  for (int i = 0; i < 6; ++i) fut.push_back(std::async(std::launch::async, [&] { return cmd_sym(o, c).out; }));
  for (auto& f : fut) EXPECT_EQ(f.get(), want);
  EXPECT_EQ(cmd_sym(o, c).out, want);
  int tmp = 0;
  for (const auto& e : fs::recursive_directory_iterator(c.dir()))
    if (e.path().string().find(".tmp.") != std::string::npos) ++tmp;
  EXPECT_EQ(tmp, 0);
  fs::remove_all(c.dir());
}

TEST(Wire, CaseDescriptorRoundTrips) {
  for (const auto& c : enumerate_cases(6)) {
    const auto j = case_to_json(c);
    const BdsCase back = case_from_json(j);
    EXPECT_EQ(case_to_json(back), j) << c.id;
    EXPECT_EQ(back.id, c.id);
    const auto reparsed = nlohmann::ordered_json::parse(j.dump());
    EXPECT_EQ(case_to_json(case_from_json(reparsed)), j) << c.id;
  }
  auto j = case_to_json(make_case({Family::E, 8}, 1));
  j["dim_u1"] = 63;
  EXPECT_THROW(case_from_json(j), std::invalid_argument);
  j.erase("family");
  EXPECT_THROW(case_from_json(j), std::invalid_argument);
}

TEST(Commands, CasesListsTenExceptionalRows) {
  CasesOptions o;
  o.format = Format::Json;
  const auto j = nlohmann::json::parse(cmd_cases(o).out);
  EXPECT_EQ(j["schema"], kSchema);
  int n = 0;
  for (const auto& c : j["cases"]) {
    n += c["exceptional"].get<bool>();
    if (c["id"] == "E8_D8") {
      EXPECT_EQ(c["dim_u1"], 64);
      EXPECT_EQ(c["dim_u2"], 14);
    }
  }
  EXPECT_EQ(n, 10);
}

TEST(Commands, VerifyReportsTheKnownConflicts) {
  CasesOptions o;
  o.verify = true;
  o.format = Format::Json;
  const auto res = cmd_cases(o);
  EXPECT_EQ(res.code, kMismatch);
  const auto j = nlohmann::json::parse(res.out);
  std::set<std::string> ids;
  for (const auto& m : j["mismatches"]) ids.insert(m["case_id"].get<std::string>());
  EXPECT_TRUE(ids.count("E7_A1D6_2"));
  EXPECT_TRUE(ids.count("Spin_4_5"));
  EXPECT_TRUE(ids.count("Sp_2_1"));
  EXPECT_FALSE(ids.count("E8_D8"));
  EXPECT_FALSE(ids.count("Spin_4_3"));  // (2l-3)(2l-4) is right at l = 3
}

TEST(Commands, SpectrumIsDeterministicAndGated) {
  SpectrumOptions o;
  o.id = "F4_A1C3";
  o.k = 30;
  o.m_max = 3;
  EXPECT_EQ(cmd_spectrum(o).out, cmd_spectrum(o).out);
  o.threads = 3;
  const std::string threaded = cmd_spectrum(o).out;
  o.threads = 1;
  EXPECT_EQ(threaded, cmd_spectrum(o).out);
  o.k = 3;
  EXPECT_THROW(cmd_spectrum(o), bds::InsufficientNegativity);
  o.force = true;
  const auto forced = cmd_spectrum(o);
  EXPECT_NE(forced.out.find("WARNING"), std::string::npos);
  o.format = Format::Json;
  EXPECT_TRUE(nlohmann::json::parse(cmd_spectrum(o).out).contains("warning"));
}

TEST(Commands, NegativityPrintsTheE8Forms) {
  NegativityOptions o;
  o.id = "E8_D8";
  const std::string out = cmd_check_negativity(o).out;
  EXPECT_NE(out.find("-(1/2)(3n2 + 4n3 + 6n4 + 5n5 + 4n6 + 3n7 + 2n8) - 29/2"), std::string::npos);
  EXPECT_NE(out.find("-(1/2)(3n2 + 4n3 + 6n4 + 5n5 + 4n6 + 3n7 + 2n8) + 1/2"), std::string::npos);
  o.t = -1000;
  o.format = Format::Json;
  EXPECT_TRUE(nlohmann::json::parse(cmd_check_negativity(o).out)["sufficient"].get<bool>());
}

TEST(Commands, InvariantsTable) {
  InvariantsOptions o;
  o.format = Format::Json;
  const auto j = nlohmann::json::parse(cmd_invariants(o).out);
  ASSERT_EQ(j["rows"].size(), 10u);
  EXPECT_EQ(j["rows"][2]["case_id"], "F4_B4");
  EXPECT_EQ(j["rows"][2]["inv_degree"], 2);
  EXPECT_EQ(j["rows"][3]["inv_degree"], nullptr);
  EXPECT_EQ(j["rows"][8]["inv_degree"], "gated");
  o.id = "E8_D8";
  EXPECT_THROW(cmd_invariants(o), std::invalid_argument);
  o.allow_slow = true;
  EXPECT_EQ(nlohmann::json::parse(cmd_invariants(o).out)["rows"][0]["inv_degree"], 8);
}

TEST(Commands, BadInput) {
  EXPECT_THROW(cmd_case("E9_X", Format::Tsv), std::invalid_argument);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
  TensorOptions t{"A2", "1,0", "1", Format::Tsv};
  EXPECT_THROW(cmd_tensor(t, DiskCache{}), std::invalid_argument);
  SpectrumOptions s;
  s.id = "G2_A1A1";
  EXPECT_THROW(cmd_spectrum(s), std::invalid_argument);  // no --k
}
