#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdhkit/affine.hpp"
#include "gdhkit/data_paths.hpp"

#include <json.hpp>

#include <fstream>
#include <set>

using namespace gdhkit;

namespace {

AffineStructure S(const std::string& s) { return AffineStructure::parse(s); }

AffineStructure from_json(const nlohmann::json& comps) {
  std::vector<AffineComponent> parts;
  for (const auto& c : comps) {
    SimpleLieType t{static_cast<Family>(c[0].get<std::string>()[0]), c[1].get<int>()};
    parts.push_back({t, c[2].get<int>(), c[3].get<int>()});
  }
  return AffineStructure(parts);
}

nlohmann::json load_golden(const std::string& name) {
  std::ifstream in(data_file("golden/" + name));
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("parsing round trips") {
  CHECK(S("A1@2 x16").pretty_str() == "A_{1,2}^{16}");
  CHECK(S("A_{1,2}^{16}").machine_str() == "A1@2 x16");
  CHECK(S("C_{3,8}A_{3,8}").machine_str() == "C3@8, A3@8");
  CHECK(S("D_{5,4}A_{3,2}A_{1,1}^4").pretty_str() == "D_{5,4}A_{3,2}A_{1,1}^{4}");
  CHECK(S("A1@1 x24") == S("A_{1,1}^{24}"));
}

TEST_CASE("total dimension") {
  CHECK(total_dim(S("A_{1,1}^{24}")) == 72);
  CHECK(total_dim(S("D_{24,1}")) == 1128);
  CHECK(total_dim(S("A_{1,2}")) == 3);
}

TEST_CASE("ratio") {
  auto r = ratio(S("A_{24,1}"));
  CHECK(r.kind == RatioOutcome::Kind::Ok);
  CHECK(r.value == Rat(25));

  auto mismatch = ratio(S("A_{1,1}A_{2,1}"));
  CHECK(mismatch.kind == RatioOutcome::Kind::Mismatch);

  auto d436 = ratio(S("D_{4,36}"));
  CHECK(d436.kind == RatioOutcome::Kind::Ok);
  CHECK(d436.value == Rat(1, 6));

  // A_{1,1} alone: common ratio 2, but (3-24)/24 != 2.
  auto violated = ratio(S("A_{1,1}"));
  CHECK(violated.kind == RatioOutcome::Kind::TraceViolated);
}

TEST_CASE("order and level lcm") {
  CHECK(order_lcm(S("A_{1,2}^{16}")) == 2);
  CHECK(order_lcm(S("C_{3,8}A_{3,8}")) == 8);
  CHECK(order_lcm(S("G_{2,3}^{4}")) == 12);
  CHECK(level_lcm(S("A_{1,4}^{12}")) == 4);
  CHECK(level_lcm(S("D_{4,36}")) == 36);
  CHECK(level_lcm(S("A_{1,1}^{24}")) == 1);
}

TEST_CASE("enumeration reproduces the full table") {
  auto all = enumerate_eq1();
  CHECK(all.size() == 221);

  auto golden = load_golden("table2.json");
  REQUIRE(golden.at("rows").size() == 221);
  size_t upto = std::min<size_t>(all.size(), 221);
  for (size_t i = 0; i < upto; ++i) {
    const auto& row = golden.at("rows")[i];
    AffineStructure expected = from_json(row.at("structure"));
    INFO("row ", i, ": ", expected.pretty_str());
    CHECK(total_dim(all[i]) == row.at("dim").get<int>());
    CHECK(all[i] == expected);
  }

  std::set<std::string> names;
  for (const auto& s : all) {
    CHECK(ratio(s).kind == RatioOutcome::Kind::Ok);
    CHECK(total_rank(s) <= 24);
    CHECK(total_dim(s) == 24 + (Rat(24) * ratio(s).value).num().to_i64());
    names.insert(s.machine_str());
  }
  CHECK(names.size() == all.size());
}

TEST_CASE("enumeration contains the named examples") {
  auto all = enumerate_eq1();
  auto contains = [&](const std::string& s) {
    AffineStructure t = S(s);
    for (const auto& x : all)
      if (x == t) return true;
    return false;
  };
  CHECK(contains("A_{2,9}^4"));
  CHECK(contains("D_{24,1}"));
  CHECK(contains("A_{1,2}^{16}"));
  CHECK(contains("A_{3,96}B_{2,72}"));
  CHECK_FALSE(contains("A_{1,1}"));
}
