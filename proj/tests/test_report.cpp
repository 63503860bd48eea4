#include <set>

#include "doctest.h"
#include "g2inst/report.hpp"
#include "g2inst/verify.hpp"

using namespace g2inst;

namespace {

const Claim* find_claim(const RunManifest& m, const std::string& id) {
  for (const auto& c : m.claims)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("census JSON round trip") {
  CensusReport r;
  r.mode = CensusMode::constrained;
  r.total = 16384;
  r.irreducible_and_rigid = 13440;
  r.nonflat_irreducible_rigid = 13230;
  r.seconds = 1.5;
  const Json j = to_json(r);
  CHECK(j.at("total").is_string());
  CHECK(j.at("total") == "16384");
  CHECK_FALSE(j.contains("seconds"));
  const auto back = census_from_json(j);
  CHECK(back.mode == r.mode);
  CHECK(back.total == r.total);
  CHECK(back.irreducible_and_rigid == r.irreducible_and_rigid);
  CHECK(back.nonflat_irreducible_rigid == r.nonflat_irreducible_rigid);
  CHECK(census_from_json(Json{{"census", j}}).total == 16384);
  CHECK_THROWS_AS(census_from_json(Json::object()), std::invalid_argument);
  CHECK_THROWS_AS(census_from_json(Json{{"mode", "free"}, {"total", 5}}), std::invalid_argument);
  CHECK_THROWS_AS(census_from_json(Json::parse(R"({"mode":"odd","total":"1","irreducible_and_rigid":"1",
                                                   "nonflat_irreducible_rigid":"1"})")),
                  std::invalid_argument);
}

TEST_CASE("orbit CSV has a header and ten letters per row") {
  const std::vector<PackedAssignment> reps{HolonomyAssignment::parse("IIIabIIIII").pack(),
                                           HolonomyAssignment::parse("abcIIIIcab").pack()};
  const std::string csv = orbit_csv(reps);
  CHECK(csv ==
        "alpha,beta,gamma,tau1,tau2,tau3,tau4,tau5,tau6,tau7\n"
        "I,I,I,a,b,I,I,I,I,I\n"
        "a,b,c,I,I,I,I,c,a,b\n");
}

TEST_CASE("orbit and relation reports") {
  OrbitReport o;
  o.group_order = 1024;
  o.orbit_count = 3;
  o.pigeonhole_bound = 246;
  o.representatives = {1, 2, 3};
  CHECK(to_json(o, false).at("orbit_count") == "3");
  CHECK_FALSE(to_json(o, false).contains("representatives"));
  CHECK(to_json(o, true).at("representatives").size() == 3);
  const Json rel = to_json(relation_table());
  CHECK(rel.dump().find("tau") != std::string::npos);
}

TEST_CASE("fnv1a reference values") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("verify-paper is byte-stable and passes") {
  VerifyOptions opts;
  opts.samples = 50;
  opts.command_line = "g2inst verify-paper";
  const auto a = verify_paper(opts);
  const auto b = verify_paper(opts);
  for (const auto& c : a.claims) {
    INFO(c.id << ": " << c.observed);
    CHECK(c.status != ClaimStatus::fail);
  }
  CHECK(a.exit_code() == 0);
  CHECK(a.stability_hash() == b.stability_hash());
  Json ja = a.to_json(), jb = b.to_json();
  CHECK(ja.at("manifest").contains("timings"));
  ja["manifest"].erase("timings");
  jb["manifest"].erase("timings");
  CHECK(ja.dump() == jb.dump());
  for (const char* key : {"manifest", "g2", "group", "census_free", "census_constrained", "symmetry", "index"})
    CHECK(ja.contains(key));
  // Every claim id occurs once.
  std::set<std::string> ids;
  for (const auto& c : a.claims) CHECK(ids.insert(c.id).second);
  for (const char* id : {"singular_set_components", "census_irreducible_rigid", "census_nonflat", "criterion_equivalence",
                         "stabilizer_order", "orbit_pigeonhole_bound", "orbit_count_at_least_bound", "index_gocho",
                         "index_trivial_flat", "g2_property_suite", "hyperkahler_suite", "relation_audit",
                         "census_constrained_recorded"}) {
    INFO(id);
    CHECK(find_claim(a, id) != nullptr);
  }
  const Claim* constrained = find_claim(a, "census_constrained_recorded");
  REQUIRE(constrained != nullptr);
  CHECK(constrained->status == ClaimStatus::flagged);
  CHECK(ja.at("census_free").dump().find("1024128") != std::string::npos);
  CHECK(ja.at("census_constrained").dump().find("13230") != std::string::npos);
}

TEST_CASE("constrained-only verify-paper flags census claims instead of failing") {
  VerifyOptions opts;
  opts.mode = VerifyMode::constrained;
  opts.samples = 20;
  const auto m = verify_paper(opts);
  CHECK(m.exit_code() == 0);
  const Claim* c = find_claim(m, "census_nonflat");
  REQUIRE(c != nullptr);
  CHECK(c->status == ClaimStatus::flagged);
  CHECK(verify_mode_from_string("free") == VerifyMode::free);
  CHECK_THROWS_AS(verify_mode_from_string("all"), std::invalid_argument);
}
