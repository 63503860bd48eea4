#include "g2inst/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>

#include "g2inst/ale_index.hpp"
#include "g2inst/g2_suite.hpp"
#include "g2inst/quaternion.hpp"
#include "g2inst/symmetry.hpp"

namespace g2inst {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::flagged: return "flagged";
  }
  return "fail";
}

std::string to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::both: return "both";
    case VerifyMode::free: return "free";
    case VerifyMode::constrained: return "constrained";
  }
  return "both";
}

VerifyMode verify_mode_from_string(const std::string& text) {
  if (text == "both") return VerifyMode::both;
  if (text == "free") return VerifyMode::free;
  if (text == "constrained") return VerifyMode::constrained;
  throw std::invalid_argument("unknown verify mode: " + text);
}

bool RunManifest::success() const {
  for (const auto& c : claims)
    if (c.status == ClaimStatus::fail) return false;
  return true;
}

namespace {

Json stable_json(const RunManifest& m) {
  Json claims = Json::array();
  for (const auto& c : m.claims)
    claims.push_back({{"id", c.id},
                      {"description", c.description},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"status", to_string(c.status)}});
  Json out;
  out["manifest"] = {{"version", m.version},
                     {"command_line", m.command_line},
                     {"mode", to_string(m.options.mode)},
                     {"samples", count_string(m.options.samples)},
                     {"claims", claims},
                     {"success", m.success()}};
  for (const char* key : {"g2", "group", "census_free", "census_constrained", "symmetry", "index"})
    out[key] = m.sections.contains(key) ? m.sections.at(key) : Json(nullptr);
  return out;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::uint64_t RunManifest::stability_hash() const { return fnv1a(stable_json(*this).dump()); }

Json RunManifest::to_json() const {
  Json out = stable_json(*this);
  Json timing = Json::array();
  for (const auto& t : timings) timing.push_back({{"stage", t.stage}, {"seconds", t.seconds}});
  out["manifest"]["stability_hash"] = hex64(stability_hash());
  out["manifest"]["timings"] = timing;
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class Pipeline {
 public:
  explicit Pipeline(RunManifest& m) : m_(m) {}

  // Runs `body` unless a dependency failed; records timing and failures.
  bool stage(const std::string& name, const std::vector<std::string>& deps, const std::function<void()>& body) {
    for (const auto& d : deps)
      if (!ok(d)) {
        m_.claims.push_back({name + "_skipped", "stage " + name + " skipped", "run", "dependency " + d + " failed",
                             ClaimStatus::fail});
        failed_.push_back(name);
        return false;
      }
    const auto start = Clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      m_.claims.push_back({name + "_error", "stage " + name + " raised", "no error", e.what(), ClaimStatus::fail});
      failed_.push_back(name);
    }
    m_.timings.push_back({name, std::chrono::duration<double>(Clock::now() - start).count()});
    return ok(name);
  }

  bool ok(const std::string& name) const { return std::find(failed_.begin(), failed_.end(), name) == failed_.end(); }

  void claim(std::string id, std::string description, std::string expected, std::string observed, bool passed,
             bool flag_instead_of_fail = false) {
    const ClaimStatus s = passed ? ClaimStatus::pass : flag_instead_of_fail ? ClaimStatus::flagged : ClaimStatus::fail;
    m_.claims.push_back({std::move(id), std::move(description), std::move(expected), std::move(observed), s});
  }

 private:
  RunManifest& m_;
  std::vector<std::string> failed_;
};

std::string suite_summary(const std::vector<PropertyResult>& r) {
  std::size_t passed = 0;
  for (const auto& p : r) passed += p.passed;
  return std::to_string(passed) + "/" + std::to_string(r.size()) + " properties";
}

}  // namespace

RunManifest verify_paper(const VerifyOptions& options) {
  RunManifest m;
  m.options = options;
  m.command_line = options.command_line;
  Pipeline p(m);

  p.stage("g2", {}, [&] {
    const auto r = g2_check(options.samples);
    m.sections["g2"] = {{"properties", to_json(r)}};
    p.claim("g2_property_suite", "exact G2 identities: star involution, phi^psi = 7 vol, projector ranks, cross product",
            "all pass", suite_summary(r), all_passed(r));
  });

  p.stage("hyperkahler", {}, [&] {
    const auto r = eh_verify(options.samples);
    m.sections["g2"]["hyperkahler"] = to_json(r);
    p.claim("hyperkahler_suite", "moment map invariance, level-set preservation, U(2)/{+-1} well-definedness",
            "all pass", suite_summary(r), all_passed(r));
  });

  RelationTable relations;
  p.stage("singular_set", {}, [&] {
    const auto s = singular_set(gamma_group());
    m.sections["group"]["singular_set"] = to_json(s);
    p.claim("singular_set_components", "components of the singular set of T^7/Gamma", "12",
            count_string(s.component_count), s.component_count == 12);
  });

  p.stage("relations", {}, [&] {
    relations = relation_table();  // throws if a relation is not a pure translation
    m.sections["group"]["relations"] = to_json(relations);
    p.claim("relation_audit", "squares, commutators and conjugates of the deck generators are integer translations",
            "all pure translations", "all pure translations", true);
  });

  const bool run_free = options.mode != VerifyMode::constrained;
  const bool run_constrained = options.mode != VerifyMode::free;
  std::optional<CensusReport> free_report;
  std::optional<CensusReport> constrained_report;

  auto census_claims = [&](const CensusReport& r, bool flag) {
    const std::string suffix = flag ? " (" + to_string(r.mode) + " mode)" : "";
    p.claim("census_irreducible_rigid", "irreducible and rigid assignments among 4^10" + suffix, "1024128",
            count_string(r.irreducible_and_rigid), r.irreducible_and_rigid == 1024128, flag);
    p.claim("census_nonflat", "non-flat irreducible rigid assignments" + suffix, "1008126",
            count_string(r.nonflat_irreducible_rigid), r.nonflat_irreducible_rigid == 1008126, flag);
  };

  if (run_free) {
    p.stage("census_free", {}, [&] {
      free_report = run_census(CensusMode::free, relations);
      m.sections["census_free"] = to_json(*free_report);
      census_claims(*free_report, false);
    });
  }

  p.stage("criterion_equivalence", {}, [&] {
    const auto mismatches = criterion_mismatches();
    m.sections[run_free ? "census_free" : "census_constrained"]["criterion_mismatches"] = count_string(mismatches);
    p.claim("criterion_equivalence", "irreducible-and-rigid agrees with the two-distinct-tau condition", "0",
            count_string(mismatches), mismatches == 0);
  });

  std::vector<SignedPermutation> stabilizer;
  p.stage("stabilizer", {}, [&] {
    stabilizer = stabilizer_of_phi();
    m.sections["symmetry"]["stabilizer_order"] = count_string(stabilizer.size());
    p.claim("stabilizer_order", "signed permutations of Z^7 preserving phi0", "1344", count_string(stabilizer.size()),
            stabilizer.size() == 1344);
  });

  AutomorphismReport aut;
  p.stage("automorphisms", {"stabilizer"}, [&] {
    aut = aut_orbifold_report();
    m.sections["symmetry"]["automorphisms"] = to_json(aut);
  });

  auto constrained_stage = [&] {
    p.stage("census_constrained", {"relations"}, [&] {
      constrained_report = run_census(CensusMode::constrained, relations);
      Json j = to_json(*constrained_report);
      const bool differs = !free_report || free_report->irreducible_and_rigid != constrained_report->irreducible_and_rigid ||
                           free_report->nonflat_irreducible_rigid != constrained_report->nonflat_irreducible_rigid;
      j["differs_from_free"] = differs;
      m.sections["census_constrained"].update(j);
      if (!run_free) {
        census_claims(*constrained_report, true);
      } else {
        p.claim("census_constrained_recorded", "relation-constrained census counts, compared with free mode",
                "equal to free mode",
                count_string(constrained_report->irreducible_and_rigid) + " / " +
                    count_string(constrained_report->nonflat_irreducible_rigid) + " of " +
                    count_string(constrained_report->total),
                !differs, true);
      }
    });
  };

  auto orbit_stage = [&] {
    p.stage("orbits", {"automorphisms", run_free ? "census_free" : "census_constrained"}, [&] {
      const CensusMode mode = run_free ? CensusMode::free : CensusMode::constrained;
      const auto subset = nonflat_irreducible_rigid_set(mode, relations);
      const auto o = orbit_count(subset, aut.automorphisms);
      m.orbit_representatives = o.representatives;
      m.sections["symmetry"]["orbits"] = to_json(o, false);
      m.sections["symmetry"]["orbits"]["census_mode"] = to_string(mode);
      const bool flag = !run_free;
      p.claim("orbit_pigeonhole_bound", "floor(non-flat count / (|Aut| * 4))", "246", count_string(o.pigeonhole_bound),
              o.pigeonhole_bound == 246, flag);
      p.claim("orbit_count_at_least_bound", "orbits meeting the non-flat set number at least the pigeonhole bound",
              ">= " + count_string(o.pigeonhole_bound), count_string(o.orbit_count),
              o.orbit_count >= o.pigeonhole_bound && o.subset_coverage == o.subset_size);
    });
  };

  auto index_stage = [&] {
    p.stage("index", {}, [&] {
      const IndexInput gocho = gocho_example();
      const auto g = l2_index(gocho);
      const auto g_adj = l2_index(gocho, TraceConvention::adjoint);
      const IndexInput trivial{Rational(0), cyclic_group_data(2), trivial_character(3, 1)};
      const auto t = l2_index(trivial);
      m.sections["index"] = {{"gocho", to_json(gocho, g, TraceConvention::fundamental)},
                             {"gocho_adjoint_trace", to_json(gocho, g_adj, TraceConvention::adjoint)},
                             {"trivial_flat", to_json(trivial, t, TraceConvention::fundamental)}};
      p.claim("index_gocho", "index of the U(1) instanton on Eguchi-Hanson space", "0", g.to_string(),
              g.value == Cyclotomic(0) && g_adj.value == Cyclotomic(0));
      p.claim("index_trivial_flat", "index of the trivial flat SO(3) connection", "0", t.to_string(),
              t.value == Cyclotomic(0));
    });
  };

  if (run_free) {
    orbit_stage();
    index_stage();
    if (run_constrained) constrained_stage();
  } else {
    constrained_stage();
    orbit_stage();
    index_stage();
  }

  return m;
}

}  // namespace g2inst
