// Command-line front end for the census and its supporting checks.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "g2inst/ale_index.hpp"
#include "g2inst/census.hpp"
#include "g2inst/g2_suite.hpp"
#include "g2inst/orbifold.hpp"
#include "g2inst/quaternion.hpp"
#include "g2inst/report.hpp"
#include "g2inst/symmetry.hpp"
#include "g2inst/verify.hpp"

using namespace g2inst;

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return Json::parse(in);
}

int print_properties(const std::vector<PropertyResult>& results, bool as_json) {
  if (as_json) {
    std::cout << to_json(results).dump(2) << "\n";
  } else {
    for (const auto& r : results) std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.samples << ")\n";
  }
  return all_passed(results) ? 0 : 1;
}

std::vector<Cyclotomic> parse_chi(const std::string& list) {
  std::vector<Cyclotomic> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.emplace_back(parse_rational(item));
  return out;
}

std::string join_args(int argc, char** argv) {
  std::string s = "g2inst";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and holonomy census for flat SO(3) connections on T^7/Gamma"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber)
      ->each([](const std::string& n) {
        if (std::stoi(n) > 0) omp_set_num_threads(std::stoi(n));
      });
  bool as_json = false;
  app.add_flag("--json-output", as_json, "Print JSON instead of text where applicable");

  int rc = 0;

  // g2 check
  auto* g2 = app.add_subcommand("g2", "Model G2 structure");
  g2->require_subcommand(1);
  std::size_t g2_samples = 1000;
  auto* g2_check_cmd = g2->add_subcommand("check", "Exact identity suite for phi0 and psi0");
  g2_check_cmd->add_option("--samples", g2_samples, "Random inputs per sampled property")->check(CLI::PositiveNumber);
  g2_check_cmd->callback([&] { rc = print_properties(g2_check(g2_samples), as_json); });

  // eh verify
  auto* eh = app.add_subcommand("eh", "Eguchi-Hanson hyperkahler quotient");
  eh->require_subcommand(1);
  std::size_t eh_samples = 1000;
  auto* eh_verify_cmd = eh->add_subcommand("verify", "Moment map and symmetry identities on rational samples");
  eh_verify_cmd->add_option("--samples", eh_samples, "Random inputs per property")->check(CLI::PositiveNumber);
  eh_verify_cmd->callback([&] { rc = print_properties(eh_verify(eh_samples), as_json); });

  // group singular-set | relations
  auto* group = app.add_subcommand("group", "The orbifold group and its deck group");
  group->require_subcommand(1);
  group->add_subcommand("singular-set", "Components of the singular set")->callback([&] {
    const auto s = singular_set(gamma_group());
    if (as_json) {
      std::cout << to_json(s).dump(2) << "\n";
      return;
    }
    std::cout << s.component_count << "\n";
    for (const auto& t : s.representatives) std::cout << "  " << t.to_string() << "\n";
  });
  group->add_subcommand("relations", "Squares, commutators and conjugates in the deck group")->callback([&] {
    const auto table = relation_table();
    if (as_json) {
      std::cout << to_json(table).dump(2) << "\n";
      return;
    }
    for (const auto& r : table.all()) std::cout << r.name << " = tau^" << to_string(r.translation) << "\n";
  });

  // census run
  auto* census = app.add_subcommand("census", "Holonomy census over all 4^10 assignments");
  census->require_subcommand(1);
  std::string census_mode = "free";
  std::string census_out;
  auto* census_run = census->add_subcommand("run", "Count irreducible rigid assignments");
  census_run->add_option("--mode", census_mode, "free or constrained")->check(CLI::IsMember({"free", "constrained"}));
  census_run->add_option("--out", census_out, "Write the JSON report here");
  census_run->callback([&] {
    const auto report = run_census(census_mode_from_string(census_mode), relation_table());
    Json j = {{"census", to_json(report)}, {"timings", {{"seconds", report.seconds}, {"threads", report.threads}}}};
    if (!census_out.empty()) write_text(census_out, j.dump(2) + "\n");
    if (as_json) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << "mode: " << to_string(report.mode) << "\n"
              << "assignments: " << report.total << "\n"
              << "irreducible and rigid: " << report.irreducible_and_rigid << "\n"
              << "non-flat irreducible rigid: " << report.nonflat_irreducible_rigid << "\n";
  });

  // symmetry stabilizer | aut | orbits
  auto* symmetry = app.add_subcommand("symmetry", "Symmetries of phi0 and of the orbifold");
  symmetry->require_subcommand(1);
  bool list_elements = false;
  auto* stab_cmd = symmetry->add_subcommand("stabilizer", "Signed permutations preserving phi0");
  stab_cmd->add_flag("--list", list_elements, "Print every element");
  stab_cmd->callback([&] {
    const auto h = stabilizer_of_phi();
    std::cout << h.size() << "\n";
    if (list_elements)
      for (const auto& p : h) std::cout << p.to_string() << "\n";
  });
  symmetry->add_subcommand("aut", "Automorphisms of T^7/Gamma preserving phi0")->callback([&] {
    const auto report = aut_orbifold_report();
    if (as_json) {
      std::cout << to_json(report).dump(2) << "\n";
      return;
    }
    std::cout << "candidates: " << report.candidates << "\n"
              << "automorphisms: " << report.automorphisms.size() << "\n"
              << "equivariance form admits: " << report.equivariance_count
              << (report.equivariance_agrees ? " (same set)" : " (different set)") << "\n"
              << "equals K with half translations: " << (report.matches_k_and_half_translations ? "yes" : "no") << "\n";
  });
  std::string orbit_census, orbit_out, orbit_csv_path;
  auto* orbits_cmd = symmetry->add_subcommand("orbits", "Orbits of non-flat irreducible rigid assignments");
  orbits_cmd->add_option("--census", orbit_census, "Census report from `census run --out`")->check(CLI::ExistingFile);
  orbits_cmd->add_option("--out", orbit_out, "Write the orbit report (with representatives) here");
  orbits_cmd->add_option("--csv", orbit_csv_path, "Write representatives as CSV here");
  orbits_cmd->callback([&] {
    CensusMode mode = CensusMode::free;
    const auto relations = relation_table();
    std::optional<CensusReport> expected;
    if (!orbit_census.empty()) {
      expected = census_from_json(read_json(orbit_census));
      mode = expected->mode;
    }
    const auto subset = nonflat_irreducible_rigid_set(mode, relations);
    if (expected && expected->nonflat_irreducible_rigid != subset.size())
      throw std::runtime_error("census report lists " + count_string(expected->nonflat_irreducible_rigid) +
                               " non-flat assignments, recomputed " + count_string(subset.size()));
    const auto report = orbit_count(subset, aut_orbifold());
    Json j = to_json(report, true);
    j["census_mode"] = to_string(mode);
    if (!orbit_out.empty()) write_text(orbit_out, j.dump(2) + "\n");
    if (!orbit_csv_path.empty()) write_text(orbit_csv_path, orbit_csv(report.representatives));
    if (as_json) {
      std::cout << to_json(report, false).dump(2) << "\n";
      return;
    }
    std::cout << "census mode: " << to_string(mode) << "\n"
              << "subset: " << report.subset_size << "\n"
              << "group order: " << report.group_order << " (" << report.effective_group_order
              << " distinct actions)\n"
              << "pigeonhole bound: " << report.pigeonhole_bound << "\n"
              << "pigeonhole bound with |K| * 4: " << report.pigeonhole_bound_k_only << "\n"
              << "orbits: " << report.orbit_count << "\n";
  });

  // index compute
  auto* index = app.add_subcommand("index", "L^2 index on ALE spaces");
  index->require_subcommand(1);
  std::string p1_text = "0", group_spec, chi_text, trace_text = "fundamental";
  int dim = 0;
  auto* index_cmd = index->add_subcommand("compute", "Evaluate the character sum exactly");
  index_cmd->add_option("--p1", p1_text, "Integral of p1(Ad P), rational");
  index_cmd->add_option("--group", group_spec, "zk:<k>")->required();
  index_cmd->add_option("--chi", chi_text, "Comma-separated character values on g, g^2, ..., g^(k-1)")->required();
  index_cmd->add_option("--dim", dim, "Dimension of the Lie algebra")->required()->check(CLI::PositiveNumber);
  index_cmd->add_option("--trace", trace_text, "fundamental or adjoint")
      ->check(CLI::IsMember({"fundamental", "adjoint"}));
  index_cmd->callback([&] {
    const IndexInput input{parse_rational(p1_text), group_from_spec(group_spec), AdjointCharacter{dim, parse_chi(chi_text)}};
    const auto convention = trace_convention_from_string(trace_text);
    const auto result = l2_index(input, convention);
    if (as_json) {
      std::cout << to_json(input, result, convention).dump(2) << "\n";
    } else {
      std::cout << result.to_string() << "\n";
    }
    if (!result.warning.empty()) std::cerr << "warning: " << result.warning << "\n";
  });

  // verify-paper
  std::string verify_json, verify_csv, verify_mode = "both";
  std::size_t verify_samples = 1000;
  auto* verify = app.add_subcommand("verify-paper", "Rerun every check and emit a manifest");
  verify->add_option("--json", verify_json, "Manifest path, or - for standard output");
  verify->add_option("--csv", verify_csv, "Orbit representatives as CSV");
  verify->add_option("--mode", verify_mode, "both, free or constrained")
      ->check(CLI::IsMember({"both", "free", "constrained"}));
  verify->add_option("--samples", verify_samples, "Random inputs per sampled property")->check(CLI::PositiveNumber);
  verify->callback([&] {
    VerifyOptions options;
    options.mode = verify_mode_from_string(verify_mode);
    options.samples = verify_samples;
    options.command_line = join_args(argc, argv);
    const auto manifest = verify_paper(options);
    std::ostream& table = verify_json == "-" ? std::cerr : std::cout;
    for (const auto& c : manifest.claims)
      table << to_string(c.status) << "  " << c.id << ": " << c.observed << " (expected " << c.expected << ")\n";
    if (!verify_json.empty()) write_text(verify_json, manifest.to_json().dump(2) + "\n");
    if (!verify_csv.empty()) write_text(verify_csv, orbit_csv(manifest.orbit_representatives));
    rc = manifest.exit_code();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
