#include "g2inst/report.hpp"

#include <stdexcept>

namespace g2inst {

Json to_json(const std::vector<PropertyResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) out.push_back({{"name", r.name}, {"passed", r.passed}, {"samples", count_string(r.samples)}});
  return out;
}

Json to_json(const SingularSetReport& report) {
  Json per = Json::array();
  for (const auto& e : report.per_element) {
    Json tori = Json::array();
    for (const auto& t : e.tori) tori.push_back(t.to_string());
    per.push_back({{"element", e.element.to_string()}, {"fixed_tori", count_string(e.tori.size())}, {"tori", tori}});
  }
  Json reps = Json::array();
  for (const auto& t : report.representatives) reps.push_back(t.to_string());
  return {{"components", count_string(report.component_count)}, {"representatives", reps}, {"per_element", per}};
}

Json to_json(const RelationTable& table) {
  auto rows = [](const std::vector<Relation>& rs) {
    Json out = Json::array();
    for (const auto& r : rs)
      out.push_back({{"relation", r.name}, {"translation", to_string(r.translation)}, {"parity_mask", r.parity_mask()}});
    return out;
  };
  return {{"squares", rows(table.squares)}, {"commutators", rows(table.commutators)}, {"conjugates", rows(table.conjugates)}};
}

Json to_json(const CensusReport& report) {
  return {{"mode", to_string(report.mode)},
          {"total", count_string(report.total)},
          {"irreducible_and_rigid", count_string(report.irreducible_and_rigid)},
          {"nonflat_irreducible_rigid", count_string(report.nonflat_irreducible_rigid)}};
}

Json to_json(const AutomorphismReport& report) {
  return {{"candidates", count_string(report.candidates)},
          {"automorphisms", count_string(report.automorphisms.size())},
          {"equivariance_form_count", count_string(report.equivariance_count)},
          {"equivariance_form_agrees", report.equivariance_agrees},
          {"equals_k_with_half_translations", report.matches_k_and_half_translations}};
}

Json to_json(const OrbitReport& report, bool with_representatives) {
  Json out = {{"group_order", count_string(report.group_order)},
              {"effective_group_order", count_string(report.effective_group_order)},
              {"subset_size", count_string(report.subset_size)},
              {"orbit_count", count_string(report.orbit_count)},
              {"orbit_size_sum", count_string(report.orbit_size_sum)},
              {"subset_coverage", count_string(report.subset_coverage)},
              {"subset_invariant", report.subset_invariant()},
              {"pigeonhole_bound", count_string(report.pigeonhole_bound)},
              {"pigeonhole_bound_k_only", count_string(report.pigeonhole_bound_k_only)}};
  if (with_representatives) {
    Json reps = Json::array();
    for (const auto r : report.representatives) reps.push_back(HolonomyAssignment::unpack(r).to_string());
    out["representatives"] = reps;
  }
  return out;
}

Json to_json(const IndexInput& input, const IndexResult& result, TraceConvention convention) {
  Json chi = Json::array();
  for (const auto& v : input.character.values) chi.push_back(v.to_string());
  Json out = {{"group", input.group.name},
              {"p1", to_string(input.p1_integral)},
              {"dim", input.character.dim},
              {"chi", chi},
              {"trace", to_string(convention)},
              {"index", result.to_string()},
              {"integral", result.integral}};
  if (!result.warning.empty()) out["warning"] = result.warning;
  return out;
}

CensusReport census_from_json(const Json& j) {
  try {
    const Json& c = j.contains("census") ? j.at("census") : j;
    CensusReport r;
    r.mode = census_mode_from_string(c.at("mode").get<std::string>());
    r.total = std::stoull(c.at("total").get<std::string>());
    r.irreducible_and_rigid = std::stoull(c.at("irreducible_and_rigid").get<std::string>());
    r.nonflat_irreducible_rigid = std::stoull(c.at("nonflat_irreducible_rigid").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed census report: ") + e.what());
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(std::string("malformed census report: ") + e.what());
  }
}

std::string orbit_csv(std::span<const PackedAssignment> representatives) {
  std::string out;
  for (int g = 0; g < kGeneratorCount; ++g) out += generator_name(g) + (g + 1 < kGeneratorCount ? "," : "\n");
  for (const auto r : representatives) {
    const std::string letters = HolonomyAssignment::unpack(r).to_string();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      out += letters[i];
      out += i + 1 < letters.size() ? ',' : '\n';
    }
  }
  return out;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace g2inst
