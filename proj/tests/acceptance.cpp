// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "g2inst/ale_index.hpp"
#include "g2inst/census.hpp"
#include "g2inst/g2_suite.hpp"
#include "g2inst/orbifold.hpp"
#include "g2inst/quaternion.hpp"
#include "g2inst/symmetry.hpp"

using namespace g2inst;

namespace {

int failures = 0;

void criterion(int n, const std::string& title, const std::function<std::string(bool&)>& body) {
  bool ok = false;
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d: %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", n, title.c_str(), detail.c_str(), s);
  std::fflush(stdout);
  failures += ok ? 0 : 1;
}

double seconds_of(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

}  // namespace

int main() {
  const RelationTable relations = relation_table();

  criterion(1, "singular set has 12 components in under 1 s", [](bool& ok) {
    std::size_t n = 0;
    const double s = seconds_of([&] { n = singular_components(gamma_group()); });
    ok = n == 12 && s < 1.0;
    return std::to_string(n) + " components, " + fmt(s);
  });

  criterion(2, "free census 1024128 / 1008126 by enumeration, single thread, under 60 s", [&](bool& ok) {
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    CensusReport r;
    const double s = seconds_of([&] { r = run_census(CensusMode::free, relations); });
    omp_set_num_threads(saved);
    ok = r.total == 1048576 && r.irreducible_and_rigid == 1024128 && r.nonflat_irreducible_rigid == 1008126 && s < 60.0;
    return std::to_string(r.irreducible_and_rigid) + " / " + std::to_string(r.nonflat_irreducible_rigid) + ", " + fmt(s);
  });

  criterion(3, "irreducible and rigid set equals the tau condition set", [](bool& ok) {
    const auto m = criterion_mismatches();
    ok = m == 0;
    return std::to_string(m) + " mismatches over 4^10";
  });

  criterion(4, "stabilizer of phi0 among 645120 signed permutations has 1344 elements, under 30 s", [](bool& ok) {
    std::size_t n = 0;
    const double s = seconds_of([&] { n = stabilizer_of_phi().size(); });
    ok = n == 1344 && s < 30.0;
    return std::to_string(n) + " elements, " + fmt(s);
  });

  criterion(5, "pigeonhole bound 246 and orbit count at least 246", [&](bool& ok) {
    const auto group = aut_orbifold();
    const auto subset = nonflat_irreducible_rigid_set(CensusMode::free, relations);
    const auto r = orbit_count(subset, group);
    ok = r.pigeonhole_bound == 246 && r.orbit_count >= r.pigeonhole_bound && r.subset_coverage == subset.size();
    return "bound " + std::to_string(r.pigeonhole_bound) + ", " + std::to_string(r.orbit_count) + " orbits, |Aut| " +
           std::to_string(r.group_order);
  });

  criterion(6, "index is 0 for the Eguchi-Hanson U(1) bundle and for the trivial flat connection", [](bool& ok) {
    const auto gocho = l2_index(gocho_example());
    const auto gocho_adj = l2_index(gocho_example(), TraceConvention::adjoint);
    const auto trivial = l2_index({Rational(0), cyclic_group_data(2), trivial_character(3, 1)});
    ok = gocho.value == Cyclotomic(0) && gocho_adj.value == Cyclotomic(0) && trivial.value == Cyclotomic(0);
    return "gocho " + gocho.to_string() + " (adjoint trace " + gocho_adj.to_string() + "), trivial " + trivial.to_string();
  });

  criterion(7, "G2 algebra property suite, exact, under 5 s", [](bool& ok) {
    std::vector<PropertyResult> r;
    const double s = seconds_of([&] { r = g2_check(1000); });
    ok = all_passed(r) && s < 5.0;
    return std::to_string(r.size()) + " properties, " + fmt(s);
  });

  criterion(8, "hyperkahler suite, exact, under 5 s", [](bool& ok) {
    std::vector<PropertyResult> r;
    const double s = seconds_of([&] { r = eh_verify(1000); });
    ok = all_passed(r) && s < 5.0;
    return std::to_string(r.size()) + " properties, " + fmt(s);
  });

  criterion(9, "relations are integer translations; constrained census reported with discrepancy flag", [&](bool& ok) {
    bool pure = true;
    for (const auto& rel : relations.all()) pure &= evaluate_word(rel.word).as_integer_translation().has_value();
    const auto free = run_census(CensusMode::free, relations);
    const auto c = run_census(CensusMode::constrained, relations);
    const bool differs = c.irreducible_and_rigid != free.irreducible_and_rigid ||
                         c.nonflat_irreducible_rigid != free.nonflat_irreducible_rigid;
    ok = pure && relations.squares.size() == 3 && relations.commutators.size() == 3 && c.total > 0 &&
         c.nonflat_irreducible_rigid <= c.irreducible_and_rigid && c.irreducible_and_rigid <= c.total;
    return std::string(pure ? "all pure translations" : "non-integral relation") + ", constrained " +
           std::to_string(c.total) + " / " + std::to_string(c.irreducible_and_rigid) + " / " +
           std::to_string(c.nonflat_irreducible_rigid) + (differs ? ", FLAGGED: differs from free mode" : "");
  });

  return failures == 0 ? 0 : 1;
}
