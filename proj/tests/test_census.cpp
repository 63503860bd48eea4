#include <chrono>
#include <random>

#include "doctest.h"
#include "g2inst/census.hpp"

using namespace g2inst;

namespace {

constexpr TargetElement kI = TargetElement::I, kA = TargetElement::a, kB = TargetElement::b, kC = TargetElement::c;

// Applies a permutation of the labels a, b, c to every image.
HolonomyAssignment relabel(const HolonomyAssignment& rho, const std::array<TargetElement, 4>& map) {
  HolonomyAssignment out;
  for (int g = 0; g < kGeneratorCount; ++g) out[g] = map[static_cast<int>(rho[g])];
  return out;
}

}  // namespace

TEST_CASE("Klein four-group") {
  CHECK(kA * kB == kC);
  CHECK(kB * kC == kA);
  CHECK(kA * kA == kI);
  CHECK(ad_signs(kA) == std::array<int, 3>{1, -1, -1});
  CHECK(ad_signs(kB) == std::array<int, 3>{-1, 1, -1});
  CHECK(ad_signs(kC) == std::array<int, 3>{-1, -1, 1});
  CHECK(ad_signs(kI) == std::array<int, 3>{1, 1, 1});
  CHECK(target_from_letter('b') == kB);
  CHECK_THROWS_AS(target_from_letter('x'), std::invalid_argument);
}

TEST_CASE("packing is lexicographic") {
  const auto rho = HolonomyAssignment::parse("abcIIIIaIc");
  CHECK(rho.to_string() == "abcIIIIaIc");
  CHECK(HolonomyAssignment::unpack(rho.pack()) == rho);
  CHECK(HolonomyAssignment::parse("aIIIIIIIII").pack() > HolonomyAssignment::parse("Iccccccccc").pack());
  CHECK(packed_image(rho.pack(), 0) == kA);
  CHECK(packed_image(rho.pack(), 9) == kC);
  CHECK(rho.tau(5) == kA);
  CHECK_THROWS_AS(HolonomyAssignment::parse("abc"), std::invalid_argument);
}

TEST_CASE("predicates on hand-made assignments") {
  const auto trivial = HolonomyAssignment::parse("IIIIIIIIII");
  CHECK_FALSE(is_irreducible(trivial));
  // Gamma fixes no vector of R^7, so D_g (x) Id already has no common fixed vector.
  CHECK(is_rigid(trivial));
  CHECK(is_flat_on_resolution(trivial));
  // tau_1 -> a, tau_2 -> b: every so(3) axis and every (coordinate, axis) pair is negated.
  const auto two = HolonomyAssignment::parse("IIIabIIIII");
  CHECK(is_irreducible(two));
  CHECK(is_rigid(two));
  CHECK(tau_condition(two));
  // Trivial on every tau: irreducible, but the pair fails the census.
  const auto torsion = HolonomyAssignment::parse("abcIIIIIII");
  CHECK(is_irreducible(torsion));
  CHECK_FALSE(is_rigid(torsion));
  CHECK(reference::rigid_fixed_dimension(torsion) > 0);
  CHECK_FALSE(tau_condition(torsion));
  CHECK_FALSE(is_flat_on_resolution(torsion));
}

TEST_CASE("sign grid agrees with the per-assignment predicates") {
  const SignGrid grid;
  std::mt19937_64 rng(42);
  for (int n = 0; n < 20000; ++n) {
    const PackedAssignment p = static_cast<PackedAssignment>(rng() % kAssignmentCount);
    const auto rho = HolonomyAssignment::unpack(p);
    CHECK(grid.irreducible(p) == is_irreducible(rho));
    CHECK(grid.rigid(p) == is_rigid(rho));
  }
}

TEST_CASE("exact fixed-space dimensions agree with the sign criterion on 10k samples") {
  std::mt19937_64 rng(2024);
  for (int n = 0; n < 10000; ++n) {
    const auto rho = HolonomyAssignment::unpack(static_cast<PackedAssignment>(rng() % kAssignmentCount));
    CHECK((reference::adjoint_fixed_dimension(rho) == 0) == is_irreducible(rho));
    if (n % 4 == 0) CHECK((reference::rigid_fixed_dimension(rho) == 0) == is_rigid(rho));
  }
  CHECK(reference::adjoint_fixed_dimension(HolonomyAssignment{}) == 3);
  CHECK(reference::rigid_fixed_dimension(HolonomyAssignment{}) == 0);
  // All images in {I, a}: L_a is fixed.
  CHECK(reference::adjoint_fixed_dimension(HolonomyAssignment::parse("aIaIaIIaII")) == 1);
}

TEST_CASE("free census: 1024128 and 1008126 by enumeration") {
  const auto relations = relation_table();
  const auto start = std::chrono::steady_clock::now();
  const auto report = run_census(CensusMode::free, relations);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(report.total == 1048576);
  CHECK(report.irreducible_and_rigid == 1024128);
  CHECK(report.nonflat_irreducible_rigid == 1008126);
  CHECK(seconds < 60.0);
  CHECK(closed_form_irreducible_rigid() == 1024128);
  CHECK(closed_form_nonflat() == 1008126);
}

TEST_CASE("serial reference reproduces both census modes") {
  const auto relations = relation_table();
  for (const auto mode : {CensusMode::free, CensusMode::constrained}) {
    const auto fast = run_census(mode, relations);
    const auto slow = reference::run_census_serial(mode, relations);
    CHECK(fast.total == slow.total);
    CHECK(fast.irreducible_and_rigid == slow.irreducible_and_rigid);
    CHECK(fast.nonflat_irreducible_rigid == slow.nonflat_irreducible_rigid);
  }
}

TEST_CASE("criterion equivalence over all 4^10 assignments") { CHECK(criterion_mismatches() == 0); }

TEST_CASE("constrained census") {
  const auto relations = relation_table();
  const auto constraints = relation_constraints(relations);
  const auto report = run_census(CensusMode::constrained, relations);
  CHECK(report.total == 16384);
  CHECK(report.irreducible_and_rigid == 13440);
  CHECK(report.nonflat_irreducible_rigid == 13230);
  // The commutator relations force tau_5, tau_6, tau_7 to the identity.
  for (const char* s : {"IIIIIIIaII", "IIIIIIIIaI", "IIIIIIIIIa"})
    CHECK_FALSE(satisfies_relations(HolonomyAssignment::parse(s).pack(), constraints));
  CHECK(satisfies_relations(HolonomyAssignment::parse("abcabcaIII").pack(), constraints));
}

TEST_CASE("relabeling a, b, c preserves every predicate") {
  const std::array<std::array<TargetElement, 4>, 5> maps = {{{kI, kB, kA, kC},
                                                            {kI, kC, kB, kA},
                                                            {kI, kA, kC, kB},
                                                            {kI, kB, kC, kA},
                                                            {kI, kC, kA, kB}}};
  std::mt19937_64 rng(9);
  for (int n = 0; n < 5000; ++n) {
    const auto rho = HolonomyAssignment::unpack(static_cast<PackedAssignment>(rng() % kAssignmentCount));
    for (const auto& m : maps) {
      const auto r = relabel(rho, m);
      CHECK(is_irreducible(r) == is_irreducible(rho));
      CHECK(is_rigid(r) == is_rigid(rho));
      CHECK(is_flat_on_resolution(r) == is_flat_on_resolution(rho));
    }
  }
}

TEST_CASE("non-flat set is sorted and matches the count") {
  const auto set = nonflat_irreducible_rigid_set(CensusMode::free, relation_table());
  CHECK(set.size() == 1008126);
  CHECK(std::is_sorted(set.begin(), set.end()));
  CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
}

TEST_CASE("mode strings") {
  CHECK(census_mode_from_string("constrained") == CensusMode::constrained);
  CHECK(to_string(CensusMode::free) == "free");
  CHECK_THROWS_AS(census_mode_from_string("loose"), std::invalid_argument);
}
