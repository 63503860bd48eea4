#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "g2inst/forms.hpp"
#include "g2inst/symmetry.hpp"

using namespace g2inst;

namespace {

const std::vector<OrbifoldAutomorphism>& automorphisms() {
  static const auto group = aut_orbifold();
  return group;
}

std::vector<PackedAssignment> irreducible_rigid_set(CensusMode mode) {
  const SignGrid grid;
  const auto constraints = relation_constraints(relation_table());
  std::vector<PackedAssignment> out;
  for (PackedAssignment p = 0; p < kAssignmentCount; ++p)
    if (grid.irreducible(p) && grid.rigid(p) && (mode == CensusMode::free || satisfies_relations(p, constraints)))
      out.push_back(p);
  return out;
}

OrbifoldAutomorphism compose(const OrbifoldAutomorphism& f, const OrbifoldAutomorphism& g) {
  const auto h = g2inst::compose(f.as_affine(AffineMode::torus), g.as_affine(AffineMode::torus));
  return {h.linear(), h.translation()};
}

}  // namespace

TEST_CASE("stabilizer of phi0 has order 1344") {
  const auto h = stabilizer_of_phi();
  CHECK(h.size() == 1344);
  CHECK(std::is_sorted(h.begin(), h.end()));
  const std::set<SignedPermutation> set(h.begin(), h.end());
  for (const auto& k : k_generators()) CHECK(set.count(k) == 1);
  std::mt19937_64 rng(5);
  for (int n = 0; n < 300; ++n) {
    const auto& a = h[rng() % h.size()];
    const auto& b = h[rng() % h.size()];
    CHECK(set.count(a * b) == 1);
    CHECK(set.count(a.inverse()) == 1);
  }
  // Preserving phi0 and orientation preserves psi0 = *phi0.
  for (int n = 0; n < 20; ++n) {
    const auto& a = h[rng() % h.size()];
    CHECK(pullback(a.to_linear_map(), standard_psi()) == standard_psi());
  }
}

TEST_CASE("integer stabilizer kernel matches the exact rational pullback") {
  const auto fast = stabilizer_of_phi();
  const auto slow = reference::stabilizer_of_phi_serial();
  CHECK(fast == slow);
}

TEST_CASE("automorphism group of the orbifold") {
  const auto report = aut_orbifold_report();
  CHECK(report.automorphisms.size() == 1024);
  CHECK(report.candidates == 1344 * 128);
  CHECK(report.equivariance_count == 1024);
  CHECK(report.equivariance_agrees);
  CHECK(report.matches_k_and_half_translations);
  CHECK(aut_generators().size() == 10);
  for (const auto& f : aut_generators()) CHECK(normalizes_gamma(f));
  // A quarter translation does not normalize Gamma.
  OrbifoldAutomorphism quarter;
  quarter.translation[0] = make_rational(1, 4);
  quarter.translation[3] = make_rational(1, 4);
  CHECK_FALSE(normalizes_gamma(quarter));
  CHECK_THROWS_AS(induced_action(quarter, HolonomyAssignment{}), std::logic_error);
}

TEST_CASE("induced action composes and agrees with its tabulated form") {
  const auto& group = automorphisms();
  std::mt19937_64 rng(77);
  for (int n = 0; n < 1000; ++n) {
    const auto& f1 = group[rng() % group.size()];
    const auto& f2 = group[rng() % group.size()];
    const auto rho = HolonomyAssignment::unpack(static_cast<PackedAssignment>(rng() % kAssignmentCount));
    // rho'(g) = rho(f g f^-1): acting by f1 f2 is acting by f1, then by f2.
    CHECK(induced_action(compose(f1, f2), rho) == induced_action(f2, induced_action(f1, rho)));
    // The group is abelian on the torus, so the other order holds as well.
    CHECK(induced_action(compose(f1, f2), rho) == induced_action(f1, induced_action(f2, rho)));
    CHECK(AssignmentTransform::of(f1).apply(rho.pack()) == induced_action(f1, rho).pack());
  }
  CHECK(distinct_transforms(group).size() == 1024);
}

TEST_CASE("induced action on small examples") {
  std::mt19937_64 rng(12);
  const auto rho = HolonomyAssignment::unpack(static_cast<PackedAssignment>(rng() % kAssignmentCount));
  CHECK(induced_action(OrbifoldAutomorphism{}, rho) == rho);
  OrbifoldAutomorphism half6;
  half6.translation[5] = make_rational(1, 2);
  CHECK(normalizes_gamma(half6));
  OrbifoldAutomorphism half1;
  half1.translation[0] = make_rational(1, 2);
  CHECK(normalizes_gamma(half1));
  const auto image = induced_action(half6, rho);
  // Generators negating x6 pick up a factor tau_6; beta is one of them.
  for (int g = 0; g < 3; ++g) {
    const bool negates = deck_generator(g, AffineMode::deck).linear().diagonal_entries()[5] == -1;
    CHECK(image[g] == (negates ? rho[g] * rho.tau(6) : rho[g]));
  }
  CHECK(image[1] == rho[1] * rho.tau(6));
  for (int i = 1; i <= 7; ++i) CHECK(image.tau(i) == rho.tau(i));
  // Consequently flatness on the resolution is not an invariant.
  const auto flat = HolonomyAssignment::parse("IIIabIIIaI");
  CHECK(is_flat_on_resolution(flat));
  CHECK_FALSE(is_flat_on_resolution(induced_action(half6, flat)));
  // Orbit of tau_1 -> a, tau_2 -> b stays within the group order.
  const auto seed = HolonomyAssignment::parse("IIIabIIIII").pack();
  std::set<PackedAssignment> orbit;
  for (const auto& f : automorphisms()) orbit.insert(AssignmentTransform::of(f).apply(seed));
  CHECK(orbit.size() <= 4096);
}

TEST_CASE("irreducible and rigid classes are unions of orbits, over the full census") {
  const SignGrid grid;
  std::size_t changed = 0;
  for (const auto& f : aut_generators()) {
    const auto t = AssignmentTransform::of(f);
    for (PackedAssignment p = 0; p < kAssignmentCount; ++p) {
      const PackedAssignment q = t.apply(p);
      changed += grid.irreducible(q) != grid.irreducible(p) || grid.rigid(q) != grid.rigid(p);
    }
  }
  CHECK(changed == 0);
}

TEST_CASE("irreducibility, rigidity and the relations are preserved by the action") {
  const auto& group = automorphisms();
  const auto constraints = relation_constraints(relation_table());
  std::mt19937_64 rng(8);
  for (int n = 0; n < 3000; ++n) {
    const auto& f = group[rng() % group.size()];
    const auto rho = HolonomyAssignment::unpack(static_cast<PackedAssignment>(rng() % kAssignmentCount));
    const auto image = induced_action(f, rho);
    CHECK(is_irreducible(image) == is_irreducible(rho));
    CHECK(is_rigid(image) == is_rigid(rho));
    CHECK(satisfies_relations(image.pack(), constraints) == satisfies_relations(rho.pack(), constraints));
  }
}

TEST_CASE("constrained orbits: parallel, serial BFS and Burnside agree") {
  const auto& group = automorphisms();
  const auto relations = relation_table();
  const auto subset = nonflat_irreducible_rigid_set(CensusMode::constrained, relations);
  REQUIRE(subset.size() == 13230);
  const auto fast = orbit_count(subset, group);
  const auto gens = aut_generators();
  const auto slow = reference::orbit_count_serial(subset, gens, group.size());
  CHECK(fast.orbit_count == 1680);
  CHECK(slow.orbit_count == fast.orbit_count);
  CHECK(slow.representatives == fast.representatives);
  CHECK(fast.subset_coverage == subset.size());
  CHECK(burnside_orbit_count(irreducible_rigid_set(CensusMode::constrained), group) == fast.orbit_count);
}

TEST_CASE("free orbits: 29280 orbits meet the non-flat set") {
  const auto& group = automorphisms();
  const auto subset = nonflat_irreducible_rigid_set(CensusMode::free, relation_table());
  const auto report = orbit_count(subset, group);
  CHECK(report.group_order == 1024);
  CHECK(report.effective_group_order == 1024);
  CHECK(report.subset_size == 1008126);
  CHECK(report.subset_coverage == 1008126);
  CHECK(report.orbit_count == 29280);
  CHECK(report.representatives.size() == report.orbit_count);
  CHECK(std::is_sorted(report.representatives.begin(), report.representatives.end()));
  CHECK_FALSE(report.subset_invariant());
  CHECK(report.orbit_count >= report.pigeonhole_bound);
  // Bounds with the 4096 denominator and with |K| = 8 only.
  CHECK(report.pigeonhole_bound == 246);
  CHECK(report.pigeonhole_bound_k_only == 31503);
  // Every representative is the least subset member of its orbit.
  const auto transforms = distinct_transforms(group);
  std::mt19937_64 rng(4);
  for (int n = 0; n < 200; ++n) {
    const PackedAssignment r = report.representatives[rng() % report.representatives.size()];
    for (const auto& t : transforms) {
      const PackedAssignment image = t.apply(r);
      if (image < r) CHECK_FALSE(std::binary_search(subset.begin(), subset.end(), image));
    }
  }
  // The irreducible rigid set is invariant, and Burnside counts the same orbits on it.
  CHECK(burnside_orbit_count(irreducible_rigid_set(CensusMode::free), group) == 29280);
}
