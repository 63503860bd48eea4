#pragma once

// Lattice isometries preserving phi0, automorphisms of the orbifold T^7/Gamma,
// their action on holonomy assignments, and the orbit count of the census.

#include <array>
#include <string>
#include <cstdint>
#include <span>
#include <vector>

#include "g2inst/census.hpp"
#include "g2inst/orbifold.hpp"
#include "g2inst/signed_permutation.hpp"

namespace g2inst {

/// Integer pullback check of phi0 under a signed permutation.
bool preserves_phi(const SignedPermutation& p);

/// All signed permutations fixing phi0 (OpenMP filter over 2^7 * 7!), ascending.
std::vector<SignedPermutation> stabilizer_of_phi();

/// Affine map x -> linear x + translation with translation in {0, 1/2}^7.
struct OrbifoldAutomorphism {
  SignedPermutation linear;
  Translation7 translation{};

  AffineIsometry as_affine(AffineMode mode) const { return {linear, translation, mode}; }
  std::string to_string() const { return as_affine(AffineMode::deck).to_string(); }

  friend bool operator==(const OrbifoldAutomorphism&, const OrbifoldAutomorphism&) = default;
};

/// f g f^-1 in Gamma for every g in Gamma (torus mode).
bool normalizes_gamma(const OrbifoldAutomorphism& f);
/// For every g1 in Gamma some g2 in Gamma has g2 f g1 = f (torus mode).
bool satisfies_equivariance(const OrbifoldAutomorphism& f);

/// Diagonal generators of K, i.e. the linear parts of alpha, beta, gamma.
std::array<SignedPermutation, 3> k_generators();

struct AutomorphismReport {
  std::vector<OrbifoldAutomorphism> automorphisms;  // normalizer condition
  std::size_t candidates = 0;                       // |H| * 2^7
  std::size_t equivariance_count = 0;               // admitted by the g2 f g1 = f form
  bool equivariance_agrees = false;                 // same set as the normalizer condition
  bool matches_k_and_half_translations = false;     // equals <K, {0,1/2}^7>
};

/// Generators of <K, {0,1/2}^7>: the three diagonal maps and the seven half translations.
std::vector<OrbifoldAutomorphism> aut_generators();

/// Candidates: linear part in stabilizer_of_phi(), translation in {0,1/2}^7.
AutomorphismReport aut_orbifold_report();
std::vector<OrbifoldAutomorphism> aut_orbifold();

/// rho'(g) = rho(w) * prod_i rho(tau_i)^{t_i}, where f g f^-1 = tau^t w with w
/// one of the eight words alpha^e1 beta^e2 gamma^e3. Throws std::logic_error
/// if f does not normalize the deck group.
HolonomyAssignment induced_action(const OrbifoldAutomorphism& f, const HolonomyAssignment& rho);

/// induced_action as an F2-linear map on packed assignments:
/// rho'(g) = product of rho(j) over the bits j of masks[g].
struct AssignmentTransform {
  std::array<std::uint16_t, kGeneratorCount> masks{};

  static AssignmentTransform of(const OrbifoldAutomorphism& f);
  PackedAssignment apply(PackedAssignment rho) const;

  friend bool operator==(const AssignmentTransform&, const AssignmentTransform&) = default;
  friend auto operator<=>(const AssignmentTransform&, const AssignmentTransform&) = default;
};

/// Distinct transforms induced by a group of automorphisms, ascending.
std::vector<AssignmentTransform> distinct_transforms(std::span<const OrbifoldAutomorphism> group);

/// Orbits of the induced action that meet a subset of assignments. The
/// subset need not be invariant (the non-flat condition is not preserved by
/// half translations), so an orbit is counted once if any member lies in it.
struct OrbitReport {
  std::uint64_t group_order = 0;            // automorphisms supplied
  std::uint64_t effective_group_order = 0;  // distinct induced transforms
  std::uint64_t subset_size = 0;
  std::uint64_t orbit_count = 0;       // orbits meeting the subset
  std::uint64_t orbit_size_sum = 0;    // full sizes of those orbits
  std::uint64_t subset_coverage = 0;   // sum of |orbit & subset|, equals subset_size
  std::uint64_t pigeonhole_bound = 0;         // floor(subset / (group_order * 4))
  std::uint64_t pigeonhole_bound_k_only = 0;  // floor(subset / (|K| * 4))
  std::vector<PackedAssignment> representatives;  // least subset member of each orbit, ascending
  double seconds = 0;

  bool subset_invariant() const { return orbit_size_sum == subset_coverage; }
};

/// OpenMP over the subset: x is a representative iff no image of x under the
/// group is a smaller subset member. `subset` must be sorted and the group closed.
OrbitReport orbit_count(std::span<const PackedAssignment> subset, std::span<const OrbifoldAutomorphism> group);

/// Burnside: (1/|G|) sum over distinct transforms of the number of fixed members
/// of `invariant_set`. Only meaningful for an invariant set.
std::uint64_t burnside_orbit_count(std::span<const PackedAssignment> invariant_set,
                                   std::span<const OrbifoldAutomorphism> group);

namespace reference {

/// preserves_phi over LinearMap7 with exact rational pullback, serial.
std::vector<SignedPermutation> stabilizer_of_phi_serial();

/// Breadth-first orbit enumeration under a generating set, each generator's
/// action tabulated from induced_action on the twenty basis assignments.
/// group_order and the bounds are taken from `group_order`.
OrbitReport orbit_count_serial(std::span<const PackedAssignment> subset,
                               std::span<const OrbifoldAutomorphism> generators, std::uint64_t group_order);

}  // namespace reference

}  // namespace g2inst
