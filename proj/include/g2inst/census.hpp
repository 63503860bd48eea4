#pragma once

// Census of flat SO(3) connections on T^7/Gamma with holonomy in the Klein
// four-group <a, b, c> = {diag(1,-1,-1), diag(-1,1,-1), diag(-1,-1,1)}.
//
// An assignment sends each of the ten deck generators (alpha, beta, gamma,
// tau_1..tau_7) to an element of <a, b, c>. A connection is irreducible
// (rigid) iff the induced action on so(3) (on R^7 (x) so(3)) has no nonzero
// fixed vector. Every operator involved is diagonal with +-1 entries, so
// both tests reduce to a sign grid: each basis vector must be negated by
// some generator. run_census evaluates that grid bit-parallel over all
// 4^10 assignments; reference:: keeps an exact linear-algebra version.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "g2inst/orbifold.hpp"

namespace g2inst {

/// 2-bit code, group law = XOR.
enum class TargetElement : std::uint8_t { I = 0, a = 1, b = 2, c = 3 };

inline TargetElement operator*(TargetElement x, TargetElement y) {
  return static_cast<TargetElement>(static_cast<std::uint8_t>(x) ^ static_cast<std::uint8_t>(y));
}
char letter(TargetElement t);
TargetElement target_from_letter(char c);

/// Signs of Ad(t) on the basis (L_a, L_b, L_c) of so(3).
std::array<int, 3> ad_signs(TargetElement t);

/// Number of assignments, 4^10.
inline constexpr std::uint32_t kAssignmentCount = 1u << (2 * kGeneratorCount);

/// Packed form: generator g occupies bits 2*(9-g)..2*(9-g)+1, so numeric
/// order is lexicographic order of (rho(alpha), ..., rho(tau_7)).
using PackedAssignment = std::uint32_t;

class HolonomyAssignment {
 public:
  HolonomyAssignment() { images_.fill(TargetElement::I); }
  explicit HolonomyAssignment(std::array<TargetElement, kGeneratorCount> images) : images_(images) {}

  static HolonomyAssignment unpack(PackedAssignment packed);
  /// Ten letters from {I, a, b, c}; throws std::invalid_argument.
  static HolonomyAssignment parse(const std::string& letters);

  PackedAssignment pack() const;
  std::string to_string() const;

  TargetElement operator[](int generator) const { return images_[generator]; }
  TargetElement& operator[](int generator) { return images_[generator]; }
  TargetElement tau(int i) const { return images_[2 + i]; }  // i in 1..7

  friend bool operator==(const HolonomyAssignment&, const HolonomyAssignment&) = default;

 private:
  std::array<TargetElement, kGeneratorCount> images_;
};

inline TargetElement packed_image(PackedAssignment p, int generator) {
  return static_cast<TargetElement>((p >> (2 * (kGeneratorCount - 1 - generator))) & 3u);
}

bool is_irreducible(const HolonomyAssignment& rho);
bool is_rigid(const HolonomyAssignment& rho);
/// rho(alpha) = rho(beta) = rho(gamma) = I.
bool is_flat_on_resolution(const HolonomyAssignment& rho);
/// At least two of tau_1..tau_7 are sent to different non-identity elements.
bool tau_condition(const HolonomyAssignment& rho);

/// Parity masks of the relations; rho satisfies them iff for every mask the
/// product of rho(g) over g in the mask is I.
std::vector<std::uint16_t> relation_constraints(const RelationTable& relations);
bool satisfies_relations(PackedAssignment rho, const std::vector<std::uint16_t>& constraints);

enum class CensusMode { free, constrained };
std::string to_string(CensusMode mode);
CensusMode census_mode_from_string(const std::string& text);

struct CensusReport {
  CensusMode mode = CensusMode::free;
  std::uint64_t total = 0;
  std::uint64_t irreducible_and_rigid = 0;
  std::uint64_t nonflat_irreducible_rigid = 0;
  double seconds = 0;
  int threads = 1;
};

/// Precomputed sign grid for the ten generators.
class SignGrid {
 public:
  SignGrid();

  /// Bit (3*coord + axis) set iff D_g[coord] * Ad(t)[axis] = -1.
  std::uint32_t rigid_mask(int generator, TargetElement t) const { return rigid_[generator][static_cast<int>(t)]; }
  /// Bit axis set iff Ad(t)[axis] = -1.
  static std::uint32_t adjoint_mask(TargetElement t);

  bool irreducible(PackedAssignment rho) const;
  bool rigid(PackedAssignment rho) const;

  static constexpr std::uint32_t kAllAxes = 0x7;
  static constexpr std::uint32_t kAllPairs = (1u << 21) - 1;

 private:
  std::array<std::array<std::uint32_t, 4>, kGeneratorCount> rigid_{};
};

/// OpenMP kernel over contiguous ranges of the assignment space.
CensusReport run_census(CensusMode mode, const RelationTable& relations);

/// Closed forms: 4^10 - 4^3 (2^7 3 - 2) and that minus 4^7 - (2^7 3 - 2).
std::uint64_t closed_form_irreducible_rigid();
std::uint64_t closed_form_nonflat();

/// Assignments where (irreducible and rigid) disagrees with tau_condition.
std::uint64_t criterion_mismatches();

/// Packed non-flat irreducible rigid assignments, ascending.
std::vector<PackedAssignment> nonflat_irreducible_rigid_set(CensusMode mode, const RelationTable& relations);

namespace reference {

/// dim of the common fixed space of Ad(rho(g)) on so(3), by exact null spaces.
std::size_t adjoint_fixed_dimension(const HolonomyAssignment& rho);
/// dim of the common fixed space of D_g (x) Ad(rho(g)) on R^7 (x) so(3).
std::size_t rigid_fixed_dimension(const HolonomyAssignment& rho);

/// Serial loop over HolonomyAssignment values using the per-assignment predicates.
CensusReport run_census_serial(CensusMode mode, const RelationTable& relations);

}  // namespace reference

}  // namespace g2inst
