#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "g2inst/forms.hpp"

namespace g2inst {

/// Orthogonal integer 7x7 matrix: M e_i = sign[i] e_{perm[i]} (0-based).
/// These are exactly the isometries of the lattice Z^7.
struct SignedPermutation {
  std::array<std::uint8_t, kDim> perm{0, 1, 2, 3, 4, 5, 6};
  std::array<std::int8_t, kDim> sign{1, 1, 1, 1, 1, 1, 1};

  static SignedPermutation identity() { return {}; }
  static SignedPermutation diagonal(const std::array<int, kDim>& signs);

  bool is_identity() const { return *this == SignedPermutation{}; }
  bool is_diagonal() const;
  /// Diagonal entries (0 off the diagonal).
  std::array<int, kDim> diagonal_entries() const;
  /// Matrix entry (row, col), 0-based.
  int entry(int row, int col) const { return perm[col] == row ? sign[col] : 0; }

  SignedPermutation inverse() const;
  LinearMap7 to_linear_map() const;
  /// y = M x.
  template <typename T>
  std::array<T, kDim> apply(const std::array<T, kDim>& x) const {
    std::array<T, kDim> y{};
    for (int i = 0; i < kDim; ++i) y[perm[i]] = sign[i] < 0 ? T(-x[i]) : x[i];
    return y;
  }

  /// e.g. "(+x1,+x2,+x3,-x4,-x5,-x6,-x7)": image coordinates in terms of x.
  std::string to_string() const;

  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

inline constexpr std::size_t kSignedPermutationCount = 645120;  // 2^7 * 7!

/// All 2^7 * 7! signed permutations, ordered by (lexicographic permutation, sign bits).
std::vector<SignedPermutation> all_signed_permutations();

}  // namespace g2inst
