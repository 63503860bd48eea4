#pragma once

// Affine isometries of R^7 and T^7 = R^7/Z^7, the group Gamma = <alpha, beta,
// gamma> acting on T^7, its fixed tori, and the deck group
// <alpha, beta, gamma, tau_1..tau_7> acting on R^7.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2inst/rational.hpp"
#include "g2inst/signed_permutation.hpp"

namespace g2inst {

using Translation7 = std::array<Rational, kDim>;
using IntVector7 = std::array<long, kDim>;

/// deck: exact maps of R^7. torus: translations reduced into [0,1)^7.
enum class AffineMode { deck, torus };

class AffineIsometry {
 public:
  AffineIsometry(SignedPermutation linear, Translation7 translation, AffineMode mode);

  static AffineIsometry identity(AffineMode mode);
  static AffineIsometry translation(Translation7 t, AffineMode mode);

  const SignedPermutation& linear() const { return linear_; }
  const Translation7& translation() const { return translation_; }
  AffineMode mode() const { return mode_; }

  bool is_identity() const;
  /// Integer translation vector if the linear part is the identity and the
  /// translation is integral (deck mode).
  std::optional<IntVector7> as_integer_translation() const;

  Translation7 apply(const Translation7& x) const;
  AffineIsometry in_mode(AffineMode mode) const;

  std::string to_string() const;

  friend bool operator==(const AffineIsometry&, const AffineIsometry&) = default;
  friend bool operator<(const AffineIsometry& a, const AffineIsometry& b);

 private:
  void reduce();

  SignedPermutation linear_;
  Translation7 translation_;
  AffineMode mode_;
};

/// (D1, v1) o (D2, v2) = (D1 D2, D1 v2 + v1). Modes must agree.
AffineIsometry compose(const AffineIsometry& f, const AffineIsometry& g);
AffineIsometry inverse(const AffineIsometry& f);
/// f g f^-1 g^-1
AffineIsometry commutator(const AffineIsometry& f, const AffineIsometry& g);
/// f g f^-1
AffineIsometry conjugate(const AffineIsometry& f, const AffineIsometry& g);

/// The ten generators of the deck group, in census order.
enum class Generator : int { alpha = 0, beta, gamma, tau1, tau2, tau3, tau4, tau5, tau6, tau7 };
inline constexpr int kGeneratorCount = 10;
std::string generator_name(int index);

AffineIsometry alpha(AffineMode mode);
AffineIsometry beta(AffineMode mode);
AffineIsometry gamma(AffineMode mode);
/// Translation by 1 in coordinate i (1-based); identity in torus mode.
AffineIsometry tau(int i, AffineMode mode);
AffineIsometry deck_generator(int index, AffineMode mode);

/// Closure under composition and inverse. Throws std::runtime_error when
/// more than `cap` elements appear (non-terminating input).
std::vector<AffineIsometry> generate_group(const std::vector<AffineIsometry>& gens, AffineMode mode,
                                           std::size_t cap = 4096);

/// Gamma = <alpha, beta, gamma> on T^7, 8 elements in canonical order.
const std::vector<AffineIsometry>& gamma_group();

/// Component {x : x_i free for i in free_mask, x_j = pinned[j] otherwise} of a fixed set.
struct FixedTorus {
  std::uint8_t free_mask = 0;
  Translation7 pinned{};  // zero on free coordinates

  int dimension() const;
  bool contains(const Translation7& x) const;
  /// Image under a torus-mode isometry.
  FixedTorus image(const AffineIsometry& g) const;
  /// Point of the torus with free coordinates set to `free_values` (in order).
  Translation7 point(const std::vector<Rational>& free_values) const;
  std::string to_string() const;

  friend bool operator==(const FixedTorus&, const FixedTorus&) = default;
  friend bool operator<(const FixedTorus& a, const FixedTorus& b);
};

/// Components of fix(g) on T^7. Throws std::invalid_argument for a
/// non-diagonal linear part.
std::vector<FixedTorus> fixed_set(const AffineIsometry& g);

struct SingularSetReport {
  struct PerElement {
    AffineIsometry element;
    std::vector<FixedTorus> tori;
  };
  std::vector<PerElement> per_element;  // non-identity elements
  std::vector<FixedTorus> representatives;  // one canonical torus per component of S
  std::size_t component_count = 0;
};

/// Fixed tori of all non-identity elements identified under the group.
SingularSetReport singular_set(const std::vector<AffineIsometry>& group);
std::size_t singular_components(const std::vector<AffineIsometry>& group);
std::size_t singular_components();

/// One relation of the deck group: word = tau^translation.
struct Relation {
  std::string name;
  std::vector<std::pair<int, int>> word;  // (generator index, exponent +-1)
  IntVector7 translation{};

  /// Parity mask over the 10 generators of word * tau^-translation.
  std::uint16_t parity_mask() const;
};

struct RelationTable {
  std::vector<Relation> squares;      // alpha^2, beta^2, gamma^2
  std::vector<Relation> commutators;  // [alpha,beta], [alpha,gamma], [beta,gamma]
  std::vector<Relation> conjugates;   // g tau_i g^-1 for g in {alpha, beta, gamma}

  std::vector<Relation> all() const;
};

/// Evaluates a word of deck generators.
AffineIsometry evaluate_word(const std::vector<std::pair<int, int>>& word);

/// Computes every square, commutator and conjugate in deck mode. Throws
/// std::logic_error if one of them is not a pure integer translation.
RelationTable relation_table();

std::string to_string(const IntVector7& v);

}  // namespace g2inst
