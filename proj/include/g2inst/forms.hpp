#pragma once

// Exact exterior algebra on R^7 with the flat metric, the standard G2 3-form
// and the decompositions of 2- and 3-forms into G2 irreducibles.
//
// Basis k-forms dx_{i1...ik} (1 <= i1 < ... < ik <= 7) are addressed by a
// 7-bit mask (bit i-1 set for index i) and stored densely in lexicographic
// order of the index tuple. dx_{1234567} is the positive volume form.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "g2inst/linalg.hpp"
#include "g2inst/rational.hpp"

namespace g2inst {

inline constexpr int kDim = 7;

using Vector7 = std::array<Rational, kDim>;
using IndexMask = std::uint8_t;

Vector7 basis_vector(int index);  // 1-based
Rational dot(const Vector7& u, const Vector7& v);

/// General 7x7 rational matrix acting on column vectors.
struct LinearMap7 {
  std::array<std::array<Rational, kDim>, kDim> entries{};

  static LinearMap7 identity();
  static LinearMap7 diagonal(const std::array<int, kDim>& diag);
  static LinearMap7 scalar(const Rational& s);

  Vector7 apply(const Vector7& v) const;
  friend LinearMap7 operator*(const LinearMap7& a, const LinearMap7& b);
  friend bool operator==(const LinearMap7&, const LinearMap7&) = default;
};

/// Number of basis k-forms, C(7,k).
std::size_t basis_size(int degree);
/// Masks of degree-k basis forms in lexicographic order of their index tuples.
std::span<const IndexMask> basis_masks(int degree);
/// Position of a mask inside basis_masks(popcount(mask)).
std::size_t basis_position(IndexMask mask);
/// Increasing 1-based index tuple of a mask.
std::vector<int> mask_indices(IndexMask mask);

class KForm {
 public:
  struct Term {
    IndexMask mask;
    Rational coeff;
  };

  explicit KForm(int degree = 0);

  /// dx_{i1} ^ ... ^ dx_{ik}; indices 1-based in any order (sign of the sort
  /// applied, repeated index gives zero).
  static KForm basis(std::initializer_list<int> indices);
  static KForm basis(std::span<const int> indices);
  static KForm constant(const Rational& c);
  static KForm volume();
  static KForm one_form(const Vector7& components);

  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }

  const Rational& coeff(IndexMask mask) const;
  /// Coefficient of dx_{i1...ik} for an increasing 1-based tuple.
  const Rational& coeff(std::initializer_list<int> increasing) const;
  void set(IndexMask mask, const Rational& value);
  void add(IndexMask mask, const Rational& value);

  std::span<const Rational> coefficients() const { return coeffs_; }
  std::vector<Term> terms() const;  // nonzero terms, lexicographic order
  std::size_t nonzero_count() const;
  bool is_zero() const;

  KForm& operator+=(const KForm& other);
  KForm& operator-=(const KForm& other);
  KForm& operator*=(const Rational& s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator-(KForm a) { return a *= Rational(-1); }
  friend KForm operator*(const Rational& s, KForm a) { return a *= s; }
  friend KForm operator*(KForm a, const Rational& s) { return a *= s; }
  friend bool operator==(const KForm& a, const KForm& b);

  /// e.g. "dx123 + dx145 - dx257"; "0" for the zero form.
  std::string to_string() const;

 private:
  void require_same_degree(const KForm& other) const;

  int degree_;
  std::vector<Rational> coeffs_;
};

/// Sign of dx_I ^ dx_J relative to dx_{I u J}; 0 if I and J overlap.
int wedge_sign(IndexMask left, IndexMask right);

/// Throws std::invalid_argument when a.degree() + b.degree() > 7.
KForm wedge(const KForm& a, const KForm& b);
KForm hodge_star(const KForm& a);
KForm interior_product(const Vector7& u, const KForm& a);
/// <dx_I, dx_J> = delta_IJ.
Rational inner_product(const KForm& a, const KForm& b);
/// a(v_1, ..., v_k); vectors.size() must equal a.degree().
Rational evaluate(const KForm& a, std::span<const Vector7> vectors);

/// (m^* a)(v_1..v_k) = a(m v_1, ..., m v_k).
KForm pullback(const LinearMap7& m, const KForm& a);

const KForm& standard_phi();
const KForm& standard_psi();

/// Unique vector with phi0(u, v, w) = <u x v, w> for all w.
Vector7 cross_product(const Vector7& u, const Vector7& v);

bool preserves_phi(const LinearMap7& m);

struct TwoFormSplit {
  KForm p7;
  KForm p14;
};
struct ThreeFormSplit {
  KForm p1;
  KForm p7;
  KForm p27;
};

/// a = p7 + p14 with *(p7^phi) = 2 p7 and *(p14^phi) = -p14.
TwoFormSplit project_2forms(const KForm& a);
/// a = p1 + p7 + p27 with p1 in <phi>, p7 in {i(u)psi}, p27 ^ phi = p27 ^ psi = 0.
ThreeFormSplit project_3forms(const KForm& a);

/// Matrix of a linear map on Lambda^k given by its action on basis forms
/// (column j = image of the j-th basis form).
template <typename Map>
RationalMatrix operator_matrix(int degree, Map&& map) {
  const auto masks = basis_masks(degree);
  RationalMatrix out(masks.size(), masks.size());
  for (std::size_t j = 0; j < masks.size(); ++j) {
    KForm e(degree);
    e.set(masks[j], 1);
    KForm image = map(e);
    for (std::size_t i = 0; i < masks.size(); ++i) out(i, j) = image.coeff(masks[i]);
  }
  return out;
}

/// Ranks of the projectors onto (Lambda^2_7, Lambda^2_14).
std::pair<std::size_t, std::size_t> two_form_projector_ranks();
/// Ranks of the projectors onto (Lambda^3_1, Lambda^3_7, Lambda^3_27).
std::array<std::size_t, 3> three_form_projector_ranks();

/// Three symplectic forms on a 4-coordinate block with
/// omega_i ^ omega_j = 2 delta_ij vol_block.
class HyperkahlerTriple {
 public:
  /// Validates support and the wedge relations; throws std::invalid_argument.
  HyperkahlerTriple(std::array<KForm, 3> omega, std::array<int, 4> block);

  /// The flat triple on `block` (sorted b1<b2<b3<b4, y_r = x_{b_r}):
  /// omega_1 = -(dy12 + dy34), omega_2 = dy24 - dy13, omega_3 = dy14 + dy23.
  static HyperkahlerTriple flat(std::array<int, 4> block);

  const std::array<KForm, 3>& omega() const { return omega_; }
  const std::array<int, 4>& block() const { return block_; }
  KForm block_volume() const;

  /// Basis of the 2-forms b on the block with b ^ omega_i = 0 for all i.
  std::vector<KForm> anti_self_dual_basis() const;

 private:
  std::array<KForm, 3> omega_;
  std::array<int, 4> block_;
};

struct ProductG2 {
  KForm phi;
  KForm psi;
};

/// phi = dx_{abc} - sum_i dx_{r_i} ^ omega_i,
/// psi = vol_block - sum_i omega_i ^ dx_{r_j r_k} over cyclic (i,j,k).
/// Throws std::invalid_argument if r3 overlaps the block or repeats.
ProductG2 product_g2(const HyperkahlerTriple& triple, std::array<int, 3> r3);

}  // namespace g2inst
