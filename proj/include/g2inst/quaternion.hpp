#pragma once

// Quaternions over Q, the U(1) hyperkahler moment map on H^2 whose level
// set mu = i/2 modulo U(1) is Eguchi-Hanson space, and the SO(2) x SU(2)
// actions that descend to its holomorphic isometries U(2)/{+-1}.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "g2inst/property.hpp"
#include "g2inst/rational.hpp"

namespace g2inst {

struct Quaternion {
  Rational w, x, y, z;  // w + x i + y j + z k

  static Quaternion real(const Rational& r) { return {r, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  Rational norm2() const { return w * w + x * x + y * y + z * z; }
  bool is_complex() const { return y == 0 && z == 0; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Rational& s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  std::string to_string() const;
};

/// Imaginary quaternion; the real part is zero by construction.
struct ImQuat {
  Rational x, y, z;

  Quaternion as_quaternion() const { return {0, x, y, z}; }
  friend bool operator==(const ImQuat&, const ImQuat&) = default;
};

struct MPoint {
  Quaternion q1, q2;

  friend MPoint operator-(const MPoint& p) { return {-p.q1, -p.q2}; }
  friend bool operator==(const MPoint&, const MPoint&) = default;
};

/// c + s i with c^2 + s^2 = 1 exactly.
class CircleElement {
 public:
  /// Throws std::invalid_argument unless c^2 + s^2 = 1.
  CircleElement(Rational c, Rational s);
  static CircleElement identity() { return {1, 0}; }
  /// ((1 - m^2) / (1 + m^2), 2m / (1 + m^2)).
  static CircleElement from_parameter(const Rational& m);

  const Rational& c() const { return c_; }
  const Rational& s() const { return s_; }
  Quaternion as_quaternion() const { return {c_, s_, 0, 0}; }
  CircleElement negated() const { return {-c_, -s_}; }
  friend CircleElement operator*(const CircleElement& a, const CircleElement& b);
  friend bool operator==(const CircleElement&, const CircleElement&) = default;

 private:
  Rational c_, s_;
};

/// Complex 2x2 matrix with entries stored as quaternions with no j, k part.
struct ComplexMatrix2 {
  std::array<std::array<Quaternion, 2>, 2> m;

  static ComplexMatrix2 identity();
  ComplexMatrix2 conjugate_transpose() const;
  Quaternion determinant() const;
  friend ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);
  friend ComplexMatrix2 operator*(const Quaternion& complex_scalar, const ComplexMatrix2& a);
  friend bool operator==(const ComplexMatrix2&, const ComplexMatrix2&) = default;
};

/// Unit quaternion u = z + w j, identified with the SU(2) matrix
/// [[z, w], [-conj(w), conj(z)]] (a homomorphism: matrix(u v) = matrix(u) matrix(v)).
class SU2Element {
 public:
  /// Throws std::invalid_argument unless |u|^2 = 1.
  explicit SU2Element(Quaternion u);
  static SU2Element identity() { return SU2Element(Quaternion::real(1)); }
  /// (1 - |m|^2, 2 m) / (1 + |m|^2) for m in Q^3.
  static SU2Element from_parameter(const Rational& m1, const Rational& m2, const Rational& m3);

  const Quaternion& unit() const { return u_; }
  ComplexMatrix2 matrix() const;
  SU2Element negated() const { return SU2Element(-u_); }
  friend SU2Element operator*(const SU2Element& a, const SU2Element& b) { return SU2Element(a.u_ * b.u_); }
  friend bool operator==(const SU2Element&, const SU2Element&) = default;

 private:
  Quaternion u_;
};

/// (1/2) sum_a q_a i conj(q_a).
ImQuat moment_map(const MPoint& p);

/// The eguchi-hanson level: zeta = i/2.
ImQuat eguchi_hanson_level();

/// q_a -> q_a e^{it}.
MPoint circle_act(const CircleElement& t, const MPoint& p);
/// (q_1, q_2) -> (q_1, q_2) . A with A the SU(2) matrix of u.
MPoint su2_right_act(const SU2Element& u, const MPoint& p);
/// q_a -> e^{it} q_a.
MPoint so2_left_act(const CircleElement& t, const MPoint& p);
/// (q_1, q_2) -> (q_2, q_1).
MPoint swap_coordinates(const MPoint& p);

/// [lambda], [A] -> [lambda A] in U(2)/{+-1}.
ComplexMatrix2 u2_image(const CircleElement& lam, const SU2Element& a);

/// Checks for one pair: (lambda, A) and (-lambda, -A) have the same image,
/// the image is unitary with determinant lambda^2, and the map is
/// multiplicative against a fixed set of sampled pairs.
bool u2_iso_check(const CircleElement& lam, const SU2Element& a);
/// Multiplicativity on two given pairs.
bool u2_homomorphism_check(const CircleElement& l1, const SU2Element& a1, const CircleElement& l2,
                           const SU2Element& a2);

/// Deterministic rational samplers for the identity suites.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational small_rational(int max_num = 9, int max_den = 7);
  Quaternion quaternion();
  MPoint point();
  CircleElement circle();
  SU2Element su2();
  /// Rational point of the level set mu = i/2 (not built from the group actions).
  MPoint level_set_point();

 private:
  std::mt19937_64 rng_;
};

/// Runs the hyperkahler identity suite on `samples` random inputs per property.
std::vector<PropertyResult> eh_verify(std::size_t samples, std::uint64_t seed = 20240611);

}  // namespace g2inst
