#include "g2inst/quaternion.hpp"

#include <stdexcept>

namespace g2inst {

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

std::string Quaternion::to_string() const {
  return w.get_str() + " + " + x.get_str() + "i + " + y.get_str() + "j + " + z.get_str() + "k";
}

CircleElement::CircleElement(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
  if (c_ * c_ + s_ * s_ != 1) throw std::invalid_argument("circle element must satisfy c^2 + s^2 = 1");
}

CircleElement CircleElement::from_parameter(const Rational& m) {
  const Rational d = 1 + m * m;
  return {(1 - m * m) / d, 2 * m / d};
}

CircleElement operator*(const CircleElement& a, const CircleElement& b) {
  return {a.c_ * b.c_ - a.s_ * b.s_, a.c_ * b.s_ + a.s_ * b.c_};
}

ComplexMatrix2 ComplexMatrix2::identity() {
  ComplexMatrix2 out;
  out.m[0][0] = Quaternion::real(1);
  out.m[1][1] = Quaternion::real(1);
  return out;
}

ComplexMatrix2 ComplexMatrix2::conjugate_transpose() const {
  ComplexMatrix2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.m[r][c] = m[c][r].conjugate();
  return out;
}

Quaternion ComplexMatrix2::determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  ComplexMatrix2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.m[r][c] = a.m[r][0] * b.m[0][c] + a.m[r][1] * b.m[1][c];
  return out;
}

ComplexMatrix2 operator*(const Quaternion& complex_scalar, const ComplexMatrix2& a) {
  ComplexMatrix2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.m[r][c] = complex_scalar * a.m[r][c];
  return out;
}

SU2Element::SU2Element(Quaternion u) : u_(std::move(u)) {
  if (u_.norm2() != 1) throw std::invalid_argument("SU(2) element must be a unit quaternion");
}

SU2Element SU2Element::from_parameter(const Rational& m1, const Rational& m2, const Rational& m3) {
  const Rational n = m1 * m1 + m2 * m2 + m3 * m3;
  const Rational d = 1 + n;
  return SU2Element({(1 - n) / d, 2 * m1 / d, 2 * m2 / d, 2 * m3 / d});
}

ComplexMatrix2 SU2Element::matrix() const {
  // u = z + w j with z = u.w + u.x i, w = u.y + u.z i
  const Quaternion z{u_.w, u_.x, 0, 0};
  const Quaternion w{u_.y, u_.z, 0, 0};
  ComplexMatrix2 out;
  out.m[0][0] = z;
  out.m[0][1] = w;
  out.m[1][0] = -w.conjugate();
  out.m[1][1] = z.conjugate();
  return out;
}

ImQuat moment_map(const MPoint& p) {
  const Quaternion i = Quaternion::i();
  const Quaternion sum = p.q1 * i * p.q1.conjugate() + p.q2 * i * p.q2.conjugate();
  if (sum.w != 0) throw std::logic_error("moment map acquired a real part");
  const Rational half(1, 2);
  return {half * sum.x, half * sum.y, half * sum.z};
}

ImQuat eguchi_hanson_level() { return {Rational(1, 2), 0, 0}; }

MPoint circle_act(const CircleElement& t, const MPoint& p) {
  const Quaternion e = t.as_quaternion();
  return {p.q1 * e, p.q2 * e};
}

MPoint su2_right_act(const SU2Element& u, const MPoint& p) {
  const ComplexMatrix2 a = u.matrix();
  return {p.q1 * a.m[0][0] + p.q2 * a.m[1][0], p.q1 * a.m[0][1] + p.q2 * a.m[1][1]};
}

MPoint so2_left_act(const CircleElement& t, const MPoint& p) {
  const Quaternion e = t.as_quaternion();
  return {e * p.q1, e * p.q2};
}

MPoint swap_coordinates(const MPoint& p) { return {p.q2, p.q1}; }

ComplexMatrix2 u2_image(const CircleElement& lam, const SU2Element& a) { return lam.as_quaternion() * a.matrix(); }

bool u2_homomorphism_check(const CircleElement& l1, const SU2Element& a1, const CircleElement& l2,
                           const SU2Element& a2) {
  return u2_image(l1 * l2, a1 * a2) == u2_image(l1, a1) * u2_image(l2, a2);
}

bool u2_iso_check(const CircleElement& lam, const SU2Element& a) {
  const ComplexMatrix2 image = u2_image(lam, a);
  if (image != u2_image(lam.negated(), a.negated())) return false;
  if (image * image.conjugate_transpose() != ComplexMatrix2::identity()) return false;
  const Quaternion l = lam.as_quaternion();
  if (image.determinant() != l * l) return false;
  RationalSampler sampler(7);
  for (int n = 0; n < 8; ++n) {
    const CircleElement l2 = sampler.circle();
    const SU2Element a2 = sampler.su2();
    if (!u2_homomorphism_check(lam, a, l2, a2) || !u2_homomorphism_check(l2, a2, lam, a)) return false;
  }
  return true;
}

Rational RationalSampler::small_rational(int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rational(num(rng_), den(rng_));
}

Quaternion RationalSampler::quaternion() { return {small_rational(), small_rational(), small_rational(), small_rational()}; }

MPoint RationalSampler::point() { return {quaternion(), quaternion()}; }

CircleElement RationalSampler::circle() { return CircleElement::from_parameter(small_rational()); }

SU2Element RationalSampler::su2() { return SU2Element::from_parameter(small_rational(), small_rational(), small_rational()); }

MPoint RationalSampler::level_set_point() {
  // With q_a = z_a + w_a j: mu = (i/2) sum(|z_a|^2 - |w_a|^2) - i j sum z_a w_a.
  // Take w = sigma e (-z_2, z_1) so sum z_a w_a = 0, and |z| = r with
  // r^2 (1 - sigma^2) = 1, i.e. sigma = 2m/(1+m^2), r = (1+m^2)/(1-m^2).
  Rational m;
  do m = small_rational(); while (m * m == 1);
  const Rational sigma = 2 * m / (1 + m * m);
  const Rational r = (1 + m * m) / (1 - m * m);
  const Quaternion u = su2().unit();
  const Quaternion z1{r * u.w, r * u.x, 0, 0};
  const Quaternion z2{r * u.y, r * u.z, 0, 0};
  const Quaternion e = sigma * circle().as_quaternion();
  const Quaternion w1 = -(e * z2);
  const Quaternion w2 = e * z1;
  const Quaternion j = Quaternion::j();
  return {z1 + w1 * j, z2 + w2 * j};
}

std::vector<PropertyResult> eh_verify(std::size_t samples, std::uint64_t seed) {
  RationalSampler sampler(seed);
  const ImQuat zeta = eguchi_hanson_level();
  auto conj_rotate = [](const Quaternion& e, const ImQuat& v) {
    Quaternion r = e * v.as_quaternion() * e.conjugate();
    return ImQuat{r.x, r.y, r.z};
  };

  struct Check {
    std::string name;
    bool ok = true;
  };
  std::vector<Check> checks = {{"moment_map_real_part_zero"},  {"moment_map_circle_invariant"},
                               {"so2_left_equivariant"},       {"su2_right_invariant"},
                               {"level_set_preserved_so2"},    {"level_set_preserved_su2"},
                               {"level_set_preserved_circle"}, {"so2_su2_commute"},
                               {"actions_commute_with_circle"}, {"su2_right_is_action"},
                               {"minus_one_acts_as_negation"}, {"u2_well_defined"},
                               {"u2_homomorphism"},            {"swap_preserves_level_set"}};

  for (std::size_t n = 0; n < samples; ++n) {
    const MPoint p = sampler.point();
    const MPoint level = sampler.level_set_point();
    const CircleElement t = sampler.circle();
    const CircleElement s = sampler.circle();
    const SU2Element u = sampler.su2();
    const SU2Element v = sampler.su2();

    ImQuat mu;
    try {
      mu = moment_map(p);
    } catch (const std::logic_error&) {
      checks[0].ok = false;
      continue;
    }
    checks[1].ok &= moment_map(circle_act(t, p)) == mu;
    checks[2].ok &= moment_map(so2_left_act(t, p)) == conj_rotate(t.as_quaternion(), mu);
    checks[3].ok &= moment_map(su2_right_act(u, p)) == mu;
    const bool on_level = moment_map(level) == zeta;
    checks[4].ok &= on_level && moment_map(so2_left_act(t, level)) == zeta;
    checks[5].ok &= on_level && moment_map(su2_right_act(u, level)) == zeta;
    checks[6].ok &= on_level && moment_map(circle_act(t, level)) == zeta;
    checks[7].ok &= so2_left_act(t, su2_right_act(u, p)) == su2_right_act(u, so2_left_act(t, p));
    checks[8].ok &= circle_act(s, su2_right_act(u, p)) == su2_right_act(u, circle_act(s, p)) &&
                    circle_act(s, so2_left_act(t, p)) == so2_left_act(t, circle_act(s, p));
    checks[9].ok &= su2_right_act(v, su2_right_act(u, p)) == su2_right_act(u * v, p);
    const CircleElement minus_one(-1, 0);
    checks[10].ok &= so2_left_act(minus_one, p) == -p && su2_right_act(SU2Element::identity().negated(), p) == -p;
    checks[11].ok &= u2_image(t, u) == u2_image(t.negated(), u.negated());
    checks[12].ok &= u2_homomorphism_check(t, u, s, v);
    checks[13].ok &= moment_map(swap_coordinates(level)) == zeta;
  }

  std::vector<PropertyResult> out;
  for (auto& c : checks) out.push_back({c.name, c.ok, samples});
  return out;
}

}  // namespace g2inst
