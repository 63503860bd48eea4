#include <chrono>

#include "doctest.h"
#include "g2inst/quaternion.hpp"

using namespace g2inst;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();

MPoint point(Quaternion a, Quaternion b) { return {a, b}; }

}  // namespace

TEST_CASE("quaternion algebra") {
  CHECK(I * J == K);
  CHECK(J * K == I);
  CHECK(K * I == J);
  CHECK(I * I == Quaternion::real(-1));
  CHECK(J * I == -K);
  const Quaternion q{1, 2, 3, 4};
  CHECK(q * q.conjugate() == Quaternion::real(30));
  CHECK(q.norm2() == 30);
}

TEST_CASE("moment map values") {
  CHECK(moment_map(point(Quaternion::real(1), {})) == ImQuat{make_rational(1, 2), 0, 0});
  CHECK(moment_map(point(J, {})) == ImQuat{make_rational(-1, 2), 0, 0});
  CHECK(eguchi_hanson_level() == ImQuat{make_rational(1, 2), 0, 0});
  // mu(0) = 0 and mu is quadratic.
  CHECK(moment_map(point({}, {})) == ImQuat{0, 0, 0});
  const MPoint p = point({1, 2, 0, 1}, {0, 1, 1, 3});
  const ImQuat mu = moment_map(p);
  const ImQuat mu2 = moment_map(point(Rational(2) * p.q1, Rational(2) * p.q2));
  CHECK(mu2 == ImQuat{4 * mu.x, 4 * mu.y, 4 * mu.z});
}

TEST_CASE("j acting on (1, 0) stays on the level set") {
  const MPoint p = point(Quaternion::real(1), {});
  const MPoint q = su2_right_act(SU2Element(J), p);
  CHECK(q.q1 == Quaternion{});
  CHECK(q.q2.norm2() == 1);
  CHECK(q.q2.is_complex());
  CHECK(moment_map(q) == eguchi_hanson_level());
}

TEST_CASE("group elements are validated") {
  CHECK_THROWS_AS(CircleElement(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(SU2Element(Quaternion{1, 1, 0, 0}), std::invalid_argument);
  CHECK_NOTHROW(CircleElement(make_rational(3, 5), make_rational(4, 5)));
  CHECK_NOTHROW(SU2Element(Quaternion{make_rational(1, 2), make_rational(1, 2), make_rational(1, 2), make_rational(1, 2)}));
  const auto c = CircleElement::from_parameter(make_rational(1, 2));
  CHECK(c.c() == make_rational(3, 5));
  CHECK(c.s() == make_rational(4, 5));
  const auto u = SU2Element::from_parameter(1, 2, 3);
  CHECK(u.unit().norm2() == 1);
}

TEST_CASE("SU(2) matrices form a homomorphism into unitary matrices") {
  RationalSampler sampler(5);
  for (int n = 0; n < 50; ++n) {
    const SU2Element u = sampler.su2(), v = sampler.su2();
    CHECK((u * v).matrix() == u.matrix() * v.matrix());
    CHECK(u.matrix() * u.matrix().conjugate_transpose() == ComplexMatrix2::identity());
    CHECK(u.matrix().determinant() == Quaternion::real(1));
  }
}

TEST_CASE("sampled level-set points lie on the level set") {
  RationalSampler sampler(11);
  for (int n = 0; n < 200; ++n) CHECK(moment_map(sampler.level_set_point()) == eguchi_hanson_level());
}

TEST_CASE("U(2)/{+-1} map") {
  RationalSampler sampler(17);
  for (int n = 0; n < 50; ++n) {
    const CircleElement l = sampler.circle();
    const SU2Element a = sampler.su2();
    CHECK(u2_iso_check(l, a));
    CHECK(u2_image(l, a) == u2_image(l.negated(), a.negated()));
  }
  // [-1, 1] and [1, -1] coincide, [-1, -1] is the identity.
  const CircleElement minus_one(-1, 0);
  CHECK(u2_image(minus_one, SU2Element::identity()) == u2_image(CircleElement::identity(), SU2Element::identity().negated()));
  CHECK(u2_image(minus_one, SU2Element::identity().negated()) == ComplexMatrix2::identity());
}

TEST_CASE("hyperkahler suite passes within 5 s") {
  const auto start = std::chrono::steady_clock::now();
  const auto results = eh_verify(1000);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(results.size() == 14);
  for (const auto& r : results) {
    INFO(r.name);
    CHECK(r.passed);
    CHECK(r.samples == 1000);
  }
  CHECK(seconds < 5.0);
}

TEST_CASE("eh_verify is deterministic in its seed") {
  const auto a = eh_verify(20, 3), b = eh_verify(20, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].passed == b[i].passed);
}

TEST_CASE("circle action examples") {
  const MPoint p = point(Quaternion::real(1), {});
  const MPoint q = circle_act(CircleElement(0, 1), p);
  CHECK(q.q1 == I);
  CHECK(q.q2 == Quaternion{});
  CHECK(circle_act(CircleElement::identity(), p).q1 == p.q1);
  RationalSampler sampler(23);
  for (int n = 0; n < 50; ++n) {
    const MPoint x = sampler.level_set_point();
    const CircleElement t = sampler.circle();
    const SU2Element u = sampler.su2();
    CHECK(moment_map(circle_act(t, x)) == moment_map(x));
    const MPoint a = so2_left_act(t, su2_right_act(u, x)), b = su2_right_act(u, so2_left_act(t, x));
    CHECK(a.q1 == b.q1);
    CHECK(a.q2 == b.q2);
  }
}
