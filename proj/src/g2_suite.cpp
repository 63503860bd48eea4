#include "g2inst/g2_suite.hpp"

#include <array>

namespace g2inst {

Vector7 random_vector(RationalSampler& sampler) {
  Vector7 v;
  for (auto& x : v) x = sampler.small_rational();
  return v;
}

KForm random_form(RationalSampler& sampler, int degree) {
  KForm out(degree);
  for (const IndexMask m : basis_masks(degree)) {
    const Rational c = sampler.small_rational();
    if (sampler.small_rational() > 0) out.set(m, c);
  }
  return out;
}

std::vector<PropertyResult> g2_check(std::size_t samples, std::uint64_t seed) {
  RationalSampler sampler(seed);
  const KForm& phi = standard_phi();
  const KForm& psi = standard_psi();
  std::vector<PropertyResult> out;

  // ** = id on every basis form (n = 7, Riemannian).
  {
    bool ok = true;
    std::size_t count = 0;
    for (int k = 0; k <= kDim; ++k)
      for (const IndexMask m : basis_masks(k)) {
        KForm e(k);
        e.set(m, 1);
        ok &= hodge_star(hodge_star(e)) == e;
        ++count;
      }
    out.push_back({"star_involution", ok, count});
  }

  out.push_back({"psi_is_star_phi", hodge_star(phi) == psi, 1});
  out.push_back({"phi_wedge_psi_is_7vol", wedge(phi, psi) == Rational(7) * KForm::volume(), 1});

  {
    const auto [r7, r14] = two_form_projector_ranks();
    const auto r3 = three_form_projector_ranks();
    out.push_back({"two_form_ranks_7_14", r7 == 7 && r14 == 14, 21});
    out.push_back({"three_form_ranks_1_7_27", r3 == std::array<std::size_t, 3>{1, 7, 27}, 35});
  }

  // Eigenvalues of a -> *(a ^ phi) on the two summands, and the three-form split.
  {
    bool two_ok = true, three_ok = true;
    const std::size_t n = std::max<std::size_t>(1, samples / 20);
    for (std::size_t i = 0; i < n; ++i) {
      const KForm a = random_form(sampler, 2);
      const auto s2 = project_2forms(a);
      two_ok &= s2.p7 + s2.p14 == a;
      two_ok &= hodge_star(wedge(s2.p7, phi)) == Rational(2) * s2.p7;
      two_ok &= hodge_star(wedge(s2.p14, phi)) == -s2.p14;

      const KForm b = random_form(sampler, 3);
      const auto s3 = project_3forms(b);
      three_ok &= s3.p1 + s3.p7 + s3.p27 == b;
      three_ok &= wedge(s3.p27, phi).is_zero() && wedge(s3.p27, psi).is_zero();
      three_ok &= wedge(s3.p7, psi).is_zero();  // Lambda^3_7 pairs trivially with psi
    }
    out.push_back({"two_form_eigenvalues", two_ok, n});
    out.push_back({"three_form_split", three_ok, n});
  }

  // phi(u, v, w) = <u x v, w>, |u x v|^2 = |u|^2 |v|^2 - <u,v>^2, u x v = -v x u.
  {
    bool defining = true, norm = true, anti = true;
    for (std::size_t i = 0; i < samples; ++i) {
      const Vector7 u = random_vector(sampler), v = random_vector(sampler), w = random_vector(sampler);
      const Vector7 uv = cross_product(u, v);
      const std::array<Vector7, 3> args{u, v, w};
      defining &= evaluate(phi, args) == dot(uv, w);
      norm &= dot(uv, uv) == dot(u, u) * dot(v, v) - dot(u, v) * dot(u, v);
      const Vector7 vu = cross_product(v, u);
      for (int k = 0; k < kDim; ++k) anti &= uv[k] == -vu[k];
    }
    out.push_back({"cross_product_defining_identity", defining, samples});
    out.push_back({"cross_product_norm", norm, samples});
    out.push_back({"cross_product_antisymmetric", anti, samples});
  }

  {
    bool ok = true;
    const std::size_t n = std::max<std::size_t>(1, samples / 20);
    for (std::size_t i = 0; i < n; ++i) {
      const KForm a = random_form(sampler, 2), b = random_form(sampler, 3);
      ok &= wedge(a, b) == wedge(b, a);          // (-1)^(2*3)
      ok &= wedge(b, b).is_zero();               // odd degree
      const KForm x = random_form(sampler, 1), y = random_form(sampler, 1);
      ok &= wedge(x, y) == -wedge(y, x) && wedge(x, a) == wedge(a, x) && wedge(x, b) == -wedge(b, x);
    }
    out.push_back({"graded_commutativity", ok, n});
  }

  // Product structure R^3 x R^4 and the anti-self-dual forms on the R^4 factor.
  {
    const auto triple = HyperkahlerTriple::flat({4, 5, 6, 7});
    const auto g2 = product_g2(triple, {1, 2, 3});
    out.push_back({"product_structure_is_standard", g2.phi == phi && g2.psi == psi, 1});
    bool ok = true;
    const auto asd = triple.anti_self_dual_basis();
    ok &= asd.size() == 3;
    for (const auto& b : asd) ok &= wedge(b, g2.psi).is_zero();
    out.push_back({"asd_annihilates_psi", ok, asd.size()});
  }
  return out;
}

}  // namespace g2inst
