#include "g2inst/symmetry.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "g2inst/forms.hpp"

namespace g2inst {

namespace {

using Clock = std::chrono::steady_clock;

struct IntegerPhi {
  std::array<int, 35> coeff{};

  IntegerPhi() {
    const auto& phi = standard_phi();
    for (const auto& t : phi.terms()) coeff[basis_position(t.mask)] = static_cast<int>(t.coeff.get_num().get_si());
  }
};

const IntegerPhi& integer_phi() {
  static const IntegerPhi phi;
  return phi;
}

// The eight words alpha^e1 beta^e2 gamma^e3 on R^7, indexed by e1 + 2 e2 + 4 e3.
const std::vector<AffineIsometry>& canonical_words() {
  static const std::vector<AffineIsometry> words = [] {
    std::vector<AffineIsometry> w;
    for (int bits = 0; bits < 8; ++bits) {
      AffineIsometry acc = AffineIsometry::identity(AffineMode::deck);
      for (int g = 0; g < 3; ++g)
        if (bits & (1 << g)) acc = compose(acc, deck_generator(g, AffineMode::deck));
      w.push_back(acc);
    }
    return w;
  }();
  return words;
}

// Generator mask of the element h = tau^t w of the deck group.
std::uint16_t decompose(const AffineIsometry& h) {
  const auto& words = canonical_words();
  for (int bits = 0; bits < 8; ++bits) {
    if (words[bits].linear() != h.linear()) continue;
    std::uint16_t mask = static_cast<std::uint16_t>(bits);
    for (int i = 0; i < kDim; ++i) {
      const Rational t = h.translation()[i] - words[bits].translation()[i];
      if (!is_integer(t)) throw std::logic_error("induced_action: residual translation is not integral: " + h.to_string());
      if (t.get_num().get_si() % 2 != 0) mask ^= static_cast<std::uint16_t>(1u << (3 + i));
    }
    return mask;
  }
  throw std::logic_error("induced_action: conjugate is not in the deck group: " + h.to_string());
}

const std::set<AffineIsometry>& gamma_set() {
  static const std::set<AffineIsometry> s(gamma_group().begin(), gamma_group().end());
  return s;
}

// Linear parts of Gamma.
bool linear_normalizes(const SignedPermutation& p) {
  static const std::set<SignedPermutation> linear = [] {
    std::set<SignedPermutation> out;
    for (const auto& g : gamma_group()) out.insert(g.linear());
    return out;
  }();
  const auto inv = p.inverse();
  for (const auto& d : linear)
    if (!linear.count(p * d * inv)) return false;
  return true;
}

std::vector<Translation7> half_translations() {
  std::vector<Translation7> out;
  for (unsigned bits = 0; bits < (1u << kDim); ++bits) {
    Translation7 t{};
    for (int i = 0; i < kDim; ++i)
      if (bits & (1u << i)) t[i] = Rational(1, 2);
    out.push_back(t);
  }
  return out;
}

bool less_automorphism(const OrbifoldAutomorphism& a, const OrbifoldAutomorphism& b) {
  return a.as_affine(AffineMode::torus) < b.as_affine(AffineMode::torus);
}

}  // namespace

bool preserves_phi(const SignedPermutation& p) {
  // m^* dx_j = sign[i] dx_i where perm[i] = j.
  const auto inv = p.inverse();
  const auto& phi = integer_phi();
  std::array<int, 35> image{};
  const auto masks = basis_masks(3);
  for (std::size_t n = 0; n < masks.size(); ++n) {
    if (phi.coeff[n] == 0) continue;
    int idx[3];
    int k = 0;
    int sign = phi.coeff[n];
    for (int j = 0; j < kDim; ++j)
      if (masks[n] & (1u << j)) {
        idx[k++] = inv.perm[j];
        sign *= p.sign[inv.perm[j]];
      }
    if (idx[0] > idx[1]) std::swap(idx[0], idx[1]), sign = -sign;
    if (idx[1] > idx[2]) std::swap(idx[1], idx[2]), sign = -sign;
    if (idx[0] > idx[1]) std::swap(idx[0], idx[1]), sign = -sign;
    const auto mask = static_cast<IndexMask>((1u << idx[0]) | (1u << idx[1]) | (1u << idx[2]));
    image[basis_position(mask)] += sign;
  }
  return image == phi.coeff;
}

std::vector<SignedPermutation> stabilizer_of_phi() {
  const auto all = all_signed_permutations();
  std::vector<std::uint8_t> keep(all.size(), 0);
  const std::int64_t n = static_cast<std::int64_t>(all.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) keep[i] = preserves_phi(all[i]);
  std::vector<SignedPermutation> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(all[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool normalizes_gamma(const OrbifoldAutomorphism& f) {
  const AffineIsometry ft = f.as_affine(AffineMode::torus);
  for (int g = 0; g < 3; ++g)
    if (!gamma_set().count(conjugate(ft, deck_generator(g, AffineMode::torus)))) return false;
  return true;
}

bool satisfies_equivariance(const OrbifoldAutomorphism& f) {
  const AffineIsometry ft = f.as_affine(AffineMode::torus);
  for (const auto& g1 : gamma_group()) {
    const AffineIsometry fg1 = compose(ft, g1);
    bool found = false;
    for (const auto& g2 : gamma_group())
      if (g2.linear() * fg1.linear() == ft.linear() && compose(g2, fg1) == ft) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

std::array<SignedPermutation, 3> k_generators() {
  return {alpha(AffineMode::deck).linear(), beta(AffineMode::deck).linear(), gamma(AffineMode::deck).linear()};
}

AutomorphismReport aut_orbifold_report() {
  AutomorphismReport report;
  const auto stabilizer = stabilizer_of_phi();
  const auto halves = half_translations();
  report.candidates = stabilizer.size() * halves.size();
  // Bit 0: normalizer condition, bit 1: equivariance form.
  std::vector<std::uint8_t> verdict(report.candidates, 0);
  const std::int64_t n = static_cast<std::int64_t>(stabilizer.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& p = stabilizer[i];
    if (!linear_normalizes(p)) continue;  // necessary for both conditions
    for (std::size_t j = 0; j < halves.size(); ++j) {
      const OrbifoldAutomorphism f{p, halves[j]};
      verdict[i * halves.size() + j] = static_cast<std::uint8_t>(normalizes_gamma(f) | (satisfies_equivariance(f) << 1));
    }
  }
  std::vector<OrbifoldAutomorphism> equivariant;
  for (std::size_t c = 0; c < verdict.size(); ++c) {
    if (!verdict[c]) continue;
    const OrbifoldAutomorphism f{stabilizer[c / halves.size()], halves[c % halves.size()]};
    if (verdict[c] & 1) report.automorphisms.push_back(f);
    if (verdict[c] & 2) equivariant.push_back(f);
  }
  std::sort(report.automorphisms.begin(), report.automorphisms.end(), less_automorphism);
  std::sort(equivariant.begin(), equivariant.end(), less_automorphism);
  report.equivariance_count = equivariant.size();
  report.equivariance_agrees = equivariant == report.automorphisms;

  std::vector<AffineIsometry> gens;
  for (const auto& k : k_generators()) gens.push_back({k, {}, AffineMode::torus});
  for (int i = 0; i < kDim; ++i) {
    Translation7 t{};
    t[i] = Rational(1, 2);
    gens.push_back(AffineIsometry::translation(t, AffineMode::torus));
  }
  const auto generated = generate_group(gens, AffineMode::torus, 1u << 12);
  std::vector<AffineIsometry> found;
  for (const auto& f : report.automorphisms) found.push_back(f.as_affine(AffineMode::torus));
  std::sort(found.begin(), found.end());
  report.matches_k_and_half_translations = found == generated;
  return report;
}

std::vector<OrbifoldAutomorphism> aut_generators() {
  std::vector<OrbifoldAutomorphism> out;
  for (const auto& k : k_generators()) out.push_back({k, {}});
  for (int i = 0; i < kDim; ++i) {
    Translation7 t{};
    t[i] = Rational(1, 2);
    out.push_back({SignedPermutation::identity(), t});
  }
  return out;
}

std::vector<OrbifoldAutomorphism> aut_orbifold() { return aut_orbifold_report().automorphisms; }

AssignmentTransform AssignmentTransform::of(const OrbifoldAutomorphism& f) {
  const AffineIsometry fd = f.as_affine(AffineMode::deck);
  AssignmentTransform out;
  for (int g = 0; g < kGeneratorCount; ++g) out.masks[g] = decompose(conjugate(fd, deck_generator(g, AffineMode::deck)));
  return out;
}

PackedAssignment AssignmentTransform::apply(PackedAssignment rho) const {
  PackedAssignment out = 0;
  for (int g = 0; g < kGeneratorCount; ++g) {
    std::uint32_t image = 0;
    for (int j = 0; j < kGeneratorCount; ++j)
      if (masks[g] & (1u << j)) image ^= static_cast<std::uint32_t>(packed_image(rho, j));
    out = (out << 2) | image;
  }
  return out;
}

HolonomyAssignment induced_action(const OrbifoldAutomorphism& f, const HolonomyAssignment& rho) {
  const AffineIsometry fd = f.as_affine(AffineMode::deck);
  HolonomyAssignment out;
  for (int g = 0; g < kGeneratorCount; ++g) {
    const std::uint16_t mask = decompose(conjugate(fd, deck_generator(g, AffineMode::deck)));
    TargetElement image = TargetElement::I;
    for (int j = 0; j < kGeneratorCount; ++j)
      if (mask & (1u << j)) image = image * rho[j];
    out[g] = image;
  }
  return out;
}

std::vector<AssignmentTransform> distinct_transforms(std::span<const OrbifoldAutomorphism> group) {
  std::set<AssignmentTransform> out;
  for (const auto& f : group) out.insert(AssignmentTransform::of(f));
  return {out.begin(), out.end()};
}

namespace {

// T(x) = low[x & 1023] ^ high[x >> 10] since T is F2-linear.
struct TransformTable {
  std::array<PackedAssignment, 1024> low{};
  std::array<PackedAssignment, 1024> high{};

  explicit TransformTable(const AssignmentTransform& t) {
    for (PackedAssignment x = 0; x < 1024; ++x) {
      low[x] = t.apply(x);
      high[x] = t.apply(x << 10);
    }
  }
  PackedAssignment operator()(PackedAssignment x) const { return low[x & 1023u] ^ high[x >> 10]; }
};

void fill_bounds(OrbitReport& report) {
  const std::uint64_t k_order = 8;
  report.pigeonhole_bound = report.group_order ? report.subset_size / (report.group_order * 4) : 0;
  report.pigeonhole_bound_k_only = report.subset_size / (k_order * 4);
}

}  // namespace

namespace {

class SubsetBitmap {
 public:
  explicit SubsetBitmap(std::span<const PackedAssignment> subset) : bits_(kAssignmentCount / 64, 0) {
    for (const auto x : subset) bits_[x >> 6] |= 1ull << (x & 63);
  }
  bool contains(PackedAssignment x) const { return (bits_[x >> 6] >> (x & 63)) & 1; }

 private:
  std::vector<std::uint64_t> bits_;
};

}  // namespace

OrbitReport orbit_count(std::span<const PackedAssignment> subset, std::span<const OrbifoldAutomorphism> group) {
  const auto start = Clock::now();
  const auto transforms = distinct_transforms(group);
  std::vector<TransformTable> tables;
  tables.reserve(transforms.size());
  for (const auto& t : transforms) tables.emplace_back(t);
  const SubsetBitmap member(subset);

  std::vector<std::uint8_t> is_rep(subset.size(), 0);
  std::uint64_t size_sum = 0, coverage = 0;
  const std::int64_t n = static_cast<std::int64_t>(subset.size());
#pragma omp parallel for reduction(+ : size_sum, coverage) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const PackedAssignment rho = subset[i];
    bool minimal = true;
    for (const auto& table : tables) {
      const PackedAssignment y = table(rho);
      if (y < rho && member.contains(y)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    is_rep[i] = 1;
    std::vector<PackedAssignment> orbit;
    orbit.reserve(tables.size());
    for (const auto& table : tables) orbit.push_back(table(rho));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    size_sum += orbit.size();
    coverage += static_cast<std::uint64_t>(
        std::count_if(orbit.begin(), orbit.end(), [&](PackedAssignment y) { return member.contains(y); }));
  }

  OrbitReport report;
  report.group_order = group.size();
  report.effective_group_order = transforms.size();
  report.subset_size = subset.size();
  for (std::size_t i = 0; i < subset.size(); ++i)
    if (is_rep[i]) report.representatives.push_back(subset[i]);
  report.orbit_count = report.representatives.size();
  report.orbit_size_sum = size_sum;
  report.subset_coverage = coverage;
  fill_bounds(report);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

std::uint64_t burnside_orbit_count(std::span<const PackedAssignment> invariant_set,
                                   std::span<const OrbifoldAutomorphism> group) {
  const auto transforms = distinct_transforms(group);
  std::uint64_t fixed = 0;
  for (const auto& t : transforms) {
    const TransformTable table(t);
    for (const auto x : invariant_set) fixed += table(x) == x;
  }
  if (fixed % transforms.size() != 0) throw std::logic_error("Burnside sum not divisible by the group order");
  return fixed / transforms.size();
}

namespace reference {

std::vector<SignedPermutation> stabilizer_of_phi_serial() {
  std::vector<SignedPermutation> out;
  for (const auto& p : all_signed_permutations())
    if (g2inst::preserves_phi(p.to_linear_map())) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

OrbitReport orbit_count_serial(std::span<const PackedAssignment> subset,
                               std::span<const OrbifoldAutomorphism> generators, std::uint64_t group_order) {
  const auto start = Clock::now();
  // Images of the basis assignments; the action is additive in XOR.
  std::vector<std::array<PackedAssignment, 2 * kGeneratorCount>> images;
  for (const auto& f : generators) {
    std::array<PackedAssignment, 2 * kGeneratorCount> row{};
    for (int bit = 0; bit < 2 * kGeneratorCount; ++bit)
      row[bit] = induced_action(f, HolonomyAssignment::unpack(PackedAssignment{1} << bit)).pack();
    images.push_back(row);
  }
  auto act = [&](std::size_t gen, PackedAssignment x) {
    PackedAssignment y = 0;
    for (int bit = 0; bit < 2 * kGeneratorCount; ++bit)
      if (x & (PackedAssignment{1} << bit)) y ^= images[gen][bit];
    return y;
  };

  const std::set<PackedAssignment> member(subset.begin(), subset.end());
  std::unordered_set<PackedAssignment> visited;
  visited.reserve(subset.size() * 2);
  OrbitReport report;
  report.group_order = group_order;
  report.effective_group_order = 0;
  report.subset_size = subset.size();
  for (const PackedAssignment seed : subset) {
    if (visited.count(seed)) continue;
    std::vector<PackedAssignment> frontier{seed};
    std::vector<PackedAssignment> orbit{seed};
    visited.insert(seed);
    while (!frontier.empty()) {
      const PackedAssignment x = frontier.back();
      frontier.pop_back();
      for (std::size_t g = 0; g < images.size(); ++g) {
        const PackedAssignment y = act(g, x);
        if (visited.insert(y).second) {
          frontier.push_back(y);
          orbit.push_back(y);
        }
      }
    }
    PackedAssignment rep = seed;
    for (const auto y : orbit)
      if (member.count(y)) {
        rep = std::min(rep, y);
        ++report.subset_coverage;
      }
    report.representatives.push_back(rep);
    report.orbit_size_sum += orbit.size();
  }
  std::sort(report.representatives.begin(), report.representatives.end());
  report.orbit_count = report.representatives.size();
  fill_bounds(report);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace reference

}  // namespace g2inst
