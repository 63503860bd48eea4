#include "g2inst/census.hpp"

#include <omp.h>

#include <chrono>
#include <stdexcept>

#include "g2inst/linalg.hpp"

namespace g2inst {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::array<int, kDim> generator_diagonal(int g) {
  const auto lin = deck_generator(g, AffineMode::deck).linear();
  if (!lin.is_diagonal()) throw std::logic_error("census: generator linear part is not diagonal");
  return lin.diagonal_entries();
}

// rho(alpha) = rho(beta) = rho(gamma) = I <=> the top three 2-bit fields vanish.
constexpr PackedAssignment kOrbifoldGeneratorBits = 0x3fu << 14;

}  // namespace

char letter(TargetElement t) {
  static constexpr char letters[] = {'I', 'a', 'b', 'c'};
  return letters[static_cast<int>(t)];
}

TargetElement target_from_letter(char c) {
  switch (c) {
    case 'I':
      return TargetElement::I;
    case 'a':
      return TargetElement::a;
    case 'b':
      return TargetElement::b;
    case 'c':
      return TargetElement::c;
    default:
      throw std::invalid_argument(std::string("not a Klein four-group letter: '") + c + "'");
  }
}

std::array<int, 3> ad_signs(TargetElement t) {
  // Ad(diag(d)) L_j = d_k d_l L_j for {j,k,l} = {1,2,3}; a diagonal element
  // with one +1 on axis j keeps L_j and negates the other two.
  switch (t) {
    case TargetElement::I:
      return {1, 1, 1};
    case TargetElement::a:
      return {1, -1, -1};
    case TargetElement::b:
      return {-1, 1, -1};
    case TargetElement::c:
      return {-1, -1, 1};
  }
  return {1, 1, 1};
}

HolonomyAssignment HolonomyAssignment::unpack(PackedAssignment packed) {
  HolonomyAssignment rho;
  for (int g = 0; g < kGeneratorCount; ++g) rho.images_[g] = packed_image(packed, g);
  return rho;
}

HolonomyAssignment HolonomyAssignment::parse(const std::string& letters) {
  if (letters.size() != kGeneratorCount) throw std::invalid_argument("assignment must have 10 letters: " + letters);
  HolonomyAssignment rho;
  for (int g = 0; g < kGeneratorCount; ++g) rho.images_[g] = target_from_letter(letters[g]);
  return rho;
}

PackedAssignment HolonomyAssignment::pack() const {
  PackedAssignment p = 0;
  for (int g = 0; g < kGeneratorCount; ++g) p = (p << 2) | static_cast<PackedAssignment>(images_[g]);
  return p;
}

std::string HolonomyAssignment::to_string() const {
  std::string s;
  for (auto t : images_) s += letter(t);
  return s;
}

bool is_irreducible(const HolonomyAssignment& rho) {
  for (int axis = 0; axis < 3; ++axis) {
    bool negated = false;
    for (int g = 0; g < kGeneratorCount && !negated; ++g) negated = ad_signs(rho[g])[axis] < 0;
    if (!negated) return false;
  }
  return true;
}

bool is_rigid(const HolonomyAssignment& rho) {
  static const std::array<std::array<int, kDim>, kGeneratorCount> diagonals = [] {
    std::array<std::array<int, kDim>, kGeneratorCount> d{};
    for (int g = 0; g < kGeneratorCount; ++g) d[g] = generator_diagonal(g);
    return d;
  }();
  for (int coord = 0; coord < kDim; ++coord)
    for (int axis = 0; axis < 3; ++axis) {
      bool negated = false;
      for (int g = 0; g < kGeneratorCount && !negated; ++g)
        negated = diagonals[g][coord] * ad_signs(rho[g])[axis] < 0;
      if (!negated) return false;
    }
  return true;
}

bool is_flat_on_resolution(const HolonomyAssignment& rho) {
  return rho[0] == TargetElement::I && rho[1] == TargetElement::I && rho[2] == TargetElement::I;
}

bool tau_condition(const HolonomyAssignment& rho) {
  TargetElement first = TargetElement::I;
  for (int i = 1; i <= kDim; ++i) {
    const TargetElement t = rho.tau(i);
    if (t == TargetElement::I) continue;
    if (first == TargetElement::I)
      first = t;
    else if (t != first)
      return true;
  }
  return false;
}

std::vector<std::uint16_t> relation_constraints(const RelationTable& relations) {
  std::vector<std::uint16_t> out;
  for (const auto& r : relations.all()) {
    const auto mask = r.parity_mask();
    if (mask != 0) out.push_back(mask);
  }
  return out;
}

bool satisfies_relations(PackedAssignment rho, const std::vector<std::uint16_t>& constraints) {
  for (auto mask : constraints) {
    std::uint8_t product = 0;
    for (int g = 0; g < kGeneratorCount; ++g)
      if (mask & (1u << g)) product ^= static_cast<std::uint8_t>(packed_image(rho, g));
    if (product != 0) return false;
  }
  return true;
}

std::string to_string(CensusMode mode) { return mode == CensusMode::free ? "free" : "constrained"; }

CensusMode census_mode_from_string(const std::string& text) {
  if (text == "free") return CensusMode::free;
  if (text == "constrained") return CensusMode::constrained;
  throw std::invalid_argument("census mode must be 'free' or 'constrained', got '" + text + "'");
}

SignGrid::SignGrid() {
  for (int g = 0; g < kGeneratorCount; ++g) {
    const auto d = generator_diagonal(g);
    for (int t = 0; t < 4; ++t) {
      const auto ad = ad_signs(static_cast<TargetElement>(t));
      std::uint32_t mask = 0;
      for (int coord = 0; coord < kDim; ++coord)
        for (int axis = 0; axis < 3; ++axis)
          if (d[coord] * ad[axis] < 0) mask |= 1u << (3 * coord + axis);
      rigid_[g][t] = mask;
    }
  }
}

std::uint32_t SignGrid::adjoint_mask(TargetElement t) {
  static constexpr std::uint32_t masks[] = {0b000, 0b110, 0b101, 0b011};
  return masks[static_cast<int>(t)];
}

bool SignGrid::irreducible(PackedAssignment rho) const {
  std::uint32_t axes = 0;
  for (int g = 0; g < kGeneratorCount; ++g) axes |= adjoint_mask(packed_image(rho, g));
  return axes == kAllAxes;
}

bool SignGrid::rigid(PackedAssignment rho) const {
  std::uint32_t pairs = 0;
  for (int g = 0; g < kGeneratorCount; ++g) pairs |= rigid_[g][static_cast<int>(packed_image(rho, g))];
  return pairs == kAllPairs;
}

CensusReport run_census(CensusMode mode, const RelationTable& relations) {
  const auto start = Clock::now();
  const SignGrid grid;
  const auto constraints = mode == CensusMode::constrained ? relation_constraints(relations) : std::vector<std::uint16_t>{};
  std::uint64_t total = 0, good = 0, nonflat = 0;
  const std::int64_t n = kAssignmentCount;
#pragma omp parallel for reduction(+ : total, good, nonflat) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto rho = static_cast<PackedAssignment>(i);
    if (!constraints.empty() && !satisfies_relations(rho, constraints)) continue;
    ++total;
    if (grid.irreducible(rho) && grid.rigid(rho)) {
      ++good;
      if (rho & kOrbifoldGeneratorBits) ++nonflat;
    }
  }
  CensusReport report;
  report.mode = mode;
  report.total = total;
  report.irreducible_and_rigid = good;
  report.nonflat_irreducible_rigid = nonflat;
  report.threads = omp_get_max_threads();
  report.seconds = seconds_since(start);
  return report;
}

std::uint64_t closed_form_irreducible_rigid() {
  const std::uint64_t excluded = 64u * ((1u << 7) * 3 - 2);
  return (std::uint64_t{1} << 20) - excluded;
}

std::uint64_t closed_form_nonflat() {
  return closed_form_irreducible_rigid() - (std::uint64_t{1} << 14) + ((1u << 7) * 3 - 2);
}

std::uint64_t criterion_mismatches() {
  const SignGrid grid;
  std::uint64_t mismatches = 0;
  const std::int64_t n = kAssignmentCount;
#pragma omp parallel for reduction(+ : mismatches) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto rho = static_cast<PackedAssignment>(i);
    const bool criterion = grid.irreducible(rho) && grid.rigid(rho);
    if (criterion != tau_condition(HolonomyAssignment::unpack(rho))) ++mismatches;
  }
  return mismatches;
}

std::vector<PackedAssignment> nonflat_irreducible_rigid_set(CensusMode mode, const RelationTable& relations) {
  const SignGrid grid;
  const auto constraints = mode == CensusMode::constrained ? relation_constraints(relations) : std::vector<std::uint16_t>{};
  std::vector<std::uint8_t> keep(kAssignmentCount, 0);
  const std::int64_t n = kAssignmentCount;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto rho = static_cast<PackedAssignment>(i);
    if (!(rho & kOrbifoldGeneratorBits)) continue;
    if (!constraints.empty() && !satisfies_relations(rho, constraints)) continue;
    keep[i] = grid.irreducible(rho) && grid.rigid(rho);
  }
  std::vector<PackedAssignment> out;
  for (std::uint32_t i = 0; i < kAssignmentCount; ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

namespace reference {

namespace {

using Matrix3 = std::array<std::array<int, 3>, 3>;

Matrix3 target_matrix(TargetElement t) {
  static const std::array<std::array<int, 3>, 4> diag = {{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  Matrix3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = diag[static_cast<int>(t)][i];
  return m;
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Matrix3 transpose(const Matrix3& a) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = a[j][i];
  return out;
}

// Matrix of X -> R X R^T on so(3) in the basis L_1 = E32 - E23,
// L_2 = E13 - E31, L_3 = E21 - E12.
Matrix3 adjoint_matrix(TargetElement t) {
  const Matrix3 r = target_matrix(t);
  std::array<Matrix3, 3> basis{};
  basis[0][2][1] = 1, basis[0][1][2] = -1;
  basis[1][0][2] = 1, basis[1][2][0] = -1;
  basis[2][1][0] = 1, basis[2][0][1] = -1;
  Matrix3 ad{};
  for (int j = 0; j < 3; ++j) {
    const Matrix3 image = multiply(multiply(r, basis[j]), transpose(r));
    ad[0][j] = image[2][1];
    ad[1][j] = image[0][2];
    ad[2][j] = image[1][0];
  }
  return ad;
}

std::size_t fixed_dimension(const std::vector<RationalMatrix>& operators) {
  const std::size_t n = operators.front().cols();
  RationalMatrix stacked;
  for (const auto& op : operators) {
    RationalMatrix shifted = op;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= 1;
    stacked.append_rows(shifted);
  }
  return n - rank(std::move(stacked));
}

}  // namespace

std::size_t adjoint_fixed_dimension(const HolonomyAssignment& rho) {
  std::vector<RationalMatrix> ops;
  for (int g = 0; g < kGeneratorCount; ++g) {
    const Matrix3 ad = adjoint_matrix(rho[g]);
    RationalMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = ad[i][j];
    ops.push_back(std::move(m));
  }
  return fixed_dimension(ops);
}

std::size_t rigid_fixed_dimension(const HolonomyAssignment& rho) {
  std::vector<RationalMatrix> ops;
  for (int g = 0; g < kGeneratorCount; ++g) {
    const LinearMap7 d = deck_generator(g, AffineMode::deck).linear().to_linear_map();
    const Matrix3 ad = adjoint_matrix(rho[g]);
    RationalMatrix m(3 * kDim, 3 * kDim);
    for (int i = 0; i < kDim; ++i)
      for (int k = 0; k < kDim; ++k) {
        if (d.entries[i][k] == 0) continue;
        for (int j = 0; j < 3; ++j)
          for (int l = 0; l < 3; ++l) m(3 * i + j, 3 * k + l) = d.entries[i][k] * ad[j][l];
      }
    ops.push_back(std::move(m));
  }
  return fixed_dimension(ops);
}

CensusReport run_census_serial(CensusMode mode, const RelationTable& relations) {
  const auto start = Clock::now();
  const auto constraints = mode == CensusMode::constrained ? relation_constraints(relations) : std::vector<std::uint16_t>{};
  CensusReport report;
  report.mode = mode;
  for (PackedAssignment p = 0; p < kAssignmentCount; ++p) {
    if (!constraints.empty() && !satisfies_relations(p, constraints)) continue;
    const HolonomyAssignment rho = HolonomyAssignment::unpack(p);
    ++report.total;
    if (is_irreducible(rho) && is_rigid(rho)) {
      ++report.irreducible_and_rigid;
      if (!is_flat_on_resolution(rho)) ++report.nonflat_irreducible_rigid;
    }
  }
  report.threads = 1;
  report.seconds = seconds_since(start);
  return report;
}

}  // namespace reference

}  // namespace g2inst
