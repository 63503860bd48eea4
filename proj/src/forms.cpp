#include "g2inst/forms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace g2inst {

namespace {

constexpr IndexMask kFullMask = 0x7f;

struct BasisTables {
  std::array<std::vector<IndexMask>, kDim + 1> masks;
  std::array<std::uint8_t, 128> position{};

  BasisTables() {
    // Lexicographic order of increasing tuples: recursive generation
    // in increasing first element visits them in that order.
    for (int k = 0; k <= kDim; ++k) {
      generate(k, 1, 0, masks[k]);
    }
    for (int k = 0; k <= kDim; ++k)
      for (std::size_t i = 0; i < masks[k].size(); ++i) position[masks[k][i]] = static_cast<std::uint8_t>(i);
  }

  static void generate(int remaining, int next, IndexMask acc, std::vector<IndexMask>& out) {
    if (remaining == 0) {
      out.push_back(acc);
      return;
    }
    for (int i = next; i <= kDim - remaining + 1; ++i)
      generate(remaining - 1, i + 1, static_cast<IndexMask>(acc | (1u << (i - 1))), out);
  }
};

const BasisTables& tables() {
  static const BasisTables t;
  return t;
}

int degree_of(IndexMask mask) { return std::popcount(static_cast<unsigned>(mask)); }

}  // namespace

Vector7 basis_vector(int index) {
  if (index < 1 || index > kDim) throw std::out_of_range("basis_vector index");
  Vector7 v;
  v[index - 1] = 1;
  return v;
}

Rational dot(const Vector7& u, const Vector7& v) {
  Rational s;
  for (int i = 0; i < kDim; ++i) s += u[i] * v[i];
  return s;
}

LinearMap7 LinearMap7::identity() { return scalar(1); }

LinearMap7 LinearMap7::scalar(const Rational& s) {
  LinearMap7 m;
  for (int i = 0; i < kDim; ++i) m.entries[i][i] = s;
  return m;
}

LinearMap7 LinearMap7::diagonal(const std::array<int, kDim>& diag) {
  LinearMap7 m;
  for (int i = 0; i < kDim; ++i) m.entries[i][i] = diag[i];
  return m;
}

Vector7 LinearMap7::apply(const Vector7& v) const {
  Vector7 out;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (entries[i][j] != 0) out[i] += entries[i][j] * v[j];
  return out;
}

LinearMap7 operator*(const LinearMap7& a, const LinearMap7& b) {
  LinearMap7 out;
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) {
      if (a.entries[i][k] == 0) continue;
      for (int j = 0; j < kDim; ++j) out.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  return out;
}

std::size_t basis_size(int degree) {
  if (degree < 0 || degree > kDim) throw std::invalid_argument("form degree out of range");
  return tables().masks[degree].size();
}

std::span<const IndexMask> basis_masks(int degree) {
  if (degree < 0 || degree > kDim) throw std::invalid_argument("form degree out of range");
  return tables().masks[degree];
}

std::size_t basis_position(IndexMask mask) { return tables().position[mask & kFullMask]; }

std::vector<int> mask_indices(IndexMask mask) {
  std::vector<int> out;
  for (int i = 0; i < kDim; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

int wedge_sign(IndexMask left, IndexMask right) {
  if (left & right) return 0;
  // Count pairs (i in left, j in right) with j < i.
  int inversions = 0;
  for (int i = 0; i < kDim; ++i)
    if (left & (1u << i)) inversions += std::popcount(static_cast<unsigned>(right & ((1u << i) - 1)));
  return (inversions % 2) ? -1 : 1;
}

KForm::KForm(int degree) : degree_(degree), coeffs_(basis_size(degree)) {}

KForm KForm::basis(std::initializer_list<int> indices) {
  return basis(std::span<const int>(indices.begin(), indices.size()));
}

KForm KForm::basis(std::span<const int> indices) {
  KForm out(static_cast<int>(indices.size()));
  std::vector<int> idx(indices.begin(), indices.end());
  IndexMask mask = 0;
  for (int i : idx) {
    if (i < 1 || i > kDim) throw std::invalid_argument("basis index out of range 1..7");
    if (mask & (1u << (i - 1))) return out;
    mask |= static_cast<IndexMask>(1u << (i - 1));
  }
  int swaps = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) ++swaps;
  out.set(mask, swaps % 2 ? -1 : 1);
  return out;
}

KForm KForm::constant(const Rational& c) {
  KForm out(0);
  out.set(0, c);
  return out;
}

KForm KForm::volume() {
  KForm out(kDim);
  out.set(kFullMask, 1);
  return out;
}

KForm KForm::one_form(const Vector7& components) {
  KForm out(1);
  for (int i = 0; i < kDim; ++i) out.set(static_cast<IndexMask>(1u << i), components[i]);
  return out;
}

const Rational& KForm::coeff(IndexMask mask) const {
  if (degree_of(mask) != degree_) throw std::invalid_argument("mask degree does not match form degree");
  return coeffs_[basis_position(mask)];
}

const Rational& KForm::coeff(std::initializer_list<int> increasing) const {
  IndexMask mask = 0;
  int prev = 0;
  for (int i : increasing) {
    if (i <= prev || i > kDim) throw std::invalid_argument("coefficient tuple must be strictly increasing in 1..7");
    mask |= static_cast<IndexMask>(1u << (i - 1));
    prev = i;
  }
  return coeff(mask);
}

void KForm::set(IndexMask mask, const Rational& value) {
  if (degree_of(mask) != degree_) throw std::invalid_argument("mask degree does not match form degree");
  coeffs_[basis_position(mask)] = value;
}

void KForm::add(IndexMask mask, const Rational& value) {
  if (degree_of(mask) != degree_) throw std::invalid_argument("mask degree does not match form degree");
  coeffs_[basis_position(mask)] += value;
}

std::vector<KForm::Term> KForm::terms() const {
  std::vector<Term> out;
  const auto masks = basis_masks(degree_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.push_back({masks[i], coeffs_[i]});
  return out;
}

std::size_t KForm::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

bool KForm::is_zero() const { return nonzero_count() == 0; }

void KForm::require_same_degree(const KForm& other) const {
  if (other.degree_ != degree_) throw std::invalid_argument("forms of different degree");
}

KForm& KForm::operator+=(const KForm& other) {
  require_same_degree(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

KForm& KForm::operator-=(const KForm& other) {
  require_same_degree(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

KForm& KForm::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const KForm& a, const KForm& b) { return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_; }

std::string KForm::to_string() const {
  std::string out;
  for (const auto& [mask, c] : terms()) {
    Rational mag = abs(c);
    if (out.empty())
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    std::string name = "dx";
    for (int i : mask_indices(mask)) name += static_cast<char>('0' + i);
    if (degree_ == 0)
      out += mag.get_str();
    else if (mag == 1)
      out += name;
    else
      out += mag.get_str() + "*" + name;
  }
  return out.empty() ? "0" : out;
}

KForm wedge(const KForm& a, const KForm& b) {
  const int degree = a.degree() + b.degree();
  if (degree > kDim) throw std::invalid_argument("wedge: degree " + std::to_string(degree) + " exceeds 7");
  KForm out(degree);
  const auto ma = basis_masks(a.degree());
  const auto mb = basis_masks(b.degree());
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0) continue;
      const int s = wedge_sign(ma[i], mb[j]);
      if (s == 0) continue;
      const IndexMask m = ma[i] | mb[j];
      if (s > 0)
        out.add(m, ca[i] * cb[j]);
      else
        out.add(m, -(ca[i] * cb[j]));
    }
  }
  return out;
}

KForm hodge_star(const KForm& a) {
  KForm out(kDim - a.degree());
  for (const auto& [mask, c] : a.terms()) {
    const IndexMask comp = static_cast<IndexMask>(~mask & kFullMask);
    out.set(comp, wedge_sign(mask, comp) * c);
  }
  return out;
}

KForm interior_product(const Vector7& u, const KForm& a) {
  if (a.degree() == 0) return KForm(0);
  KForm out(a.degree() - 1);
  for (const auto& [mask, c] : a.terms()) {
    int position = 0;
    for (int i = 0; i < kDim; ++i) {
      if (!(mask & (1u << i))) continue;
      if (u[i] != 0) {
        Rational term = c * u[i];
        if (position % 2) term = -term;
        out.add(static_cast<IndexMask>(mask & ~(1u << i)), term);
      }
      ++position;
    }
  }
  return out;
}

Rational inner_product(const KForm& a, const KForm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("inner_product: degree mismatch");
  Rational s;
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) s += ca[i] * cb[i];
  return s;
}

Rational evaluate(const KForm& a, std::span<const Vector7> vectors) {
  if (static_cast<int>(vectors.size()) != a.degree()) throw std::invalid_argument("evaluate: wrong number of vectors");
  KForm current = a;
  for (const auto& v : vectors) current = interior_product(v, current);
  return current.coeff(0);
}

KForm pullback(const LinearMap7& m, const KForm& a) {
  // m^* dx_j = sum_i m_{ji} dx_i
  std::array<KForm, kDim> pulled;
  for (int j = 0; j < kDim; ++j) {
    pulled[j] = KForm(1);
    for (int i = 0; i < kDim; ++i)
      if (m.entries[j][i] != 0) pulled[j].set(static_cast<IndexMask>(1u << i), m.entries[j][i]);
  }
  KForm out(a.degree());
  for (const auto& [mask, c] : a.terms()) {
    KForm term = KForm::constant(c);
    for (int j = 0; j < kDim; ++j)
      if (mask & (1u << j)) term = wedge(term, pulled[j]);
    out += term;
  }
  return out;
}

const KForm& standard_phi() {
  static const KForm phi = [] {
    KForm p = KForm::basis({1, 2, 3}) + KForm::basis({1, 4, 5}) + KForm::basis({1, 6, 7}) + KForm::basis({2, 4, 6}) -
              KForm::basis({2, 5, 7}) - KForm::basis({3, 4, 7}) - KForm::basis({3, 5, 6});
    return p;
  }();
  return phi;
}

const KForm& standard_psi() {
  static const KForm psi = hodge_star(standard_phi());
  return psi;
}

Vector7 cross_product(const Vector7& u, const Vector7& v) {
  const KForm one = interior_product(v, interior_product(u, standard_phi()));
  Vector7 out;
  for (int i = 0; i < kDim; ++i) out[i] = one.coeff(static_cast<IndexMask>(1u << i));
  return out;
}

bool preserves_phi(const LinearMap7& m) { return pullback(m, standard_phi()) == standard_phi(); }

TwoFormSplit project_2forms(const KForm& a) {
  if (a.degree() != 2) throw std::invalid_argument("project_2forms expects a 2-form");
  KForm p7 = a + hodge_star(wedge(a, standard_phi()));
  p7 *= Rational(1, 3);
  KForm p14 = a - p7;
  return {std::move(p7), std::move(p14)};
}

namespace {

// i(e_i) psi for i = 1..7 and the inverse of their Gram matrix setup.
const std::array<KForm, kDim>& seven_dim_generators() {
  static const std::array<KForm, kDim> gens = [] {
    std::array<KForm, kDim> g;
    for (int i = 0; i < kDim; ++i) g[i] = interior_product(basis_vector(i + 1), standard_psi());
    return g;
  }();
  return gens;
}

}  // namespace

ThreeFormSplit project_3forms(const KForm& a) {
  if (a.degree() != 3) throw std::invalid_argument("project_3forms expects a 3-form");
  const KForm& phi = standard_phi();
  KForm p1 = (inner_product(a, phi) / inner_product(phi, phi)) * phi;

  const auto& gens = seven_dim_generators();
  RationalMatrix gram(kDim, kDim);
  std::vector<Rational> rhs(kDim);
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) gram(i, j) = inner_product(gens[i], gens[j]);
    rhs[i] = inner_product(a, gens[i]);
  }
  auto u = solve(gram, rhs);
  if (!u) throw std::logic_error("project_3forms: inconsistent Gram system");
  KForm p7(3);
  for (int i = 0; i < kDim; ++i) p7 += (*u)[i] * gens[i];
  KForm p27 = a - p1 - p7;
  return {std::move(p1), std::move(p7), std::move(p27)};
}

std::pair<std::size_t, std::size_t> two_form_projector_ranks() {
  return {rank(operator_matrix(2, [](const KForm& e) { return project_2forms(e).p7; })),
          rank(operator_matrix(2, [](const KForm& e) { return project_2forms(e).p14; }))};
}

std::array<std::size_t, 3> three_form_projector_ranks() {
  return {rank(operator_matrix(3, [](const KForm& e) { return project_3forms(e).p1; })),
          rank(operator_matrix(3, [](const KForm& e) { return project_3forms(e).p7; })),
          rank(operator_matrix(3, [](const KForm& e) { return project_3forms(e).p27; }))};
}

namespace {

IndexMask mask_of(std::span<const int> indices) {
  IndexMask m = 0;
  for (int i : indices) {
    if (i < 1 || i > kDim) throw std::invalid_argument("coordinate index out of range 1..7");
    if (m & (1u << (i - 1))) throw std::invalid_argument("repeated coordinate index");
    m |= static_cast<IndexMask>(1u << (i - 1));
  }
  return m;
}

}  // namespace

HyperkahlerTriple::HyperkahlerTriple(std::array<KForm, 3> omega, std::array<int, 4> block)
    : omega_(std::move(omega)), block_(block) {
  std::sort(block_.begin(), block_.end());
  const IndexMask block_mask = mask_of(block_);
  for (const auto& w : omega_) {
    if (w.degree() != 2) throw std::invalid_argument("hyperkahler triple: forms must have degree 2");
    for (const auto& t : w.terms())
      if ((t.mask & ~block_mask) != 0) throw std::invalid_argument("hyperkahler triple: form not supported on block");
  }
  const KForm vol2 = Rational(2) * block_volume();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const KForm expected = i == j ? vol2 : KForm(4);
      if (wedge(omega_[i], omega_[j]) != expected)
        throw std::invalid_argument("hyperkahler triple: omega_i ^ omega_j != 2 delta_ij vol");
    }
}

HyperkahlerTriple HyperkahlerTriple::flat(std::array<int, 4> block) {
  std::sort(block.begin(), block.end());
  auto y = [&](int r, int s) { return KForm::basis({block[r - 1], block[s - 1]}); };
  return HyperkahlerTriple({-(y(1, 2) + y(3, 4)), y(2, 4) - y(1, 3), y(1, 4) + y(2, 3)}, block);
}

KForm HyperkahlerTriple::block_volume() const { return KForm::basis(block_); }

std::vector<KForm> HyperkahlerTriple::anti_self_dual_basis() const {
  std::vector<KForm> block_forms;
  for (int r = 0; r < 4; ++r)
    for (int s = r + 1; s < 4; ++s) block_forms.push_back(KForm::basis({block_[r], block_[s]}));
  const IndexMask vol_mask = mask_of(block_);
  RationalMatrix conditions(3, block_forms.size());
  for (int i = 0; i < 3; ++i)
    for (std::size_t m = 0; m < block_forms.size(); ++m) conditions(i, m) = wedge(block_forms[m], omega_[i]).coeff(vol_mask);
  std::vector<KForm> out;
  for (const auto& v : null_space(conditions)) {
    KForm b(2);
    for (std::size_t m = 0; m < block_forms.size(); ++m) b += v[m] * block_forms[m];
    out.push_back(std::move(b));
  }
  return out;
}

ProductG2 product_g2(const HyperkahlerTriple& triple, std::array<int, 3> r3) {
  const IndexMask r_mask = mask_of(r3);
  const IndexMask b_mask = mask_of(triple.block());
  if ((r_mask & b_mask) != 0 || (r_mask | b_mask) != kFullMask)
    throw std::invalid_argument("product_g2: R^3 coordinates must complement the hyperkahler block");
  const auto& w = triple.omega();
  KForm phi = KForm::basis(r3);
  for (int i = 0; i < 3; ++i) phi -= wedge(KForm::basis({r3[i]}), w[i]);
  KForm psi = triple.block_volume();
  for (int i = 0; i < 3; ++i) psi -= wedge(w[i], KForm::basis({r3[(i + 1) % 3], r3[(i + 2) % 3]}));
  return {std::move(phi), std::move(psi)};
}

}  // namespace g2inst
