#include "g2inst/orbifold.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace g2inst {

namespace {

Rational frac(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return r - q;
}

bool less_translation(const Translation7& a, const Translation7& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

AffineIsometry::AffineIsometry(SignedPermutation linear, Translation7 translation, AffineMode mode)
    : linear_(linear), translation_(std::move(translation)), mode_(mode) {
  reduce();
}

void AffineIsometry::reduce() {
  if (mode_ != AffineMode::torus) return;
  for (auto& t : translation_) t = frac(t);
}

AffineIsometry AffineIsometry::identity(AffineMode mode) { return {SignedPermutation::identity(), {}, mode}; }

AffineIsometry AffineIsometry::translation(Translation7 t, AffineMode mode) {
  return {SignedPermutation::identity(), std::move(t), mode};
}

bool AffineIsometry::is_identity() const {
  return linear_.is_identity() && std::all_of(translation_.begin(), translation_.end(), [](const Rational& t) { return t == 0; });
}

std::optional<IntVector7> AffineIsometry::as_integer_translation() const {
  if (!linear_.is_identity()) return std::nullopt;
  IntVector7 out{};
  for (int i = 0; i < kDim; ++i) {
    if (!is_integer(translation_[i])) return std::nullopt;
    out[i] = translation_[i].get_num().get_si();
  }
  return out;
}

Translation7 AffineIsometry::apply(const Translation7& x) const {
  Translation7 y = linear_.apply(x);
  for (int i = 0; i < kDim; ++i) {
    y[i] += translation_[i];
    if (mode_ == AffineMode::torus) y[i] = frac(y[i]);
  }
  return y;
}

AffineIsometry AffineIsometry::in_mode(AffineMode mode) const { return {linear_, translation_, mode}; }

std::string AffineIsometry::to_string() const {
  std::string out = linear_.to_string() + " + (";
  for (int i = 0; i < kDim; ++i) out += translation_[i].get_str() + (i + 1 < kDim ? "," : ")");
  return out;
}

bool operator<(const AffineIsometry& a, const AffineIsometry& b) {
  if (a.linear_ != b.linear_) return a.linear_ < b.linear_;
  if (a.translation_ != b.translation_) return less_translation(a.translation_, b.translation_);
  return a.mode_ < b.mode_;
}

AffineIsometry compose(const AffineIsometry& f, const AffineIsometry& g) {
  if (f.mode() != g.mode()) throw std::invalid_argument("compose: mixed deck/torus modes");
  Translation7 t = f.linear().apply(g.translation());
  for (int i = 0; i < kDim; ++i) t[i] += f.translation()[i];
  return {f.linear() * g.linear(), std::move(t), f.mode()};
}

AffineIsometry inverse(const AffineIsometry& f) {
  const SignedPermutation inv = f.linear().inverse();
  Translation7 t = inv.apply(f.translation());
  for (auto& x : t) x = -x;
  return {inv, std::move(t), f.mode()};
}

AffineIsometry commutator(const AffineIsometry& f, const AffineIsometry& g) {
  return compose(compose(f, g), compose(inverse(f), inverse(g)));
}

AffineIsometry conjugate(const AffineIsometry& f, const AffineIsometry& g) { return compose(compose(f, g), inverse(f)); }

std::string generator_name(int index) {
  static const std::array<const char*, kGeneratorCount> names = {"alpha", "beta", "gamma", "tau1", "tau2",
                                                                 "tau3",  "tau4", "tau5",  "tau6", "tau7"};
  if (index < 0 || index >= kGeneratorCount) throw std::out_of_range("generator index");
  return names[index];
}

AffineIsometry alpha(AffineMode mode) {
  return {SignedPermutation::diagonal({1, 1, 1, -1, -1, -1, -1}), {}, mode};
}

AffineIsometry beta(AffineMode mode) {
  Translation7 t{};
  t[5] = Rational(1, 2);
  return {SignedPermutation::diagonal({1, -1, -1, 1, 1, -1, -1}), t, mode};
}

AffineIsometry gamma(AffineMode mode) {
  Translation7 t{};
  t[4] = Rational(1, 2);
  t[6] = Rational(1, 2);
  return {SignedPermutation::diagonal({-1, 1, -1, 1, -1, 1, -1}), t, mode};
}

AffineIsometry tau(int i, AffineMode mode) {
  if (i < 1 || i > kDim) throw std::out_of_range("tau index must be in 1..7");
  Translation7 t{};
  t[i - 1] = 1;
  return AffineIsometry::translation(t, mode);
}

AffineIsometry deck_generator(int index, AffineMode mode) {
  switch (index) {
    case 0:
      return alpha(mode);
    case 1:
      return beta(mode);
    case 2:
      return gamma(mode);
    default:
      if (index < 0 || index >= kGeneratorCount) throw std::out_of_range("generator index");
      return tau(index - 2, mode);
  }
}

std::vector<AffineIsometry> generate_group(const std::vector<AffineIsometry>& gens, AffineMode mode, std::size_t cap) {
  std::vector<AffineIsometry> step;
  for (const auto& g : gens) {
    step.push_back(g.in_mode(mode));
    step.push_back(inverse(g.in_mode(mode)));
  }
  std::set<AffineIsometry> seen{AffineIsometry::identity(mode)};
  std::deque<AffineIsometry> queue{AffineIsometry::identity(mode)};
  while (!queue.empty()) {
    const AffineIsometry e = queue.front();
    queue.pop_front();
    for (const auto& g : step) {
      AffineIsometry next = compose(e, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw std::runtime_error("generate_group: closure exceeded " + std::to_string(cap) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

const std::vector<AffineIsometry>& gamma_group() {
  static const std::vector<AffineIsometry> group =
      generate_group({alpha(AffineMode::torus), beta(AffineMode::torus), gamma(AffineMode::torus)}, AffineMode::torus);
  return group;
}

int FixedTorus::dimension() const { return std::popcount(static_cast<unsigned>(free_mask)); }

bool FixedTorus::contains(const Translation7& x) const {
  for (int i = 0; i < kDim; ++i)
    if (!(free_mask & (1u << i)) && frac(x[i] - pinned[i]) != 0) return false;
  return true;
}

FixedTorus FixedTorus::image(const AffineIsometry& g) const {
  const auto& lin = g.linear();
  FixedTorus out;
  for (int i = 0; i < kDim; ++i) {
    const int target = lin.perm[i];
    if (free_mask & (1u << i)) {
      out.free_mask |= static_cast<std::uint8_t>(1u << target);
    } else {
      out.pinned[target] = frac(static_cast<int>(lin.sign[i]) * pinned[i] + g.translation()[target]);
    }
  }
  for (int i = 0; i < kDim; ++i)
    if (out.free_mask & (1u << i)) out.pinned[i] = 0;
  return out;
}

Translation7 FixedTorus::point(const std::vector<Rational>& free_values) const {
  Translation7 x = pinned;
  std::size_t next = 0;
  for (int i = 0; i < kDim; ++i) {
    if (!(free_mask & (1u << i))) continue;
    if (next >= free_values.size()) throw std::invalid_argument("FixedTorus::point: too few free values");
    x[i] = free_values[next++];
  }
  return x;
}

std::string FixedTorus::to_string() const {
  std::string out = "(";
  for (int i = 0; i < kDim; ++i) {
    out += (free_mask & (1u << i)) ? "*" : pinned[i].get_str();
    out += i + 1 < kDim ? "," : ")";
  }
  return out;
}

bool operator<(const FixedTorus& a, const FixedTorus& b) {
  if (a.free_mask != b.free_mask) return a.free_mask < b.free_mask;
  return less_translation(a.pinned, b.pinned);
}

std::vector<FixedTorus> fixed_set(const AffineIsometry& g) {
  if (!g.linear().is_diagonal()) throw std::invalid_argument("fixed_set: only diagonal linear parts are supported");
  const auto torus = g.in_mode(AffineMode::torus);
  const auto diag = torus.linear().diagonal_entries();
  std::vector<FixedTorus> out{FixedTorus{}};
  for (int i = 0; i < kDim; ++i) {
    const Rational& v = torus.translation()[i];
    if (diag[i] == 1) {
      if (v != 0) return {};
      for (auto& t : out) t.free_mask |= static_cast<std::uint8_t>(1u << i);
      continue;
    }
    // -x + v = x mod 1  <=>  x in {v/2, v/2 + 1/2}
    std::vector<FixedTorus> next;
    for (const auto& t : out)
      for (const Rational& value : {frac(v / 2), frac(v / 2 + Rational(1, 2))}) {
        FixedTorus n = t;
        n.pinned[i] = value;
        next.push_back(n);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SingularSetReport singular_set(const std::vector<AffineIsometry>& group) {
  SingularSetReport report;
  std::vector<AffineIsometry> torus_group;
  for (const auto& g : group) torus_group.push_back(g.in_mode(AffineMode::torus));

  std::set<FixedTorus> canonical;
  for (const auto& g : torus_group) {
    if (g.is_identity()) continue;
    auto tori = fixed_set(g);
    for (const auto& t : tori) {
      FixedTorus best = t;
      for (const auto& h : torus_group) best = std::min(best, t.image(h));
      canonical.insert(best);
    }
    report.per_element.push_back({g, std::move(tori)});
  }
  report.representatives.assign(canonical.begin(), canonical.end());
  report.component_count = canonical.size();
  return report;
}

std::size_t singular_components(const std::vector<AffineIsometry>& group) { return singular_set(group).component_count; }

std::size_t singular_components() { return singular_components(gamma_group()); }

std::uint16_t Relation::parity_mask() const {
  std::uint16_t mask = 0;
  for (const auto& [g, e] : word)
    if (e % 2 != 0) mask ^= static_cast<std::uint16_t>(1u << g);
  for (int i = 0; i < kDim; ++i)
    if (translation[i] % 2 != 0) mask ^= static_cast<std::uint16_t>(1u << (3 + i));
  return mask;
}

std::vector<Relation> RelationTable::all() const {
  std::vector<Relation> out = squares;
  out.insert(out.end(), commutators.begin(), commutators.end());
  out.insert(out.end(), conjugates.begin(), conjugates.end());
  return out;
}

AffineIsometry evaluate_word(const std::vector<std::pair<int, int>>& word) {
  AffineIsometry acc = AffineIsometry::identity(AffineMode::deck);
  for (const auto& [g, e] : word) {
    const AffineIsometry gen = deck_generator(g, AffineMode::deck);
    const AffineIsometry step = e > 0 ? gen : inverse(gen);
    for (int n = 0; n < std::abs(e); ++n) acc = compose(acc, step);
  }
  return acc;
}

RelationTable relation_table() {
  auto make = [](std::string name, std::vector<std::pair<int, int>> word) {
    const AffineIsometry value = evaluate_word(word);
    const auto t = value.as_integer_translation();
    if (!t) throw std::logic_error("relation " + name + " is not a pure integer translation: " + value.to_string());
    return Relation{std::move(name), std::move(word), *t};
  };
  RelationTable table;
  for (int g = 0; g < 3; ++g) table.squares.push_back(make(generator_name(g) + "^2", {{g, 1}, {g, 1}}));
  for (int g = 0; g < 3; ++g)
    for (int h = g + 1; h < 3; ++h)
      table.commutators.push_back(
          make("[" + generator_name(g) + "," + generator_name(h) + "]", {{g, 1}, {h, 1}, {g, -1}, {h, -1}}));
  for (int g = 0; g < 3; ++g)
    for (int i = 3; i < kGeneratorCount; ++i)
      table.conjugates.push_back(make(generator_name(g) + " " + generator_name(i) + " " + generator_name(g) + "^-1",
                                      {{g, 1}, {i, 1}, {g, -1}}));
  return table;
}

std::string to_string(const IntVector7& v) {
  std::string out = "(";
  for (int i = 0; i < kDim; ++i) out += std::to_string(v[i]) + (i + 1 < kDim ? "," : ")");
  return out;
}

}  // namespace g2inst
