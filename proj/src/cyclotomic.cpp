#include "g2inst/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace g2inst {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
    if (a.empty()) break;
  }
  trim(q);
  return {q, a};
}

const Poly& modulus(int k) {
  static std::mutex mutex;
  static std::map<int, Poly> cache;  // node-based, references stay valid
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  // x^k - 1 = prod over d | k of Phi_d.
  Poly p(k + 1, Rational(0));
  p[0] = -1;
  p[k] = 1;
  for (int d = 1; d < k; ++d)
    if (k % d == 0) p = divmod(p, modulus(d)).first;
  std::lock_guard lock(mutex);
  return cache.emplace(k, std::move(p)).first->second;
}

Poly reduce(const Poly& p, int k) { return divmod(p, modulus(k)).second; }

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return modulus(k);
}

Cyclotomic::Cyclotomic(const Rational& r) : k_(1), c_{r} { normalize(); }

Cyclotomic::Cyclotomic(int k, std::vector<Rational> coeffs) : k_(k), c_(std::move(coeffs)) { normalize(); }

void Cyclotomic::normalize() {
  trim(c_);
  if (k_ > 1) c_ = reduce(c_, k_);
  if (c_.size() <= 1) k_ = 1;  // rational: forget the field
}

Cyclotomic Cyclotomic::zeta(int k, int m) {
  if (k < 1) throw std::invalid_argument("cyclotomic order must be positive");
  m = ((m % k) + k) % k;
  Poly p(m + 1, Rational(0));
  p[m] = 1;
  return {k, p};
}

Cyclotomic Cyclotomic::two_cos(int k, int m) { return zeta(k, m) + zeta(k, -m); }

bool Cyclotomic::is_rational() const { return c_.size() <= 1; }

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is irrational: " + to_string());
  return c_.empty() ? Rational(0) : c_[0];
}

double Cyclotomic::to_double() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    sum += c_[i].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / k_);
  return sum.real();
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return g2inst::to_string(rational());
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + g2inst::to_string(c_[i]) + ")";
    if (i > 0) out += "*z" + std::to_string(k_) + "^" + std::to_string(i);
  }
  return out;
}

void Cyclotomic::unify(Cyclotomic& a, Cyclotomic& b) {
  if (a.k_ == b.k_) return;
  if (a.is_rational()) {
    a.k_ = b.k_;
    return;
  }
  if (b.is_rational()) {
    b.k_ = a.k_;
    return;
  }
  // Embed both in Q(zeta_l), l = lcm: zeta_k = zeta_l^(l/k).
  const int l = std::lcm(a.k_, b.k_);
  auto lift = [l](Cyclotomic& x) {
    const int step = l / x.k_;
    Poly p(x.c_.size() * step, Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) p[i * step] = x.c_[i];
    x = Cyclotomic(l, p);
  };
  lift(a);
  lift(b);
}

Cyclotomic Cyclotomic::operator-() const {
  Poly p = c_;
  for (auto& x : p) x = -x;
  return {k_, p};
}

Cyclotomic operator+(const Cyclotomic& a0, const Cyclotomic& b0) {
  Cyclotomic a = a0, b = b0;
  Cyclotomic::unify(a, b);
  Poly p = a.c_;
  if (p.size() < b.c_.size()) p.resize(b.c_.size(), Rational(0));
  for (std::size_t i = 0; i < b.c_.size(); ++i) p[i] += b.c_[i];
  return {a.k_, p};
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a0, const Cyclotomic& b0) {
  Cyclotomic a = a0, b = b0;
  Cyclotomic::unify(a, b);
  return {a.k_, mul(a.c_, b.c_)};
}

Cyclotomic Cyclotomic::inverse() const {
  if (c_.empty()) throw std::domain_error("division by zero");
  if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
  // Extended Euclid: s * c + t * Phi_k = g, g a nonzero constant since Phi_k is irreducible.
  Poly r0 = modulus(k_), r1 = c_;
  Poly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw std::logic_error("cyclotomic inverse: non-unit");
  const Rational g = r1[0];
  for (auto& x : s1) x /= g;
  return {k_, s1};
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a0, const Cyclotomic& b0) { return (a0 - b0).c_.empty(); }

}  // namespace g2inst
