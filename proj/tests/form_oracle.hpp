#pragma once

// Exterior algebra from first principles: forms as alternating multilinear
// maps evaluated on basis vectors, wedge as the full permutation sum, star
// from the parity of (I, complement of I). Shares nothing with the library
// beyond KForm's storage.

#include <algorithm>
#include <numeric>
#include <vector>

#include "g2inst/forms.hpp"

namespace oracle {

using g2inst::IndexMask;
using g2inst::KForm;
using g2inst::Rational;

inline int permutation_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      inversions += seq[i] > seq[j];
    }
  return inversions % 2 ? -1 : 1;
}

inline IndexMask mask_of(const std::vector<int>& idx) {
  IndexMask m = 0;
  for (int i : idx) m |= static_cast<IndexMask>(1u << i);
  return m;
}

inline std::vector<int> indices_of(IndexMask m) {
  std::vector<int> out;
  for (int i = 0; i < g2inst::kDim; ++i)
    if (m & (1u << i)) out.push_back(i);
  return out;
}

/// a(e_{i1}, ..., e_{ik}) for 0-based indices in any order.
inline Rational component(const KForm& a, const std::vector<int>& idx) {
  const int s = permutation_sign(idx);
  if (s == 0) return 0;
  return s * a.coeff(mask_of(idx));
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline KForm wedge(const KForm& a, const KForm& b) {
  const int p = a.degree(), q = b.degree();
  KForm out(p + q);
  for (const IndexMask m : g2inst::basis_masks(p + q)) {
    const auto idx = indices_of(m);
    std::vector<int> sigma(idx.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    Rational sum = 0;
    do {
      std::vector<int> left, right;
      for (int i = 0; i < p; ++i) left.push_back(idx[sigma[i]]);
      for (int i = p; i < p + q; ++i) right.push_back(idx[sigma[i]]);
      sum += permutation_sign(sigma) * component(a, left) * component(b, right);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    out.set(m, sum / Rational(factorial(p) * factorial(q)));
  }
  return out;
}

inline KForm star(const KForm& a) {
  KForm out(g2inst::kDim - a.degree());
  for (const IndexMask m : g2inst::basis_masks(a.degree())) {
    const auto idx = indices_of(m);
    const auto comp = indices_of(static_cast<IndexMask>(0x7f & ~m));
    std::vector<int> all = idx;
    all.insert(all.end(), comp.begin(), comp.end());
    out.add(mask_of(comp), permutation_sign(all) * a.coeff(m));
  }
  return out;
}

}  // namespace oracle
