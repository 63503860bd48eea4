#include "g2inst/signed_permutation.hpp"

#include <algorithm>
#include <numeric>

namespace g2inst {

SignedPermutation SignedPermutation::diagonal(const std::array<int, kDim>& signs) {
  SignedPermutation p;
  for (int i = 0; i < kDim; ++i) p.sign[i] = static_cast<std::int8_t>(signs[i] < 0 ? -1 : 1);
  return p;
}

bool SignedPermutation::is_diagonal() const {
  for (int i = 0; i < kDim; ++i)
    if (perm[i] != i) return false;
  return true;
}

std::array<int, kDim> SignedPermutation::diagonal_entries() const {
  std::array<int, kDim> d{};
  for (int i = 0; i < kDim; ++i) d[i] = entry(i, i);
  return d;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out;
  for (int i = 0; i < kDim; ++i) {
    out.perm[perm[i]] = static_cast<std::uint8_t>(i);
    out.sign[perm[i]] = sign[i];
  }
  return out;
}

LinearMap7 SignedPermutation::to_linear_map() const {
  LinearMap7 m;
  for (int i = 0; i < kDim; ++i) m.entries[perm[i]][i] = sign[i];
  return m;
}

std::string SignedPermutation::to_string() const {
  const auto inv = inverse();
  std::string out = "(";
  for (int row = 0; row < kDim; ++row) {
    // row-th image coordinate = sign * x_{source}
    const int source = inv.perm[row];
    out += (sign[source] < 0 ? "-x" : "+x") + std::to_string(source + 1);
    if (row + 1 < kDim) out += ",";
  }
  return out + ")";
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  SignedPermutation out;
  for (int i = 0; i < kDim; ++i) {
    out.perm[i] = a.perm[b.perm[i]];
    out.sign[i] = static_cast<std::int8_t>(a.sign[b.perm[i]] * b.sign[i]);
  }
  return out;
}

std::vector<SignedPermutation> all_signed_permutations() {
  std::vector<SignedPermutation> out;
  out.reserve(kSignedPermutationCount);
  std::array<std::uint8_t, kDim> perm;
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned bits = 0; bits < (1u << kDim); ++bits) {
      SignedPermutation p;
      p.perm = perm;
      for (int i = 0; i < kDim; ++i) p.sign[i] = static_cast<std::int8_t>((bits >> i) & 1u ? -1 : 1);
      out.push_back(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace g2inst
