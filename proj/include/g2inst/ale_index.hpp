#pragma once

// L^2 index of the deformation complex of an ASD instanton on an ALE space
// asymptotic to C^2/Gamma:
//
//   ind = -2 p1 + (2/|Gamma|) * sum over g != e of (chi(g) - dim) / (2 - tr g)
//
// tr g is the trace in the fundamental representation of SU(2) by default;
// TraceConvention::adjoint uses tr_adj g = (tr g)^2 - 1 instead.

#include <string>
#include <vector>

#include "g2inst/cyclotomic.hpp"
#include "g2inst/rational.hpp"

namespace g2inst {

struct FiniteSubgroupData {
  struct Element {
    Cyclotomic trace;  // fundamental trace
    std::size_t multiplicity = 1;
    std::string label;
  };

  std::string name;
  std::size_t order = 1;
  std::vector<Element> elements;  // non-identity classes

  /// Throws std::invalid_argument unless multiplicities sum to order - 1 and
  /// no trace equals 2.
  void validate() const;
};

/// Z_k in SU(2): the k-1 elements diag(z^m, z^-m), trace 2 cos(2 pi m / k).
/// Throws std::invalid_argument for k < 2.
FiniteSubgroupData cyclic_group_data(int k);

/// User-supplied trace list, each element with multiplicity one.
FiniteSubgroupData custom_group_data(std::string name, std::size_t order, const std::vector<Cyclotomic>& traces);

struct AdjointCharacter {
  int dim = 0;
  std::vector<Cyclotomic> values;  // chi(g) per listed element

  /// Throws std::invalid_argument if some |chi(g)| exceeds dim.
  void validate() const;
};

/// chi = dim on every element.
AdjointCharacter trivial_character(int dim, std::size_t count);

/// SO(3) with rho(g_m) a rotation by 2 pi j m / k: chi = 1 + 2 cos(2 pi j m / k).
AdjointCharacter cyclic_rotation_character(int k, int j);

struct IndexInput {
  Rational p1_integral;
  FiniteSubgroupData group;
  AdjointCharacter character;
};

enum class TraceConvention { fundamental, adjoint };
std::string to_string(TraceConvention c);
TraceConvention trace_convention_from_string(const std::string& text);

struct IndexResult {
  Cyclotomic value;
  bool integral = false;
  std::string warning;  // empty when integral

  std::string to_string() const { return value.to_string(); }
};

/// Throws std::invalid_argument on a zero denominator or an arity mismatch.
IndexResult l2_index(const IndexInput& input, TraceConvention convention = TraceConvention::fundamental);

/// Parses "zk:<k>" (e.g. "zk:2"). Throws std::invalid_argument.
FiniteSubgroupData group_from_spec(const std::string& spec);

/// The U(1) bundle on the Eguchi-Hanson space: p1 = 0, Gamma = Z_2, chi = 1 on u(1).
IndexInput gocho_example();

}  // namespace g2inst
