#include "g2inst/ale_index.hpp"

#include <cmath>
#include <stdexcept>

namespace g2inst {

void FiniteSubgroupData::validate() const {
  std::size_t total = 0;
  for (const auto& e : elements) {
    if (e.trace == Cyclotomic(2)) throw std::invalid_argument("group element " + e.label + " has trace 2");
    total += e.multiplicity;
  }
  if (order == 0 || total != order - 1)
    throw std::invalid_argument("multiplicities sum to " + std::to_string(total) + ", expected |Gamma| - 1 = " +
                                std::to_string(order == 0 ? 0 : order - 1));
}

FiniteSubgroupData cyclic_group_data(int k) {
  if (k < 2) throw std::invalid_argument("cyclic group order must be at least 2");
  FiniteSubgroupData g;
  g.name = "zk:" + std::to_string(k);
  g.order = static_cast<std::size_t>(k);
  for (int m = 1; m < k; ++m) g.elements.push_back({Cyclotomic::two_cos(k, m), 1, "g^" + std::to_string(m)});
  return g;
}

FiniteSubgroupData custom_group_data(std::string name, std::size_t order, const std::vector<Cyclotomic>& traces) {
  FiniteSubgroupData g;
  g.name = std::move(name);
  g.order = order;
  for (std::size_t i = 0; i < traces.size(); ++i) g.elements.push_back({traces[i], 1, "g" + std::to_string(i + 1)});
  return g;
}

void AdjointCharacter::validate() const {
  for (const auto& v : values) {
    const bool too_big = v.is_rational() ? abs(v.rational()) > dim : std::abs(v.to_double()) > dim + 1e-9;
    if (too_big) throw std::invalid_argument("character value " + v.to_string() + " exceeds dim " + std::to_string(dim));
  }
}

AdjointCharacter trivial_character(int dim, std::size_t count) {
  return {dim, std::vector<Cyclotomic>(count, Cyclotomic(dim))};
}

AdjointCharacter cyclic_rotation_character(int k, int j) {
  AdjointCharacter chi{3, {}};
  for (int m = 1; m < k; ++m) chi.values.push_back(Cyclotomic(1) + Cyclotomic::two_cos(k, j * m));
  return chi;
}

std::string to_string(TraceConvention c) { return c == TraceConvention::fundamental ? "fundamental" : "adjoint"; }

TraceConvention trace_convention_from_string(const std::string& text) {
  if (text == "fundamental") return TraceConvention::fundamental;
  if (text == "adjoint") return TraceConvention::adjoint;
  throw std::invalid_argument("unknown trace convention: " + text);
}

IndexResult l2_index(const IndexInput& input, TraceConvention convention) {
  const auto& group = input.group;
  const auto& chi = input.character;
  group.validate();
  chi.validate();
  if (group.elements.size() != chi.values.size())
    throw std::invalid_argument("group lists " + std::to_string(group.elements.size()) + " elements but character has " +
                                std::to_string(chi.values.size()) + " values");

  Cyclotomic sum(0);
  for (std::size_t i = 0; i < group.elements.size(); ++i) {
    const auto& e = group.elements[i];
    const Cyclotomic tr = convention == TraceConvention::fundamental ? e.trace : e.trace * e.trace - Cyclotomic(1);
    const Cyclotomic denom = Cyclotomic(2) - tr;
    if (denom == Cyclotomic(0))
      throw std::invalid_argument("2 - tr g vanishes for " + e.label + " (" + to_string(convention) + " trace)");
    sum = sum + Cyclotomic(Rational(static_cast<long>(e.multiplicity))) * (chi.values[i] - Cyclotomic(chi.dim)) / denom;
  }

  IndexResult result;
  result.value = Cyclotomic(Rational(-2) * input.p1_integral) +
                 Cyclotomic(make_rational(2, static_cast<long>(group.order))) * sum;
  result.integral = result.value.is_rational() && is_integer(result.value.rational());
  if (!result.integral) result.warning = "index " + result.value.to_string() + " is not an integer";
  return result;
}

FiniteSubgroupData group_from_spec(const std::string& spec) {
  if (spec.rfind("zk:", 0) != 0) throw std::invalid_argument("group must be zk:<k>, got " + spec);
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(spec.substr(3), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad cyclic order in " + spec);
  }
  if (used != spec.size() - 3) throw std::invalid_argument("bad cyclic order in " + spec);
  return cyclic_group_data(k);
}

IndexInput gocho_example() { return {Rational(0), cyclic_group_data(2), AdjointCharacter{1, {Cyclotomic(1)}}}; }

}  // namespace g2inst
