#pragma once

// Exact identity suite for the model G2 structure on R^7.

#include <cstdint>
#include <vector>

#include "g2inst/forms.hpp"
#include "g2inst/property.hpp"
#include "g2inst/quaternion.hpp"

namespace g2inst {

Vector7 random_vector(RationalSampler& sampler);
/// Every basis coefficient drawn independently (about half of them zero).
KForm random_form(RationalSampler& sampler, int degree);

/// `samples` random inputs per sampled property; exhaustive ones report their basis size.
std::vector<PropertyResult> g2_check(std::size_t samples = 1000, std::uint64_t seed = 20240611);

}  // namespace g2inst
