#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace g2inst {

struct PropertyResult {
  std::string name;
  bool passed;
  std::size_t samples;
};

inline bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace g2inst
