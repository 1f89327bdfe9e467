#pragma once

#include <string>

namespace acceptance {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Randomized property suites (criterion 6).
Outcome property_suites(unsigned seed);

}  // namespace acceptance
