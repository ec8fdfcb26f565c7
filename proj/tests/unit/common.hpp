#pragma once

#include "slabtrans/special_functions.hpp"

// One conservative X evaluator shared across test cases; building the cache
// is the expensive part and the instance is immutable.
inline const slabtrans::XFunction& conservative_x() {
  static const slabtrans::XFunction x{slabtrans::Albedo(1.0)};
  return x;
}
