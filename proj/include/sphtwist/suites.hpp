#pragma once

#include <string>
#include <vector>

#include "sphtwist/mesh_model.hpp"

namespace sphtwist {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  Window window;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// The D4 example: builtin and derived twists along the standard sequences,
/// the braid relation, sigma1^2 = sigma2^2, the order of sigma1, the
/// three-class orbit with its S3 action, exceptional case A and the
/// classifier tag for the measured data.
SuiteReport verify_d4_suite(Window window = {-12, 12});

/// The A3 example: derived twists, commutation, T_E^2 = T_E'^2, the order
/// of T_E T_E'^-1, the triangle T_E E'_0 = E'_1[1], exceptional case B and
/// the classifier tag.
SuiteReport verify_a3_suite(Window window = {-12, 12});

}  // namespace sphtwist
