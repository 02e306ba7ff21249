#pragma once

#include <vector>

#include "skel/core.hpp"

namespace skel {

// Distance-like field over a domain. `gradients` holds one vector per face
// for meshes and one tangent vector per point for clouds; it stays empty
// until a gradient pass fills it.
struct ScalarField {
  std::vector<double> values;
  std::vector<int> sourceSet;
  std::vector<Vec3> gradients;
};

}  // namespace skel
