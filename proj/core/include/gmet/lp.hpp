#pragma once

#include "gmet/rational.hpp"

#include <optional>
#include <vector>

namespace gmet {

// Decides feasibility of A x = b, x >= 0 over exact rationals and returns a
// basic feasible point when one exists. Phase-1 simplex with Bland's rule,
// so no cycling and no tolerances.
std::optional<std::vector<Rat>> lp_feasible_point(std::vector<std::vector<Rat>> A,
                                                  std::vector<Rat> b);

}  // namespace gmet
