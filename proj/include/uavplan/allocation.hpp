#pragma once

#include <vector>

#include "uavplan/core.hpp"
#include "uavplan/grids.hpp"

namespace uavplan {

// max c.x  s.t.  A x <= b, x >= 0, with every b_i >= 0 (the slack basis is
// feasible, so no phase-1 is needed).
struct LinearProgram {
  std::vector<double> c;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
};

struct LpSolution {
  double value = 0.0;
  std::vector<double> x;
};

// Dense primal simplex with Bland's rule. Intended for the small allocation
// problems this toolkit produces (tens of variables); throws on unbounded or
// negative-rhs input.
LpSolution solve_lp(const LinearProgram& lp);

// Exact effort assignment for one epoch: given UAV positions, equipment
// availability, and relay flags, maximizes the epoch's satisfaction sum
//   sum over demand cells of sigma(k,m,l)
// subject to EQ8 (effort only when equipped), EQ9 (served <= demand) and EQ11
// (data within tau*T), with effort in [0,1]. Decomposes per location.
struct EffortAllocation {
  Grid2<double> effort;  // [uav][mission]
  double sigma_sum = 0.0;
};

EffortAllocation allocate_effort(const Scenario& s, int epoch,
                                 const std::vector<int>& position,
                                 const Grid2<uint8_t>& equipped,
                                 const std::vector<uint8_t>& relay);

}  // namespace uavplan
