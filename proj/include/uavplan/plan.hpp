#pragma once

#include "uavplan/core.hpp"
#include "uavplan/grids.hpp"

namespace uavplan {

// Complete decision assignment for one scenario. Dimensions:
//   location (d,k), carried (d,k,p), effort (d,k,m), relay (d,k), battery (d,k),
//   delivery (d,p,k).
struct MissionPlan {
  Grid2<int> location;       // lambda
  Grid3<uint8_t> carried;    // omega
  Grid3<double> effort;      // mu
  Grid2<uint8_t> relay;      // tau
  Grid2<double> battery;     // beta
  Grid3<uint8_t> delivery;   // D(d,p,k)

  static MissionPlan zeros(const Scenario& s) {
    MissionPlan p;
    p.location = Grid2<int>(s.num_uavs(), s.num_epochs(), 0);
    p.carried = Grid3<uint8_t>(s.num_uavs(), s.num_epochs(), s.num_payloads(), 0);
    p.effort = Grid3<double>(s.num_uavs(), s.num_epochs(), s.num_missions(), 0.0);
    p.relay = Grid2<uint8_t>(s.num_uavs(), s.num_epochs(), 0);
    p.battery = Grid2<double>(s.num_uavs(), s.num_epochs(), 0.0);
    p.delivery = Grid3<uint8_t>(s.num_uavs(), s.num_payloads(), s.num_epochs(), 0);
    return p;
  }

  // Every UAV parked at a depot for the whole horizon, mounted equipment onboard,
  // zero effort, full battery.
  static MissionPlan idle(const Scenario& s);

  // Throws PlanShapeError if any table disagrees with the scenario's index spaces.
  void check_shape(const Scenario& s) const;

  bool operator==(const MissionPlan&) const = default;
};

}  // namespace uavplan
