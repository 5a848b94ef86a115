#include "uavplan/plan.hpp"

namespace uavplan {

MissionPlan MissionPlan::idle(const Scenario& s) {
  MissionPlan p = zeros(s);
  const int depot = s.depots().front();
  for (int d = 0; d < s.num_uavs(); ++d) {
    for (int k = 0; k < s.num_epochs(); ++k) {
      p.location.at(d, k) = depot;
      p.battery.at(d, k) = s.uavs[d].battery_capacity_wh;
      for (int pid : s.uavs[d].equipment) p.carried.at(d, k, pid) = 1;
      p.relay.at(d, k) = s.connectivity.uav_net[depot] ? 1 : 0;
    }
  }
  return p;
}

void MissionPlan::check_shape(const Scenario& s) const {
  const int D = s.num_uavs(), K = s.num_epochs(), P = s.num_payloads(), M = s.num_missions();
  auto fail = [](const char* what) { throw PlanShapeError(what); };
  if (location.rows() != D || location.cols() != K) fail("lambda table shape mismatch");
  if (carried.dim1() != D || carried.dim2() != K || carried.dim3() != P)
    fail("omega table shape mismatch");
  if (effort.dim1() != D || effort.dim2() != K || effort.dim3() != M)
    fail("mu table shape mismatch");
  if (relay.rows() != D || relay.cols() != K) fail("tau table shape mismatch");
  if (battery.rows() != D || battery.cols() != K) fail("beta table shape mismatch");
  if (delivery.dim1() != D || delivery.dim2() != P || delivery.dim3() != K)
    fail("delivery table shape mismatch");
}

}  // namespace uavplan
