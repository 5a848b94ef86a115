#include "uavplan/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace uavplan {

namespace {

std::string fmt_pair(int a, int b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

}  // namespace

std::vector<int> Scenario::depots() const {
  std::vector<int> out;
  for (const auto& loc : locations)
    if (loc.is_depot) out.push_back(loc.id);
  return out;
}

int Scenario::single_depot() const {
  auto d = depots();
  if (d.size() != 1)
    throw ScenarioError("expected exactly one depot, found " + std::to_string(d.size()));
  return d.front();
}

std::vector<int> Scenario::deliverable_ids() const {
  std::vector<int> out;
  for (const auto& p : payloads)
    if (p.deliverable) out.push_back(p.id);
  return out;
}

std::vector<int> Scenario::required_equipment(int mission) const {
  std::vector<int> out;
  for (const auto& p : payloads)
    for (int m : p.equipment_for)
      if (m == mission) out.push_back(p.id);
  return out;
}

void Scenario::check() const {
  const int L = num_locations();
  const int K = num_epochs();
  const int M = num_missions();
  const int P = num_payloads();

  if (L == 0) throw ScenarioError("no locations");
  if (K <= 0) throw ScenarioError("epoch count must be positive");
  if (epoch_minutes <= 0) throw ScenarioError("epoch duration must be positive");

  std::set<int> loc_ids;
  bool any_depot = false;
  for (int i = 0; i < L; ++i) {
    const auto& loc = locations[i];
    if (loc.id != i) throw ScenarioError("location ids must be 0..|L|-1 in order");
    if (!loc_ids.insert(loc.id).second) throw ScenarioError("duplicate location id");
    if (!std::isfinite(loc.elevation_m) || loc.elevation_m < 0)
      throw ScenarioError("location elevation must be finite and >= 0");
    any_depot |= loc.is_depot;
  }
  if (!any_depot) throw ScenarioError("at least one depot required");

  if (distance_km.rows() != L || distance_km.cols() != L)
    throw ScenarioError("distance table must be |L| x |L|");
  for (int a = 0; a < L; ++a) {
    if (std::abs(distance_km.at(a, a)) > 1e-12)
      throw ScenarioError("v(l,l) must be 0 at location " + std::to_string(a));
    for (int b = 0; b < L; ++b) {
      double v = distance_km.at(a, b);
      if (!std::isfinite(v) || v < 0) throw ScenarioError("distances must be finite and >= 0");
      if (std::abs(v - distance_km.at(b, a)) > 1e-9)
        throw ScenarioError("distance table must be symmetric at " + fmt_pair(a, b));
    }
  }

  for (int d = 0; d < num_uavs(); ++d) {
    const auto& u = uavs[d];
    if (u.id != d) throw ScenarioError("UAV ids must be 0..|D|-1 in order");
    if (u.empty_weight_kg <= 0 || u.payload_capacity_kg <= 0 || u.battery_capacity_wh <= 0 ||
        u.max_step_km <= 0 || u.radio_capacity <= 0)
      throw ScenarioError("UAV physical quantities must be > 0 (uav " + std::to_string(d) + ")");
    if (u.parcel_capacity_kg < 0 || u.parcel_capacity_kg > u.payload_capacity_kg + 1e-12)
      throw ScenarioError("Delta(d) must lie in [0, Y]");
    if (static_cast<int>(u.mission_weight.size()) != M)
      throw ScenarioError("alpha(m,d) must have one entry per mission");
    double asum = 0;
    for (double a : u.mission_weight) {
      if (a < 0 || a > 1) throw ScenarioError("alpha values must lie in [0,1]");
      asum += a;
    }
    if (asum > 1 + 1e-9) throw ScenarioError("sum of alpha(m,d) must be <= 1");
    double equip_mass = 0;
    for (int pid : u.equipment) {
      if (pid < 0 || pid >= P) throw ScenarioError("equipment payload id out of range");
      if (payloads[pid].deliverable)
        throw ScenarioError("mounted equipment must not be a deliverable payload");
      equip_mass += payloads[pid].weight_kg;
    }
    if (equip_mass + u.parcel_capacity_kg > u.payload_capacity_kg + 1e-9)
      throw ScenarioError("equipment mass + Delta(d) exceeds Y for uav " + std::to_string(d));
  }

  for (int p = 0; p < P; ++p) {
    const auto& pl = payloads[p];
    if (pl.id != p) throw ScenarioError("payload ids must be 0..|P|-1 in order");
    if (pl.weight_kg < 0) throw ScenarioError("payload weight must be >= 0");
    if (pl.deliverable) {
      if (pl.target < 0 || pl.target >= L)
        throw ScenarioError("deliverable payload target out of range");
      if (pl.window_open > pl.window_close || pl.window_open < 0 || pl.window_close >= K)
        throw ScenarioError("delivery window must satisfy 0 <= a(p) <= b(p) <= |K|-1");
    }
    for (int m : pl.equipment_for)
      if (m < 0 || m >= M) throw ScenarioError("equipment_for mission id out of range");
  }

  for (int m = 0; m < M; ++m) {
    const auto& ms = missions[m];
    if (ms.id != m) throw ScenarioError("mission ids must be 0..|M|-1 in order");
    if (ms.data_rate < 0) throw ScenarioError("s(m) must be >= 0");
    if (static_cast<int>(ms.quality.size()) != L)
      throw ScenarioError("q(l,m) must have one entry per location");
    for (double q : ms.quality)
      if (!std::isfinite(q) || q < 0) throw ScenarioError("q(l,m) must be finite and >= 0");
    if (ms.demand.rows() != K || ms.demand.cols() != L)
      throw ScenarioError("n(k,m,l) must be |K| x |L| for every mission");
    for (double n : ms.demand.raw())
      if (!std::isfinite(n) || n < 0) throw ScenarioError("n(k,m,l) must be finite and >= 0");
  }

  if (connectivity.uav_uav.rows() != L || connectivity.uav_uav.cols() != L)
    throw ScenarioError("t(l1,l2) must be |L| x |L|");
  if (static_cast<int>(connectivity.uav_net.size()) != L)
    throw ScenarioError("t(l,Omega) must have one entry per location");
  for (int a = 0; a < L; ++a) {
    if (connectivity.uav_uav.at(a, a) != 1)
      throw ScenarioError("t(l,l) must be 1 on the diagonal");
    for (int b = 0; b < L; ++b) {
      if (connectivity.uav_uav.at(a, b) > 1)
        throw ScenarioError("t entries must be 0/1");
      if (connectivity.uav_uav.at(a, b) != connectivity.uav_uav.at(b, a))
        throw ScenarioError("t(l1,l2) must be symmetric at " + fmt_pair(a, b));
    }
  }

  if (physics.travel_energy.rows() != L || physics.travel_energy.cols() != L)
    throw ScenarioError("e(l1,l2) must be |L| x |L|");
  for (int a = 0; a < L; ++a) {
    if (physics.travel_energy.at(a, a) <= 0)
      throw ScenarioError("hovering energy e(l,l) must be > 0 at location " + std::to_string(a));
    for (int b = 0; b < L; ++b)
      if (!std::isfinite(physics.travel_energy.at(a, b)) || physics.travel_energy.at(a, b) < 0)
        throw ScenarioError("e entries must be finite and >= 0");
  }
  if (physics.vertical_energy_wh < 0) throw ScenarioError("e_v must be >= 0");

  if (static_cast<int>(planner.alpha.size()) != M && !planner.alpha.empty())
    throw ScenarioError("planner alpha must be empty or have one entry per mission");
}

std::vector<int> reachable_neighbors(const Scenario& s, int location, double max_step_km) {
  std::vector<int> out;
  for (int l = 0; l < s.num_locations(); ++l) {
    if (l == location) continue;
    if (s.distance_km.at(location, l) <= max_step_km + 1e-12) out.push_back(l);
  }
  return out;
}

double fleet_min_step(const Scenario& s) {
  double v = std::numeric_limits<double>::infinity();
  for (const auto& u : s.uavs) v = std::min(v, u.max_step_km);
  return v;
}

double fleet_max_gross_mass(const Scenario& s) {
  double m = 0;
  for (const auto& u : s.uavs) m = std::max(m, u.empty_weight_kg + u.payload_capacity_kg);
  return m;
}

}  // namespace uavplan
