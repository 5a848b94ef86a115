#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "uavplan/grids.hpp"

namespace uavplan {

// Thrown on malformed scenario data (shape or invariant violations at load time).
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a plan's index spaces do not match the scenario it is checked against.
class PlanShapeError : public std::runtime_error {
 public:
  explicit PlanShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct Location {
  int id = 0;
  double x_km = 0.0;
  double y_km = 0.0;
  double elevation_m = 0.0;
  bool is_depot = false;
};

struct UavSpec {
  int id = 0;
  double empty_weight_kg = 0.0;     // W
  double payload_capacity_kg = 0.0; // Y
  double battery_capacity_wh = 0.0; // E
  double max_step_km = 0.0;         // V, per epoch
  double radio_capacity = 0.0;      // T, data units per epoch
  double parcel_capacity_kg = 0.0;  // Delta(d): capacity left for parcels
  std::vector<double> mission_weight; // alpha(m,d), one entry per mission
  std::vector<int> equipment;         // payload ids permanently mounted on this UAV
};

struct Payload {
  int id = 0;
  double weight_kg = 0.0; // w(p)
  bool deliverable = false;
  int target = -1;        // f(p), valid when deliverable
  int window_open = 0;    // a(p)
  int window_close = 0;   // b(p)
  std::vector<int> equipment_for; // mission ids m with r(m,p)=1
};

struct Mission {
  int id = 0;
  std::string name;
  double data_rate = 0.0;       // s(m)
  std::vector<double> quality;  // q(l,m), indexed by location
  Grid2<double> demand;         // n(k,m,l): [epoch][location]
};

struct Connectivity {
  Grid2<uint8_t> uav_uav;        // t(l1,l2)
  std::vector<uint8_t> uav_net;  // t(l, Omega)
};

struct Physics {
  Grid2<double> travel_energy;   // e(l1,l2), Wh per kg; diagonal is hovering cost
  double vertical_energy_wh = 0; // e_v per delivery event
};

struct PlannerConfig {
  std::vector<double> alpha;   // uniform alpha(m) applied to every equipped UAV
  bool fake_deliveries = false;
  int xi = 10;
};

// Full problem instance. Immutable after construction; check() validates invariants.
struct Scenario {
  std::vector<Location> locations;
  int epoch_count = 0;
  double epoch_minutes = 10.0;
  Grid2<double> distance_km;  // v(l1,l2)
  std::vector<UavSpec> uavs;
  std::vector<Payload> payloads;
  std::vector<Mission> missions;
  Connectivity connectivity;
  Physics physics;
  PlannerConfig planner;

  int num_locations() const { return static_cast<int>(locations.size()); }
  int num_epochs() const { return epoch_count; }
  int num_uavs() const { return static_cast<int>(uavs.size()); }
  int num_payloads() const { return static_cast<int>(payloads.size()); }
  int num_missions() const { return static_cast<int>(missions.size()); }

  std::vector<int> depots() const;
  // The heuristics assume exactly one depot; throws otherwise.
  int single_depot() const;
  std::vector<int> deliverable_ids() const;
  // Payload ids required to perform mission m (r(m,p)=1).
  std::vector<int> required_equipment(int mission) const;

  // Validates all type invariants; throws ScenarioError naming the first failure.
  void check() const;
};

// Movement graph neighborhood: locations l' != l with v(l,l') <= max_step.
std::vector<int> reachable_neighbors(const Scenario& s, int location, double max_step_km);

// Conservative fleet-wide constants used for graph construction.
double fleet_min_step(const Scenario& s);
double fleet_max_gross_mass(const Scenario& s); // max over UAVs of W + Y

}  // namespace uavplan
