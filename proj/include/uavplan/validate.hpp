#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "uavplan/core.hpp"
#include "uavplan/plan.hpp"

namespace uavplan {

// Constraint families of the system model. EQ1 single location, EQ2 step <= V,
// EQ3 payload <= Y, EQ4 payload frozen off-depot, EQ5 battery range, EQ6 battery
// recursion, EQ7 deliveries in window, EQ8 equipment, EQ9 served <= demand,
// EQ10 relay consistency, EQ11 data <= tau*T.
enum class Constraint {
  EQ1, EQ2, EQ3, EQ4, EQ5, EQ6, EQ7, EQ8, EQ9, EQ10, EQ11
};
constexpr int kNumConstraints = 11;

const char* constraint_name(Constraint c);

// Offending index tuple; unused fields stay -1.
struct Witness {
  int d = -1, k = -1, l = -1, p = -1, m = -1;
};

struct ConstraintOutcome {
  bool ok = true;
  std::vector<Witness> witnesses;
};

struct ValidationReport {
  std::array<ConstraintOutcome, kNumConstraints> outcomes;

  const ConstraintOutcome& of(Constraint c) const {
    return outcomes[static_cast<int>(c)];
  }
  bool all_ok() const {
    for (const auto& o : outcomes)
      if (!o.ok) return false;
    return true;
  }
  std::vector<Constraint> violated() const {
    std::vector<Constraint> v;
    for (int i = 0; i < kNumConstraints; ++i)
      if (!outcomes[i].ok) v.push_back(static_cast<Constraint>(i));
    return v;
  }
};

// Checks the plan against every constraint family. Pure function; throws
// PlanShapeError on dimension mismatch (malformed plan, distinct from violations).
// Checks that would dereference an out-of-range lambda(d,k) are skipped once the
// EQ1 witness for that entry is recorded.
ValidationReport validate_plan(const Scenario& s, const MissionPlan& plan);

// sigma(k,m,l): served-over-needed fraction for one demand cell, clamped to 1.
// Returns nullopt when n(k,m,l) = 0 (cell excluded from the objective).
std::optional<double> satisfaction(const Scenario& s, const MissionPlan& plan,
                                   int k, int m, int l);

// Theta: sum of sigma over all cells with positive demand.
double objective(const Scenario& s, const MissionPlan& plan);

struct EnergyProfile {
  std::vector<double> battery;   // implied beta(d,k), depot epochs reset to E
  std::vector<double> consumed;  // physical consumption per epoch (entry 0 is 0)
  double total_consumed = 0.0;
  int first_negative_epoch = -1; // -1 when the battery never dips below zero
};

// Battery trajectory implied by the plan's movements, carried masses, and delivery
// events for UAV d. beta starts at E; off-depot epochs follow the consumption
// recursion; occupying a depot resets to E (battery swap). Consumption counts the
// hop into a depot but not epochs parked there.
EnergyProfile energy_profile(const Scenario& s, const MissionPlan& plan, int d);

// Maximal consistent relay assignment at epoch k: reachability of the cellular
// network over the UAV adjacency graph, seeded by direct t(l,Omega) links.
std::vector<uint8_t> relay_closure(const Scenario& s, const MissionPlan& plan, int k);

}  // namespace uavplan
