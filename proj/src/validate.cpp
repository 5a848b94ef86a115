#include "uavplan/validate.hpp"

#include <algorithm>
#include <cmath>

namespace uavplan {

namespace {
constexpr double kTol = 1e-9;
}

const char* constraint_name(Constraint c) {
  static const char* names[kNumConstraints] = {"EQ1", "EQ2", "EQ3", "EQ4",  "EQ5", "EQ6",
                                               "EQ7", "EQ8", "EQ9", "EQ10", "EQ11"};
  return names[static_cast<int>(c)];
}

ValidationReport validate_plan(const Scenario& s, const MissionPlan& plan) {
  plan.check_shape(s);

  const int D = s.num_uavs(), K = s.num_epochs(), L = s.num_locations();
  const int P = s.num_payloads(), M = s.num_missions();

  ValidationReport report;
  auto& out = report.outcomes;
  auto flag = [&](Constraint c, Witness w) {
    auto& o = out[static_cast<int>(c)];
    o.ok = false;
    o.witnesses.push_back(w);
  };

  // EQ1: lambda(d,k) must name exactly one existing location. Entries failing
  // here are masked out of every location-dependent check below.
  Grid2<uint8_t> loc_ok(D, K, 1);
  for (int d = 0; d < D; ++d)
    for (int k = 0; k < K; ++k) {
      int l = plan.location.at(d, k);
      if (l < 0 || l >= L) {
        loc_ok.at(d, k) = 0;
        flag(Constraint::EQ1, {.d = d, .k = k, .l = l});
      }
    }

  std::vector<uint8_t> is_depot(L, 0);
  for (const auto& loc : s.locations) is_depot[loc.id] = loc.is_depot ? 1 : 0;
  auto at_depot = [&](int d, int k) {
    return loc_ok.at(d, k) && is_depot[plan.location.at(d, k)];
  };

  // EQ2: one-epoch moves bounded by V.
  for (int d = 0; d < D; ++d)
    for (int k = 1; k < K; ++k) {
      if (!loc_ok.at(d, k) || !loc_ok.at(d, k - 1)) continue;
      double v = s.distance_km.at(plan.location.at(d, k - 1), plan.location.at(d, k));
      if (v > s.uavs[d].max_step_km + kTol) flag(Constraint::EQ2, {.d = d, .k = k});
    }

  // EQ3: carried mass within capacity.
  for (int d = 0; d < D; ++d)
    for (int k = 0; k < K; ++k) {
      double mass = 0;
      for (int p = 0; p < P; ++p)
        if (plan.carried.at(d, k, p)) mass += s.payloads[p].weight_kg;
      if (mass > s.uavs[d].payload_capacity_kg + kTol) flag(Constraint::EQ3, {.d = d, .k = k});
    }

  // EQ4: payload can only change while at a depot.
  for (int d = 0; d < D; ++d)
    for (int k = 1; k < K; ++k) {
      if (!loc_ok.at(d, k) || at_depot(d, k)) continue;
      for (int p = 0; p < P; ++p)
        if (plan.carried.at(d, k, p) != plan.carried.at(d, k - 1, p))
          flag(Constraint::EQ4, {.d = d, .k = k, .p = p});
    }

  // EQ5: battery range.
  for (int d = 0; d < D; ++d)
    for (int k = 0; k < K; ++k) {
      double b = plan.battery.at(d, k);
      if (!(b >= -kTol && b <= s.uavs[d].battery_capacity_wh + kTol))
        flag(Constraint::EQ5, {.d = d, .k = k});
    }

  // EQ6: consumption recursion at off-depot epochs.
  for (int d = 0; d < D; ++d)
    for (int k = 1; k < K; ++k) {
      if (!loc_ok.at(d, k) || !loc_ok.at(d, k - 1) || at_depot(d, k)) continue;
      double mass = s.uavs[d].empty_weight_kg;
      for (int p = 0; p < P; ++p)
        if (plan.carried.at(d, k, p)) mass += s.payloads[p].weight_kg;
      double ev = 0;
      for (int p = 0; p < P; ++p)
        if (plan.delivery.at(d, p, k)) ev += s.physics.vertical_energy_wh;
      double limit = plan.battery.at(d, k - 1) - ev -
                     s.physics.travel_energy.at(plan.location.at(d, k - 1),
                                                plan.location.at(d, k)) * mass;
      if (plan.battery.at(d, k) > limit + kTol) flag(Constraint::EQ6, {.d = d, .k = k});
    }

  // EQ7: delivery events must be in-window, at the target, while carrying; every
  // deliverable payload needs at least one; non-deliverables admit none.
  for (int p = 0; p < P; ++p) {
    const auto& pl = s.payloads[p];
    bool served = false;
    for (int d = 0; d < D; ++d)
      for (int k = 0; k < K; ++k) {
        if (!plan.delivery.at(d, p, k)) continue;
        if (!pl.deliverable) {
          flag(Constraint::EQ7, {.d = d, .k = k, .p = p});
          continue;
        }
        bool valid = loc_ok.at(d, k) && plan.location.at(d, k) == pl.target &&
                     plan.carried.at(d, k, p) && k >= pl.window_open && k <= pl.window_close;
        if (valid)
          served = true;
        else
          flag(Constraint::EQ7, {.d = d, .k = k, .p = p});
      }
    if (pl.deliverable && !served) flag(Constraint::EQ7, {.p = p});
  }

  // EQ8: no effort without the full required equipment onboard.
  for (int m = 0; m < M; ++m) {
    auto required = s.required_equipment(m);
    if (required.empty()) continue;
    for (int d = 0; d < D; ++d)
      for (int k = 0; k < K; ++k) {
        if (plan.effort.at(d, k, m) <= kTol) continue;
        for (int p : required)
          if (!plan.carried.at(d, k, p)) {
            flag(Constraint::EQ8, {.d = d, .k = k, .p = p, .m = m});
            break;
          }
      }
  }

  // EQ9: per-cell served quality bounded by demand.
  for (int k = 0; k < K; ++k)
    for (int m = 0; m < M; ++m)
      for (int l = 0; l < L; ++l) {
        double served = 0;
        for (int d = 0; d < D; ++d)
          if (loc_ok.at(d, k) && plan.location.at(d, k) == l)
            served += plan.effort.at(d, k, m) * s.missions[m].quality[l];
        if (served > s.missions[m].demand.at(k, l) + kTol)
          flag(Constraint::EQ9, {.k = k, .l = l, .m = m});
      }

  // EQ10: relay flags only where a consistent support exists.
  for (int k = 0; k < K; ++k)
    for (int d = 0; d < D; ++d) {
      if (!plan.relay.at(d, k) || !loc_ok.at(d, k)) continue;
      int l = plan.location.at(d, k);
      bool supported = s.connectivity.uav_net[l] != 0;
      for (int d2 = 0; d2 < D && !supported; ++d2) {
        if (d2 == d || !plan.relay.at(d2, k) || !loc_ok.at(d2, k)) continue;
        supported = s.connectivity.uav_uav.at(l, plan.location.at(d2, k)) != 0;
      }
      if (!supported) flag(Constraint::EQ10, {.d = d, .k = k});
    }

  // EQ11: generated data within the relayed radio capacity.
  for (int d = 0; d < D; ++d)
    for (int k = 0; k < K; ++k) {
      double data = 0;
      for (int m = 0; m < M; ++m) data += plan.effort.at(d, k, m) * s.missions[m].data_rate;
      double cap = plan.relay.at(d, k) ? s.uavs[d].radio_capacity : 0.0;
      if (data > cap + kTol) flag(Constraint::EQ11, {.d = d, .k = k});
    }

  return report;
}

std::optional<double> satisfaction(const Scenario& s, const MissionPlan& plan,
                                   int k, int m, int l) {
  double n = s.missions[m].demand.at(k, l);
  if (n <= 0) return std::nullopt;
  double served = 0;
  for (int d = 0; d < s.num_uavs(); ++d) {
    int loc = plan.location.at(d, k);
    if (loc == l) served += plan.effort.at(d, k, m) * s.missions[m].quality[l];
  }
  return std::min(1.0, served / n);
}

double objective(const Scenario& s, const MissionPlan& plan) {
  double theta = 0;
  for (int k = 0; k < s.num_epochs(); ++k)
    for (int m = 0; m < s.num_missions(); ++m)
      for (int l = 0; l < s.num_locations(); ++l)
        if (auto sig = satisfaction(s, plan, k, m, l)) theta += *sig;
  return theta;
}

EnergyProfile energy_profile(const Scenario& s, const MissionPlan& plan, int d) {
  const int K = s.num_epochs(), P = s.num_payloads();
  std::vector<uint8_t> is_depot(s.num_locations(), 0);
  for (const auto& loc : s.locations) is_depot[loc.id] = loc.is_depot ? 1 : 0;

  EnergyProfile prof;
  prof.battery.resize(K);
  prof.consumed.assign(K, 0.0);

  const double E = s.uavs[d].battery_capacity_wh;
  prof.battery[0] = E;
  for (int k = 1; k < K; ++k) {
    int from = plan.location.at(d, k - 1);
    int to = plan.location.at(d, k);
    double mass = s.uavs[d].empty_weight_kg;
    for (int p = 0; p < P; ++p)
      if (plan.carried.at(d, k, p)) mass += s.payloads[p].weight_kg;
    double ev = 0;
    for (int p = 0; p < P; ++p)
      if (plan.delivery.at(d, p, k)) ev += s.physics.vertical_energy_wh;

    bool parked = is_depot[from] && is_depot[to] && from == to;
    double used = parked ? ev : ev + s.physics.travel_energy.at(from, to) * mass;
    prof.consumed[k] = used;

    if (is_depot[to]) {
      prof.battery[k] = E;  // swap / recharge
    } else {
      prof.battery[k] = prof.battery[k - 1] - used;
      if (prof.battery[k] < -kTol && prof.first_negative_epoch < 0)
        prof.first_negative_epoch = k;
    }
  }
  for (double c : prof.consumed) prof.total_consumed += c;
  return prof;
}

std::vector<uint8_t> relay_closure(const Scenario& s, const MissionPlan& plan, int k) {
  const int D = s.num_uavs();
  std::vector<uint8_t> tau(D, 0);
  std::vector<int> frontier;
  for (int d = 0; d < D; ++d)
    if (s.connectivity.uav_net[plan.location.at(d, k)]) {
      tau[d] = 1;
      frontier.push_back(d);
    }
  while (!frontier.empty()) {
    int d2 = frontier.back();
    frontier.pop_back();
    int l2 = plan.location.at(d2, k);
    for (int d = 0; d < D; ++d) {
      if (tau[d] || d == d2) continue;
      if (s.connectivity.uav_uav.at(plan.location.at(d, k), l2)) {
        tau[d] = 1;
        frontier.push_back(d);
      }
    }
  }
  return tau;
}

}  // namespace uavplan
