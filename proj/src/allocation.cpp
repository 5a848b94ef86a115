#include "uavplan/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace uavplan {

namespace {
constexpr double kEps = 1e-11;
}

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = static_cast<int>(lp.c.size());
  const int m = static_cast<int>(lp.rows.size());
  for (double b : lp.rhs)
    if (b < -kEps) throw std::invalid_argument("solve_lp requires b >= 0");

  // Tableau: m rows x (n + m + 1) columns, slack basis.
  std::vector<std::vector<double>> t(m, std::vector<double>(n + m + 1, 0.0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = lp.rows[i][j];
    t[i][n + i] = 1.0;
    t[i][n + m] = std::max(0.0, lp.rhs[i]);
    basis[i] = n + i;
  }
  std::vector<double> z(n + m + 1, 0.0);  // reduced costs of -c
  for (int j = 0; j < n; ++j) z[j] = -lp.c[j];

  for (;;) {
    int pivot_col = -1;  // Bland: lowest index with negative reduced cost
    for (int j = 0; j < n + m; ++j)
      if (z[j] < -kEps) {
        pivot_col = j;
        break;
      }
    if (pivot_col < 0) break;

    int pivot_row = -1;
    double best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      if (t[i][pivot_col] <= kEps) continue;
      double ratio = t[i][n + m] / t[i][pivot_col];
      if (pivot_row < 0 || ratio < best_ratio - kEps ||
          (ratio < best_ratio + kEps && basis[i] < basis[pivot_row])) {
        pivot_row = i;
        best_ratio = ratio;
      }
    }
    if (pivot_row < 0) throw std::runtime_error("solve_lp: unbounded program");

    double piv = t[pivot_row][pivot_col];
    for (double& v : t[pivot_row]) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == pivot_row) continue;
      double f = t[i][pivot_col];
      if (std::abs(f) < kEps) continue;
      for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[pivot_row][j];
    }
    double fz = z[pivot_col];
    for (int j = 0; j <= n + m; ++j) z[j] -= fz * t[pivot_row][j];
    basis[pivot_row] = pivot_col;
  }

  LpSolution sol;
  sol.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) sol.x[basis[i]] = t[i][n + m];
  for (int j = 0; j < n; ++j) sol.value += lp.c[j] * sol.x[j];
  return sol;
}

EffortAllocation allocate_effort(const Scenario& s, int epoch,
                                 const std::vector<int>& position,
                                 const Grid2<uint8_t>& equipped,
                                 const std::vector<uint8_t>& relay) {
  const int D = s.num_uavs(), M = s.num_missions();
  EffortAllocation out;
  out.effort = Grid2<double>(D, M, 0.0);

  std::map<int, std::vector<int>> by_location;
  for (int d = 0; d < D; ++d)
    if (relay[d]) by_location[position[d]].push_back(d);

  for (const auto& [l, squad] : by_location) {
    // Variables y(d,m) for equipped pairs with serviceable demand at l.
    struct Var {
      int d, m;
    };
    std::vector<Var> vars;
    for (int d : squad)
      for (int m = 0; m < M; ++m) {
        if (!equipped.at(d, m)) continue;
        if (s.missions[m].quality[l] <= 0) continue;
        if (s.missions[m].demand.at(epoch, l) <= 0) continue;
        vars.push_back({d, m});
      }
    if (vars.empty()) continue;

    LinearProgram lp;
    const int n = static_cast<int>(vars.size());
    lp.c.resize(n);
    for (int j = 0; j < n; ++j)
      lp.c[j] = s.missions[vars[j].m].quality[l] / s.missions[vars[j].m].demand.at(epoch, l);

    // EQ9 per mission, EQ11 per UAV, box y <= 1.
    for (int m = 0; m < M; ++m) {
      std::vector<double> row(n, 0.0);
      bool any = false;
      for (int j = 0; j < n; ++j)
        if (vars[j].m == m) {
          row[j] = s.missions[m].quality[l];
          any = true;
        }
      if (any) {
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(s.missions[m].demand.at(epoch, l));
      }
    }
    for (int d : squad) {
      std::vector<double> row(n, 0.0);
      bool any = false;
      for (int j = 0; j < n; ++j)
        if (vars[j].d == d && s.missions[vars[j].m].data_rate > 0) {
          row[j] = s.missions[vars[j].m].data_rate;
          any = true;
        }
      if (any) {
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(s.uavs[d].radio_capacity);
      }
    }
    for (int j = 0; j < n; ++j) {
      std::vector<double> row(n, 0.0);
      row[j] = 1.0;
      lp.rows.push_back(std::move(row));
      lp.rhs.push_back(1.0);
    }

    auto sol = solve_lp(lp);
    out.sigma_sum += sol.value;
    for (int j = 0; j < n; ++j) out.effort.at(vars[j].d, vars[j].m) = sol.x[j];
  }
  return out;
}

}  // namespace uavplan
