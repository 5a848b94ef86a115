#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "uavplan/core.hpp"

namespace uavplan {

// One alternative route between two graph nodes. `path` lists the visited
// locations including both endpoints; traversing the route takes
// duration() = path.size()-1 epochs, and the location occupied at relative
// epoch i (1-based, i = 1..duration) is path[i]. Hovering appears as repeated
// consecutive entries. energy_full is the traversal cost assuming a fully
// loaded UAV.
struct Route {
  int from = -1;
  int to = -1;
  int index = 0;  // g, position in the sorted alternative list
  std::vector<int> path;
  double energy_full = 0.0;

  int duration() const { return static_cast<int>(path.size()) - 1; }
  int location_at(int step) const { return path[step]; }
};

// Depot + delivery-location nodes with up to xi alternative routes per ordered
// pair, each sorted by duration ascending (ties: lexicographic path order).
class RouteGraph {
 public:
  RouteGraph() = default;
  RouteGraph(int depot, std::vector<int> nodes, int xi)
      : depot_(depot), nodes_(std::move(nodes)), xi_(xi) {}

  int depot() const { return depot_; }
  const std::vector<int>& nodes() const { return nodes_; }
  int xi() const { return xi_; }

  bool has_arc(int from, int to) const { return arcs_.count({from, to}) > 0; }
  const std::vector<Route>& routes(int from, int to) const;
  const Route& shortest(int from, int to) const { return routes(from, to).front(); }

  void add_routes(int from, int to, std::vector<Route> rs) {
    arcs_[{from, to}] = std::move(rs);
  }

  // One route per line: from,to,g,psi,energy,location list.
  void dump(std::ostream& os) const;

 private:
  int depot_ = -1;
  std::vector<int> nodes_;
  int xi_ = 0;
  std::map<std::pair<int, int>, std::vector<Route>> arcs_;
};

// Builds the heuristics' graph: nodes are the (single) depot plus every
// deliverable target; for each ordered node pair, the xi loopless shortest
// paths by epoch count over the movement graph (edges where v <= V).
// Throws ScenarioError for unreachable pairs or xi < 1.
RouteGraph build_graph(const Scenario& s, int xi);

// Traversal energy of a route for a given carried mass (Wh).
double route_energy_with_payload(const Scenario& s, const Route& r, double carried_mass_kg);

// Hop-count shortest distances from `source` to every location over the
// movement graph; unreachable entries are -1.
std::vector<int> bfs_distances(const Scenario& s, int source, double max_step_km);

}  // namespace uavplan
