#include "uavplan/route_graph.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>
#include <stdexcept>

namespace uavplan {

namespace {

struct PathLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using EdgeSet = std::set<std::pair<int, int>>;

// Minimum-hop path src -> dst over the movement graph, lexicographically
// smallest by visited-id sequence among all shortest ones. Banned nodes are
// excluded entirely (src itself is never banned); banned edges are directed.
// Empty result = unreachable.
std::vector<int> lex_shortest_path(const std::vector<std::vector<int>>& adj, int src, int dst,
                                   const std::vector<uint8_t>& banned_node,
                                   const EdgeSet& banned_edge) {
  const int n = static_cast<int>(adj.size());
  if (banned_node[dst]) return {};

  // Hop distances to dst, honoring bans (reverse expansion).
  std::vector<int> dist(n, -1);
  std::deque<int> q;
  dist[dst] = 0;
  q.push_back(dst);
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : adj[x]) {
      if (dist[y] >= 0 || banned_node[y]) continue;
      if (banned_edge.count({y, x})) continue;
      dist[y] = dist[x] + 1;
      q.push_back(y);
    }
  }
  if (src == dst) return {src};
  if (dist[src] < 0) return {};

  std::vector<int> path{src};
  int cur = src;
  while (cur != dst) {
    int next = -1;
    for (int nb : adj[cur]) {  // adjacency lists kept sorted ascending
      if (banned_node[nb]) continue;
      if (banned_edge.count({cur, nb})) continue;
      if (dist[nb] == dist[cur] - 1) {
        next = nb;
        break;
      }
    }
    if (next < 0) return {};  // bans broke the reconstruction
    path.push_back(next);
    cur = next;
  }
  return path;
}

// Yen's loopless k-shortest paths with (length, lexicographic) ordering.
std::vector<std::vector<int>> yen_k_shortest(const std::vector<std::vector<int>>& adj, int src,
                                             int dst, int k) {
  const int n = static_cast<int>(adj.size());
  std::vector<uint8_t> no_ban(n, 0);
  std::vector<std::vector<int>> found;

  auto first = lex_shortest_path(adj, src, dst, no_ban, {});
  if (first.empty()) return found;
  found.push_back(first);

  std::set<std::vector<int>, PathLess> candidates;
  while (static_cast<int>(found.size()) < k) {
    const auto& prev = found.back();
    for (size_t i = 0; i + 1 < prev.size(); ++i) {
      std::vector<int> root(prev.begin(), prev.begin() + i + 1);
      int spur = prev[i];

      EdgeSet banned_edges;
      for (const auto& p : found)
        if (p.size() > i + 1 && std::equal(root.begin(), root.end(), p.begin()))
          banned_edges.insert({p[i], p[i + 1]});

      std::vector<uint8_t> banned_nodes(n, 0);
      for (size_t j = 0; j < i; ++j) banned_nodes[root[j]] = 1;

      auto spur_path = lex_shortest_path(adj, spur, dst, banned_nodes, banned_edges);
      if (spur_path.empty()) continue;

      std::vector<int> total = root;
      total.insert(total.end(), spur_path.begin() + 1, spur_path.end());
      if (std::find(found.begin(), found.end(), total) == found.end())
        candidates.insert(std::move(total));
    }
    if (candidates.empty()) break;
    found.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return found;
}

}  // namespace

const std::vector<Route>& RouteGraph::routes(int from, int to) const {
  auto it = arcs_.find({from, to});
  if (it == arcs_.end())
    throw std::out_of_range("no arc between graph nodes " + std::to_string(from) + " and " +
                            std::to_string(to));
  return it->second;
}

void RouteGraph::dump(std::ostream& os) const {
  for (const auto& [key, routes] : arcs_) {
    for (const auto& r : routes) {
      char head[128];
      std::snprintf(head, sizeof(head), "%d,%d,%d,%d,%.10g,", r.from, r.to, r.index,
                    r.duration(), r.energy_full);
      os << head;
      for (size_t i = 0; i < r.path.size(); ++i) {
        if (i) os << ' ';
        os << r.path[i];
      }
      os << '\n';
    }
  }
}

RouteGraph build_graph(const Scenario& s, int xi) {
  if (xi < 1) throw ScenarioError("xi must be >= 1");
  const int depot = s.single_depot();

  std::vector<int> nodes{depot};
  for (int pid : s.deliverable_ids()) {
    int t = s.payloads[pid].target;
    if (std::find(nodes.begin(), nodes.end(), t) == nodes.end()) nodes.push_back(t);
  }
  std::sort(nodes.begin() + 1, nodes.end());

  const double step = fleet_min_step(s);
  const double gross = fleet_max_gross_mass(s);
  std::vector<std::vector<int>> adj(s.num_locations());
  for (int l = 0; l < s.num_locations(); ++l) adj[l] = reachable_neighbors(s, l, step);

  RouteGraph graph(depot, nodes, xi);
  for (int a : nodes)
    for (int b : nodes) {
      if (a == b) continue;
      auto paths = yen_k_shortest(adj, a, b, xi);
      if (paths.empty())
        throw ScenarioError("no route between locations " + std::to_string(a) + " and " +
                            std::to_string(b) + "; scenario infeasible");
      std::vector<Route> routes;
      for (size_t g = 0; g < paths.size(); ++g) {
        Route r;
        r.from = a;
        r.to = b;
        r.index = static_cast<int>(g);
        r.path = std::move(paths[g]);
        for (size_t i = 0; i + 1 < r.path.size(); ++i)
          r.energy_full += s.physics.travel_energy.at(r.path[i], r.path[i + 1]) * gross;
        routes.push_back(std::move(r));
      }
      graph.add_routes(a, b, std::move(routes));
    }
  return graph;
}

double route_energy_with_payload(const Scenario& s, const Route& r, double carried_mass_kg) {
  double y_max = 0, w_max = 0;
  for (const auto& u : s.uavs) {
    y_max = std::max(y_max, u.payload_capacity_kg);
    w_max = std::max(w_max, u.empty_weight_kg);
  }
  if (carried_mass_kg < 0 || carried_mass_kg > y_max + 1e-12)
    throw std::invalid_argument("carried mass out of [0, Y]");
  double e = 0;
  for (size_t i = 0; i + 1 < r.path.size(); ++i)
    e += s.physics.travel_energy.at(r.path[i], r.path[i + 1]) * (w_max + carried_mass_kg);
  return e;
}

std::vector<int> bfs_distances(const Scenario& s, int source, double max_step_km) {
  std::vector<int> dist(s.num_locations(), -1);
  std::deque<int> q;
  dist[source] = 0;
  q.push_back(source);
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : reachable_neighbors(s, x, max_step_km)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      q.push_back(y);
    }
  }
  return dist;
}

}  // namespace uavplan
