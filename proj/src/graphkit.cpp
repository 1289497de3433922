#include "ftca/graphkit.hpp"

#include <queue>
#include <string>

namespace ftca {

InducedGraph inactive_graph(const Configuration& c) {
  InducedGraph g{c.grid, std::vector<uint8_t>(c.state.size())};
  for (size_t i = 0; i < c.state.size(); ++i) g.member[i] = c.state[i] ? 0 : 1;
  return g;
}

std::vector<int> connected_component_of(const InducedGraph& g, Cell u) {
  int ui = g.grid.idx(u);
  if (!g.has(ui)) throw NotInGraph("component root is not a member");
  std::vector<uint8_t> seen(g.member.size(), 0);
  std::vector<int> comp{ui};
  seen[ui] = 1;
  std::array<Cell, 4> nb;
  for (size_t head = 0; head < comp.size(); ++head) {
    int deg = g.grid.neighbors(g.grid.cell(comp[head]), nb);
    for (int k = 0; k < deg; ++k) {
      int ni = g.grid.idx(nb[k]);
      if (g.has(ni) && !seen[ni]) {
        seen[ni] = 1;
        comp.push_back(ni);
      }
    }
  }
  return comp;
}

bool has_cycle(const InducedGraph& g, const std::vector<int>& component) {
  // A connected graph has a cycle iff edges >= vertices. Count edges within
  // the component; each undirected edge is seen twice.
  // Multi-edges between the same cell pair (tiny tori) count as cycles too,
  // which matches the dynamics on the torus.
  std::vector<uint8_t> in_comp(g.member.size(), 0);
  for (int i : component) in_comp[i] = 1;
  int64_t half_edges = 0;
  std::array<Cell, 4> nb;
  for (int i : component) {
    int deg = g.grid.neighbors(g.grid.cell(i), nb);
    for (int k = 0; k < deg; ++k)
      if (in_comp[g.grid.idx(nb[k])]) ++half_edges;
  }
  return half_edges / 2 >= int64_t(component.size());
}

std::vector<uint8_t> k_core(const InducedGraph& g, int k) {
  std::vector<uint8_t> alive = g.member;
  std::vector<int16_t> deg(alive.size(), 0);
  std::array<Cell, 4> nb;
  std::vector<int> queue;
  for (size_t i = 0; i < alive.size(); ++i) {
    if (!alive[i]) continue;
    int d = g.grid.neighbors(g.grid.cell(int(i)), nb);
    int cnt = 0;
    for (int j = 0; j < d; ++j) cnt += alive[g.grid.idx(nb[j])];
    deg[i] = int16_t(cnt);
    if (cnt < k) queue.push_back(int(i));
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int i = queue[head];
    if (!alive[i]) continue;
    alive[i] = 0;
    int d = g.grid.neighbors(g.grid.cell(i), nb);
    for (int j = 0; j < d; ++j) {
      int ni = g.grid.idx(nb[j]);
      if (alive[ni] && --deg[ni] < k) queue.push_back(ni);
    }
  }
  return alive;
}

std::vector<int> subtree_depths(const InducedGraph& g, Cell u) {
  int ui = g.grid.idx(u);
  if (!g.has(ui)) throw NotInGraph("u is not a member");
  std::vector<int> comp = connected_component_of(g, u);
  // Tree check: connected with |E| = |V| - 1.
  if (has_cycle(g, comp)) throw NotATree("component of u contains a cycle");
  std::array<Cell, 4> nb;
  int deg = g.grid.neighbors(u, nb);
  std::vector<int> depths;
  std::vector<int32_t> dist(g.member.size());
  for (int k = 0; k < deg; ++k) {
    int vi = g.grid.idx(nb[k]);
    if (!g.has(vi)) {
      depths.push_back(-1);
      continue;
    }
    // Height of v's subtree: longest downward path from v avoiding u.
    std::fill(dist.begin(), dist.end(), -1);
    dist[ui] = -2;  // blocked
    dist[vi] = 0;
    std::vector<int> order{vi};
    int height = 0;
    std::array<Cell, 4> nb2;
    for (size_t head = 0; head < order.size(); ++head) {
      int cur = order[head];
      int d2 = g.grid.neighbors(g.grid.cell(cur), nb2);
      for (int j = 0; j < d2; ++j) {
        int ni = g.grid.idx(nb2[j]);
        if (g.has(ni) && dist[ni] == -1) {
          dist[ni] = dist[cur] + 1;
          if (dist[ni] > height) height = dist[ni];
          order.push_back(ni);
        }
      }
    }
    depths.push_back(height);
  }
  return depths;
}

std::vector<int32_t> distance_field(const Grid& g, const std::vector<Cell>& sources) {
  if (sources.empty()) throw EmptySources("distance_field");
  std::vector<int32_t> dist(g.size(), -1);
  std::vector<int> order;
  for (Cell s : sources) {
    int i = g.idx(s);
    if (dist[i] < 0) {
      dist[i] = 0;
      order.push_back(i);
    }
  }
  std::array<Cell, 4> nb;
  for (size_t head = 0; head < order.size(); ++head) {
    int cur = order[head];
    int deg = g.neighbors(g.cell(cur), nb);
    for (int k = 0; k < deg; ++k) {
      int ni = g.idx(nb[k]);
      if (dist[ni] < 0) {
        dist[ni] = dist[cur] + 1;
        order.push_back(ni);
      }
    }
  }
  return dist;
}

}  // namespace ftca
