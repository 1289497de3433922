#pragma once
#include <cstdint>
#include <vector>

#include "ftca/config.hpp"

namespace ftca {

// Subgraph of the torus adjacency induced by a membership mask.
struct InducedGraph {
  Grid grid;
  std::vector<uint8_t> member;  // 1 = vertex present

  bool has(int idx) const { return member[idx] != 0; }
};

// Graph induced by the inactive cells of a configuration.
InducedGraph inactive_graph(const Configuration& c);

// Connected component containing u (cell indices). Throws NotInGraph.
std::vector<int> connected_component_of(const InducedGraph& g, Cell u);

// Whether the subgraph induced by `component` contains a cycle.
bool has_cycle(const InducedGraph& g, const std::vector<int>& component);

// Iteratively prunes vertices of degree < k; returns the membership mask of
// the k-core. O(vertices) with a pruning queue.
std::vector<uint8_t> k_core(const InducedGraph& g, int k);

// u's component must be a tree. For each torus neighbor of u (in neighbor
// order) returns the height in edges of the subtree hanging off that neighbor
// when the tree is rooted at u, or -1 if the neighbor is not a member.
// Throws NotInGraph / NotATree.
std::vector<int> subtree_depths(const InducedGraph& g, Cell u);

// Multi-source BFS distance to the nearest source over the whole torus.
// Throws EmptySources.
std::vector<int32_t> distance_field(const Grid& g, const std::vector<Cell>& sources);

}  // namespace ftca
