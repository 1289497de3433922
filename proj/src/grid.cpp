#include "ftca/grid.hpp"

#include <cassert>
#include <queue>
#include <set>
#include <string>
#include <utility>

namespace ftca {

Grid Grid::square(int n) {
  if (n < 2) throw BadDimensions("square side must be >= 2, got " + std::to_string(n));
  return Grid{Topology::Square, n, n};
}

Grid Grid::triangular(int n_rows) {
  if (n_rows < 2) throw BadDimensions("triangular rows must be >= 2, got " + std::to_string(n_rows));
  if (n_rows % 2 != 0)
    throw BadDimensions("triangular rows must be even, got " + std::to_string(n_rows));
  return Grid{Topology::Triangular, n_rows, 2 * n_rows};
}

int Grid::neighbors(Cell u, std::array<Cell, 4>& out) const {
  if (topology == Topology::Square) {
    out[0] = wrap(u.row - 1, u.col);
    out[1] = wrap(u.row, u.col + 1);
    out[2] = wrap(u.row + 1, u.col);
    out[3] = wrap(u.row, u.col - 1);
    return 4;
  }
  out[0] = wrap(u.row, u.col - 1);
  out[1] = wrap(u.row, u.col + 1);
  out[2] = up_triangle(u) ? wrap(u.row + 1, u.col) : wrap(u.row - 1, u.col);
  return 3;
}

int graph_distance(const Grid& g, Cell a, Cell b) {
  if (a == b) return 0;
  std::vector<int32_t> dist(g.size(), -1);
  std::queue<int> q;
  dist[g.idx(a)] = 0;
  q.push(g.idx(a));
  std::array<Cell, 4> nb;
  while (!q.empty()) {
    int cur = q.front();
    q.pop();
    int deg = g.neighbors(g.cell(cur), nb);
    for (int i = 0; i < deg; ++i) {
      int ni = g.idx(nb[i]);
      if (dist[ni] < 0) {
        dist[ni] = dist[cur] + 1;
        if (nb[i] == b) return dist[ni];
        q.push(ni);
      }
    }
  }
  return -1;  // unreachable on a torus
}

std::vector<Cell> disc(const Grid& g, Cell u, int r) {
  std::vector<int32_t> dist(g.size(), -1);
  std::vector<Cell> out;
  std::queue<int> q;
  dist[g.idx(u)] = 0;
  q.push(g.idx(u));
  out.push_back(u);
  std::array<Cell, 4> nb;
  while (!q.empty()) {
    int cur = q.front();
    q.pop();
    if (dist[cur] == r) continue;
    int deg = g.neighbors(g.cell(cur), nb);
    for (int i = 0; i < deg; ++i) {
      int ni = g.idx(nb[i]);
      if (dist[ni] < 0) {
        dist[ni] = dist[cur] + 1;
        out.push_back(nb[i]);
        q.push(ni);
      }
    }
  }
  return out;
}

namespace {

// Centroid of the unwrapped triangle (R,C), both coordinates scaled by 6.
// x grows east, y grows with the row index.
void centroid6(int R, int C, bool up, long& X, long& Y) {
  X = 3L * (C + 1);
  Y = 6L * R + (up ? 4 : 2);
}

// Which side of the u/v shared edge a centroid lies on; true if on v's side.
// slot: 0 = left neighbor, 1 = right neighbor, 2 = vertical neighbor.
bool on_v_side(int r0, int c0, bool u_up, int slot, long X, long Y) {
  long lhs, rhs;
  if (u_up) {
    switch (slot) {
      case 2: return Y > 6L * (r0 + 1);                       // below the base
      case 1: lhs = 2 * X; rhs = 6L * c0 + 6 + (Y - 6L * r0); assert(lhs != rhs); return lhs > rhs;
      default: lhs = 2 * X; rhs = 6L * c0 + 6 - (Y - 6L * r0); assert(lhs != rhs); return lhs < rhs;
    }
  }
  switch (slot) {
    case 2: return Y < 6L * r0;                               // above the top edge
    case 1: lhs = 2 * X; rhs = 6L * c0 + 12 - (Y - 6L * r0); assert(lhs != rhs); return lhs > rhs;
    default: lhs = 2 * X; rhs = 6L * c0 + (Y - 6L * r0); assert(lhs != rhs); return lhs < rhs;
  }
}

}  // namespace

std::vector<Cell> semi_plane_arc(const Grid& g, Cell u, Cell v, int r) {
  if (g.topology != Topology::Triangular)
    throw GridMismatch("semi_plane_arc is defined on triangular grids");
  if (2 * r + 2 > g.rows)
    throw TorusTooSmall("semi_plane_arc radius " + std::to_string(r) + " on " +
                        std::to_string(g.rows) + " rows");
  std::array<Cell, 4> nb;
  g.neighbors(u, nb);
  int slot = -1;
  for (int i = 0; i < 3; ++i)
    if (nb[i] == v) slot = i;
  if (slot < 0) throw NotInGraph("v is not a neighbor of u");

  bool u_up = g.up_triangle(u);
  // BFS in unwrapped plane coordinates; the guard makes the wrap injective on D_r.
  struct P { int R, C, d; };
  std::vector<Cell> out;
  std::set<std::pair<int, int>> seen{{u.row, u.col}};
  std::vector<P> all{{u.row, u.col, 0}};
  for (size_t head = 0; head < all.size(); ++head) {
    P p = all[head];
    if (p.d == r) continue;
    bool up = ((p.R + p.C) & 1) == 0;
    P cand[3] = {{p.R, p.C - 1, p.d + 1},
                 {p.R, p.C + 1, p.d + 1},
                 {up ? p.R + 1 : p.R - 1, p.C, p.d + 1}};
    for (auto& c : cand) {
      if (seen.insert({c.R, c.C}).second) all.push_back(c);
    }
  }
  for (auto& p : all) {
    bool up = ((p.R + p.C) & 1) == 0;
    long X, Y;
    centroid6(p.R, p.C, up, X, Y);
    if (on_v_side(u.row, u.col, u_up, slot, X, Y)) out.push_back(g.wrap(p.R, p.C));
  }
  return out;
}

RingRegions diagonal_and_corridor_regions(const Grid& g, int tau) {
  if (g.topology != Topology::Square)
    throw GridMismatch("diagonal_and_corridor_regions is defined on square grids");
  if (tau < 1) throw BadDimensions("tau must be >= 1");
  if (2 * tau + 4 > g.rows)
    throw TorusTooSmall("ring regions for tau " + std::to_string(tau) + " on n=" +
                        std::to_string(g.rows));
  RingRegions rr;
  const int sx[4] = {1, -1, -1, 1};  // east sign per quadrant I..IV
  const int sy[4] = {1, 1, -1, -1};  // north sign per quadrant I..IV
  for (int q = 0; q < 4; ++q)
    for (int i = 1; i <= tau; ++i)
      rr.diagonal[q].push_back({sx[q] * i, sy[q] * (tau + 1 - i)});
  const int dx[4] = {0, 1, 0, -1};  // N,E,S,W
  const int dy[4] = {1, 0, -1, 0};
  for (int d = 0; d < 4; ++d)
    for (int i = 1; i <= tau; ++i)
      rr.corridor[d].push_back({dx[d] * i, dy[d] * i});
  return rr;
}

}  // namespace ftca
