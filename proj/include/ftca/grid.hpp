#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "ftca/errors.hpp"

namespace ftca {

enum class Topology : uint8_t { Square, Triangular };

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(Cell a, Cell b) { return a.row == b.row && a.col == b.col; }
  friend bool operator!=(Cell a, Cell b) { return !(a == b); }
  friend bool operator<(Cell a, Cell b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

// Relative offset from a centre cell: east = +col, north = -row.
struct Offset {
  int east = 0;
  int north = 0;
  friend bool operator==(Offset a, Offset b) { return a.east == b.east && a.north == b.north; }
  friend bool operator<(Offset a, Offset b) {
    return a.east != b.east ? a.east < b.east : a.north < b.north;
  }
};

// Torus grid: Square is n x n with von Neumann neighborhoods; Triangular is
// rows x 2*rows unit triangles (up-pointing iff row+col is even) with the three
// edge-adjacent triangles as neighborhood. Triangular row count must be even so
// orientations match across the vertical wrap.
struct Grid {
  Topology topology = Topology::Square;
  int rows = 0;
  int cols = 0;

  static Grid square(int n);
  static Grid triangular(int n_rows);

  int size() const { return rows * cols; }
  int degree() const { return topology == Topology::Square ? 4 : 3; }
  int idx(Cell c) const { return c.row * cols + c.col; }
  Cell cell(int i) const { return {i / cols, i % cols}; }
  int wrap_row(int r) const { r %= rows; return r < 0 ? r + rows : r; }
  int wrap_col(int c) const { c %= cols; return c < 0 ? c + cols : c; }
  Cell wrap(int r, int c) const { return {wrap_row(r), wrap_col(c)}; }
  bool up_triangle(Cell c) const { return ((c.row + c.col) & 1) == 0; }

  // Fills out[0..degree()); returns degree().
  int neighbors(Cell u, std::array<Cell, 4>& out) const;

  // Square-grid helper: cell at a relative offset from u.
  Cell at(Cell u, Offset o) const { return wrap(u.row - o.north, u.col + o.east); }
};

// BFS distance between two cells on the torus (states ignored).
int graph_distance(const Grid& g, Cell a, Cell b);

// All cells at BFS distance <= r from u.
std::vector<Cell> disc(const Grid& g, Cell u, int r);

// Triangular grids only: the part of the disc D_r(u) lying on v's side of the
// line through the shared edge of u and its neighbor v (membership decided by
// triangle centroids; no centroid ever lies on such a line).
// Throws TorusTooSmall unless 2r+2 <= rows, and NotInGraph if v is not a
// neighbor of u.
std::vector<Cell> semi_plane_arc(const Grid& g, Cell u, Cell v, int r);

// Square grids only: the interior diagonal arcs and axis corridors of the ball
// B_{tau+1}, as offsets relative to the centre cell.
//   diagonal[q]: quadrant interior cells (|east|>=1, |north|>=1) at L1 distance
//                tau+1; quadrants ordered I(+,+), II(-,+), III(-,-), IV(+,-).
//   corridor[d]: axis offsets at distances 1..tau; directions ordered N,E,S,W.
// The centre, the four corridors of B_tau and the quadrant interiors of B_tau
// tile B_tau exactly. Throws TorusTooSmall unless 2*tau+4 <= rows.
struct RingRegions {
  std::array<std::vector<Offset>, 4> diagonal;
  std::array<std::vector<Offset>, 4> corridor;
};
RingRegions diagonal_and_corridor_regions(const Grid& g, int tau);

}  // namespace ftca
