#pragma once
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ftca/grid.hpp"

namespace ftca {

struct Configuration {
  Grid grid;
  std::vector<uint8_t> state;  // 0/1 per cell, row-major
  bool odd_rows_doubled = false;

  uint8_t at(Cell c) const { return state[grid.idx(c)]; }
  void set(Cell c, uint8_t v) { state[grid.idx(c)] = v; }
  int64_t active_count() const;

  static Configuration empty(const Grid& g) { return {g, std::vector<uint8_t>(g.size(), 0), false}; }
};

// Text format:
//   line 1: "SQ n" or "TRI n"
//   then n lines of '0'/'1' characters: n per line for SQ, 2n per line for TRI.
// Lines end with a single LF; no trailing whitespace anywhere.
// A TRI header with odd n is accepted and vertically doubled (the 2x1 tiling
// is the same periodic configuration); the result carries odd_rows_doubled.
// Throws BadHeader / BadDimensions / BadSymbol.
Configuration parse_configuration(std::string_view text);

std::string serialize(const Configuration& c);

// Seeded deterministic sampler: row-major sweep of a mt19937_64 stream; each
// cell is active iff (next() >> 11) * 2^-53 < density. Identical output across
// platforms for a given (topology, n, density, seed).
// n is the side for Square and the row count for Triangular (even).
Configuration random_configuration(Topology t, int n, double density, uint64_t seed);

// Block-padded magnification of a square configuration x of side n: a torus of
// side m = 2n^2 + 3n containing (2n+1) x (2n+1) aligned copies of x with an
// inactive border of width n around the copy block.
Configuration build_padded(const Configuration& x);

// Where a cell of x lands inside the centre copy of build_padded(x).
Cell padded_center_image(int n, Cell u);

}  // namespace ftca
