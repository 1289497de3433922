#pragma once
#include "ftca/engine.hpp"
#include "ftca/graphkit.hpp"

namespace ftca {

// Fast stability deciders. Every decider answers "does inactive cell u ever
// activate?" without running the global dynamics, except where a rule class
// has no known shortcut (then it falls back to the oracle and says so in the
// verdict's method). All deciders throw CellInitiallyActive when u starts
// active.

// Dispatches on classify(rule):
//   Trivial                          -> decide_trivial
//   23 (tri) / 34 (sq)               -> decide_topological_majority
//   2 (tri) / 3 (sq)                 -> decide_topological_treedepth
//   234 (sq)                         -> decide_topological_234
//   12 (tri)                         -> decide_algebraic_12_tri
//   12 / 123 / 124 (sq)              -> decide_algebraic_sq
//   TuringUniversal / FractalGrowing / NonQuiescent -> oracle_stable
// Algebraic deciders fall back to the oracle when the torus is too small for
// their window constructions.
StabilityVerdict decide(const Rule& rule, const Configuration& c, Cell u);

// phi: always stable. All-sums rules (123 tri / 1234 sq): stable iff the
// configuration has no active cell, otherwise u activates exactly at its
// distance to the nearest active cell. Full-neighborhood rules (3 tri / 4 sq):
// u activates iff all its neighbors start active, and then at step 1.
StabilityVerdict decide_trivial(const Rule& rule, const Configuration& c, Cell u);

// 23 (tri) / 34 (sq): u is stable iff it lies in the 2-core of the inactive
// graph.
StabilityVerdict decide_topological_majority(const Rule& rule, const Configuration& c, Cell u);

// 2 (tri) / 3 (sq): stable in the 2-core; otherwise u's inactive component
// decides: a component with a cycle activates u; a tree stabilizes u iff the
// two largest subtree heights under u's neighbors are equal (missing
// neighbors count as height -1).
StabilityVerdict decide_topological_treedepth(const Rule& rule, const Configuration& c, Cell u);

// 234 (sq): u is stable iff it lies in the 3-core of the inactive graph.
StabilityVerdict decide_topological_234(const Rule& rule, const Configuration& c, Cell u);

// 12 (tri): with tau the distance to the nearest active cell, u's three
// neighbors are active at tau-1 exactly as witnessed by active cells in their
// centroid half-planes restricted to D_tau(u); u activates at tau unless all
// three fire simultaneously.
StabilityVerdict decide_algebraic_12_tri(const Rule& rule, const Configuration& c, Cell u);

// 12 / 123 / 124 (sq): evaluates the states of u's neighbors just before the
// wavefront arrives via diagonal light-cone ORs over the quadrant interiors
// and a parity scan along the axis corridors; 124 continues for up to two
// extra steps around the unique lagging neighbor.
StabilityVerdict decide_algebraic_sq(const Rule& rule, const Configuration& c, Cell u);

}  // namespace ftca
