#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "ftca/config.hpp"
#include "ftca/rules.hpp"

namespace ftca {

enum class Method : uint8_t {
  Oracle,
  Trivial,
  TwoCore,
  TreeDepth,
  ThreeCore,
  SemiPlane,
  DiagonalOr,
  Corridor124,
};

const char* method_name(Method m);

struct StabilityVerdict {
  bool stable = false;
  // Exact activation step when known; stable verdicts and the topological
  // fast deciders leave it empty.
  std::optional<int64_t> activation_time;
  Method method = Method::Oracle;
};

struct Trajectory {
  // Step at which each cell became active; 0 for initially active, -1 never.
  std::vector<int32_t> activation_time;
  // Number of steps until nothing changes (fixed point reached).
  int32_t steps_to_fixed_point = 0;
  Configuration fixed_point;
};

// One synchronous update: every inactive cell with a trigger count of active
// neighbors becomes active; active cells are frozen. Full sweep, no shortcuts.
Configuration step(const Rule& rule, const Configuration& c);

// Runs to the fixed point (guaranteed within |cells| steps since each step of
// a non-fixed-point configuration activates at least one cell). After the
// first sweep only neighbors of newly active cells are re-examined; a rule
// triggering on count 0 re-examines everything each step.
Trajectory run_to_fixed_point(const Rule& rule, const Configuration& c);

// Exact stability of inactive cell u by simulation.
// Throws CellInitiallyActive if u starts active.
StabilityVerdict oracle_stable(const Rule& rule, const Configuration& c, Cell u);

}  // namespace ftca
