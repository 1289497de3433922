#include "ftca/engine.hpp"

#include <string>

namespace ftca {

const char* method_name(Method m) {
  switch (m) {
    case Method::Oracle: return "Oracle";
    case Method::Trivial: return "Trivial";
    case Method::TwoCore: return "TwoCore";
    case Method::TreeDepth: return "TreeDepth";
    case Method::ThreeCore: return "ThreeCore";
    case Method::SemiPlane: return "SemiPlane";
    case Method::DiagonalOr: return "DiagonalOr";
    case Method::Corridor124: return "Corridor124";
  }
  return "?";
}

namespace {
void require_same_topology(const Rule& rule, const Configuration& c) {
  if (rule.topology != c.grid.topology)
    throw GridMismatch("rule " + rule.name + " does not match the configuration's grid");
}
}  // namespace

Configuration step(const Rule& rule, const Configuration& c) {
  require_same_topology(rule, c);
  Configuration next = c;
  std::array<Cell, 4> nb;
  const int sz = c.grid.size();
  for (int i = 0; i < sz; ++i) {
    if (c.state[i]) continue;
    Cell u = c.grid.cell(i);
    int deg = c.grid.neighbors(u, nb);
    int sum = 0;
    for (int k = 0; k < deg; ++k) sum += c.state[c.grid.idx(nb[k])];
    if (rule.triggers(sum)) next.state[i] = 1;
  }
  return next;
}

namespace {

// Shared worker: runs until fixed point or until stop_cell activates
// (stop_idx < 0 disables early exit).
Trajectory run_impl(const Rule& rule, const Configuration& c, int stop_idx) {
  require_same_topology(rule, c);
  const Grid& g = c.grid;
  const int sz = g.size();
  Trajectory tr;
  tr.fixed_point = c;
  tr.activation_time.assign(sz, -1);
  std::vector<uint8_t>& st = tr.fixed_point.state;
  std::vector<int> fresh, next_fresh, cand;
  std::vector<int32_t> stamp(sz, -1);
  for (int i = 0; i < sz; ++i)
    if (st[i]) {
      tr.activation_time[i] = 0;
      fresh.push_back(i);
    }
  const bool spontaneous = rule.triggers(0);
  std::array<Cell, 4> nb;
  int32_t t = 0;
  bool first = true;
  while (true) {
    ++t;
    cand.clear();
    if (first || spontaneous) {
      for (int i = 0; i < sz; ++i)
        if (!st[i]) cand.push_back(i);
    } else {
      for (int f : fresh) {
        int deg = g.neighbors(g.cell(f), nb);
        for (int k = 0; k < deg; ++k) {
          int ni = g.idx(nb[k]);
          if (!st[ni] && stamp[ni] != t) {
            stamp[ni] = t;
            cand.push_back(ni);
          }
        }
      }
    }
    next_fresh.clear();
    for (int i : cand) {
      int deg = g.neighbors(g.cell(i), nb);
      int sum = 0;
      for (int k = 0; k < deg; ++k) sum += st[g.idx(nb[k])];
      if (rule.triggers(sum)) next_fresh.push_back(i);
    }
    if (next_fresh.empty()) {
      tr.steps_to_fixed_point = t - 1;
      return tr;
    }
    for (int i : next_fresh) {
      st[i] = 1;
      tr.activation_time[i] = t;
    }
    if (stop_idx >= 0 && st[stop_idx]) {
      tr.steps_to_fixed_point = t;  // lower bound; caller only wants the cell's time
      return tr;
    }
    fresh.swap(next_fresh);
    first = false;
  }
}

}  // namespace

Trajectory run_to_fixed_point(const Rule& rule, const Configuration& c) {
  return run_impl(rule, c, -1);
}

StabilityVerdict oracle_stable(const Rule& rule, const Configuration& c, Cell u) {
  int ui = c.grid.idx(u);
  if (c.state[ui])
    throw CellInitiallyActive("(" + std::to_string(u.row) + "," + std::to_string(u.col) + ")");
  Trajectory tr = run_impl(rule, c, ui);
  StabilityVerdict v;
  v.method = Method::Oracle;
  if (tr.activation_time[ui] >= 0) {
    v.stable = false;
    v.activation_time = tr.activation_time[ui];
  } else {
    v.stable = true;
  }
  return v;
}

}  // namespace ftca
