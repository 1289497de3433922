#include "ftca/deciders.hpp"

#include <algorithm>
#include <string>

namespace ftca {

namespace {

uint8_t mask_of(std::initializer_list<int> set) {
  uint8_t m = 0;
  for (int d : set) m |= uint8_t(1u << d);
  return m;
}

void require_inactive(const Configuration& c, Cell u) {
  if (c.at(u))
    throw CellInitiallyActive("(" + std::to_string(u.row) + "," + std::to_string(u.col) + ")");
}

std::vector<Cell> active_cells(const Configuration& c) {
  std::vector<Cell> out;
  for (int i = 0; i < c.grid.size(); ++i)
    if (c.state[i]) out.push_back(c.grid.cell(i));
  return out;
}

StabilityVerdict stable_v(Method m) { return {true, std::nullopt, m}; }
StabilityVerdict unstable_v(Method m, int64_t t) { return {false, t, m}; }
StabilityVerdict unstable_notime(Method m) { return {false, std::nullopt, m}; }

// Exact local evolution: simulates the (2*rho+1)^2 window centred on u for
// `steps` <= rho steps with a dead border. Influence from outside the window
// cannot reach u within rho steps, so u's trajectory is exact. Requires
// 2*rho+1 <= n so the wrapped sampling is injective.
int window_activation(const Rule& rule, const Configuration& c, Cell u, int rho, int steps) {
  const int W = 2 * rho + 1;
  std::vector<uint8_t> st(size_t(W) * W), nx(size_t(W) * W);
  for (int dr = -rho; dr <= rho; ++dr)
    for (int dc = -rho; dc <= rho; ++dc)
      st[size_t(dr + rho) * W + (dc + rho)] = c.at(c.grid.wrap(u.row + dr, u.col + dc));
  const int ctr = rho * W + rho;
  for (int t = 1; t <= steps; ++t) {
    nx = st;
    for (int r = 0; r < W; ++r)
      for (int col = 0; col < W; ++col) {
        size_t i = size_t(r) * W + col;
        if (st[i]) continue;
        int sum = 0;
        if (r > 0) sum += st[i - W];
        if (r + 1 < W) sum += st[i + W];
        if (col > 0) sum += st[i - 1];
        if (col + 1 < W) sum += st[i + 1];
        if (rule.triggers(sum)) nx[i] = 1;
      }
    st.swap(nx);
    if (st[ctr]) return t;
  }
  return -1;
}

// Evaluation frame for the square algebraic deciders: coordinates (a, b)
// meaning u + a*ax + b*py on the torus.
struct Frame {
  const Configuration* c;
  Cell u;
  Offset ax, py;

  int S(int a, int b) const {
    Offset o{a * ax.east + b * py.east, a * ax.north + b * py.north};
    return c->at(c->grid.at(u, o));
  }
};

// OR of the initial states on the diagonal { k*ax + l*(mirror ? -py : py) :
// k >= imin, l >= jmin, k + l = R }. This is the state of cell
// (imin*ax + jmin*py') at time R - imin - jmin: activity can only enter the
// open quadrant through its outer diagonals, where it propagates as a plain
// OR for every rule triggering on counts {1,2}.
int arc_or(const Frame& f, int R, int imin, int jmin, bool mirror) {
  for (int k = imin; R - k >= jmin; ++k) {
    int l = R - k;
    if (f.S(k, mirror ? -l : l)) return 1;
  }
  return 0;
}

// Axis corridor scan: val[i] = state of i*ax at time R - i, for i = 1..R.
// Outside-in recursion: the flanking quadrant cells are arc ORs; a position
// flanked on exactly one side fires, flanked on both sides inverts the value
// arriving from outside (sum 2 + v triggers iff v = 0 for both rules 12 and
// 124), unflanked positions copy it inward.
std::vector<int> corridor_vals(const Frame& f, int R) {
  std::vector<int> val(size_t(R) + 1, 0);
  val[R] = f.S(R, 0);
  for (int i = R - 1; i >= 1; --i) {
    int A = arc_or(f, R, i, 1, false);
    int B = arc_or(f, R, i, 1, true);
    if (A != B)
      val[i] = 1;
    else if (A == 1)
      val[i] = 1 - val[i + 1];
    else
      val[i] = val[i + 1];
  }
  return val;
}

// One step later along the same axis: v1[i] = state of i*ax at time
// tau + 1 - i. Uses the radius-(tau+1) flanker values (OR of both diagonal
// light cones) plus the already-active term from the radius-tau scan.
std::vector<int> corridor_vals_next(const Frame& f, const std::vector<int>& val, int tau) {
  std::vector<int> v1(size_t(tau) + 2, 0);
  v1[tau + 1] = f.S(tau + 1, 0);
  for (int i = tau; i >= 1; --i) {
    int A = arc_or(f, tau, i, 1, false) | arc_or(f, tau + 1, i, 1, false);
    int B = arc_or(f, tau, i, 1, true) | arc_or(f, tau + 1, i, 1, true);
    int sum = A + B + v1[i + 1];
    v1[i] = (val[i] || sum == 1 || sum == 2) ? 1 : 0;
  }
  return v1;
}

constexpr Offset kUnit[4] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};  // N,E,S,W

}  // namespace

StabilityVerdict decide_trivial(const Rule& rule, const Configuration& c, Cell u) {
  require_inactive(c, u);
  const Grid& g = c.grid;
  int deg = g.degree();
  if (rule.mask == 0) return stable_v(Method::Trivial);
  uint8_t all_sums = uint8_t((1u << (deg + 1)) - 2);  // triggers 1..deg
  if (rule.mask == all_sums) {
    auto act = active_cells(c);
    if (act.empty()) return stable_v(Method::Trivial);
    auto dist = distance_field(g, act);
    return unstable_v(Method::Trivial, dist[g.idx(u)]);
  }
  if (rule.mask == uint8_t(1u << deg)) {
    // Only a full neighborhood triggers. No inactive cell with an inactive
    // neighbor can ever activate, so the picture is frozen beyond step 1.
    std::array<Cell, 4> nb;
    int d = g.neighbors(u, nb);
    int sum = 0;
    for (int k = 0; k < d; ++k) sum += c.at(nb[k]);
    return sum == deg ? unstable_v(Method::Trivial, 1) : stable_v(Method::Trivial);
  }
  throw BadRuleName(rule.name + " is not a trivial rule");
}

StabilityVerdict decide_topological_majority(const Rule& rule, const Configuration& c, Cell u) {
  (void)rule;
  require_inactive(c, u);
  InducedGraph ig = inactive_graph(c);
  auto core = k_core(ig, 2);
  return core[c.grid.idx(u)] ? stable_v(Method::TwoCore) : unstable_notime(Method::TwoCore);
}

StabilityVerdict decide_topological_treedepth(const Rule& rule, const Configuration& c, Cell u) {
  (void)rule;
  require_inactive(c, u);
  InducedGraph ig = inactive_graph(c);
  auto core = k_core(ig, 2);
  if (core[c.grid.idx(u)]) return stable_v(Method::TwoCore);
  auto comp = connected_component_of(ig, u);
  if (has_cycle(ig, comp)) return unstable_notime(Method::TreeDepth);
  auto depths = subtree_depths(ig, u);
  std::sort(depths.begin(), depths.end(), std::greater<int>());
  // The wavefront from subtree i reaches u at depth_i + 1 (missing neighbors
  // count as already active). u survives iff the last two arrivals coincide,
  // making its count skip the trigger value.
  return depths[0] == depths[1] ? stable_v(Method::TreeDepth) : unstable_notime(Method::TreeDepth);
}

StabilityVerdict decide_topological_234(const Rule& rule, const Configuration& c, Cell u) {
  (void)rule;
  require_inactive(c, u);
  InducedGraph ig = inactive_graph(c);
  auto core = k_core(ig, 3);
  return core[c.grid.idx(u)] ? stable_v(Method::ThreeCore) : unstable_notime(Method::ThreeCore);
}

StabilityVerdict decide_algebraic_12_tri(const Rule& rule, const Configuration& c, Cell u) {
  require_inactive(c, u);
  const Grid& g = c.grid;
  if (g.topology != Topology::Triangular) throw GridMismatch("rule 12 decider is triangular");
  auto act = active_cells(c);
  if (act.empty()) return stable_v(Method::SemiPlane);
  auto dist = distance_field(g, act);
  int tau = dist[g.idx(u)];
  std::array<Cell, 4> nb;
  g.neighbors(u, nb);
  if (tau == 1) {
    int sum = c.at(nb[0]) + c.at(nb[1]) + c.at(nb[2]);
    return sum <= 2 ? unstable_v(Method::SemiPlane, 1) : stable_v(Method::SemiPlane);
  }
  if (2 * tau + 2 > g.rows) return oracle_stable(rule, c, u);
  int marked = 0;
  for (int k = 0; k < 3; ++k) {
    auto region = semi_plane_arc(g, u, nb[k], tau);
    for (Cell w : region)
      if (c.at(w)) {
        ++marked;
        break;
      }
  }
  if (marked == 3) return stable_v(Method::SemiPlane);
  if (marked >= 1) return unstable_v(Method::SemiPlane, tau);
  return oracle_stable(rule, c, u);  // cannot happen; stay safe
}

StabilityVerdict decide_algebraic_sq(const Rule& rule, const Configuration& c, Cell u) {
  require_inactive(c, u);
  const Grid& g = c.grid;
  if (g.topology != Topology::Square) throw GridMismatch("square algebraic decider");
  const bool r12 = rule.mask == mask_of({1, 2});
  const bool r123 = rule.mask == mask_of({1, 2, 3});
  const bool r124 = rule.mask == mask_of({1, 2, 4});
  if (!r12 && !r123 && !r124) throw BadRuleName(rule.name + " is not a square algebraic rule");
  const Method meth = r124 ? Method::Corridor124 : Method::DiagonalOr;
  auto act = active_cells(c);
  if (act.empty()) return stable_v(meth);
  auto dist = distance_field(g, act);
  const int tau = dist[g.idx(u)];
  if (2 * tau + 6 > g.rows) return oracle_stable(rule, c, u);
  if (tau <= 2) {
    int t = window_activation(rule, c, u, tau + 2, r124 ? tau + 2 : tau);
    return t >= 0 ? unstable_v(meth, t) : stable_v(meth);
  }

  if (r123) {
    // Rule 123 spreads as a plain OR in each open half-plane: neighbor d is
    // active at tau-1 iff its half-plane slice of the distance-tau sphere
    // holds an active cell.
    int s1 = 0;
    for (int d = 0; d < 4; ++d) {
      Frame f{&c, u, kUnit[d], kUnit[(d + 1) % 4]};
      int p = arc_or(f, tau, 1, 1, false) | arc_or(f, tau, 1, 1, true) | f.S(tau, 0);
      s1 += p;
    }
    if (s1 == 4) return stable_v(meth);
    if (s1 == 0) return oracle_stable(rule, c, u);  // cannot happen; stay safe
    return unstable_v(meth, tau);
  }

  std::array<std::vector<int>, 4> val;
  int s1 = 0;
  for (int d = 0; d < 4; ++d) {
    Frame f{&c, u, kUnit[d], kUnit[(d + 1) % 4]};
    val[d] = corridor_vals(f, tau);
    s1 += val[d][1];
  }

  if (r12) {
    // One or two active neighbors fire u at tau; zero or >= 3 freeze it.
    if (s1 == 1 || s1 == 2) return unstable_v(meth, tau);
    return stable_v(meth);
  }

  // Rule 124.
  if (s1 == 1 || s1 == 2 || s1 == 4) return unstable_v(meth, tau);
  if (s1 == 0) return stable_v(meth);
  // Exactly one lagging neighbor; everything now happens on its side.
  int lag = 0;
  while (val[lag][1] != 0) ++lag;
  Frame f{&c, u, kUnit[lag], kUnit[(lag + 1) % 4]};
  // States of the laggard's outward neighbors one step before the front.
  int h0 = arc_or(f, tau, 1, 1, false);
  int f0 = arc_or(f, tau, 1, 1, true);
  int g0 = val[lag][2];
  int m0 = h0 + f0 + g0;
  if (m0 == 3) return stable_v(meth);  // laggard frozen at count 3, u at count 3
  if (m0 != 0) return oracle_stable(rule, c, u);  // contradicts s1 == 3; stay safe
  // Same three cells one step later, via radius-(tau+1) light cones.
  auto F2 = [&](int i, int j, bool mir) {
    return arc_or(f, tau, i, j, mir) | arc_or(f, tau + 1, i, j, mir);
  };
  int h1 = F2(2, 1, false) | F2(1, 2, false);
  int f1 = F2(2, 1, true) | F2(1, 2, true);
  auto v1 = corridor_vals_next(f, val[lag], tau);
  int g1 = v1[2];
  int m1 = h1 + g1 + f1;
  if (m1 == 3) return stable_v(meth);
  if (m1 >= 1) return unstable_v(meth, tau + 1);  // laggard fires at tau, u at tau+1
  // Deep quiet tail: decide the tau+2 step by exact local evolution around u.
  int t = window_activation(rule, c, u, tau + 2, tau + 2);
  return t >= 0 ? unstable_v(meth, t) : stable_v(meth);
}

StabilityVerdict decide(const Rule& rule, const Configuration& c, Cell u) {
  if (rule.topology != c.grid.topology) throw GridMismatch("rule/configuration topology");
  require_inactive(c, u);
  switch (classify(rule)) {
    case RuleClass::Trivial:
      return decide_trivial(rule, c, u);
    case RuleClass::Topological: {
      bool tri = rule.topology == Topology::Triangular;
      if (rule.mask == mask_of(tri ? std::initializer_list<int>{2, 3}
                                   : std::initializer_list<int>{3, 4}))
        return decide_topological_majority(rule, c, u);
      if (rule.mask == mask_of({2, 3, 4})) return decide_topological_234(rule, c, u);
      return decide_topological_treedepth(rule, c, u);
    }
    case RuleClass::Algebraic:
      return rule.topology == Topology::Triangular ? decide_algebraic_12_tri(rule, c, u)
                                                   : decide_algebraic_sq(rule, c, u);
    case RuleClass::TuringUniversal:
    case RuleClass::FractalGrowing:
    case RuleClass::NonQuiescent:
      return oracle_stable(rule, c, u);
  }
  return oracle_stable(rule, c, u);
}

}  // namespace ftca
