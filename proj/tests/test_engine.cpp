#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ftca/engine.hpp"

using namespace ftca;

namespace {
Configuration sq(int n) { return Configuration::empty(Grid::square(n)); }
}  // namespace

TEST_CASE("quiescent configurations stay quiescent") {
  for (const char* name : {"1", "2", "34", "1234"}) {
    Rule r = parse_rule(Topology::Square, name);
    Configuration c = sq(6);
    CHECK(step(r, c).active_count() == 0);
  }
}

TEST_CASE("rule 4 activates a surrounded cell") {
  Rule r = parse_rule(Topology::Square, "4");
  Configuration c = sq(8);
  for (Cell v : {Cell{2, 3}, Cell{4, 3}, Cell{3, 2}, Cell{3, 4}}) c.set(v, 1);
  Configuration next = step(r, c);
  CHECK(next.at({3, 3}) == 1);
  CHECK(next.active_count() == 5);
}

TEST_CASE("rule 2 single seed is a fixed point") {
  Rule r = parse_rule(Topology::Square, "2");
  Configuration c = sq(8);
  c.set({4, 4}, 1);
  CHECK(step(r, c).state == c.state);
}

TEST_CASE("freezing monotonicity") {
  Rule r = parse_rule(Topology::Square, "12");
  Configuration c = random_configuration(Topology::Square, 16, 0.2, 5);
  Configuration next = step(r, c);
  for (size_t i = 0; i < c.state.size(); ++i) CHECK(next.state[i] >= c.state[i]);
}

TEST_CASE("run_to_fixed_point records activation times") {
  Rule r = parse_rule(Topology::Square, "1234");
  Configuration c = sq(9);
  c.set({4, 4}, 1);
  Trajectory tr = run_to_fixed_point(r, c);
  CHECK(tr.fixed_point.active_count() == 81);  // any active neighbor triggers: BFS flood
  CHECK(tr.activation_time[c.grid.idx({4, 4})] == 0);
  CHECK(tr.activation_time[c.grid.idx({4, 5})] == 1);
  CHECK(tr.activation_time[c.grid.idx({0, 0})] == 8);  // L1 distance on the torus
  CHECK(tr.steps_to_fixed_point == 8);
}

TEST_CASE("all-active input is fixed immediately") {
  Rule r = parse_rule(Topology::Triangular, "123");
  Configuration c = Configuration::empty(Grid::triangular(4));
  for (auto& s : c.state) s = 1;
  CHECK(run_to_fixed_point(r, c).steps_to_fixed_point == 0);
}

TEST_CASE("triangular rule 123 floods from any active cell") {
  Rule r = parse_rule(Topology::Triangular, "123");
  Configuration c = Configuration::empty(Grid::triangular(6));
  c.set({2, 7}, 1);
  Trajectory tr = run_to_fixed_point(r, c);
  CHECK(tr.fixed_point.active_count() == c.grid.size());
}

TEST_CASE("triangular rule 3 fixes within one step") {
  Rule r = parse_rule(Topology::Triangular, "3");
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Configuration c = random_configuration(Topology::Triangular, 6, 0.5, seed);
    CHECK(run_to_fixed_point(r, c).steps_to_fixed_point <= 1);
  }
}

TEST_CASE("steps to fixed point never exceeds the cell count") {
  for (const char* name : {"1", "12", "24", "1234"}) {
    Rule r = parse_rule(Topology::Square, name);
    Configuration c = random_configuration(Topology::Square, 10, 0.1, 3);
    Trajectory tr = run_to_fixed_point(r, c);
    CHECK(tr.steps_to_fixed_point <= c.grid.size());
    // Fixed point is indeed fixed.
    CHECK(step(r, tr.fixed_point).state == tr.fixed_point.state);
    // activation_time finite iff active at the fixed point.
    for (size_t i = 0; i < c.state.size(); ++i)
      CHECK((tr.activation_time[i] >= 0) == (tr.fixed_point.state[i] == 1));
  }
}

TEST_CASE("non-quiescent rules activate spontaneously") {
  Rule r = parse_rule(Topology::Square, "02");
  Configuration c = sq(4);
  Trajectory tr = run_to_fixed_point(r, c);
  CHECK(tr.fixed_point.active_count() == 16);
  CHECK(tr.steps_to_fixed_point == 1);
}

TEST_CASE("oracle matches the trajectory") {
  Rule r = parse_rule(Topology::Square, "12");
  Configuration c = random_configuration(Topology::Square, 12, 0.15, 11);
  Trajectory tr = run_to_fixed_point(r, c);
  for (int i = 0; i < c.grid.size(); ++i) {
    if (c.state[size_t(i)]) continue;
    StabilityVerdict v = oracle_stable(r, c, c.grid.cell(i));
    CHECK(v.stable == (tr.activation_time[size_t(i)] < 0));
    if (!v.stable) CHECK(*v.activation_time == tr.activation_time[size_t(i)]);
    CHECK(v.method == Method::Oracle);
  }
}

TEST_CASE("oracle rejects active query cells") {
  Rule r = parse_rule(Topology::Square, "2");
  Configuration c = sq(4);
  c.set({1, 1}, 1);
  CHECK_THROWS_AS(oracle_stable(r, c, {1, 1}), CellInitiallyActive);
}

TEST_CASE("grid mismatch is rejected") {
  Rule r = parse_rule(Topology::Triangular, "2");
  CHECK_THROWS_AS(step(r, sq(4)), GridMismatch);
}

TEST_CASE("dynamics commute with translation") {
  Rule r = parse_rule(Topology::Square, "24");
  Configuration c = random_configuration(Topology::Square, 10, 0.4, 17);
  Configuration shifted = Configuration::empty(c.grid);
  int dr = 3, dc = 7;
  for (int i = 0; i < c.grid.size(); ++i) {
    Cell u = c.grid.cell(i);
    shifted.set(c.grid.wrap(u.row + dr, u.col + dc), c.state[size_t(i)]);
  }
  Configuration a = run_to_fixed_point(r, c).fixed_point;
  Configuration b = run_to_fixed_point(r, shifted).fixed_point;
  for (int i = 0; i < c.grid.size(); ++i) {
    Cell u = c.grid.cell(i);
    CHECK(a.at(u) == b.at(c.grid.wrap(u.row + dr, u.col + dc)));
  }
}
