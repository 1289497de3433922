// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ftca/circuits.hpp"
#include "ftca/deciders.hpp"
#include "ftca/engine.hpp"
#include "ftca/graphkit.hpp"

using namespace ftca;

namespace {

int failures = 0;
std::string detail;

void fail(std::string why) {
  if (detail.empty()) detail = std::move(why);
}

void criterion(int num, const char* what, const std::function<void()>& body) {
  detail.clear();
  auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (detail.empty()) {
    std::printf("criterion %d  %-42s PASS  (%.1fs)\n", num, what, secs);
  } else {
    std::printf("criterion %d  %-42s FAIL  (%.1fs)  %s\n", num, what, secs, detail.c_str());
    ++failures;
  }
}

Configuration sample(Topology t, int n, double d, uint64_t seed) {
  return random_configuration(t, n, d, seed);
}

// Fast-decider verdicts vs the simulation oracle over every initially
// inactive cell of `configs` seeded samples.
void equivalence_sweep(Topology t, const char* rule_name, int configs,
                       const std::vector<int>& sizes, const std::vector<double>& densities,
                       bool check_times) {
  Rule rule = parse_rule(t, rule_name);
  for (int s = 0; s < configs; ++s) {
    int n = sizes[size_t(s) % sizes.size()];
    double d = densities[(size_t(s) / sizes.size()) % densities.size()];
    Configuration c = sample(t, n, d, uint64_t(s) * 1000003 + uint64_t(rule.mask));
    Trajectory tr = run_to_fixed_point(rule, c);
    std::vector<Cell> actives;
    for (int i = 0; i < c.grid.size(); ++i)
      if (c.state[size_t(i)]) actives.push_back(c.grid.cell(i));
    std::vector<int32_t> tau;
    if (!actives.empty()) tau = distance_field(c.grid, actives);
    for (int i = 0; i < c.grid.size(); ++i) {
      if (c.state[size_t(i)]) continue;
      Cell u = c.grid.cell(i);
      StabilityVerdict v = decide(rule, c, u);
      bool sim_stable = tr.fixed_point.state[size_t(i)] == 0;
      if (v.stable != sim_stable)
        return fail(std::string(rule_name) + " n=" + std::to_string(n) + " seed=" +
                    std::to_string(s) + " cell (" + std::to_string(u.row) + "," +
                    std::to_string(u.col) + "): decider " + (v.stable ? "stable" : "unstable") +
                    ", oracle disagrees");
      if (!check_times || v.stable || !v.activation_time) continue;
      int64_t got = *v.activation_time, want = tau[size_t(i)];
      int64_t slack = std::string(rule_name) == "124" ? 2 : 0;
      if (got < want || got > want + slack)
        return fail(std::string(rule_name) + " seed=" + std::to_string(s) + ": activation " +
                    std::to_string(got) + " outside [tau, tau+" + std::to_string(slack) +
                    "], tau=" + std::to_string(want));
    }
  }
}

Configuration translated(const Configuration& c, int dr, int dc) {
  Configuration out = Configuration::empty(c.grid);
  for (int i = 0; i < c.grid.size(); ++i) {
    Cell u = c.grid.cell(i);
    out.set(c.grid.wrap(u.row + dr, u.col + dc), c.at(u));
  }
  return out;
}

std::map<int, int> bits_for(const Netlist& n, unsigned combo) {
  std::map<int, int> a;
  for (size_t i = 0; i < n.inputs.size(); ++i) a[n.inputs[i]] = (combo >> i) & 1;
  return a;
}

const char* kAndNet = R"({"inputs":[1,2],"gates":[
  {"id":10,"kind":"AND","inputs":[1,2]},
  {"id":20,"kind":"OUTPUT","inputs":[10]}]})";

const char* kOrXorNet = R"({"inputs":[1,2,3],"gates":[
  {"id":10,"kind":"OR","inputs":[1,2]},
  {"id":11,"kind":"XOR","inputs":[10,3]},
  {"id":20,"kind":"OUTPUT","inputs":[11]}]})";

const char* kMaj3Net = R"({"inputs":[1,2,3],"gates":[
  {"id":10,"kind":"FANOUT","inputs":[1]},
  {"id":11,"kind":"FANOUT","inputs":[2]},
  {"id":12,"kind":"AND","inputs":[10,11]},
  {"id":13,"kind":"XOR","inputs":[10,11]},
  {"id":14,"kind":"AND","inputs":[13,3]},
  {"id":15,"kind":"OR","inputs":[12,14]},
  {"id":20,"kind":"OUTPUT","inputs":[15]}]})";

}  // namespace

int main() {
  criterion(1, "oracle equivalence, topological rules", [] {
    std::vector<double> dens{0.1, 0.3, 0.5, 0.8};
    equivalence_sweep(Topology::Triangular, "23", 200, {8, 16}, dens, false);
    equivalence_sweep(Topology::Triangular, "2", 200, {8, 16}, dens, false);
    equivalence_sweep(Topology::Square, "34", 200, {6, 10, 16}, dens, false);
    equivalence_sweep(Topology::Square, "3", 200, {6, 10, 16}, dens, false);
    equivalence_sweep(Topology::Square, "234", 200, {6, 10, 16}, dens, false);
  });

  criterion(2, "oracle equivalence, algebraic rules", [] {
    std::vector<double> dens{0.02, 0.05, 0.1, 0.5};
    equivalence_sweep(Topology::Triangular, "12", 300, {16}, dens, true);
    equivalence_sweep(Topology::Square, "12", 300, {24}, dens, true);
    equivalence_sweep(Topology::Square, "123", 300, {24}, dens, true);
    equivalence_sweep(Topology::Square, "124", 300, {24}, dens, true);
  });

  criterion(3, "trivial-rule facts", [] {
    Rule all_sums = parse_rule(Topology::Triangular, "123");
    Rule full = parse_rule(Topology::Triangular, "3");
    for (int s = 0; s < 100; ++s) {
      Configuration c = sample(Topology::Triangular, 8, 0.02 + 0.09 * (s % 9), 7000 + s);
      if (c.active_count() > 0) {
        Trajectory tr = run_to_fixed_point(all_sums, c);
        if (tr.fixed_point.active_count() != c.grid.size())
          return fail("rule 123 left a stable cell, seed " + std::to_string(s));
      }
      Trajectory tf = run_to_fixed_point(full, c);
      if (tf.steps_to_fixed_point > 1)
        return fail("rule 3 took " + std::to_string(tf.steps_to_fixed_point) + " steps");
    }
    for (Topology t : {Topology::Square, Topology::Triangular}) {
      Rule phi = parse_rule(t, "phi");
      for (int s = 0; s < 20; ++s) {
        Trajectory tr = run_to_fixed_point(phi, sample(t, 10, 0.4, 7100 + s));
        if (tr.steps_to_fixed_point != 0) return fail("phi not a 0-step fixed point");
      }
    }
  });

  criterion(4, "freezing invariants", [] {
    struct Case { Topology t; const char* r; int n; };
    std::vector<Case> cases{{Topology::Triangular, "2", 8},   {Topology::Triangular, "23", 8},
                            {Topology::Triangular, "123", 8}, {Topology::Triangular, "12", 8},
                            {Topology::Square, "3", 12},      {Topology::Square, "34", 12},
                            {Topology::Square, "234", 12},    {Topology::Square, "12", 12},
                            {Topology::Square, "124", 12}};
    for (auto& cs : cases) {
      Rule rule = parse_rule(cs.t, cs.r);
      for (int s = 0; s < 12; ++s) {
        Configuration c = sample(cs.t, cs.n, 0.1 + 0.07 * (s % 10), 8000 + s);
        Configuration cur = c;
        for (int steps = 0;; ++steps) {
          if (steps > c.grid.size()) return fail("no fixed point within cell count");
          Configuration next = step(rule, cur);
          for (int i = 0; i < c.grid.size(); ++i)
            if (next.state[size_t(i)] < cur.state[size_t(i)])
              return fail("active cell deactivated");
          if (next.state == cur.state) break;
          cur = std::move(next);
        }
        int dr = 2 * (1 + s % 3), dc = 2 * (s % 5);
        Configuration a = step(rule, translated(c, dr, dc));
        Configuration b = translated(step(rule, c), dr, dc);
        if (a.state != b.state) return fail("step does not commute with translation");
      }
    }
  });

  criterion(5, "padded-configuration equivalence", [] {
    Rule rule = parse_rule(Topology::Square, "234");
    for (int s = 0; s < 50; ++s) {
      int n = 4 + s % 3;
      Configuration x = sample(Topology::Square, n, 0.2 + 0.2 * (s % 3), 9000 + s);
      Trajectory tx = run_to_fixed_point(rule, x);
      Configuration dx = build_padded(x);
      Trajectory td = run_to_fixed_point(rule, dx);
      for (int i = 0; i < x.grid.size(); ++i) {
        if (x.state[size_t(i)]) continue;
        Cell u = x.grid.cell(i);
        bool base_stable = tx.fixed_point.at(u) == 0;
        bool pad_stable = td.fixed_point.at(padded_center_image(n, u)) == 0;
        if (base_stable != pad_stable)
          return fail("seed " + std::to_string(s) + " cell (" + std::to_string(u.row) + "," +
                      std::to_string(u.col) + "): base/padded stability differs");
      }
    }
  });

  criterion(6, "gadget truth tables", [] {
    for (const char* name : {"wire", "turn", "dup", "and", "or", "xor"}) {
      Gadget g = stock_gadget(name);
      for (const char* rn : {"2", "24"}) {
        GadgetReport rep = verify_gadget(g, parse_rule(Topology::Square, rn));
        if (!rep.ok) return fail(std::string(name) + " under rule " + rn + ": " + rep.detail);
      }
      if (verify_gadget(g, parse_rule(Topology::Square, "02")).ok)
        return fail(std::string(name) + " unexpectedly verifies under rule 02");
    }
  });

  criterion(7, "end-to-end circuit reduction", [] {
    Rule rule2 = parse_rule(Topology::Square, "2");
    bool crossing_seen = false;
    for (const char* text : {kAndNet, kOrXorNet, kMaj3Net}) {
      Netlist n = parse_netlist(text);
      for (unsigned combo = 0; combo < (1u << n.inputs.size()); ++combo) {
        auto bits = bits_for(n, combo);
        CompiledCircuit cc = compile(n, bits);
        crossing_seen = crossing_seen || cc.crossings > 0;
        auto want = evaluate_netlist(n, bits);
        auto got = run_compiled(cc, rule2);
        for (auto& [gate, bit] : want)
          if (got.at(gate) != bit)
            return fail("combo " + std::to_string(combo) + " gate " + std::to_string(gate) +
                        ": probe " + std::to_string(got.at(gate)) + ", evaluator " +
                        std::to_string(bit));
      }
    }
    if (!crossing_seen) return fail("no netlist forced a wire crossing");
  });

  criterion(8, "3-core decider vs simulation, n=512", [] {
    Rule rule = parse_rule(Topology::Square, "234");
    Configuration c = sample(Topology::Square, 512, 0.3, 424242);
    auto t0 = std::chrono::steady_clock::now();
    InducedGraph ig = inactive_graph(c);
    std::vector<uint8_t> core = k_core(ig, 3);
    auto t1 = std::chrono::steady_clock::now();
    Trajectory tr = run_to_fixed_point(rule, c);
    auto t2 = std::chrono::steady_clock::now();
    for (int i = 0; i < c.grid.size(); ++i)
      if (!c.state[size_t(i)] && bool(core[size_t(i)]) != (tr.fixed_point.state[size_t(i)] == 0))
        return fail("3-core and simulation disagree at index " + std::to_string(i));
    double dec = std::chrono::duration<double>(t1 - t0).count();
    double sim = std::chrono::duration<double>(t2 - t1).count();
    if (dec >= sim) return fail("decider not faster: " + std::to_string(dec) + "s vs " +
                                std::to_string(sim) + "s");
    std::printf("             (3-core %.3fs, simulation %.3fs, ratio %.1fx)\n", dec, sim,
                sim / dec);
  });

  criterion(9, "fractal growth self-consistency", [] {
    for (Topology t : {Topology::Square, Topology::Triangular}) {
      Rule rule = parse_rule(t, "1");
      Grid g = t == Topology::Square ? Grid::square(80) : Grid::triangular(64);
      Configuration seed = Configuration::empty(g);
      seed.set({g.rows / 2, g.cols / 2}, 1);
      std::vector<int64_t> counts;
      Configuration cur = seed;
      for (int s = 1; s <= 32; ++s) {
        cur = step(rule, cur);
        if (s == 8 || s == 16 || s == 32) counts.push_back(cur.active_count());
      }
      if (!(counts[0] < counts[1] && counts[1] < counts[2])) return fail("growth not increasing");
      for (int k = 0; k < 3; ++k) {
        Configuration redo = seed;
        for (int s = 0; s < (8 << k); ++s) redo = step(rule, redo);
        if (redo.active_count() != counts[size_t(k)])
          return fail("re-simulation count mismatch at step " + std::to_string(8 << k));
      }
    }
  });

  return failures == 0 ? 0 : 1;
}
