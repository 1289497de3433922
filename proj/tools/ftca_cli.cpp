// ftca: simulate freezing totalistic cellular automata, decide stability with
// the fast per-rule-class algorithms, crosscheck them against the exact
// oracle, compile Boolean netlists to rule-2/24 configurations, and benchmark.
//
// Exit codes: 0 success, 2 verdict mismatch, 3 parse/usage error,
// 4 gadget verification failure, 5 queried cell already active.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ftca/circuits.hpp"
#include "ftca/deciders.hpp"

namespace fs = std::filesystem;
using namespace ftca;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadHeader("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

Topology parse_grid_flag(const std::string& g) {
  if (g == "sq") return Topology::Square;
  if (g == "tri") return Topology::Triangular;
  throw BadHeader("--grid must be 'sq' or 'tri'");
}

Cell parse_cell_flag(const std::string& s) {
  int r, c;
  char comma;
  std::istringstream ss(s);
  if (!(ss >> r >> comma >> c) || comma != ',' || !ss.eof())
    throw BadHeader("--cell expects 'row,col'");
  return {r, c};
}

std::string render_pbm(const Configuration& c) {
  std::ostringstream out;
  out << "P1\n" << c.grid.cols << ' ' << c.grid.rows << '\n';
  for (int r = 0; r < c.grid.rows; ++r) {
    for (int col = 0; col < c.grid.cols; ++col) {
      if (col) out << ' ';
      out << int(c.at({r, col}));
    }
    out << '\n';
  }
  return out.str();
}

std::string render_text(const Configuration& c) {
  std::ostringstream out;
  for (int r = 0; r < c.grid.rows; ++r) {
    for (int col = 0; col < c.grid.cols; ++col) out << (c.at({r, col}) ? '#' : '.');
    out << '\n';
  }
  return out.str();
}

void render_to(const Configuration& c, const std::string& dir, int frame) {
  fs::create_directories(dir);
  char name[32];
  std::snprintf(name, sizeof name, "frame_%05d", frame);
  if (c.grid.topology == Topology::Square) {
    write_file(dir + "/" + name + ".pbm", render_pbm(c));
  } else {
    write_file(dir + "/" + name + ".txt", render_text(c));
    write_file(dir + "/" + name + ".pbm", render_pbm(c));
  }
}

void print_verdict(const char* label, const StabilityVerdict& v) {
  std::cout << label << "=" << (v.stable ? "stable" : "not-stable")
            << " method=" << method_name(v.method);
  if (v.activation_time) std::cout << " activation_time=" << *v.activation_time;
  std::cout << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs the oracle once, then the fast decider for every initially inactive
// cell. Returns false (and prints the configuration) on the first mismatch.
bool crosscheck_one(const Rule& rule, const Configuration& c) {
  Trajectory tr = run_to_fixed_point(rule, c);
  for (int i = 0; i < c.grid.size(); ++i) {
    if (c.state[size_t(i)]) continue;
    Cell u = c.grid.cell(i);
    StabilityVerdict v = decide(rule, c, u);
    int32_t at = tr.activation_time[size_t(i)];
    bool ok = v.stable == (at < 0) && (!v.activation_time || *v.activation_time == at);
    if (ok) continue;
    std::cout << "mismatch_cell=" << u.row << ',' << u.col << " oracle_time=" << at << ' ';
    print_verdict("fast", v);
    std::cout << "configuration:\n" << serialize(c);
    return false;
  }
  return true;
}

int cmd_verify_gadgets(const std::string& rule_names) {
  std::vector<std::string> rules;
  if (rule_names == "both")
    rules = {"2", "24"};
  else
    rules = {rule_names};
  bool all_ok = true;
  for (const auto& rn : rules) {
    Rule rule = parse_rule(Topology::Square, rn);
    for (const char* name : {"wire", "turn", "dup", "and", "or", "xor"}) {
      GadgetReport rep = verify_gadget(stock_gadget(name), rule);
      std::cout << "gadget=" << name << " rule=" << rn << " ok=" << (rep.ok ? 1 : 0);
      if (!rep.ok) std::cout << " detail=\"" << rep.detail << '"';
      std::cout << '\n';
      all_ok = all_ok && rep.ok;
    }
  }
  return all_ok ? 0 : 4;
}

int cmd_compile(const std::string& netlist_path, const std::string& bits,
                const std::string& rule_name, const std::string& out_dir, bool simulate) {
  Netlist n = parse_netlist(read_file(netlist_path));
  if (bits.size() != n.inputs.size())
    throw BadNetlist("--inputs needs one bit per primary input (" +
                     std::to_string(n.inputs.size()) + ")");
  std::map<int, int> assignment;
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw BadNetlist("--inputs must be a 0/1 string");
    assignment[n.inputs[i]] = bits[i] - '0';
  }
  CompiledCircuit cc = compile(n, assignment);
  std::cout << "side=" << cc.configuration.grid.rows << " crossings=" << cc.crossings
            << " time_budget=" << cc.time_budget << '\n';
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(out_dir + "/compiled.txt", serialize(cc.configuration));
    std::ostringstream probes;
    for (auto& [gate, cell] : cc.probes)
      probes << "probe gate=" << gate << " row=" << cell.row << " col=" << cell.col
             << " time=" << cc.probe_times.at(gate) << '\n';
    write_file(out_dir + "/probes.txt", probes.str());
    std::cout << "wrote=" << out_dir << "/compiled.txt\n";
  }
  if (!simulate) return 0;
  Rule rule = parse_rule(Topology::Square, rule_name);
  std::map<int, int> got = run_compiled(cc, rule);
  std::map<int, int> want = evaluate_netlist(n, assignment);
  bool ok = true;
  for (auto& [gate, bit] : want) {
    std::cout << "output gate=" << gate << " expected=" << bit << " probed=" << got.at(gate)
              << '\n';
    ok = ok && got.at(gate) == bit;
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"freezing totalistic cellular automata toolkit"};
  app.require_subcommand(1);

  std::string grid_flag = "sq", rule_name, input_path, out_dir, method = "fast";
  std::string cell_spec, netlist_path, input_bits;
  int steps = -1, render_every = 0, trials = 100;
  bool to_fixed_point = false, simulate_circuit = false;
  std::vector<int> sizes{8};
  std::vector<double> densities{0.3};
  double density = 0.3;
  uint64_t seed = 1;

  auto* sim = app.add_subcommand("simulate", "run the dynamics");
  sim->add_option("--grid", grid_flag, "sq or tri");
  sim->add_option("--rule", rule_name)->required();
  sim->add_option("--input", input_path)->required();
  sim->add_option("--steps", steps);
  sim->add_flag("--to-fixed-point", to_fixed_point);
  sim->add_option("--render-every", render_every);
  sim->add_option("--out", out_dir);

  auto* dec = app.add_subcommand("decide", "stability of one cell");
  dec->add_option("--grid", grid_flag);
  dec->add_option("--rule", rule_name)->required();
  dec->add_option("--input", input_path)->required();
  dec->add_option("--cell", cell_spec)->required();
  dec->add_option("--method", method)->check(CLI::IsMember({"fast", "oracle", "both"}));

  auto* cross = app.add_subcommand("crosscheck", "fast decider vs oracle on random inputs");
  cross->add_option("--grid", grid_flag);
  cross->add_option("--rule", rule_name)->required();
  cross->add_option("--trials", trials);
  cross->add_option("--sizes", sizes)->delimiter(',');
  cross->add_option("--densities", densities)->delimiter(',');
  cross->add_option("--seed", seed);

  auto* circ = app.add_subcommand("circuits", "gadget and netlist tooling");
  circ->require_subcommand(1);
  auto* vg = circ->add_subcommand("verify-gadgets", "check the stock gadget set");
  std::string vg_rule = "both";
  vg->add_option("--rule", vg_rule, "2, 24, both, or any square rule");
  auto* comp = circ->add_subcommand("compile", "netlist to configuration");
  comp->add_option("--netlist", netlist_path)->required();
  comp->add_option("--inputs", input_bits)->required();
  comp->add_option("--rule", rule_name)->default_val("24");
  comp->add_option("--out", out_dir);
  comp->add_flag("--simulate", simulate_circuit);

  auto* bench = app.add_subcommand("bench", "oracle vs fast decider wall times");
  bench->add_option("--grid", grid_flag);
  bench->add_option("--rule", rule_name)->required();
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--density", density);
  bench->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    Topology topo = parse_grid_flag(grid_flag);

    if (*sim) {
      Rule rule = parse_rule(topo, rule_name);
      Configuration c = parse_configuration(read_file(input_path));
      if (c.grid.topology != topo) throw GridMismatch("--grid disagrees with the input header");
      if (to_fixed_point) {
        Trajectory tr = run_to_fixed_point(rule, c);
        std::cout << "steps_to_fix=" << tr.steps_to_fixed_point
                  << " active=" << tr.fixed_point.active_count() << '\n';
        if (!out_dir.empty()) render_to(tr.fixed_point, out_dir, tr.steps_to_fixed_point);
      } else {
        if (steps < 0) throw BadHeader("need --steps or --to-fixed-point");
        if (render_every > 0 && !out_dir.empty()) render_to(c, out_dir, 0);
        for (int t = 1; t <= steps; ++t) {
          c = step(rule, c);
          if (render_every > 0 && !out_dir.empty() && t % render_every == 0) render_to(c, out_dir, t);
        }
        std::cout << "steps=" << steps << " active=" << c.active_count() << '\n';
      }
      return 0;
    }

    if (*dec) {
      Rule rule = parse_rule(topo, rule_name);
      Configuration c = parse_configuration(read_file(input_path));
      Cell u = c.grid.wrap(parse_cell_flag(cell_spec).row, parse_cell_flag(cell_spec).col);
      if (method == "oracle") {
        print_verdict("verdict", oracle_stable(rule, c, u));
      } else if (method == "fast") {
        print_verdict("verdict", decide(rule, c, u));
      } else {
        StabilityVerdict f = decide(rule, c, u);
        StabilityVerdict o = oracle_stable(rule, c, u);
        print_verdict("fast", f);
        print_verdict("oracle", o);
        bool agree =
            f.stable == o.stable && (!f.activation_time || f.activation_time == o.activation_time);
        std::cout << "agree=" << (agree ? 1 : 0) << '\n';
        if (!agree) return 2;
      }
      return 0;
    }

    if (*cross) {
      Rule rule = parse_rule(topo, rule_name);
      auto t0 = std::chrono::steady_clock::now();
      for (int trial = 0; trial < trials; ++trial) {
        int n = sizes[size_t(trial) % sizes.size()];
        double d = densities[(size_t(trial) / sizes.size()) % densities.size()];
        Configuration c = random_configuration(topo, n, d, seed + uint64_t(trial));
        if (!crosscheck_one(rule, c)) {
          std::cout << "trial=" << trial << " result=mismatch\n";
          return 2;
        }
      }
      std::cout << "rule=" << rule.name << " trials=" << trials << " mismatches=0"
                << " seconds=" << seconds_since(t0) << '\n';
      return 0;
    }

    if (*vg) return cmd_verify_gadgets(vg_rule);
    if (*comp)
      return cmd_compile(netlist_path, input_bits, rule_name, out_dir, simulate_circuit);

    if (*bench) {
      Rule rule = parse_rule(topo, rule_name);
      for (int n : sizes) {
        Configuration c = random_configuration(topo, n, density, seed);
        auto t0 = std::chrono::steady_clock::now();
        Trajectory tr = run_to_fixed_point(rule, c);
        double oracle_s = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        int64_t stable = 0;
        for (int i = 0; i < c.grid.size(); ++i)
          if (!c.state[size_t(i)] && decide(rule, c, c.grid.cell(i)).stable) ++stable;
        double all_s = seconds_since(t0);
        Cell first{};
        for (int i = 0; i < c.grid.size(); ++i)
          if (!c.state[size_t(i)]) {
            first = c.grid.cell(i);
            break;
          }
        t0 = std::chrono::steady_clock::now();
        StabilityVerdict one = decide(rule, c, first);
        double one_s = seconds_since(t0);
        std::cout << "n=" << n << " oracle_seconds=" << oracle_s
                  << " decide_all_seconds=" << all_s << " decide_one_seconds=" << one_s
                  << " stable_cells=" << stable << " steps_to_fix=" << tr.steps_to_fixed_point
                  << " one_stable=" << one.stable << '\n';
      }
      return 0;
    }
  } catch (const CellInitiallyActive& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const GadgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
