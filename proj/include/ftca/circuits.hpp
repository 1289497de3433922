#pragma once
#include <map>
#include <string>
#include <vector>

#include "ftca/engine.hpp"

namespace ftca {

// Signal-machine gadgets on the square grid under rules 2 / 24: a stamp of
// initially active cells, west-edge input ports ignited by setting one cell
// active, and east-edge output ports probed for activation. Every gadget has
// one uniform in->out delay when its live inputs fire simultaneously.

struct GadgetPort {
  std::string name;
  bool is_input = false;
  int row = 0;  // signal row within the stamp; col 0 for inputs, width-1 for outputs
};

struct Gadget {
  std::string name;
  int width = 0, height = 0;
  std::vector<std::string> rows;  // '.' inactive, '#' active
  std::string truth;              // "wire", "dup", "and", "or", "xor"
  std::vector<GadgetPort> ports;
  int delay = 0;

  bool filled(int r, int c) const { return rows[size_t(r)][size_t(c)] == '#'; }
  std::vector<const GadgetPort*> inputs() const;
  std::vector<const GadgetPort*> outputs() const;
};

Gadget load_gadget(const std::string& path);
// Loads "<asset dir>/gadgets/<name>.txt"; the directory defaults to the
// build-time assets path and can be overridden with the FTCA_ASSETS
// environment variable.
Gadget stock_gadget(const std::string& name);
std::string asset_dir();

struct GadgetReport {
  bool ok = true;
  std::string detail;  // first failure, empty when ok
};

// Checks, under `rule`: the quiescent stamp is a fixed point with no cell at
// neighbor count 4; every input assignment produces the truth-table output
// bits; firing outputs activate exactly `delay` steps after ignition.
GadgetReport verify_gadget(const Gadget& g, const Rule& rule);

// Boolean netlists. Producers are primary inputs (listed in `inputs`) and
// non-OUTPUT gates; every producer is consumed exactly once, except FANOUT
// which is consumed exactly twice. Kinds: AND, OR, XOR (2 inputs), FANOUT,
// OUTPUT (1 input).
struct NetGate {
  int id = 0;
  std::string kind;
  std::vector<int> inputs;
};
struct Netlist {
  std::vector<NetGate> gates;
  std::vector<int> inputs;
};

// JSON: {"inputs":[ids...],"gates":[{"id":n,"kind":"AND","inputs":[a,b]},...]}
Netlist parse_netlist(const std::string& json_text);
std::string serialize_netlist(const Netlist& n);

// Reference evaluation; assignment maps every primary input to 0/1.
// Returns OUTPUT gate id -> bit. Throws BadNetlist / NetlistCycle.
std::map<int, int> evaluate_netlist(const Netlist& n, const std::map<int, int>& assignment);

struct CompiledCircuit {
  Configuration configuration;  // square torus, structure active, '1' inputs ignited
  std::map<int, Cell> input_ignition_cells;  // primary input id -> ignition cell
  std::map<int, Cell> probes;                // OUTPUT gate id -> probe cell
  std::map<int, int64_t> probe_times;        // step at which a firing probe activates
  int64_t time_budget = 0;                   // safe upper bound for simulation
  int crossings = 0;                         // wire swaps synthesized while lowering
};

// Lowers a netlist to a configuration of gadget stamps and delay-balanced
// wires. Wire crossings are planarized with fanout+xor diamonds. The dynamics
// under rules 2 and 24 are identical on the result.
CompiledCircuit compile(const Netlist& n, const std::map<int, int>& assignment);

// Runs a compiled circuit to its fixed point and reads the probes.
std::map<int, int> run_compiled(const CompiledCircuit& cc, const Rule& rule);

}  // namespace ftca
