#include "ftca/circuits.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ftca {

std::vector<const GadgetPort*> Gadget::inputs() const {
  std::vector<const GadgetPort*> v;
  for (auto& p : ports)
    if (p.is_input) v.push_back(&p);
  return v;
}
std::vector<const GadgetPort*> Gadget::outputs() const {
  std::vector<const GadgetPort*> v;
  for (auto& p : ports)
    if (!p.is_input) v.push_back(&p);
  return v;
}

std::string asset_dir() {
  if (const char* env = std::getenv("FTCA_ASSETS")) return env;
  return FTCA_ASSET_DIR;
}

Gadget load_gadget(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadGadget("cannot open " + path);
  Gadget g;
  std::string line;
  bool in_rows = false;
  while (std::getline(in, line)) {
    if (in_rows) {
      if (int(line.size()) != g.width) throw BadGadget("row width mismatch in " + path);
      for (char ch : line)
        if (ch != '.' && ch != '#') throw BadGadget(std::string("bad cell '") + ch + "' in " + path);
      g.rows.push_back(line);
      continue;
    }
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "gadget") {
      ls >> g.name;
    } else if (key == "size") {
      ls >> g.width >> g.height;
    } else if (key == "truth") {
      ls >> g.truth;
    } else if (key == "port") {
      GadgetPort p;
      std::string dir;
      ls >> dir >> p.name >> p.row;
      p.is_input = dir == "in";
      if (!ls || (dir != "in" && dir != "out")) throw BadGadget("bad port line in " + path);
      g.ports.push_back(p);
    } else if (key == "delay") {
      ls >> g.delay;
    } else if (key == "rows") {
      in_rows = true;
    } else if (!key.empty()) {
      throw BadGadget("unknown key '" + key + "' in " + path);
    }
  }
  if (g.width <= 0 || g.height <= 0 || int(g.rows.size()) != g.height)
    throw BadGadget("bad geometry in " + path);
  if (g.ports.empty() || g.truth.empty()) throw BadGadget("missing ports or truth in " + path);
  return g;
}

Gadget stock_gadget(const std::string& name) {
  return load_gadget(asset_dir() + "/gadgets/" + name + ".txt");
}

namespace {

int truth_eval(const std::string& truth, const std::vector<int>& in, size_t out_index) {
  if (truth == "and") return in.at(0) & in.at(1);
  if (truth == "or") return in.at(0) | in.at(1);
  if (truth == "xor") return in.at(0) ^ in.at(1);
  if (truth == "wire" || truth == "dup") return in.at(0);
  (void)out_index;
  throw BadGadget("unknown truth " + truth);
}

}  // namespace

GadgetReport verify_gadget(const Gadget& g, const Rule& rule) {
  const int m = 8;
  int side = std::max(g.width, g.height) + 2 * m;
  Grid grid = Grid::square(side);
  Configuration base = Configuration::empty(grid);
  for (int r = 0; r < g.height; ++r)
    for (int c = 0; c < g.width; ++c)
      if (g.filled(r, c)) base.set({r + m, c + m}, 1);

  auto fail = [&](const std::string& msg) { return GadgetReport{false, g.name + ": " + msg}; };

  // Static check: no inactive cell may see four active neighbors, so rules 2
  // and 24 cannot disagree on the quiescent stamp.
  std::array<Cell, 4> nb;
  for (int i = 0; i < grid.size(); ++i) {
    if (base.state[i]) continue;
    grid.neighbors(grid.cell(i), nb);
    int sum = 0;
    for (int k = 0; k < 4; ++k) sum += base.at(nb[k]);
    if (sum >= 4) return fail("quiescent stamp has a cell with 4 active neighbors");
  }

  // Quiescence: the unfired stamp must be a fixed point.
  {
    Trajectory tr = run_to_fixed_point(rule, base);
    if (tr.steps_to_fixed_point != 0) return fail("stamp is not quiescent under " + rule.name);
  }

  auto ins = g.inputs();
  auto outs = g.outputs();
  for (unsigned combo = 0; combo < (1u << ins.size()); ++combo) {
    Configuration c = base;
    std::vector<int> bits(ins.size());
    for (size_t i = 0; i < ins.size(); ++i) {
      bits[i] = (combo >> i) & 1;
      if (bits[i]) c.set({ins[i]->row + m, m}, 1);
    }
    Trajectory tr = run_to_fixed_point(rule, c);
    for (size_t oi = 0; oi < outs.size(); ++oi) {
      Cell probe{outs[oi]->row + m, g.width - 1 + m};
      int want = truth_eval(g.truth, bits, oi);
      int32_t at = tr.activation_time[grid.idx(probe)];
      if (want && at != g.delay)
        return fail("inputs " + std::to_string(combo) + " out " + outs[oi]->name +
                    ": expected activation at " + std::to_string(g.delay) + ", got " +
                    std::to_string(at));
      if (!want && at >= 0)
        return fail("inputs " + std::to_string(combo) + " out " + outs[oi]->name +
                    ": unexpected activation at " + std::to_string(at));
    }
  }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Netlists
// ---------------------------------------------------------------------------

Netlist parse_netlist(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw BadNetlist(e.what());
  }
  Netlist n;
  try {
    for (auto& id : j.at("inputs")) n.inputs.push_back(id.get<int>());
    for (auto& jg : j.at("gates")) {
      NetGate ng;
      ng.id = jg.at("id").get<int>();
      ng.kind = jg.at("kind").get<std::string>();
      for (auto& i : jg.at("inputs")) ng.inputs.push_back(i.get<int>());
      n.gates.push_back(ng);
    }
  } catch (const nlohmann::json::exception& e) {
    throw BadNetlist(e.what());
  }
  return n;
}

std::string serialize_netlist(const Netlist& n) {
  nlohmann::json j;
  j["inputs"] = n.inputs;
  j["gates"] = nlohmann::json::array();
  for (auto& g : n.gates)
    j["gates"].push_back({{"id", g.id}, {"kind", g.kind}, {"inputs", g.inputs}});
  return j.dump(2);
}

namespace {

// Checks ids, kinds, arities and consumer counts; returns the gate indices in
// a topological order. Throws BadNetlist / NetlistCycle.
std::vector<int> validate_netlist(const Netlist& n) {
  std::set<int> producers;
  for (int i : n.inputs)
    if (!producers.insert(i).second) throw BadNetlist("duplicate input id " + std::to_string(i));
  if (n.inputs.empty()) throw BadNetlist("no inputs");
  std::map<int, const NetGate*> by_id;
  for (auto& g : n.gates) {
    if (!producers.insert(g.id).second && g.kind != "OUTPUT")
      throw BadNetlist("duplicate id " + std::to_string(g.id));
    by_id[g.id] = &g;
    size_t want = (g.kind == "AND" || g.kind == "OR" || g.kind == "XOR") ? 2
                  : (g.kind == "FANOUT" || g.kind == "OUTPUT")           ? 1
                                                                         : 0;
    if (want == 0) throw BadNetlist("unknown kind " + g.kind);
    if (g.inputs.size() != want)
      throw BadNetlist(g.kind + " " + std::to_string(g.id) + " has " +
                       std::to_string(g.inputs.size()) + " inputs");
  }
  // Consumer counts.
  std::map<int, int> consumed;
  for (auto& g : n.gates)
    for (int i : g.inputs) {
      if (!producers.count(i) || (by_id.count(i) && by_id[i]->kind == "OUTPUT"))
        throw BadNetlist("gate " + std::to_string(g.id) + " reads unknown id " + std::to_string(i));
      ++consumed[i];
    }
  bool any_output = false;
  for (int i : n.inputs)
    if (consumed[i] != 1) throw BadNetlist("input " + std::to_string(i) + " must be read once");
  for (auto& g : n.gates) {
    if (g.kind == "OUTPUT") {
      any_output = true;
      continue;
    }
    int want = g.kind == "FANOUT" ? 2 : 1;
    if (consumed[g.id] != want)
      throw BadNetlist(g.kind + " " + std::to_string(g.id) + " consumed " +
                       std::to_string(consumed[g.id]) + " times, expected " + std::to_string(want));
  }
  if (!any_output) throw BadNetlist("no OUTPUT gate");
  // Kahn order by id.
  std::map<int, int> missing;
  std::map<int, std::vector<int>> dependents;  // producer id -> gate indices
  std::set<int> ready_set;
  for (size_t gi = 0; gi < n.gates.size(); ++gi) {
    const auto& g = n.gates[gi];
    int miss = 0;
    for (int i : g.inputs)
      if (by_id.count(i)) {
        ++miss;
        dependents[i].push_back(int(gi));
      }
    missing[int(gi)] = miss;
    if (miss == 0) ready_set.insert(int(gi));
  }
  std::vector<int> order;
  std::set<int> done_ids;
  while (!ready_set.empty()) {
    int gi = *ready_set.begin();
    ready_set.erase(ready_set.begin());
    order.push_back(gi);
    const auto& g = n.gates[size_t(gi)];
    if (g.kind != "OUTPUT")
      for (int di : dependents[g.id])
        if (--missing[di] == 0) ready_set.insert(di);
  }
  if (order.size() != n.gates.size()) throw NetlistCycle("unschedulable gates remain");
  return order;
}

}  // namespace

std::map<int, int> evaluate_netlist(const Netlist& n, const std::map<int, int>& assignment) {
  auto order = validate_netlist(n);
  std::map<int, int> value;
  for (int i : n.inputs) {
    auto it = assignment.find(i);
    if (it == assignment.end()) throw BadNetlist("missing assignment for input " + std::to_string(i));
    value[i] = it->second ? 1 : 0;
  }
  std::map<int, int> out;
  for (int gi : order) {
    const auto& g = n.gates[size_t(gi)];
    if (g.kind == "OUTPUT") {
      out[g.id] = value.at(g.inputs[0]);
    } else if (g.kind == "FANOUT") {
      value[g.id] = value.at(g.inputs[0]);
    } else {
      int a = value.at(g.inputs[0]), b = value.at(g.inputs[1]);
      value[g.id] = g.kind == "AND" ? (a & b) : g.kind == "OR" ? (a | b) : (a ^ b);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compiler
// ---------------------------------------------------------------------------

namespace {

// Geometry of the lowered layout (rows grow downward; the signal row of a wire
// is the empty row directly below its two track rows).
constexpr int kPitch = 60;   // vertical distance between lane signal rows
constexpr int kTop = 44;     // signal row of lane 0
constexpr int kLead = 6;     // straight run before/after features
constexpr int kRun = 6;      // straight run between the halves of a zigzag
constexpr int kMargin = 16;  // dead border around the layout
constexpr int kTileW = 28;
constexpr int kTileDelay = 40;

struct Painter {
  std::set<std::pair<int, int>> cells;
  void cell(int r, int c) { cells.insert({r, c}); }
  // Track rows r-2, r-1 over columns [x0, x1]; signals travel row r beneath.
  void hwire(int x0, int x1, int r) {
    for (int x = x0; x <= x1; ++x) {
      cell(r - 2, x);
      cell(r - 1, x);
    }
  }
  // Send the signal from row r down to row rp >= r+5. The incoming track ends
  // at column e; the outgoing track continues from e+2 at the lower row.
  // Besides the turning column, the stamp carries wake blockers: a moving
  // signal drags a diagonal wake of spurious activations behind it, and each
  // blocker raises the wake front's neighbor count to 3 exactly where it would
  // otherwise keep spreading.
  int down_jog(int e, int r, int rp) {
    assert(rp >= r + 5);
    for (int y = r; y <= rp - 1; ++y) {
      cell(y, e + 2);
      cell(y, e + 3);
    }
    cell(rp + 1, e + 1);  // lets the signal turn east under the column
    cell(rp + 2, e + 3);
    cell(rp - 3, e + 4);  // corner blockers: freeze the inner corner at count 3
    cell(rp - 4, e + 5);
    cell(r + 3, e - 1);  // stops the wake west of the column
    return e + 2;
  }
  // Send the signal from row r up to row rp <= r-5. The incoming track ends at
  // column f; the outgoing track continues from f+4 at the upper row. Wake
  // blockers as in down_jog: a staircase over the incoming track and a
  // triangle east of the exit turn.
  int up_jog(int f, int r, int rp) {
    assert(rp <= r - 5);
    cell(r, f + 2);  // detached feet at the signal row; the two-row gap above
    cell(r, f + 3);  // them is where the incoming track rows pass
    for (int y = rp + 1; y <= r - 3; ++y) {
      cell(y, f + 2);
      cell(y, f + 3);
    }
    cell(rp - 1, f + 1);  // top helper
    cell(r - 3, f - 2);   // staircase over the incoming track
    cell(r - 4, f - 3);
    cell(r - 4, f - 1);
    cell(rp + 3, f + 4);  // triangle east of the exit turn
    cell(rp + 2, f + 5);
    cell(rp + 4, f + 5);
    return f + 4;
  }
};

// Splits an even pad (0 or >= 14) into bump contributions, each in [14, 28].
// The lower bound keeps every bump at least 7 rows tall, which the up_jog
// blocker triangle needs for its quiescence (it leans on the column beside it).
std::vector<int> split_pad(int pad) {
  assert(pad >= 0 && pad % 2 == 0 && (pad == 0 || pad >= 14));
  std::vector<int> parts;
  while (pad > 28) {
    int z = std::min(28, pad - 14);
    parts.push_back(z);
    pad -= z;
  }
  if (pad > 0) parts.push_back(pad);
  return parts;
}

// Routes a signal whose track ends at (row r0, column x0) to a track ending at
// (row r1, column x1), consuming exactly (x1-x0) + |r1-r0| + pad time. The
// vertical leg starts at jog_at when >= 0 and is always >= 5 rows.
void route(Painter& P, int x0, int r0, int x1, int r1, int pad, int jog_at = -1) {
  int cx = x0, cr = r0;
  auto straight = [&](int to) {
    assert(to >= cx);
    if (to > cx) P.hwire(cx + 1, to, cr);
    cx = to;
  };
  straight(cx + kLead);
  // Padding travels as bumps: up d, a short run, back down d. Every descent
  // anywhere sheds a wave that creeps back west along the row under the wire
  // and pools against the first ascent exit it meets, two rows deeper than the
  // descent is tall. A bump contains that exchange within itself: the pool
  // under its own span bottoms out two rows below the wire regardless of the
  // bump's height, and nothing marching west survives past the span, because
  // the signal row beneath it never fires and the march loses its support.
  for (int z : split_pad(pad)) {
    int d = z / 2;
    int t0 = P.up_jog(cx, cr, cr - d);
    // Three extra columns keep the landing blockers clear of the following
    // descent's blockers; adjacent they would give a gap cell four neighbors.
    P.hwire(t0, t0 + kRun + 3, cr - d);
    int t1 = P.down_jog(t0 + kRun + 3, cr - d, cr);
    P.hwire(t1, t1 + kRun + 3, cr);
    cx = t1 + kRun + 3;
  }
  // The vertical leg comes last: when it descends, its westward wave dies
  // under the preceding bump's span instead of escaping into whatever the
  // previous column left on this row. Descending legs therefore require a
  // nonzero pad; ascending ones shed no wave and may run bare.
  if (r1 != cr) {
    assert(r1 < cr || pad > 0);
    if (jog_at >= 0) straight(jog_at);
    int t = r1 > cr ? P.down_jog(cx, cr, r1) : P.up_jog(cx, cr, r1);
    cr = r1;
    P.hwire(t, t + kRun + 3, cr);
    cx = t + kRun + 3;
  }
  straight(x1);
}

struct Op {
  char kind;  // 'A' and, 'O' or, 'X' xor, 'F' fanout
  int idx;    // lane index (first of the pair for two-input gates)
};

struct LaneSlot {
  int net = 0;
  int probe_gate = -1;
};

struct Lowering {
  std::vector<Op> ops;
  std::vector<LaneSlot> lanes;  // state after all ops
  int crossings = 0;
  size_t max_lanes = 0;
};

Lowering lower(const Netlist& n) {
  auto order = validate_netlist(n);
  Lowering lo;
  for (int i : n.inputs) lo.lanes.push_back({i, -1});
  lo.max_lanes = lo.lanes.size();
  int temp_net = -1;
  auto find_lane = [&](int net, int skip = -1) {
    for (size_t k = 0; k < lo.lanes.size(); ++k)
      if (int(k) != skip && lo.lanes[k].net == net && lo.lanes[k].probe_gate < 0) return int(k);
    throw UnroutableNetlist("no live lane for net " + std::to_string(net));
  };
  auto emit_fan = [&](int i, int net_top, int net_bottom) {
    lo.ops.push_back({'F', i});
    lo.lanes[size_t(i)] = {net_top, -1};
    lo.lanes.insert(lo.lanes.begin() + i + 1, {net_bottom, -1});
    lo.max_lanes = std::max(lo.max_lanes, lo.lanes.size());
  };
  auto emit_gate = [&](char kind, int i, int net) {
    lo.ops.push_back({kind, i});
    lo.lanes[size_t(i)] = {net, -1};
    lo.lanes.erase(lo.lanes.begin() + i + 1);
  };
  // Planar swap of adjacent lanes i, i+1 out of fanouts and xors:
  //   a,b -> a,a,b -> a,a,b,b -> a,c,b -> a,c,c,b -> b,c,b -> b,a   (c = a^b)
  auto emit_cross = [&](int i) {
    int a = lo.lanes[size_t(i)].net, b = lo.lanes[size_t(i) + 1].net;
    emit_fan(i, temp_net - 1, temp_net - 2);
    emit_fan(i + 2, temp_net - 3, temp_net - 4);
    emit_gate('X', i + 1, temp_net - 5);
    emit_fan(i + 1, temp_net - 6, temp_net - 7);
    emit_gate('X', i, b);
    emit_gate('X', i + 1, a);
    temp_net -= 8;
    ++lo.crossings;
  };
  for (int gi : order) {
    const NetGate& g = n.gates[size_t(gi)];
    if (g.kind == "OUTPUT") {
      int k = find_lane(g.inputs[0]);
      lo.lanes[size_t(k)].probe_gate = g.id;
      continue;
    }
    if (g.kind == "FANOUT") {
      int k = find_lane(g.inputs[0]);
      emit_fan(k, g.id, g.id);
      continue;
    }
    int ia = find_lane(g.inputs[0]);
    int ib = find_lane(g.inputs[1], ia);
    while (ib > ia + 1) {
      emit_cross(ib - 1);
      --ib;
    }
    while (ib + 1 < ia) {
      emit_cross(ib);
      ++ib;
    }
    int pos = std::min(ia, ib);
    char k = g.kind == "AND" ? 'A' : g.kind == "OR" ? 'O' : 'X';
    emit_gate(k, pos, g.id);
  }
  for (auto& l : lo.lanes)
    if (l.probe_gate < 0) throw UnroutableNetlist("dangling net " + std::to_string(l.net));
  return lo;
}

struct Tiles {
  Gadget and_g, or_g, xor_g, dup;
  const Gadget& gate(char kind) const {
    return kind == 'A' ? and_g : kind == 'O' ? or_g : xor_g;
  }
};

int port_row(const Gadget& g, const std::string& name) {
  for (auto& p : g.ports)
    if (p.name == name) return p.row;
  throw BadGadget(g.name + " lacks port " + name);
}

void stamp(Painter& P, const Gadget& g, int origin_r, int origin_c) {
  for (int r = 0; r < g.height; ++r)
    for (int c = 0; c < g.width; ++c)
      if (g.filled(r, c)) P.cell(origin_r + r, origin_c + c);
}

}  // namespace

CompiledCircuit compile(const Netlist& n, const std::map<int, int>& assignment) {
  Lowering lo = lower(n);
  Tiles tiles{stock_gadget("and"), stock_gadget("or"), stock_gadget("xor"), stock_gadget("dup")};
  // Shared port geometry (checked): for every 2-input tile anchored so port A
  // sits on the lane row r, port B sits on r+22 and the output on r+11; the
  // duplicator's outputs sit on r-11 and r+11.
  for (char k : {'A', 'O', 'X'}) {
    const Gadget& g = tiles.gate(k);
    int a = port_row(g, "A");
    assert(port_row(g, "B") - a == 22 && port_row(g, "Z") - a == 11 && g.width == kTileW);
  }
  assert(port_row(tiles.dup, "Z0") - port_row(tiles.dup, "A") == -11);
  assert(port_row(tiles.dup, "Z1") - port_row(tiles.dup, "A") == 11);

  Painter P;
  auto row_of = [&](int k) { return kTop + kPitch * k; };
  int x = 0;
  int64_t t = 0;
  size_t lane_count = n.inputs.size();
  CompiledCircuit cc;
  // A lane whose net carries 0 never fires, so its wire is not painted at all:
  // under a freezing rule an absent track is indistinguishable from a quiet
  // one, and leaving it out denies any spurious activation the support it
  // would need to travel between tiles. The tiles themselves are always
  // stamped, so every live signal still has to earn its way through them.
  std::vector<int> val;
  for (int i : n.inputs) {
    auto it = assignment.find(i);
    if (it == assignment.end())
      throw BadNetlist("missing assignment for input " + std::to_string(i));
    val.push_back(it->second ? 1 : 0);
  }
  // Track stubs at the west edge; the ignition cells sit beneath them.
  for (size_t k = 0; k < lane_count; ++k) P.hwire(0, 0, row_of(int(k)));

  for (const Op& op : lo.ops) {
    int inw = 120 + 6 * int(lane_count);
    int outw = 100;
    int wc = inw + kTileW + outw;
    int X = x + inw;
    int xend = x + wc;
    int jbase = x + 76;
    if (op.kind == 'F') {
      const Gadget& d = tiles.dup;
      int r = row_of(op.idx);
      int va = val[size_t(op.idx)];
      stamp(P, d, r - port_row(d, "A"), X);
      if (va) {
        route(P, x, r, X - 1, r, 14);                    // into the duplicator
        route(P, X + kTileW - 1, r - 11, xend, r, 52);   // upper copy back down
        route(P, X + kTileW - 1, r + 11, xend, r + kPitch, 14);  // lower copy down to the new lane
      }
      // Lanes below shift down; the bottom one jogs first (west-most).
      int below = int(lane_count) - op.idx - 1;
      for (int j = 0; j < below; ++j) {
        int k = op.idx + 1 + j;
        int rank = below - 1 - j;  // 0 = bottom lane
        if (val[size_t(k)]) route(P, x, row_of(k), xend, row_of(k) + kPitch, 30, jbase + rank * 6);
      }
      for (int k = 0; k < op.idx; ++k)
        if (val[size_t(k)]) route(P, x, row_of(k), xend, row_of(k), 90);
      val.insert(val.begin() + op.idx + 1, va);
      ++lane_count;
    } else {
      const Gadget& g = tiles.gate(op.kind);
      int r = row_of(op.idx);
      int va = val[size_t(op.idx)], vb = val[size_t(op.idx) + 1];
      int vz = op.kind == 'A' ? (va & vb) : op.kind == 'O' ? (va | vb) : (va ^ vb);
      stamp(P, g, r - port_row(g, "A"), X);
      if (va) route(P, x, r, X - 1, r, 66);                        // A: top lane
      if (vb) route(P, x, row_of(op.idx + 1), X - 1, r + 22, 28);  // B: lane below, up 8
      if (vz) route(P, X + kTileW - 1, r + 11, xend, r, 0);        // output back to the lane row
      // Lanes below the pair shift up; the top one jogs first (west-most).
      int below = int(lane_count) - op.idx - 2;
      for (int j = 0; j < below; ++j) {
        int k = op.idx + 2 + j;
        if (val[size_t(k)]) route(P, x, row_of(k), xend, row_of(k) - kPitch, 30, jbase + j * 6);
      }
      for (int k = 0; k < op.idx; ++k)
        if (val[size_t(k)]) route(P, x, row_of(k), xend, row_of(k), 90);
      val[size_t(op.idx)] = vz;
      val.erase(val.begin() + op.idx + 1);
      --lane_count;
    }
    x = xend;
    t += wc + 90;  // wc horizontal plus the shared 90 of pad on every path
  }
  // Probe tails. Wakes shed by jogs only ever spread south and east, so each
  // surviving lane climbs to its own attic row above every other structure;
  // there a probe cell can activate through the arriving signal and nothing
  // else. Legs go west to east from the top lane down and attic rows deepen
  // eastward, so no leg crosses a live wire.
  std::vector<int> attic_row(lane_count), attic_x(lane_count);
  std::vector<int64_t> attic_t(lane_count);
  for (size_t k = 0; k < lane_count; ++k) {
    int r = row_of(int(k));
    int a = 8 + 12 * int(k);
    int jog = x + kLead + 40 * int(k);
    int xp = jog + 20;
    if (val[k]) route(P, x, r, xp, a, 0, jog);
    attic_row[k] = a;
    attic_x[k] = xp;
    attic_t[k] = t + (xp - x) + (r - a);
  }

  // Paint onto a square torus with a dead margin. Unpainted probe tails still
  // claim their coordinates so every probe cell lies inside the board.
  int max_r = 0, max_c = 0;
  for (auto& rc : P.cells) {
    max_r = std::max(max_r, rc.first);
    max_c = std::max(max_c, rc.second);
  }
  for (size_t k = 0; k < lane_count; ++k) {
    max_r = std::max(max_r, attic_row[k]);
    max_c = std::max(max_c, attic_x[k]);
  }
  int side = std::max(max_r, max_c) + 1 + 2 * kMargin;
  Configuration conf = Configuration::empty(Grid::square(side));
  for (auto& rc : P.cells) conf.set({rc.first + kMargin, rc.second + kMargin}, 1);

  for (size_t k = 0; k < n.inputs.size(); ++k) {
    Cell ign{row_of(int(k)) + kMargin, kMargin};
    cc.input_ignition_cells[n.inputs[k]] = ign;
    auto it = assignment.find(n.inputs[k]);
    if (it == assignment.end())
      throw BadNetlist("missing assignment for input " + std::to_string(n.inputs[k]));
    if (it->second) conf.set(ign, 1);
  }
  int64_t t_probe_max = 0;
  for (size_t k = 0; k < lo.lanes.size(); ++k) {
    cc.probes[lo.lanes[k].probe_gate] = {attic_row[k] + kMargin, attic_x[k] + kMargin};
    cc.probe_times[lo.lanes[k].probe_gate] = attic_t[k];
    t_probe_max = std::max(t_probe_max, attic_t[k]);
  }
  cc.configuration = std::move(conf);
  cc.crossings = lo.crossings;
  cc.time_budget = int64_t(4) * (2 * (side + side));
  if (t_probe_max >= cc.time_budget) throw UnroutableNetlist("layout exceeds its time budget");
  return cc;
}

std::map<int, int> run_compiled(const CompiledCircuit& cc, const Rule& rule) {
  Trajectory tr = run_to_fixed_point(rule, cc.configuration);
  std::map<int, int> out;
  for (auto& [gate, cell] : cc.probes)
    out[gate] = tr.fixed_point.at(cell) ? 1 : 0;
  return out;
}

}  // namespace ftca
