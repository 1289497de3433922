#pragma once
#include <stdexcept>
#include <string>

namespace ftca {

// Malformed external input (config files, rule names, netlists).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Gadget assets that fail to load or verify.
struct GadgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadHeader : ParseError {
  explicit BadHeader(const std::string& m) : ParseError("bad header: " + m) {}
};
struct BadDimensions : ParseError {
  explicit BadDimensions(const std::string& m) : ParseError("bad dimensions: " + m) {}
};
struct BadSymbol : ParseError {
  explicit BadSymbol(const std::string& m) : ParseError("bad symbol: " + m) {}
};
struct BadRuleName : ParseError {
  explicit BadRuleName(const std::string& m) : ParseError("bad rule name: " + m) {}
};
struct GridMismatch : std::runtime_error {
  explicit GridMismatch(const std::string& m) : std::runtime_error("grid mismatch: " + m) {}
};
struct CellInitiallyActive : std::runtime_error {
  explicit CellInitiallyActive(const std::string& m) : std::runtime_error("cell initially active: " + m) {}
};
struct TorusTooSmall : std::runtime_error {
  explicit TorusTooSmall(const std::string& m) : std::runtime_error("torus too small: " + m) {}
};
struct NotInGraph : std::runtime_error {
  explicit NotInGraph(const std::string& m) : std::runtime_error("cell not in graph: " + m) {}
};
struct NotATree : std::runtime_error {
  explicit NotATree(const std::string& m) : std::runtime_error("component is not a tree: " + m) {}
};
struct EmptySources : std::runtime_error {
  explicit EmptySources(const std::string& m) : std::runtime_error("empty source set: " + m) {}
};
struct BadNetlist : ParseError {
  explicit BadNetlist(const std::string& m) : ParseError("bad netlist: " + m) {}
};
struct NetlistCycle : ParseError {
  explicit NetlistCycle(const std::string& m) : ParseError("netlist has a cycle: " + m) {}
};
struct UnroutableNetlist : std::runtime_error {
  explicit UnroutableNetlist(const std::string& m) : std::runtime_error("unroutable netlist: " + m) {}
};
struct BadGadget : GadgetError {
  explicit BadGadget(const std::string& m) : GadgetError("bad gadget: " + m) {}
};

}  // namespace ftca
