#pragma once
#include <cstdint>
#include <string>
#include <string_view>

#include "ftca/grid.hpp"

namespace ftca {

// A freezing totalistic rule: an inactive cell activates iff the number of its
// active neighbors lies in the trigger set; active cells stay active forever.
// Named by its trigger counts in increasing order ("2", "124", ...) or "phi"
// for the empty set.
struct Rule {
  Topology topology = Topology::Square;
  uint8_t mask = 0;  // bit i set <=> trigger count i
  std::string name;

  bool triggers(int count) const { return (mask >> count) & 1; }
};

enum class RuleClass : uint8_t {
  Trivial,
  Topological,
  Algebraic,
  TuringUniversal,
  FractalGrowing,
  NonQuiescent,
};

// Parses a rule name; digits must be strictly increasing and at most the
// neighborhood size (3 triangular, 4 square). Throws BadRuleName.
Rule parse_rule(Topology t, std::string_view name);

RuleClass classify(const Rule& r);

// True iff the trigger set is upward closed (k in set implies k+1 in set, up
// to the neighborhood size); such rules admit monotone threshold shortcuts.
bool upward_closed(const Rule& r);

const char* rule_class_name(RuleClass c);

}  // namespace ftca
