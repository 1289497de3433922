#include "ftca/rules.hpp"

namespace ftca {

Rule parse_rule(Topology t, std::string_view name) {
  Rule r;
  r.topology = t;
  r.name = std::string(name);
  int deg = t == Topology::Square ? 4 : 3;
  if (name == "phi") {
    r.mask = 0;
    return r;
  }
  if (name.empty()) throw BadRuleName("empty rule name");
  int prev = -1;
  for (char ch : name) {
    if (ch < '0' || ch > '9') throw BadRuleName(r.name);
    int d = ch - '0';
    if (d <= prev) throw BadRuleName(r.name + " (digits must be strictly increasing)");
    if (d > deg) throw BadRuleName(r.name + " (trigger exceeds neighborhood size)");
    r.mask |= uint8_t(1u << d);
    prev = d;
  }
  return r;
}

RuleClass classify(const Rule& r) {
  if (r.mask & 1) return RuleClass::NonQuiescent;
  const auto is = [&](std::initializer_list<int> set) {
    uint8_t m = 0;
    for (int d : set) m |= uint8_t(1u << d);
    return r.mask == m;
  };
  if (r.topology == Topology::Triangular) {
    if (r.mask == 0 || is({1, 2, 3}) || is({3})) return RuleClass::Trivial;
    if (is({2}) || is({2, 3})) return RuleClass::Topological;
    if (is({1, 2})) return RuleClass::Algebraic;
    return RuleClass::FractalGrowing;  // 1, 13
  }
  if (r.mask == 0 || is({1, 2, 3, 4}) || is({4})) return RuleClass::Trivial;
  if (is({2, 3, 4}) || is({3}) || is({3, 4})) return RuleClass::Topological;
  if (is({1, 2}) || is({1, 2, 3}) || is({1, 2, 4})) return RuleClass::Algebraic;
  if (is({2}) || is({2, 4})) return RuleClass::TuringUniversal;
  return RuleClass::FractalGrowing;  // 1, 13, 14, 134
}

bool upward_closed(const Rule& r) {
  int deg = r.topology == Topology::Square ? 4 : 3;
  for (int d = 0; d < deg; ++d)
    if (r.triggers(d) && !r.triggers(d + 1)) return false;
  return true;
}

const char* rule_class_name(RuleClass c) {
  switch (c) {
    case RuleClass::Trivial: return "Trivial";
    case RuleClass::Topological: return "Topological";
    case RuleClass::Algebraic: return "Algebraic";
    case RuleClass::TuringUniversal: return "TuringUniversal";
    case RuleClass::FractalGrowing: return "FractalGrowing";
    case RuleClass::NonQuiescent: return "NonQuiescent";
  }
  return "?";
}

}  // namespace ftca
