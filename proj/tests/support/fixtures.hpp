#pragma once

#include <sstream>
#include <string>

#include "ego/graph.hpp"

namespace ego::fixtures {

inline Graph fromText(const std::string& text) {
  std::istringstream in(text);
  return loadEdgeList(in);
}

/// Seven-node example graph: square a-b-c-d with diagonal a-c, an outer node e
/// closing triangle c-d-e, and a triangle a-f-g hanging off a. The reference set
/// is {a, b, c, d}.
inline Graph sevenNodeExample() {
  return fromText(
      "a b\nb c\nc e\ne d\nd a\na c\nc d\n"
      "a f\nf g\ng a\n");
}

/// Center u with neighbors a, b, c, d; edges a-b, b-c, a-c, c-d among them.
inline Graph workedEgo() {
  return fromText("u a\nu b\nu c\nu d\na b\nb c\na c\nc d\n");
}

}  // namespace ego::fixtures
