#include "zkring/vertex_set.hpp"

namespace zkring {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace zkring
