#pragma once

#include <sstream>
#include <string>

#include "spectacular/complex.hpp"
#include "spectacular/labeled.hpp"

namespace spectacular {

/// DOT rendering of the 1-skeleton; for inspection only.
inline std::string to_dot(const SimpleGraph& g, const std::string& name = "skeleton") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

/// DOT rendering with forward labels as edge attributes (lossy: tau and the
/// backward labels are implicit).
inline std::string to_dot(const LabeledGraph& lg, const std::string& name = "relator") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < lg.graph().vertex_count(); ++v) os << "  " << v << ";\n";
  for (int i = 0; i < lg.graph().edge_count(); ++i) {
    auto [u, v] = lg.graph().edges()[i];
    os << "  " << u << " -- " << v << " [label=\"" << lg.labels().name(lg.forward_label(i))
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace spectacular
