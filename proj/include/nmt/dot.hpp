#pragma once

#include <array>
#include <sstream>
#include <string>

#include "nmt/colored_graph.hpp"

namespace nmt {

// Graphviz rendering. Colour 1 is a solid bold line and colour 2 a
// dash-dotted bold line; colours 3, 4, ... cycle through kDotExtraStyles.
struct DotStyle {
  const char* style;
  const char* pen;
};

inline constexpr std::array<DotStyle, 4> kDotExtraStyles{{
    {"dotted,bold", "firebrick"},
    {"dashed,bold", "royalblue"},
    {"dotted", "darkgreen"},
    {"dashed", "darkorange"},
}};

inline DotStyle dot_style(Color c) {
  if (c == 1) return {"solid,bold", "black"};
  if (c == 2) return {"dashdot,bold", "black"};
  return kDotExtraStyles[(c - 3) % kDotExtraStyles.size()];
}

inline std::string emit_dot(const ColoredGraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  out << "  node [shape=circle, width=0.3, fixedsize=true];\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const Color c = g.color(u, v);
      if (c == kAbsent) continue;
      const auto s = dot_style(c);
      out << "  " << u << " -- " << v << " [style=\"" << s.style << "\", color=\"" << s.pen << "\", class=\"E" << c
          << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace nmt
