#include "sbaf/io/dot.hpp"

#include <sstream>

namespace sbaf::io {

namespace {

std::string label(const Sbaf& sb, ArgumentIndex a) {
  const Argument& arg = sb.argument(a);
  std::string out = arg.id + ": {";
  for (std::size_t k = 0; k < arg.premises.size(); ++k) {
    if (k) out += ", ";
    out += arg.premises[k];
  }
  out += "} -> " + arg.conclusion;
  return out;
}

}  // namespace

std::string to_dot(const Sbaf& sb, SupportRule rule) {
  std::ostringstream out;
  out << "digraph sbaf {\n";
  out << "  node [shape=box];\n";
  for (ArgumentIndex a = 0; a < sb.size(); ++a)
    out << "  \"" << sb.id(a) << "\" [label=\"" << label(sb, a) << "\"];\n";
  for (const auto& [from, to] : sb.attack_graph().edges())
    out << "  \"" << sb.id(from) << "\" -> \"" << sb.id(to) << "\" [style=solid];\n";
  for (const auto& [from, to] : binary_support(sb, rule).edges())
    out << "  \"" << sb.id(from) << "\" -> \"" << sb.id(to) << "\" [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace sbaf::io
