#include "logsurf/dot.hpp"

#include <sstream>

namespace logsurf {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string dual_graph_dot(const SingularModel& model, const std::string& name) {
  const auto& cfg = model.config;
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n";
  for (const auto& c : cfg.curves()) {
    os << "  " << quoted(c.id) << " [label=" << quoted(c.id + "\\n(" + std::to_string(c.self_int) + ", g=" + std::to_string(c.genus) + ")");
    if (model.is_contracted(c.id)) os << ", style=filled, fillcolor=gray80";
    os << "];\n";
  }
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.size(); ++j) {
      for (long k = 0; k < cfg.meet(i, j); ++k) os << "  " << quoted(cfg.curve(i).id) << " -- " << quoted(cfg.curve(j).id) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace logsurf
