#pragma once

#include <string>

#include "logsurf/singular_model.hpp"

namespace logsurf {

/// Graphviz dual graph: one node per curve labelled "id\n(self_int, g=genus)",
/// one undirected edge per unit of intersection, contracted curves filled.
std::string dual_graph_dot(const SingularModel& model, const std::string& name = "dual");

}  // namespace logsurf
