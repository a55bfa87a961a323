#pragma once

#include <string>

#include "dcst/index_set.hpp"
#include "dcst/instance.hpp"

namespace dcst {

// Graphviz rendering of an instance. Constrained vertices are bold and
// carry their bounds in the label; tree edges (when a tree is given) are
// bold as well. Output is deterministic: vertices then edges, index order.
std::string render_dot(const Instance& inst, const EdgeSet* tree);

}  // namespace dcst
