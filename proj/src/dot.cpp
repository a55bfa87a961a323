#include "dcst/dot.hpp"

namespace dcst {

std::string render_dot(const Instance& inst, const EdgeSet* tree) {
    const Graph& g = inst.graph;
    std::string out = "graph instance {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  v" + std::to_string(v);
        if (inst.bounds.constrained.contains(v)) {
            auto i = static_cast<std::size_t>(v);
            out += " [label=\"" + std::to_string(v) + "\\n" +
                   std::to_string(inst.bounds.alpha[i]) + ".." +
                   std::to_string(inst.bounds.beta[i]) + "\",style=bold]";
        } else {
            out += " [label=\"" + std::to_string(v) + "\"]";
        }
        out += ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        out += "  v" + std::to_string(ed.u) + " -- v" + std::to_string(ed.v) + " [label=\"" +
               std::to_string(inst.weights[static_cast<std::size_t>(e)]) + "\"";
        if (tree && tree->contains(e)) out += ",style=bold,penwidth=2";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace dcst
