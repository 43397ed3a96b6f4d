#include "homcyl/reduction.hpp"

#include "homcyl/errors.hpp"

namespace homcyl {

ReductionTrace reduce_pipeline(const Graph& g, int height)
{
    if (!g.connected()) throw InputError("reduce_pipeline needs a connected graph");
    if (g.has_any_loop()) throw InputError("reduce_pipeline needs a loopless graph");

    ReductionTrace trace;
    if (is_bipartite(g).bipartite) {
        trace.input_bipartite = true;
        trace.terminal = g;
        trace.kind = TerminalKind::bipartite;
        trace.chi_exact_claim = 2;
        return trace;
    }

    Graph cur = g;
    while (true) {
        if (is_bipartite(cur).bipartite) {
            trace.kind = TerminalKind::bipartite;
            // Corollary to the removal step: the last removal dropped chi
            // from 3 to 2, so the original chromatic number is exactly 3.
            trace.chi_exact_claim = 3;
            break;
        }
        auto c = degree2_vertex_on_cycle(cur);
        if (!c) {
            trace.kind = TerminalKind::no_degree2_cycle_vertex;
            trace.chi_equals_terminal = true;
            break;
        }
        ReductionStage stage;
        stage.graph = cur;
        stage.removed = *c;
        stage.split = abc_split(cur, *c, height);
        stage.bound_source = Cylinder::build(stage.split).quotient();
        trace.stages.push_back(std::move(stage));
        cur = cur.removed_vertex(*c);
    }
    trace.terminal = cur;
    return trace;
}

}  // namespace homcyl
