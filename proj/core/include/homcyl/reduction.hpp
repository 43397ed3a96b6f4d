#pragma once

#include <optional>
#include <vector>

#include "homcyl/cylinder.hpp"
#include "homcyl/graph.hpp"

namespace homcyl {

struct ReductionStage {
    Graph graph;         // G_i
    int removed;         // c_i
    CylinderSpec split;  // A_i, B_i, C_i with inclusions and the height
    Graph bound_source;  // D_{n,i}, the quotient of the stage cylinder
};

enum class TerminalKind {
    bipartite,
    no_degree2_cycle_vertex,
};

/**
 * Trace of the iterated vertex removal G_{i+1} = G_i - c_i at degree-2
 * cycle vertices.
 *
 * Chromatic logic carried by the trace: a bipartite terminal certifies
 * chi(G) = 3 (chi_exact_claim); an odd-cycle terminal certifies
 * chi(G) = chi(terminal) (chi_equals_terminal). A bipartite *input* yields
 * an empty trace with chi_exact_claim = 2.
 */
struct ReductionTrace {
    std::vector<ReductionStage> stages;
    Graph terminal;
    TerminalKind kind = TerminalKind::no_degree2_cycle_vertex;
    bool input_bipartite = false;
    std::optional<int> chi_exact_claim;
    bool chi_equals_terminal = false;

    /// A_{m-1} of the final stage, when any stage exists.
    const Graph* last_a() const { return stages.empty() ? nullptr : &stages.back().split.a; }
};

/// Runs the reduction on a connected graph. Height of the recorded
/// cylinders defaults to 2 = diam(K_2) + 1, the smallest valid height.
ReductionTrace reduce_pipeline(const Graph& g, int height = 2);

}  // namespace homcyl
