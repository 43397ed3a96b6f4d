#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcyl/connectivity.hpp"
#include "homcyl/cylinder.hpp"
#include "homcyl/graph.hpp"
#include "homcyl/reduction.hpp"

namespace homcyl {

/// A proper k-colouring, i.e. a homomorphism into K_k.
struct Colouring {
    Graph graph;
    int colour_count = 0;
    std::vector<int> assignment;

    bool verify() const;
    GraphMap as_map() const;  // into K_k
};

/// Certified-exhaustive search for a proper k-colouring. Loopless input.
std::optional<Colouring> is_k_colourable(const Graph& g, int k);

/// Exact chromatic number by DSATUR branch and bound with clique seeding.
/// Returns the value and a verified witness. Loops make the graph
/// uncolourable (InputError).
std::pair<int, Colouring> chromatic_number(const Graph& g);

/**
 * The colouring lift from a simple pushout to the cylinder: keep the
 * colours on B and C, give every interior level of A the colour pulled
 * back through the identified images. Returns a verified colouring of the
 * quotient.
 */
Colouring cylinder_colouring(const Cylinder& cyl, const Pushout& po, const Colouring& c);

struct BoundReport {
    std::string graph_name;
    std::optional<int> chi_exact;
    std::optional<Colouring> witness;
    int lovasz_lower = 0;    // certified_conn(N(G)) + 3
    int pipeline_lower = 0;  // via the reduction pipeline, when applicable
    int best_lower = 0;      // max of the two
    bool pipeline_applicable = false;
    ConnectivityReport nbhd_report;                 // N(G)
    std::optional<ConnectivityReport> pipeline_report;  // N(A_{m-1})
    std::optional<ReductionTrace> trace;
};

struct BoundOptions {
    int chi_vertex_budget = 40;  // skip exact chi above this size
    int pipeline_height = 2;
    ConnectivityOptions conn;
};

/**
 * Assembles the topological lower bounds for a connected loopless graph:
 * lovasz_lower from the certified connectivity of N(G), pipeline_lower
 * from the reduction trace (a bipartite terminal certifies chi = 3; an
 * odd-cycle terminal uses certified_conn(N(A_{m-1})) + 3; an empty trace
 * falls back to lovasz_lower), plus exact chi with witness at desk scale.
 */
BoundReport lovasz_bound(const Graph& g, const BoundOptions& opts = {});

}  // namespace homcyl
