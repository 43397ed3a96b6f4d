#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcyl/bits.hpp"

namespace homcyl {

/**
 * Finite undirected graph. Loops are allowed (diagonal adjacency entries),
 * parallel edges are not (adjacency is a relation). Vertices carry unique
 * string labels; all algorithms work on the integer indices fixed by the
 * label order given at construction.
 *
 * Instances are treated as immutable values once built; the mutating edge
 * helpers exist for constructions that assemble a graph before sharing it.
 */
class Graph {
  public:
    Graph() = default;
    Graph(std::string name, std::vector<std::string> labels);

    /// Builds a graph from labelled edges. Duplicate edge lines collapse
    /// silently; unknown endpoint labels and duplicate/empty label lists
    /// raise InputError.
    static Graph build(std::string name, const std::vector<std::string>& labels,
                       const std::vector<std::pair<std::string, std::string>>& edges);

    static Graph complete(int n, std::string name = "");
    static Graph cycle(int n, std::string name = "");
    static Graph path(int n, std::string name = "");  // n vertices, n-1 edges

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    int index_of(const std::string& label) const;  // -1 when absent

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    bool has_loop(int v) const { return adj_[v].test(v); }
    bool has_any_loop() const;

    /// N(v): all vertices adjacent to v, including v itself exactly when v
    /// has a loop. degree(v) = |N(v)|.
    const Bits& neighbourhood(int v) const { return adj_[v]; }
    std::vector<int> neighbours(int v) const { return adj_[v].to_vector(); }
    int degree(int v) const { return adj_[v].count(); }

    int edge_count() const;  // unordered pairs, loops counted once
    std::vector<std::pair<int, int>> edges() const;

    bool connected() const;
    std::vector<int> component_ids() const;

    Graph renamed(std::string name) const;
    Graph induced(const std::vector<int>& keep, std::string name) const;
    Graph removed_vertex(int v) const;
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    /// Same label list and same adjacency (names ignored).
    bool same_structure(const Graph& other) const;

  private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Bits> adj_;
};

/**
 * Vertex map between two graphs. Most call sites require it to be a graph
 * homomorphism (edges to edges, loops included); is_homomorphism checks.
 */
struct GraphMap {
    Graph domain;
    Graph codomain;
    std::vector<int> assignment;

    GraphMap() = default;
    GraphMap(Graph dom, Graph cod, std::vector<int> assign);

    int operator()(int v) const { return assignment[v]; }

    static GraphMap identity(const Graph& g);
    static GraphMap constant(const Graph& dom, const Graph& cod, int image);
    static GraphMap from_labels(const Graph& dom, const Graph& cod,
                                const std::vector<std::string>& images);
};

bool is_homomorphism(const GraphMap& m);

/// outer . inner; throws InputError when the middle graphs differ.
GraphMap compose(const GraphMap& outer, const GraphMap& inner);

/// Categorical (tensor) product: (u,v)(u',v') is an edge iff uu' in E(G)
/// and vv' in E(H). Vertex (u,v) gets index u*|V(H)|+v and label "u,v".
Graph categorical_product(const Graph& g, const Graph& h);

/// Index of vertex (gv, hv) in categorical_product(g, h).
inline int product_index(const Graph& h, int gv, int hv)
{
    return gv * h.vertex_count() + hv;
}

/// I_n: the reflexive path on {0,...,n} (loop at every vertex, edges
/// i(i+1)). Rejects n = 0.
Graph looped_interval(int n);

struct BipartiteCheck {
    bool bipartite = true;
    std::vector<int> side;             // 0/1 per vertex when bipartite
    std::vector<int> odd_closed_walk;  // closed walk of odd length otherwise
};

/// Two-colourability with an odd closed walk witness on failure.
/// A graph with a loop is never bipartite (the loop is the witness).
BipartiteCheck is_bipartite(const Graph& g);

/// Max shortest-path distance. Throws InputError on empty or disconnected
/// input.
int diameter(const Graph& g);

/// True iff no 4 vertices induce a path with three edges.
bool is_p4_free(const Graph& g);

/// Least-index loopless vertex c with exactly two neighbours a, b that lie
/// in a common cycle through c (i.e. a and b stay connected in G - c).
std::optional<int> degree2_vertex_on_cycle(const Graph& g);

struct Fold {
    int removed = -1;
    int absorbing = -1;
};

/// First (removed, absorbing) pair in lexicographic index order with
/// N(removed) contained in N(absorbing), removed != absorbing.
std::optional<Fold> find_fold(const Graph& g);

struct FoldSequence {
    Graph start;
    Graph core;
    std::vector<std::pair<std::string, std::string>> steps;  // (removed, absorbing) labels
    GraphMap projection;  // start -> core, composite of the fold retractions
    bool folded() const { return !steps.empty(); }
};

/// Applies find_fold until the graph is stiff.
FoldSequence stiff_core(const Graph& g);

/// Exact isomorphism test (loops respected). Backtracking with degree and
/// loop signature pruning; intended for desk-scale graphs.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace homcyl
