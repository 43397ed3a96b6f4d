#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homcyl/chain.hpp"
#include "homcyl/cylinder.hpp"
#include "homcyl/graph.hpp"
#include "homcyl/simplicial.hpp"

namespace homcyl {

/**
 * A polytope of Hom(T, G): a function assigning to each vertex of T a
 * nonempty set of G-vertices, with eta(x) x eta(y) inside E(G) for every
 * edge xy of T. Faces are pointwise subsets.
 */
struct Cell {
    std::vector<std::vector<int>> assignment;  // sorted, nonempty per T-vertex

    int coordinate_count() const { return static_cast<int>(assignment.size()); }
    int total_size() const;
    int dim() const { return total_size() - coordinate_count(); }
    bool is_vertex_cell() const { return total_size() == coordinate_count(); }

    /// Pointwise subset (this is a face of other).
    bool face_of(const Cell& other) const;

    /// Union of all coordinate sets.
    std::vector<int> image() const;

    bool operator==(const Cell&) const = default;
    bool operator<(const Cell& other) const;

    std::string key() const;  // compact unique id, e.g. "0,2;1"
    std::string pretty(const Graph& target) const;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const;
};

/// Is the assignment a valid cell of Hom(T, G)?
bool valid_cell(const Graph& t, const Graph& g, const Cell& c);

/// Can vertex `v` be added to coordinate `coord` keeping the cell valid?
bool can_extend(const Graph& t, const Graph& g, const Cell& c, int coord, int v);

/// Is the cell maximal (no single-vertex extension is valid)?
bool maximal_cell(const Graph& t, const Graph& g, const Cell& c);

struct HomBudget {
    long long max_vertex_homs = 2'000'000;
    long long max_cells = 500'000;   // maximal cells
    long long max_faces = 2'000'000; // face poset elements
    long long max_chains = 2'000'000;// order complex simplices
};

/**
 * Hom(T, G) as its list of maximal cells, sorted for determinism.
 *
 * Enumeration: every maximal cell is the pointwise union of a maximal
 * clique of the compatibility relation on vertex homomorphisms (h1 ~ h2
 * iff h1(x) h2(y) is an edge for every edge xy of T), and the
 * correspondence is one-to-one, so Bron-Kerbosch with pivoting lists
 * exactly the maximal cells.
 */
struct PolyhedralComplex {
    Graph source;  // T
    Graph target;  // G
    std::vector<Cell> maximal_cells;
    bool source_disconnected = false;  // warning flag

    bool empty() const { return maximal_cells.empty(); }
    long long vertex_cell_count() const;  // number of 0-cells
};

PolyhedralComplex hom_complex(const Graph& t, const Graph& g, const HomBudget& budget = {});

/// All vertex homomorphisms T -> G in lexicographic order.
std::vector<std::vector<int>> vertex_homomorphisms(const Graph& t, const Graph& g,
                                                   long long cap = 2'000'000);

/// Push a cell through a homomorphism of targets (t |-> h(eta(t))).
Cell induced_cell(const GraphMap& h, const Cell& c);

/**
 * Face poset of a downward-closed family of cells (all faces of the given
 * generators). Elements are indexed; order is pointwise inclusion.
 */
class FacePoset {
  public:
    static FacePoset from_cells(Graph source, Graph target, const std::vector<Cell>& generators,
                                long long max_faces, std::string name = "");
    static FacePoset from_complex(const PolyhedralComplex& p, long long max_faces);

    int size() const { return static_cast<int>(faces_.size()); }
    const Cell& face(int i) const { return faces_[i]; }
    int index_of(const Cell& c) const;
    const std::string& name() const { return name_; }
    const Graph& source() const { return source_; }
    const Graph& target() const { return target_; }

    /// All indices of proper faces of element i.
    void below(int i, std::vector<int>& out) const;
    /// Faces of i of codimension one (covers below i).
    void covers_below(int i, std::vector<int>& out) const;

    std::vector<int> maximal_elements() const;

  private:
    std::string name_;
    Graph source_, target_;
    std::vector<Cell> faces_;  // sorted by (total size, lex)
    std::unordered_map<Cell, int, CellHash> index_;
    std::vector<int> generator_ids_;  // the cells the poset was closed from
};

/**
 * All chains of an abstract finite poset, as the chain complex of its
 * order complex. `below(i)` must list every element strictly under i.
 */
ChainComplex poset_chain_complex(int n_elements,
                                 const std::function<void(int, std::vector<int>&)>& below,
                                 long long max_chains);

/// Homology of the order complex of a face poset (no materialization).
HomologyResult poset_homology(const FacePoset& poset, bool reduced = true,
                              long long max_chains = 2'000'000);

/// Barycentric model: vertices = all faces of P, simplices = chains.
SimplicialComplex order_complex(const PolyhedralComplex& p, const HomBudget& budget = {});

/// Reduced-or-not homology of Hom(T, G), through the order complex.
HomologyResult hom_homology(const Graph& t, const Graph& g, bool reduced = true,
                            const HomBudget& budget = {});

/**
 * Triangulated double mapping cylinder of simplicial maps
 * phi: KA -> KB, psi: KA -> KC (vertex maps; images of simplices must be
 * simplices). Built as the order complex of the glued face poset
 * F(KA) ⊔ F(KB) ⊔ F(KC) with a <= b iff phi(a) ⊆ b and a <= c iff
 * psi(a) ⊆ c. Facets are the maximal chains.
 */
SimplicialComplex simplicial_double_cylinder(const SimplicialComplex& ka,
                                             const SimplicialComplex& kb,
                                             const SimplicialComplex& kc,
                                             const std::vector<int>& phi,
                                             const std::vector<int>& psi,
                                             long long max_chains = 2'000'000);

/**
 * Homology of the double mapping cylinder of the induced maps
 * f_T: Hom(T,A) -> Hom(T,B), g_T: Hom(T,A) -> Hom(T,C), glued at the level
 * of Hom face posets (one barycentric subdivision instead of two).
 */
HomologyResult hom_cylinder_pushout_homology(const Graph& t, const CylinderSpec& spec,
                                             bool reduced = true, const HomBudget& budget = {});

struct HomVertexCount {
    long long zero_cells = 0;        // counted 0-cells of Hom(K_2, D_n)
    long long quoted_form = 0;       // p(p-1) + r(r-1) + 6n - 8
    long long corrected_form = 0;    // p(p-1) + r(r-1) + 6n - 2
    bool matches_quoted = false;
    bool matches_corrected = false;
};

/// Counts 0-cells of Hom(K_2, D_n) for the K_p / K_2 / K_r inclusion shape
/// and compares against the closed forms. Throws InputError on any other
/// shape.
HomVertexCount hom_vertex_count(const Cylinder& cyl, const HomBudget& budget = {});

}  // namespace homcyl
