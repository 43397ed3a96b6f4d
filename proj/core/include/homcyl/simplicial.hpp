#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "homcyl/graph.hpp"

namespace homcyl {

/**
 * Abstract simplicial complex given by its facets (maximal simplices).
 * Vertices are integer ids with labels; facets are sorted id lists,
 * pairwise non-nested.
 */
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Normalizes: sorts each face, removes duplicates and nested faces.
    static SimplicialComplex from_faces(std::string name, std::vector<std::string> vertex_labels,
                                        std::vector<std::vector<int>> faces);

    /// Trusted variant for faces known to be pairwise non-nested (maximal
    /// chains of a poset); skips the quadratic prune.
    static SimplicialComplex from_facets_nonnested(std::string name,
                                                   std::vector<std::string> vertex_labels,
                                                   std::vector<std::vector<int>> facets);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return facets_.empty(); }
    int dim() const;

    /// All simplices of every dimension, deduplicated and sorted. Guarded:
    /// a facet of more than `max_facet_size` vertices raises BudgetExceeded.
    std::vector<std::vector<int>> all_simplices(int max_facet_size = 25) const;

    /// Ids of the vertices that actually appear in some facet.
    std::vector<int> support() const;

    /// Connected components of the 1-skeleton restricted to the support.
    int component_count() const;

  private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> facets_;
};

/**
 * Neighbourhood complex N(G): facets are the maximal sets among the
 * neighbourhoods N(v). Vertices with empty neighbourhood contribute
 * nothing.
 */
SimplicialComplex neighbourhood_complex(const Graph& g);

/// Line-oriented complex file: `complex <name> <n>` header, `v <label>`
/// dictionary lines, then `f <label> <label> ...` facet lines.
SimplicialComplex read_complex(std::istream& in, const std::string& origin = "<stream>");
SimplicialComplex read_complex_file(const std::string& path);
void write_complex(std::ostream& out, const SimplicialComplex& k);
void write_complex_file(const std::string& path, const SimplicialComplex& k);

/// DOT rendering of the 1-skeleton.
std::string complex_to_dot(const SimplicialComplex& k);

}  // namespace homcyl
