#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homcyl/simplicial.hpp"

namespace homcyl {

using Int = boost::multiprecision::cpp_int;

/// Sparse integer matrix in triplet form.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row, col;
        long long value;
    };
    std::vector<Entry> entries;
};

/// `<rows> <cols>` header then `row col value` triplets, for external
/// cross-checks.
void write_triplets(std::ostream& out, const SparseIntMatrix& m);

/**
 * Integer chain complex: boundary[k] maps k-chains to (k-1)-chains
 * (k = 1..dim); dims[k] counts k-simplices. Boundaries are built from the
 * global vertex order, so d . d = 0 by construction; verify_dd_zero checks.
 */
struct ChainComplex {
    std::vector<int> dims;
    std::vector<SparseIntMatrix> boundary;  // boundary[k]: C_k -> C_{k-1}; boundary[0] empty

    int top_dimension() const { return static_cast<int>(dims.size()) - 1; }
    bool verify_dd_zero() const;
};

/// Chain complex of a simplicial complex (enumerates all faces of all
/// facets; guarded by the facet-size cap in all_simplices).
ChainComplex chain_complex(const SimplicialComplex& k);

struct SmithResult {
    int rank = 0;
    std::vector<Int> invariant_factors;  // length = rank, divisibility chain
};

/// Exact Smith normal form data over arbitrary-precision integers.
SmithResult smith_normal_form(const SparseIntMatrix& m);

struct HomologyResult {
    bool reduced = false;
    bool empty_complex = false;
    std::vector<int> betti;                // degree 0..top
    std::vector<std::vector<Int>> torsion;  // invariant factors > 1 per degree

    bool all_trivial() const;  // every listed betti 0 and no torsion
    std::string to_string() const;
    bool operator==(const HomologyResult& other) const = default;
};

/// b_k = dim C_k - rank d_k - rank d_{k+1}; torsion from d_{k+1} factors.
HomologyResult homology(const ChainComplex& c, bool reduced = true);

/// Convenience: homology of a simplicial complex.
HomologyResult homology(const SimplicialComplex& k, bool reduced = true);

}  // namespace homcyl
