#pragma once

#include <string>
#include <vector>

#include "homcyl/simplicial.hpp"

namespace homcyl {

/**
 * Finite group presentation. Letters are nonzero ints: +k for generator
 * k-1, -k for its inverse.
 */
struct Presentation {
    int generator_count = 0;
    std::vector<std::vector<int>> relators;

    bool certified_trivial() const { return generator_count == 0; }
    bool is_free() const { return relators.empty(); }
    std::string to_string() const;
};

/**
 * Edge-path group presentation of a path-connected complex: generators are
 * the non-tree edges of a BFS spanning tree from `base`, relators come
 * from the 2-simplices. Throws InputError on disconnected input.
 */
Presentation pi1_presentation(const SimplicialComplex& k, int base = -1);

/**
 * Group-preserving simplification: free/cyclic reduction, duplicate and
 * trivial relator removal, elimination of generators that occur exactly
 * once in some relator. May stop short of a normal form; the budget caps
 * substitution work.
 */
Presentation tietze_simplify(Presentation p, long long budget = 1'000'000);

}  // namespace homcyl
