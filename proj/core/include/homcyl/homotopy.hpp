#pragma once

#include <optional>
#include <vector>

#include "homcyl/cylinder.hpp"
#include "homcyl/graph.hpp"

namespace homcyl {

/**
 * A x-homotopy of height r between two maps X -> Y: a homomorphism
 * X x I_r -> Y whose level restrictions interpolate from level 0 to
 * level r. Stored as the list of level maps; the underlying product map is
 * materialized on demand.
 */
struct HomotopyK {
    Graph x, y;
    std::vector<std::vector<int>> levels;  // levels[i][v], i = 0..r

    int height() const { return static_cast<int>(levels.size()) - 1; }
    GraphMap level(int i) const { return {x, y, levels[i]}; }
    int at(int xv, int lvl) const { return levels[lvl][xv]; }

    /// The homomorphism X x I_r -> Y (vertex (x,i) indexed x*(r+1)+i).
    GraphMap as_product_map() const;

    /// Validity: every level is a homomorphism and consecutive levels are
    /// cross-compatible (m_i(u) m_{i+1}(v) is an edge for every edge uv).
    bool valid() const;

    static HomotopyK constant(const GraphMap& m, int r);
    static HomotopyK from_level_maps(const Graph& x, const Graph& y,
                                     std::vector<std::vector<int>> lvls);

    /// Pads to height new_r by repeating the last level.
    HomotopyK extended(int new_r) const;
};

struct XHomotopyOptions {
    int budget = 4;            // maximum height searched
    long long node_cap = 200000;  // visited-map cap; exceeding is "unknown"
    bool exhaustive = false;   // ignore budget, exhaust the component
};

struct XHomotopyResult {
    std::optional<HomotopyK> homotopy;  // from p (level 0) to q (level top)
    bool certified_absent = false;      // only in exhaustive mode
    bool budget_hit = false;
};

/**
 * Breadth-first search for a x-homotopy between p and q (same domain and
 * codomain). A miss within budget is inconclusive unless exhaustive mode
 * drained the whole reachable component.
 */
XHomotopyResult x_homotopic(const GraphMap& p, const GraphMap& q,
                            const XHomotopyOptions& opts = {});

/**
 * The universal map alpha: D_n -> G determined by k1: B -> G, k2: C -> G
 * and a x-homotopy K of height n with level 0 = k2 . g and level n = k1 . f.
 * Verified to be well defined on classes and a homomorphism.
 */
GraphMap universal_alpha(const Cylinder& cyl, const GraphMap& k1, const GraphMap& k2,
                         const HomotopyK& k);

/**
 * shrink_{m+k}: D_{m+n+k} -> D_n over the same spec: identity on B ⊔ C,
 * levels 0..k collapse to 0, k..k+n shift down by k, k+n..k+n+m collapse
 * to n.
 */
GraphMap shrink_map(const Cylinder& tall, int m, int k);

/**
 * Level-preserving map F: D_n -> D'_n induced by hA: A -> A', hB: B -> B',
 * hC: C -> C' with f'hA = hB f and g'hA = hC g on classes.
 */
GraphMap map_F(const Cylinder& cyl, const Cylinder& cyl2, const GraphMap& ha,
               const GraphMap& hb, const GraphMap& hc);

/**
 * F': D'_{l+n+l} -> D_n assembled from hA': A' -> A, hB': B' -> B,
 * hC': C' -> C and padding homotopies HB (f.hA' to hB'.f', height l, into B)
 * and HC (hC'.g' to g.hA', height l, into C).
 */
GraphMap map_Fprime(const Cylinder& tall_prime, const Cylinder& target, const GraphMap& ha_p,
                    const GraphMap& hb_p, const GraphMap& hc_p, const HomotopyK& hb,
                    const HomotopyK& hc, int l);

}  // namespace homcyl
