#pragma once

#include <string>
#include <vector>

#include "homcyl/graph.hpp"

namespace homcyl {

/**
 * Input data of a double mapping cylinder: homomorphisms f: A -> B and
 * g: A -> C plus a height n >= 1.
 */
struct CylinderSpec {
    Graph a, b, c;
    GraphMap f, g;
    int height = 1;

    /// Throws InputError when f or g is not a homomorphism A->B / A->C or
    /// the height is < 1.
    void validate() const;

    CylinderSpec with_height(int n) const;
};

/**
 * The double mapping cylinder D_n: quotient of B ⊔ (A x I_n) ⊔ C under
 * f(a) ~ (a,n) and g(a) ~ (a,0), with an edge between classes whenever some
 * representatives are adjacent in B, A x I_n or C.
 *
 * Class representatives are least members of the disjoint union in the
 * order B-vertices, then (a, level) pairs, then C-vertices, which makes the
 * construction and all labels deterministic.
 */
class Cylinder {
  public:
    static Cylinder build(CylinderSpec spec);

    const CylinderSpec& spec() const { return spec_; }
    const Graph& quotient() const { return d_; }
    int height() const { return spec_.height; }

    const GraphMap& j1() const { return j1_; }  // B -> D_n
    const GraphMap& j2() const { return j2_; }  // C -> D_n

    int b_class(int bv) const { return b_class_[bv]; }
    int c_class(int cv) const { return c_class_[cv]; }
    int level_class(int av, int level) const { return a_class_[av][level]; }

    /// Members of a quotient vertex, reported per part.
    const std::vector<int>& class_b_members(int dv) const { return members_b_[dv]; }
    const std::vector<int>& class_c_members(int dv) const { return members_c_[dv]; }
    const std::vector<std::pair<int, int>>& class_level_members(int dv) const
    {
        return members_a_[dv];
    }

    bool class_meets_b(int dv) const { return !members_b_[dv].empty(); }
    bool class_meets_c(int dv) const { return !members_c_[dv].empty(); }
    bool class_meets_level(int dv, int level) const;

  private:
    CylinderSpec spec_;
    Graph d_;
    GraphMap j1_, j2_;
    std::vector<int> b_class_, c_class_;
    std::vector<std::vector<int>> a_class_;  // [a][level]
    std::vector<std::vector<int>> members_b_, members_c_;
    std::vector<std::vector<std::pair<int, int>>> members_a_;
};

/// Shorthand: build the cylinder for the quoted spec.
Cylinder double_mapping_cylinder(const CylinderSpec& spec);

/**
 * Honest pushout: quotient of B ⊔ C by f(a) ~ g(a). `simple` records
 * whether the quotient is loop-free, which gates the colouring comparison
 * (it only applies to simple pushouts).
 */
struct Pushout {
    Graph graph;
    GraphMap from_b, from_c;
    bool simple = true;
};

Pushout pushout(const CylinderSpec& spec);

/**
 * The A/B/C split at a degree-2 cycle vertex c with neighbours a < b:
 * V(A)=V(B)=V(C)=V(G), E(A) = E(G) - {ac, cb}, E(B) = E(A) + ac,
 * E(C) = E(A) + cb, f and g identity-on-vertices inclusions.
 * pushout(result) is isomorphic to G.
 */
CylinderSpec abc_split(const Graph& g, int c, int height = 2);

}  // namespace homcyl
