#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcyl/chain.hpp"
#include "homcyl/cylinder.hpp"
#include "homcyl/hom_complex.hpp"

namespace homcyl {

/**
 * The vertex strata of a cylinder quotient: X = V(B) minus the glued image
 * of A, Y = the glued image f(A) (= level n), Z = level n-1, Z' the rest.
 * For heights >= 2 these are the literal sets; the subtraction order keeps
 * them a partition in every case.
 */
struct Strata {
    std::vector<int> x, y, z, zprime;  // quotient vertex ids, sorted
};

Strata strata(const Cylinder& cyl);

enum class CellKind {
    pure_axi,  // image inside f(A) ∪ interior levels ∪ g(A)
    pure_b,
    pure_c,
    mixed_4,   // meets B \ f(A) and the levels 1..n
    mixed_5,   // meets C \ g(A) and the levels 0..n-1
    mixed_6,   // meets B \ f(A), an interior level, and C \ g(A)
};

struct CellClass {
    CellKind kind;
    bool faulty = false;
    // Raw predicate bits (1)-(6) for the exclusivity audit.
    std::array<bool, 6> predicates{};
};

/// Classifies a maximal cell of Hom(T, D_n) by the decision ladder
/// pure-B, pure-C, pure-AxI, mixed-6, mixed-4, mixed-5. Throws
/// PropertyViolation when no predicate matches (cannot happen for
/// connected T and n >= 2).
CellClass classify_cell(const Cell& eta, const Cylinder& cyl);

struct PureFaceCheck {
    bool from_b = false;
    bool from_c = false;
    bool from_axi = false;
    bool any() const { return from_b || from_c || from_axi; }
};

/// Does the maximal cell have a face lying wholly inside Hom(T,B),
/// Hom(T,C) or Hom(T, A x I_n)? The B/C tests are coordinate-wise
/// intersections; the A x I_n test searches for a vertex cell of
/// Hom(T, A x I_n) inside eta (equivalent, and sound for non-injective
/// gluings).
PureFaceCheck pure_faces(const Cell& eta, const Graph& t, const Cylinder& cyl);
bool has_pure_face(const Cell& eta, const Graph& t, const Cylinder& cyl);

struct ObsViolation {
    int cell_index;
    std::string what;
};

struct ObsAuditReport {
    int cells_checked = 0;
    std::vector<ObsViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the three structural implications on every maximal cell of
/// Hom(T, D_n): (1) all coordinates meeting X ∪ Y forces the image into
/// X ∪ Y ∪ Z; (2) a coordinate meeting X and Z meets Y; (3) under the
/// hypothesis of (1) the image avoids V(C). T must have no isolated
/// vertices.
ObsAuditReport lemma_obs_audit(const Cylinder& cyl, const Graph& t,
                               const HomBudget& budget = {});

/**
 * deltaHom: the union of the three pure families of Hom(T, D_n), i.e. the
 * images of Hom(T,B), Hom(T, A x I_n) and Hom(T,C) in quotient
 * coordinates, as a face poset. Requires n >= diam(T) + 1.
 */
FacePoset delta_hom_poset(const Graph& t, const Cylinder& cyl, const HomBudget& budget = {});

/// Order complex of the deltaHom poset.
SimplicialComplex delta_hom(const Graph& t, const Cylinder& cyl, const HomBudget& budget = {});

/**
 * The tail sequence of a faulty mixed maximal cell: level-shifted maximal
 * cells with pairwise nonempty consecutive intersections, ending at a cell
 * meeting Hom(T,B) (type 4) or Hom(T,C) (type 5). Requires stiff T other
 * than K_2 and a faulty input cell.
 */
std::vector<Cell> faulty_tail(const Cell& eta, const Graph& t, const Cylinder& cyl);

struct AppendixAuditReport {
    int maximal_cells = 0;
    std::vector<long long> class_histogram = std::vector<long long>(6, 0);
    int faulty_cells = 0;
    bool classification_exclusive = true;     // disjointified predicates one-hot
    bool no_type_6 = true;
    bool all_have_pure_face = true;           // evaluated only when expected
    std::vector<int> cells_without_pure_face;
    ObsAuditReport obs;
    bool delta_matches_full = false;          // Betti+torsion equality
    HomologyResult delta_homology;
    HomologyResult full_homology;
    struct TailRecord {
        int cell_index;
        int expected_length;
        int actual_length;
        bool intersections_ok;
        bool terminates_ok;
        bool members_maximal;
    };
    std::vector<TailRecord> tails;  // one per faulty cell (stiff T != K_2 only)
    bool tails_ok = true;
    std::string notes;
};

struct AppendixAuditOptions {
    HomBudget budget;
    bool run_tails = true;
};

/// Full audit of the classification machinery on Hom(T, D_n).
AppendixAuditReport audit_appendix(const CylinderSpec& spec, const Graph& t,
                                   const AppendixAuditOptions& opts = {});

}  // namespace homcyl
