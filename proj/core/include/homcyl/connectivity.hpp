#pragma once

#include <string>

#include "homcyl/chain.hpp"
#include "homcyl/presentation.hpp"
#include "homcyl/simplicial.hpp"

namespace homcyl {

/// Sentinels: conn(empty) = -2, conn(disconnected) = -1. `unbounded` marks
/// a complex all of whose reduced homology vanishes (no finite conn value
/// is implied by the data; the true connectivity exceeds the dimension).
inline constexpr int kConnEmpty = -2;

enum class Pi1Status {
    trivial_certified,
    nontrivial_certified,
    unknown,
};

struct ConnectivityReport {
    bool empty = false;
    bool path_connected = false;
    bool h1_trivial = false;
    Pi1Status pi1 = Pi1Status::unknown;
    int homological_conn = kConnEmpty;  // largest k with reduced H_i = 0 for i <= k
    int certified_conn = kConnEmpty;    // certified through pi1 + Hurewicz
    bool homological_unbounded = false; // all computed reduced homology vanishes
    bool weakly_contractible = false;   // the above plus certified trivial pi1
    std::string notes;
    HomologyResult homology;

    std::string to_string() const;
};

struct ConnectivityOptions {
    long long tietze_budget = 10'000'000;
    int max_facet_size = 25;
};

/**
 * Certified connectivity of a simplicial complex.
 *
 * certified_conn: -2 empty, -1 disconnected; 0 needs path-connectivity;
 * 1 needs a certified-trivial pi1 plus H_1 = 0; k >= 2 additionally needs
 * H_i = 0 for i <= k (Hurewicz). pi1 certification is one-sided: an
 * emptied presentation certifies triviality, nonzero H_1 certifies
 * nontriviality, anything else stays unknown.
 */
ConnectivityReport connectivity_report(const SimplicialComplex& k,
                                       const ConnectivityOptions& opts = {});

}  // namespace homcyl
