#include "homcyl/connectivity.hpp"

#include <sstream>

namespace homcyl {

std::string ConnectivityReport::to_string() const
{
    std::ostringstream out;
    if (empty) return "empty complex (conn sentinel -2)";
    out << "certified_conn " << certified_conn << " (homological " << homological_conn;
    if (homological_unbounded) out << "+, acyclic";
    out << "), pi1 ";
    switch (pi1) {
        case Pi1Status::trivial_certified: out << "trivial"; break;
        case Pi1Status::nontrivial_certified: out << "nontrivial"; break;
        case Pi1Status::unknown: out << "unknown"; break;
    }
    if (weakly_contractible) out << ", weakly contractible";
    return out.str();
}

ConnectivityReport connectivity_report(const SimplicialComplex& k, const ConnectivityOptions& opts)
{
    ConnectivityReport rep;
    if (k.empty()) {
        rep.empty = true;
        rep.notes = "empty complex";
        return rep;
    }

    rep.path_connected = k.component_count() == 1;
    rep.homology = homology(k, /*reduced=*/true);
    const auto& betti = rep.homology.betti;
    const int dim = static_cast<int>(betti.size()) - 1;

    auto reduced_trivial_through = [&](int deg) {
        for (int i = 0; i <= deg && i <= dim; ++i) {
            if (betti[i] != 0) return false;
            if (!rep.homology.torsion[i].empty()) return false;
        }
        return true;
    };

    rep.h1_trivial = dim < 1 || (betti[1] == 0 && rep.homology.torsion[1].empty());

    if (!rep.path_connected) {
        rep.homological_conn = -1;
        rep.certified_conn = -1;
        rep.pi1 = Pi1Status::unknown;
        rep.notes = "disconnected";
        return rep;
    }

    // Largest k with all reduced homology trivial through degree k.
    int hconn = -1;
    while (hconn < dim && reduced_trivial_through(hconn + 1)) ++hconn;
    if (hconn == dim) {
        rep.homological_unbounded = true;  // acyclic: trivial in all degrees
    }
    rep.homological_conn = hconn;

    // pi1 certification.
    if (!rep.h1_trivial) {
        rep.pi1 = Pi1Status::nontrivial_certified;  // abelianization is nonzero
    } else {
        Presentation p = tietze_simplify(pi1_presentation(k), opts.tietze_budget);
        if (p.certified_trivial())
            rep.pi1 = Pi1Status::trivial_certified;
        else if (!p.is_free() || p.generator_count == 0)
            rep.pi1 = Pi1Status::unknown;
        else
            // Free of positive rank contradicts H_1 = 0; cannot happen for
            // a correct presentation, treat as unknown.
            rep.pi1 = Pi1Status::unknown;
        std::ostringstream note;
        note << "pi1 presentation simplified to " << p.to_string();
        rep.notes = note.str();
    }

    // Certified connectivity ladder.
    int cert = 0;  // path-connected established above
    if (rep.pi1 == Pi1Status::trivial_certified && rep.h1_trivial) {
        cert = 1;
        int reach = rep.homological_unbounded ? dim : rep.homological_conn;
        for (int kdeg = 2; kdeg <= reach; ++kdeg) cert = kdeg;
        if (rep.homological_unbounded) rep.weakly_contractible = true;
    }
    rep.certified_conn = cert;
    return rep;
}

}  // namespace homcyl
