#ifndef CFORGE_GERBE_HPP
#define CFORGE_GERBE_HPP

#include "cforge/descent.hpp"

namespace cforge {

// Cech-Deligne degree-3 data over a cover: curving B on the pieces,
// connection A on pairwise overlaps, f on triples, integer n on
// quadruples.  A degree-3 cocycle of the Cech total complex of the
// coefficient complex Z -> Q^0 -> Q^1 -> Q^2.
struct GerbeCocycle {
    const CechLevels* levels = nullptr;
    std::vector<RatCochain> curving;     // level 0, degree 2
    std::vector<RatCochain> connection;  // level 1, degree 1
    std::vector<RatCochain> f;           // level 2, degree 0
    std::vector<IntCochain> n;           // level 3, degree 0

    static GerbeCocycle zero(const CechLevels& lv);
};

enum class GerbeFlavor { bare, with_connection, with_connection_and_curving };

inline int flavor_height(GerbeFlavor fl) {
    switch (fl) {
        case GerbeFlavor::bare: return 1;
        case GerbeFlavor::with_connection: return 2;
        default: return 3;
    }
}

// Violated cocycle identities, deterministically ordered; layers below
// the flavor are ignored.  dn = 0 is explicit for the bare flavor and
// follows from the connection layer otherwise.
std::vector<std::string> validate_gerbe(const GerbeCocycle& g, GerbeFlavor flavor);

// Global dB: the pieces agree on overlaps and the result is closed.
RatCochain gerbe_curvature(const GerbeCocycle& g);

// Integral pairing helpers for period tests.
Rat pair_cochain_cycle(const RatCochain& w, const std::vector<Int>& cycle);

// Translate the gerbe to a differential 3-cocycle at the flavor's
// height by gluing the descent datum it defines.
DiffCochain gerbe_to_dc(const GerbeCocycle& g, GerbeFlavor flavor);

// Local integral trivializations against the flavor's normal forms,
// layer data extracted from arrow differences on overlaps.  Pieces and
// overlaps must have vanishing cohomology in the degrees used; checked
// and reported by index.
GerbeCocycle dc_to_gerbe(const DiffCochain& x, const CechLevels& lv, GerbeFlavor flavor);

// The transition 2-cocycle of the gerbe: f mod Z.
TransitionData gerbe_transition(const GerbeCocycle& g);

}  // namespace cforge

#endif
