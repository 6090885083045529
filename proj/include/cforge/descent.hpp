#ifndef CFORGE_DESCENT_HPP
#define CFORGE_DESCENT_HPP

#include <string>

#include "cforge/cover.hpp"
#include "cforge/diffcochain.hpp"

namespace cforge {

// Data on one Cech level, one differential cochain per piece.
using DCLevel = std::vector<DiffCochain>;

DCLevel dc_level_zero(const CechLevels& lv, int q, int s, int k);
DCLevel dc_cech_augment(const CechLevels& lv, const DiffCochain& x);
DCLevel dc_cech_d(const CechLevels& lv, int q, const DCLevel& x);
DCLevel dc_cech_h(const CechLevels& lv, int q, const DCLevel& x);
DiffCochain dc_cech_h_global(const CechLevels& lv, int s, int k, const DCLevel& x);
DCLevel dc_simplicial_d(const DCLevel& x);
DCLevel dc_level_add(const DCLevel& a, const DCLevel& b);
DCLevel dc_level_sub(const DCLevel& a, const DCLevel& b);
bool dc_level_is_zero(const DCLevel& x);

// Degree-3 descent datum over a cover: local cocycles a, overlap
// arrows b, triple-overlap 2-arrow data z.  Equivalently a total
// 3-cocycle of the truncated Cech double complex: the conditions are
// da = 0, (horizontal)a = db, (horizontal)b + dz = 0, (horizontal)z in im d.
struct DescentDatum {
    const CechLevels* levels = nullptr;
    int s = 1;
    DCLevel a;  // level 0, degree 3
    DCLevel b;  // level 1, degree 2
    DCLevel z;  // level 2, degree 1

    static DescentDatum zero(const CechLevels& lv, int s);
};

// Violated invariants in a fixed order; empty means valid.
std::vector<std::string> validate_descent(const DescentDatum& d);

DescentDatum restrict_to_cover(const DiffCochain& x, const CechLevels& lv);

// 1-arrow of the descent bicategory: components against which the
// gluing is machine-checked: delta(witness) = datum - restrict(global).
struct DescentArrow {
    DCLevel beta;  // level 0, degree 2
    DCLevel phi;   // level 1, degree 1
    DCLevel psi;   // level 2, degree 0
};

struct GlueResult {
    DiffCochain global;
    DescentArrow witness;
};

// Constructive half of the stack property: contract the highest Cech
// degree first, correcting with d, until a global cocycle remains.
GlueResult glue(const DescentDatum& d);

struct ArrowGlueResult {
    DiffCochain global_arrow;            // db = x1 - x2
    DCLevel two_arrow_witness;           // level 0, degree 1: du = beta - restrict(b)
    DCLevel overlap_witness;             // level 1, degree 0
};

// Glue local arrows beta_alpha : x1|_a -> x2|_a with overlap 2-arrow
// data phi into a global arrow, one degree below glue.
ArrowGlueResult descend_arrow(const CechLevels& lv, const DiffCochain& x1, const DiffCochain& x2,
                              const DCLevel& beta, const DCLevel& phi);

// Q/Z-valued transition 2-cocycles on triple intersections.
struct TransitionData {
    const CechLevels* levels = nullptr;
    std::vector<ModCochain> s;  // level 2, degree 0

    static TransitionData zero(const CechLevels& lv);
};

enum class LiftRule {
    unit_interval,       // representative in [0, 1)
    piece_shifted        // [0,1) + 1 + (piece index mod 2), constant per piece
};

// Lift s to Q, take the Cech coboundary (integer by the cocycle
// condition), collate through the contraction staircase, classify.
// Requires the integer coboundary of the lift to be locally constant:
// the discrete residue of continuity, and exactly what gerbe data
// provide.  h3 must present H^3 of the cover's base.
ClassCoordinates dd_class_from_transition(const TransitionData& t,
                                          const CohomologyPresentation& h3,
                                          LiftRule rule = LiftRule::unit_interval);

// The collation behind dd_class: a globally defined integer cocycle
// from a d-closed, horizontally closed corner element.
IntCochain collate_corner(const CechLevels& lv, const CechCochain<Int>& corner, int q);

}  // namespace cforge

#endif
