#include "cforge/descent.hpp"

#include <stdexcept>

namespace cforge {

namespace {

// Apply a Cochain-level Cech operation to each component of a level of
// differential cochains.
template <typename Op>
DCLevel componentwise(const CechLevels& lv, int out_q, int s, int k, const DCLevel& x, Op&& op) {
    if (x.empty()) return dc_level_zero(lv, out_q, s, k);
    const auto& pieces = lv.level(out_q);
    DCLevel out;
    out.reserve(pieces.size());

    CechCochain<Int> cs;
    CechCochain<Rat> hs, ws;
    for (const DiffCochain& d : x) {
        cs.push_back(d.c);
        if (d.has_h()) hs.push_back(*d.h);
        if (d.has_omega()) ws.push_back(*d.omega);
    }
    CechCochain<Int> cs2 = op(cs);
    CechCochain<Rat> hs2, ws2;
    if (k >= 1) hs2 = op(hs);
    if (k >= x.front().s) ws2 = op(ws);

    for (std::size_t t = 0; t < pieces.size(); ++t) {
        DiffCochain d(&pieces[t].cx, s, k);
        d.c = cs2[t];
        if (d.has_h()) d.h = hs2[t];
        if (d.has_omega()) d.omega = ws2[t];
        out.push_back(std::move(d));
    }
    return out;
}

int level_degree(const DCLevel& x, int fallback) {
    return x.empty() ? fallback : x.front().k;
}

int level_height(const DCLevel& x, int fallback) {
    return x.empty() ? fallback : x.front().s;
}

// Unique w with d w = (horizontal z) per level-3 piece; nullopt when
// some piece obstructs.  d is injective in degree 0, so uniqueness is
// automatic.
std::optional<DCLevel> im_d_witness(const CechLevels& lv, const DescentDatum& d) {
    DCLevel bz = dc_cech_d(lv, 2, d.z);
    const auto& pieces = lv.level(3);
    DCLevel w;
    for (std::size_t t = 0; t < pieces.size(); ++t) {
        DiffComplex dc(&pieces[t].cx, d.s);
        auto sol = dc.solver(0).solve(dc.to_vec(bz[t]));
        if (!sol) return std::nullopt;
        w.push_back(dc.from_vec(0, *sol));
    }
    return w;
}

}  // namespace

DCLevel dc_level_zero(const CechLevels& lv, int q, int s, int k) {
    DCLevel out;
    for (const auto& piece : lv.level(q)) out.push_back(DiffCochain::zero(&piece.cx, s, k));
    return out;
}

DCLevel dc_cech_augment(const CechLevels& lv, const DiffCochain& x) {
    DCLevel out;
    for (const auto& piece : lv.level(0)) out.push_back(restrict_dc(x, &piece.cx));
    return out;
}

DCLevel dc_cech_d(const CechLevels& lv, int q, const DCLevel& x) {
    const int k = level_degree(x, 0), s = level_height(x, 1);
    return componentwise(lv, q + 1, s, k, x,
                         [&](const auto& comp) { return cech_d(lv, q, comp); });
}

DCLevel dc_cech_h(const CechLevels& lv, int q, const DCLevel& x) {
    const int k = level_degree(x, 0), s = level_height(x, 1);
    return componentwise(lv, q - 1, s, k, x,
                         [&](const auto& comp) { return cech_h(lv, q, comp); });
}

DiffCochain dc_cech_h_global(const CechLevels& lv, int s, int k, const DCLevel& x) {
    DiffCochain out(&lv.cover().base(), s, k);
    CechCochain<Int> cs;
    CechCochain<Rat> hs, ws;
    for (const DiffCochain& d : x) {
        cs.push_back(d.c);
        if (d.has_h()) hs.push_back(*d.h);
        if (d.has_omega()) ws.push_back(*d.omega);
    }
    out.c = cech_h_to_global(lv, cs);
    if (out.has_h()) out.h = cech_h_to_global(lv, hs);
    if (out.has_omega()) out.omega = cech_h_to_global(lv, ws);
    return out;
}

DCLevel dc_simplicial_d(const DCLevel& x) {
    DCLevel out;
    for (const DiffCochain& d : x) out.push_back(dc_differential(d));
    return out;
}

DCLevel dc_level_add(const DCLevel& a, const DCLevel& b) {
    DCLevel out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b[i];
    return out;
}

DCLevel dc_level_sub(const DCLevel& a, const DCLevel& b) {
    DCLevel out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - b[i];
    return out;
}

bool dc_level_is_zero(const DCLevel& x) {
    for (const DiffCochain& d : x)
        if (!d.is_zero()) return false;
    return true;
}

DescentDatum DescentDatum::zero(const CechLevels& lv, int s) {
    DescentDatum d;
    d.levels = &lv;
    d.s = s;
    d.a = dc_level_zero(lv, 0, s, 3);
    d.b = dc_level_zero(lv, 1, s, 2);
    d.z = dc_level_zero(lv, 2, s, 1);
    return d;
}

std::vector<std::string> validate_descent(const DescentDatum& d) {
    const CechLevels& lv = *d.levels;
    std::vector<std::string> bad;
    for (const DiffCochain& x : d.a)
        if (!is_cocycle(x)) {
            bad.push_back("d a != 0");
            break;
        }
    if (!dc_level_is_zero(dc_level_sub(dc_cech_d(lv, 0, d.a), dc_simplicial_d(d.b))))
        bad.push_back("horizontal a != d b");
    if (!dc_level_is_zero(dc_level_add(dc_cech_d(lv, 1, d.b), dc_simplicial_d(d.z))))
        bad.push_back("horizontal b + d z != 0");
    if (lv.max_level() >= 3 && !im_d_witness(lv, d))
        bad.push_back("horizontal z not in im d");
    return bad;
}

DescentDatum restrict_to_cover(const DiffCochain& x, const CechLevels& lv) {
    if (!is_cocycle(x)) throw std::invalid_argument("restriction requires a cocycle");
    DescentDatum d = DescentDatum::zero(lv, x.s);
    d.a = dc_cech_augment(lv, x);
    return d;
}

GlueResult glue(const DescentDatum& d) {
    auto bad = validate_descent(d);
    if (!bad.empty()) throw std::invalid_argument("invalid descent datum: " + bad.front());
    const CechLevels& lv = *d.levels;
    const int s = d.s;

    // Kill the z layer: t3 = h(w) where d w = horizontal z.
    DCLevel t3 = dc_level_zero(lv, 2, s, 0);
    DCLevel z1 = d.z;
    if (lv.max_level() >= 3) {
        auto w = im_d_witness(lv, d);
        t3 = dc_cech_h(lv, 3, *w);
        z1 = dc_level_sub(d.z, dc_simplicial_d(t3));
    }
    // Now horizontal z1 = 0; kill it with the row contraction.
    DCLevel t2 = lv.max_level() >= 2 ? dc_cech_h(lv, 2, z1) : dc_level_zero(lv, 1, s, 1);
    DCLevel b2 = dc_level_add(d.b, dc_simplicial_d(t2));
    // horizontal b2 = 0; contract once more.
    DCLevel t1 = lv.max_level() >= 1 ? dc_cech_h(lv, 1, b2) : dc_level_zero(lv, 0, s, 2);
    DCLevel a1 = dc_level_sub(d.a, dc_simplicial_d(t1));

    if (!dc_level_is_zero(dc_cech_d(lv, 0, a1)))
        throw std::logic_error("glue staircase failed to level the local pieces");
    DiffCochain g = dc_cech_h_global(lv, s, 3, a1);
    if (!is_cocycle(g)) throw std::logic_error("glued cochain is not a cocycle");

    GlueResult res{g, DescentArrow{t1, t2, t3}};

    // Machine-check delta(witness) = datum - restrict(g).
    DCLevel ga = dc_cech_augment(lv, g);
    if (!dc_level_is_zero(dc_level_sub(dc_level_add(dc_simplicial_d(t1), ga), d.a)))
        throw std::logic_error("glue witness fails at the object layer");
    if (lv.max_level() >= 1) {
        DCLevel lhs = dc_level_sub(dc_cech_d(lv, 0, t1), dc_simplicial_d(t2));
        if (!dc_level_is_zero(dc_level_sub(lhs, d.b)))
            throw std::logic_error("glue witness fails at the arrow layer");
    }
    if (lv.max_level() >= 2) {
        DCLevel lhs = dc_level_add(dc_cech_d(lv, 1, t2), dc_simplicial_d(t3));
        if (!dc_level_is_zero(dc_level_sub(lhs, d.z)))
            throw std::logic_error("glue witness fails at the 2-arrow layer");
    }
    return res;
}

ArrowGlueResult descend_arrow(const CechLevels& lv, const DiffCochain& x1, const DiffCochain& x2,
                              const DCLevel& beta, const DCLevel& phi) {
    x1.check_shape(x2);
    const int s = x1.s;
    DiffCochain diff = x1 - x2;

    // Local arrows must trivialize the restricted difference.
    DCLevel rdiff = dc_cech_augment(lv, diff);
    if (!dc_level_is_zero(dc_level_sub(dc_simplicial_d(beta), rdiff)))
        throw std::invalid_argument("local arrows do not connect the restrictions");
    // 1-arrow coherence: horizontal beta = d phi.
    if (!dc_level_is_zero(dc_level_sub(dc_cech_d(lv, 0, beta), dc_simplicial_d(phi))))
        throw std::invalid_argument("incoherent overlap data: horizontal beta != d phi");

    // psi: unique solution of d psi = -(horizontal phi) on triples.
    DCLevel psi = dc_level_zero(lv, 2, s, 0);
    if (lv.max_level() >= 2) {
        DCLevel target = dc_cech_d(lv, 1, phi);
        const auto& pieces = lv.level(2);
        for (std::size_t t = 0; t < pieces.size(); ++t) {
            DiffComplex dc(&pieces[t].cx, s);
            auto sol = dc.solver(0).solve(dc.to_vec(-target[t]));
            if (!sol)
                throw std::invalid_argument("incoherent overlap data on triple overlaps");
            psi[t] = dc.from_vec(0, *sol);
        }
    }

    DCLevel v = lv.max_level() >= 2 ? dc_cech_h(lv, 2, psi) : dc_level_zero(lv, 1, s, 0);
    DCLevel phi1 = dc_level_add(phi, dc_simplicial_d(v));
    DCLevel u = lv.max_level() >= 1 ? dc_cech_h(lv, 1, phi1) : dc_level_zero(lv, 0, s, 1);
    DCLevel beta2 = dc_level_sub(beta, dc_simplicial_d(u));
    if (!dc_level_is_zero(dc_cech_d(lv, 0, beta2)))
        throw std::logic_error("arrow staircase failed to level the local arrows");
    DiffCochain b = dc_cech_h_global(lv, s, 2, beta2);
    if (!(dc_differential(b) == diff))
        throw std::logic_error("glued arrow does not connect the global objects");

    // Witness checks: d u = beta - restrict(b), horizontal(u) - d v = phi.
    DCLevel rb = dc_cech_augment(lv, b);
    if (!dc_level_is_zero(dc_level_sub(dc_simplicial_d(u), dc_level_sub(beta, rb))))
        throw std::logic_error("arrow witness fails at level 0");
    if (lv.max_level() >= 1) {
        DCLevel lhs = dc_level_sub(dc_cech_d(lv, 0, u), dc_simplicial_d(v));
        if (!dc_level_is_zero(dc_level_sub(lhs, phi)))
            throw std::logic_error("arrow witness fails at level 1");
    }
    return ArrowGlueResult{b, u, v};
}

TransitionData TransitionData::zero(const CechLevels& lv) {
    TransitionData t;
    t.levels = &lv;
    for (const auto& piece : lv.level(2)) t.s.push_back(ModCochain(&piece.cx, 0));
    return t;
}

IntCochain collate_corner(const CechLevels& lv, const CechCochain<Int>& corner, int q) {
    // The element sits at Cech degree q, simplicial degree 0, killed by
    // both differentials.  Each step subtracts delta(h(carried)), which
    // replaces the carried component by (-1)^q d h(carried) one Cech
    // level down and one simplicial degree up.
    CechCochain<Int> carried = corner;
    while (q > 0) {
        CechCochain<Int> u = cech_h(lv, q, carried);
        carried = cech_simplicial_d(u);
        if (q % 2 != 0)
            for (auto& piece : carried)
                for (auto& val : piece.values) val = -val;
        --q;
    }
    return cech_h_to_global(lv, carried);
}

ClassCoordinates dd_class_from_transition(const TransitionData& t,
                                          const CohomologyPresentation& h3, LiftRule rule) {
    const CechLevels& lv = *t.levels;
    // cocycle condition in Q/Z
    if (lv.max_level() >= 3) {
        CechCochain<QmodZ> bd = cech_d(lv, 2, t.s);
        if (!cech_is_zero(bd))
            throw std::invalid_argument("transition data violates the 2-cocycle condition");
    }

    // lift to Q
    CechCochain<Rat> lifted;
    for (std::size_t i = 0; i < t.s.size(); ++i) {
        RatCochain c(t.s[i].cx, 0);
        Rat shift(0);
        if (rule == LiftRule::piece_shifted) shift = Rat(1 + static_cast<long>(i % 2));
        for (std::size_t j = 0; j < c.values.size(); ++j) c.values[j] = t.s[i].values[j].v + shift;
        lifted.push_back(std::move(c));
    }

    if (lv.max_level() < 3) {
        // no quadruple overlaps: the coboundary vanishes and so does the class
        return h3.class_coords(std::vector<Int>(lv.cover().base().count(3), Int(0)));
    }

    CechCochain<Rat> nq = cech_d(lv, 2, lifted);
    CechCochain<Int> n;
    for (const auto& piece : nq) n.push_back(integral_part(piece));
    for (const auto& piece : n)
        if (!coboundary(piece).is_zero())
            throw std::invalid_argument(
                "transition data has no locally constant integer coboundary under this lift");
    if (lv.max_level() >= 4) {
        CechCochain<Int> dn = cech_d(lv, 3, n);
        if (!cech_is_zero(dn)) throw std::logic_error("coboundary of a coboundary nonzero");
    }

    IntCochain c = collate_corner(lv, n, 3);
    if (!coboundary(c).is_zero()) throw std::logic_error("collated cochain is not a cocycle");
    return h3.class_coords(c.values);
}

}  // namespace cforge
