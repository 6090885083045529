#include "cforge/gerbe.hpp"

#include <stdexcept>

namespace cforge {

namespace {

std::vector<RatCochain> rat_level_zero(const CechLevels& lv, int q, int p) {
    std::vector<RatCochain> out;
    for (const auto& piece : lv.level(q)) out.push_back(RatCochain(&piece.cx, p));
    return out;
}

bool rat_level_zero_p(const std::vector<RatCochain>& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<RatCochain> to_rat_level(const std::vector<IntCochain>& x) {
    std::vector<RatCochain> out;
    for (const auto& c : x) out.push_back(to_rational(c));
    return out;
}

}  // namespace

GerbeCocycle GerbeCocycle::zero(const CechLevels& lv) {
    GerbeCocycle g;
    g.levels = &lv;
    g.curving = rat_level_zero(lv, 0, 2);
    g.connection = rat_level_zero(lv, 1, 1);
    g.f = rat_level_zero(lv, 2, 0);
    for (const auto& piece : lv.level(3)) g.n.push_back(IntCochain(&piece.cx, 0));
    return g;
}

std::vector<std::string> validate_gerbe(const GerbeCocycle& g, GerbeFlavor flavor) {
    const CechLevels& lv = *g.levels;
    std::vector<std::string> bad;

    if (flavor == GerbeFlavor::with_connection_and_curving && lv.max_level() >= 1) {
        auto bB = cech_d(lv, 0, g.curving);
        auto dA = cech_simplicial_d(g.connection);
        if (!cech_is_zero(cech_sub(bB, dA))) bad.push_back("horizontal B != d A");
    }
    if (flavor != GerbeFlavor::bare && lv.max_level() >= 2) {
        auto bA = cech_d(lv, 1, g.connection);
        auto df = cech_simplicial_d(g.f);
        if (!cech_is_zero(cech_sub(bA, df))) bad.push_back("horizontal A != d f");
    }
    if (lv.max_level() >= 3) {
        auto bf = cech_d(lv, 2, g.f);
        if (!cech_is_zero(cech_sub(bf, to_rat_level(g.n)))) bad.push_back("horizontal f != n");
        if (lv.max_level() >= 4) {
            auto bn = cech_d(lv, 3, g.n);
            if (!cech_is_zero(bn)) bad.push_back("horizontal n != 0");
        }
        bool loc_const = true;
        for (const auto& piece : g.n)
            if (!coboundary(piece).is_zero()) loc_const = false;
        if (!loc_const) bad.push_back("d n != 0");
    }
    return bad;
}

RatCochain gerbe_curvature(const GerbeCocycle& g) {
    auto bad = validate_gerbe(g, GerbeFlavor::with_connection_and_curving);
    if (!bad.empty()) throw std::invalid_argument("invalid gerbe datum: " + bad.front());
    const CechLevels& lv = *g.levels;
    std::vector<RatCochain> dB = cech_simplicial_d(g.curving);
    if (lv.max_level() >= 1 && !cech_is_zero(cech_d(lv, 0, dB)))
        throw std::logic_error("curvature pieces disagree on overlaps");
    RatCochain w = cech_h_to_global(lv, dB);
    if (!coboundary(w).is_zero()) throw std::logic_error("curvature is not closed");
    return w;
}

Rat pair_cochain_cycle(const RatCochain& w, const std::vector<Int>& cycle) {
    if (cycle.size() != w.values.size()) throw std::invalid_argument("pairing shape mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (cycle[i] != 0) acc += w.values[i] * Rat(cycle[i]);
    return acc;
}

DiffCochain gerbe_to_dc(const GerbeCocycle& g, GerbeFlavor flavor) {
    auto bad = validate_gerbe(g, flavor);
    if (!bad.empty()) throw std::invalid_argument("invalid gerbe datum: " + bad.front());
    const CechLevels& lv = *g.levels;
    const int s = flavor_height(flavor);

    DescentDatum d = DescentDatum::zero(lv, s);
    // a = (0, B, dB) on pieces; b and z carry the connection and f
    // layers with the signs fixed by db = source - target.
    for (std::size_t t = 0; t < d.a.size(); ++t) {
        if (flavor == GerbeFlavor::with_connection_and_curving) {
            d.a[t].h = g.curving[t];
            d.a[t].omega = coboundary(g.curving[t]);
        }
    }
    for (std::size_t t = 0; t < d.b.size(); ++t) {
        if (flavor == GerbeFlavor::with_connection_and_curving) {
            d.b[t].h = -g.connection[t];
        } else if (flavor == GerbeFlavor::with_connection) {
            d.b[t].h = -g.connection[t];
            d.b[t].omega = coboundary(g.connection[t]);
        }
    }
    for (std::size_t t = 0; t < d.z.size(); ++t) {
        d.z[t].h = -g.f[t];
        if (flavor == GerbeFlavor::bare) d.z[t].omega = -coboundary(g.f[t]);
    }
    return glue(d).global;
}

GerbeCocycle dc_to_gerbe(const DiffCochain& x, const CechLevels& lv, GerbeFlavor flavor) {
    if (x.k != 3) throw std::invalid_argument("dc_to_gerbe expects a degree-3 cocycle");
    if (x.s != flavor_height(flavor))
        throw std::invalid_argument("cocycle height does not match the flavor");
    if (!is_cocycle(x)) throw std::invalid_argument("dc_to_gerbe expects a cocycle");

    GerbeCocycle g = GerbeCocycle::zero(lv);

    auto cob = [](const SimplicialComplex& u, int k) -> IntMatrix {
        if (k >= 0 && k <= u.dim()) return u.coboundary_matrix(k);
        return IntMatrix(u.count(k + 1), u.count(k));
    };
    auto solve_d = [&](const SimplicialComplex& u, int k, const IntCochain& rhs,
                       const std::string& where) -> IntCochain {
        auto sol = solve_integer_system(cob(u, k), rhs.values);
        if (!sol) throw std::invalid_argument("local trivialization fails on " + where);
        IntCochain out(&u, k);
        out.values = sol->particular;
        return out;
    };

    // Integral trivializations c_t per piece: d c_t = c_x restricted.
    std::vector<IntCochain> ct;
    for (std::size_t t = 0; t < lv.level(0).size(); ++t) {
        const SimplicialComplex& u = lv.level(0)[t].cx;
        ct.push_back(solve_d(u, 2, restrict_cochain(x.c, &u), "cover set " + std::to_string(t)));
    }

    // u layer: d u = c_t difference on pairwise overlaps.
    std::vector<IntCochain> ulayer;
    for (std::size_t t = 0; t < lv.level(1).size(); ++t) {
        const auto& piece = lv.level(1)[t];
        IntCochain diff = restrict_cochain(ct[piece.tuple[0]], &piece.cx) -
                          restrict_cochain(ct[piece.tuple[1]], &piece.cx);
        ulayer.push_back(solve_d(piece.cx, 1, diff,
                                 "overlap (" + std::to_string(piece.tuple[0]) + "," +
                                     std::to_string(piece.tuple[1]) + ")"));
    }

    // v layer: d v = horizontal(u) on triples.
    std::vector<IntCochain> vlayer;
    if (lv.max_level() >= 2 && !ulayer.empty()) {
        CechCochain<Int> bu = cech_d(lv, 1, ulayer);
        for (std::size_t t = 0; t < lv.level(2).size(); ++t)
            vlayer.push_back(solve_d(lv.level(2)[t].cx, 0, bu[t],
                                     "triple overlap " + std::to_string(t)));
    }

    // Layers: B = h_x + c_t, A = -u, f = -v, n = -horizontal(v).
    for (std::size_t t = 0; t < lv.level(0).size(); ++t) {
        const SimplicialComplex& u = lv.level(0)[t].cx;
        g.curving[t] = restrict_cochain(*x.h, &u) + to_rational(ct[t]);
    }
    for (std::size_t t = 0; t < ulayer.size(); ++t)
        g.connection[t] = to_rational(-ulayer[t]);
    for (std::size_t t = 0; t < vlayer.size(); ++t) g.f[t] = to_rational(-vlayer[t]);
    if (lv.max_level() >= 3 && !vlayer.empty()) {
        CechCochain<Int> bv = cech_d(lv, 2, vlayer);
        for (std::size_t t = 0; t < bv.size(); ++t) {
            g.n[t] = -bv[t];
        }
    }

    auto bad = validate_gerbe(g, flavor);
    if (!bad.empty())
        throw std::logic_error("extracted gerbe datum invalid: " + bad.front());
    return g;
}

TransitionData gerbe_transition(const GerbeCocycle& g) {
    TransitionData t = TransitionData::zero(*g.levels);
    for (std::size_t i = 0; i < g.f.size(); ++i) t.s[i] = mod_one(g.f[i]);
    return t;
}

}  // namespace cforge
