#include "cforge/fixtures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cforge {
namespace fixtures {

SimplicialComplex point() { return SimplicialComplex(1, {{0}}); }

SimplicialComplex circle3() { return SimplicialComplex(3, {{0, 1}, {0, 2}, {1, 2}}); }

SimplicialComplex sphere2() {
    return SimplicialComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex sphere3() {
    std::vector<Simplex> tops;
    for (int skip = 0; skip < 5; ++skip) {
        Simplex s;
        for (int v = 0; v < 5; ++v)
            if (v != skip) s.push_back(v);
        tops.push_back(s);
    }
    return SimplicialComplex(5, tops);
}

SimplicialComplex rp2_6() {
    // Minimal triangulation; every pair of vertices is an edge.
    return SimplicialComplex(6, {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5},
                                 {0, 4, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5},
                                 {2, 3, 4}, {3, 4, 5}});
}

SimplicialComplex torus7() {
    // Csaszar torus: 7 vertices, complete 1-skeleton, 14 triangles.
    std::vector<Simplex> tops;
    for (int i = 0; i < 7; ++i) {
        Simplex a = {i, (i + 1) % 7, (i + 3) % 7};
        Simplex b = {i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        tops.push_back(a);
        tops.push_back(b);
    }
    return SimplicialComplex(7, tops);
}

namespace {

// Lift the projective plane to its orientation double cover by
// backtracking over the two lifts of each face, keeping every lifted
// edge on at most two lifted faces.  Vertex v lifts to v and v + 6.
struct IcosaLift {
    std::vector<Simplex> base_faces;
    std::vector<int> sign_choice;         // one of 4 sign patterns per face
    std::map<Simplex, int> edge_use;
    std::vector<Simplex> lifted;

    static Simplex lift_face(const Simplex& f, int pattern) {
        // pattern bits choose the sign of the 2nd and 3rd vertex
        // relative to the 1st; the global flip is the deck partner.
        Simplex out = {f[0], f[1] + ((pattern & 1) ? 6 : 0), f[2] + ((pattern & 2) ? 6 : 0)};
        std::sort(out.begin(), out.end());
        return out;
    }

    static Simplex deck(const Simplex& s) {
        Simplex out;
        for (int v : s) out.push_back((v + 6) % 12);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool place(const Simplex& face) {
        std::vector<Simplex> edges;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                edges.push_back({std::min(face[i], face[j]), std::max(face[i], face[j])});
        for (const Simplex& e : edges)
            if (edge_use[e] >= 2) return false;
        for (const Simplex& e : edges) ++edge_use[e];
        return true;
    }

    void unplace(const Simplex& face) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                --edge_use[{std::min(face[i], face[j]), std::max(face[i], face[j])}];
    }

    bool connected() const {
        std::vector<int> comp(12, -1);
        std::vector<int> stack = {lifted.front()[0]};
        comp[stack.back()] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Simplex& f : lifted) {
                if (std::find(f.begin(), f.end(), v) == f.end()) continue;
                for (int w : f)
                    if (comp[w] < 0) {
                        comp[w] = 0;
                        stack.push_back(w);
                    }
            }
        }
        for (int c : comp)
            if (c < 0) return false;
        return true;
    }

    bool solve(std::size_t idx) {
        if (idx == base_faces.size()) {
            for (const auto& [e, uses] : edge_use)
                if (uses != 0 && uses != 2) return false;
            // The trivial disconnected lift (two projective planes) also
            // passes the edge counts; the orientation cover is connected.
            return connected();
        }
        for (int pattern = 0; pattern < 4; ++pattern) {
            Simplex a = lift_face(base_faces[idx], pattern);
            Simplex b = deck(a);
            if (!place(a)) continue;
            if (!place(b)) {
                unplace(a);
                continue;
            }
            lifted.push_back(a);
            lifted.push_back(b);
            if (solve(idx + 1)) return true;
            lifted.pop_back();
            lifted.pop_back();
            unplace(b);
            unplace(a);
        }
        return false;
    }
};

std::vector<Simplex> icosa_faces() {
    static std::vector<Simplex> cached;
    if (!cached.empty()) return cached;
    IcosaLift lift;
    for (const Simplex& f : rp2_6().simplices(2)) lift.base_faces.push_back(f);
    if (!lift.solve(0)) throw std::logic_error("double cover lift failed");
    cached = lift.lifted;
    return cached;
}

}  // namespace

SimplicialComplex icosahedron() { return SimplicialComplex(12, icosa_faces()); }

std::vector<int> icosahedron_antipodal() {
    std::vector<int> perm(12);
    for (int v = 0; v < 12; ++v) perm[v] = (v + 6) % 12;
    return perm;
}

std::vector<int> icosahedron_quotient_map() {
    std::vector<int> proj(12);
    for (int v = 0; v < 12; ++v) proj[v] = v % 6;
    return proj;
}

std::vector<SimplicialComplex> star_cover_sets(const SimplicialComplex& x) {
    std::vector<SimplicialComplex> sets;
    for (int v : x.support()) sets.push_back(x.closed_star(v));
    return sets;
}

Cover star_cover(const SimplicialComplex& x) {
    return Cover(&x, star_cover_sets(x));
}

Cover two_set_cover(const SimplicialComplex& x) {
    std::vector<Simplex> tops = x.maximal_simplices();
    const std::size_t half = (tops.size() + 1) / 2;
    std::vector<Simplex> first(tops.begin(), tops.begin() + half);
    std::vector<Simplex> second(tops.begin() + half, tops.end());
    if (second.empty()) second = first;
    std::vector<SimplicialComplex> sets;
    sets.emplace_back(x.ambient_vertices(), first);
    sets.emplace_back(x.ambient_vertices(), second);
    return Cover(&x, std::move(sets));
}

Cover facet_cover_sphere3(const SimplicialComplex& x) {
    std::vector<SimplicialComplex> sets;
    for (const Simplex& top : x.simplices(3))
        sets.emplace_back(x.ambient_vertices(), std::vector<Simplex>{top});
    return Cover(&x, std::move(sets));
}

std::vector<std::vector<int>> cyclic_group(int n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return table;
}

const std::vector<std::string>& complex_names() {
    static const std::vector<std::string> names = {
        "point", "circle3", "sphere2", "sphere3", "rp2_6", "torus7", "icosahedron"};
    return names;
}

SimplicialComplex by_name(const std::string& name) {
    if (name == "point") return point();
    if (name == "circle3") return circle3();
    if (name == "sphere2") return sphere2();
    if (name == "sphere3") return sphere3();
    if (name == "rp2_6") return rp2_6();
    if (name == "torus7") return torus7();
    if (name == "icosahedron") return icosahedron();
    throw std::invalid_argument("unknown fixture complex: " + name);
}

}  // namespace fixtures
}  // namespace cforge
