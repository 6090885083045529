#ifndef CFORGE_FIXTURES_HPP
#define CFORGE_FIXTURES_HPP

#include <string>
#include <vector>

#include "cforge/cover.hpp"
#include "cforge/simplicial.hpp"

namespace cforge {
namespace fixtures {

SimplicialComplex point();
SimplicialComplex circle3();            // 3-vertex circle
SimplicialComplex sphere2();            // boundary of the 3-simplex
SimplicialComplex sphere3();            // boundary of the 4-simplex
SimplicialComplex rp2_6();              // 6-vertex projective plane
SimplicialComplex torus7();             // 7-vertex torus
SimplicialComplex icosahedron();        // orientation double cover of rp2_6

// The free involution of the icosahedron covering rp2_6.
std::vector<int> icosahedron_antipodal();
// Vertex projection icosahedron -> rp2_6.
std::vector<int> icosahedron_quotient_map();

// One closed vertex star per supported vertex.
std::vector<SimplicialComplex> star_cover_sets(const SimplicialComplex& x);
Cover star_cover(const SimplicialComplex& x);

// Coarse two-set cover: maximal simplices split in half, closures taken.
Cover two_set_cover(const SimplicialComplex& x);

// The five closed facets of the 4-simplex boundary; every intersection
// is a single closed simplex, so all the local solves are unobstructed.
Cover facet_cover_sphere3(const SimplicialComplex& x);

std::vector<std::vector<int>> cyclic_group(int n);

const std::vector<std::string>& complex_names();
SimplicialComplex by_name(const std::string& name);

}  // namespace fixtures
}  // namespace cforge

#endif
