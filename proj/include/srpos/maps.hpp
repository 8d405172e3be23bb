// Strongly connected maps, edge contractions of clique complexes and maps
// onto boundary spheres.

#ifndef SRPOS_MAPS_HPP
#define SRPOS_MAPS_HPP

#include "srpos/complex.hpp"

#include <string>
#include <vector>

namespace srpos {

/// Two domain elements of one fiber lying in different components. Edges
/// are written "a,b".
struct FiberWitness
{
    std::string fiber;
    std::string first;
    std::string second;
};

struct StrongConnectivityReport
{
    bool surjective = false;
    bool property1_ok = false; ///< vertex fibers connected by edges
    bool property2_ok = false; ///< edge fibers connected through triangles
    std::vector<FiberWitness> witnesses;
    /// Codomain facets with no face mapping onto them.
    std::vector<Face> unreached_facets;

    bool strongly_connected() const { return surjective && property1_ok && property2_ok; }
};

/// Throws if `m` is not simplicial.
StrongConnectivityReport is_strongly_connected(const SimplicialMap& m);

struct EdgeContraction
{
    SimplicialMap map;
    /// The edge lies in no induced 4-cycle, which makes the map strongly
    /// connected.
    bool no_induced_4cycle = false;
};

/// Quotient of a clique complex onto the clique complex of G/e. The merged
/// vertex is "a|b" in vertex order. Throws unless `c` is a clique complex
/// and {a, b} is an edge.
EdgeContraction edge_contraction(const SimplicialComplex& c, const std::string& a, const std::string& b);

struct SphereConditions
{
    bool cond1 = false; ///< vertices off F induce a connected graph
    bool cond2 = false; ///< off-F neighbours of each c in F linked by triangles through c
    bool cond3 = false; ///< each c in F can be swapped for an off-F vertex

    bool all() const { return cond1 && cond2 && cond3; }
};

/// Throws unless `f` is a facet with at least two vertices.
SphereConditions facet_sphere_conditions(const SimplicialComplex& c, Face f);

/// Sends the vertices of `f` in vertex order to "1".."d+1" and everything
/// else to "d+2" of sphere(d), d = |f| - 1. Throws unless all conditions hold.
SimplicialMap build_sphere_map(const SimplicialComplex& c, Face f);

} // namespace srpos

#endif
