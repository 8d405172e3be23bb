// Operations producing new complexes: skeleta, links, cones, 1-sums,
// quotients, thickened graphs and boundary spheres.

#ifndef SRPOS_CONSTRUCTIONS_HPP
#define SRPOS_CONSTRUCTIONS_HPP

#include "srpos/complex.hpp"

#include <string>
#include <vector>

namespace srpos {

SimplicialComplex k_skeleton(const SimplicialComplex& c, int k);
std::vector<Face> strict_k_skeleton(const SimplicialComplex& c, int k);

/// {F : v not in F, F + v in c}, on the vertices other than v.
SimplicialComplex link(const SimplicialComplex& c, std::string_view v);

/// Inclusion-minimal nonfaces; these generate the Stanley-Reisner ideal.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c);

/// The maximal complex with the given 1-skeleton. Throws if `g` has a face
/// of dimension two or more.
SimplicialComplex clique_complex(const SimplicialComplex& g);

/// Clique complex of the 1-skeleton of `c`, without the dimension check.
SimplicialComplex flag_closure(const SimplicialComplex& c);

SimplicialComplex cone(const SimplicialComplex& c, const std::string& apex);

/// Subcomplex of faces lying inside `keep`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, Face keep);

/// Prepends `prefix` to every vertex name.
SimplicialComplex prefixed(const SimplicialComplex& c, const std::string& prefix);

/// Union on disjoint vertex sets; throws on a shared name.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

struct OneSum
{
    SimplicialComplex complex;
    SimplicialMap left;  ///< inclusion of the first summand
    SimplicialMap right; ///< inclusion of the second summand
};

/// Glues `a` and `b` at `va` ~ `vb`; the merged vertex is named "va|vb".
OneSum one_sum_with_inclusions(const SimplicialComplex& a, const SimplicialComplex& b, const std::string& va,
                               const std::string& vb);
SimplicialComplex one_sum(const SimplicialComplex& a, const SimplicialComplex& b, const std::string& va,
                          const std::string& vb);

struct Quotient
{
    SimplicialComplex complex;
    SimplicialMap map;
};

/// Identifies each block of `partition`. Blocks are named by joining member
/// names in vertex order with '|'. Throws unless `partition` is a partition
/// of the vertex set.
Quotient quotient(const SimplicialComplex& c, const std::vector<std::vector<std::string>>& partition);

/// Same as `quotient` with explicit block names.
Quotient quotient(const SimplicialComplex& c, const std::vector<std::vector<std::string>>& partition,
                  const std::vector<std::string>& block_names);

/// Boundary of the (d+1)-simplex on vertices "1" .. "d+2".
SimplicialComplex sphere(int d);

/// Chordal block attached along an arc, with its two distinguished vertices.
struct ArcBlock
{
    SimplicialComplex block;
    std::string head_vertex; ///< identified with the arc's head node
    std::string tail_vertex; ///< identified with the arc's tail node
};

struct Thickening
{
    SimplicialComplex complex;
    /// Quotient map from the disjoint union of blocks and nodes.
    SimplicialMap cover;
    std::vector<ArcBlock> blocks;
    /// Per-block inclusion of the block (original vertex names) into `complex`.
    std::vector<SimplicialMap> block_maps;
};

/// Replaces each arc of `d` by its block. Block vertices are renamed
/// "arc:vertex"; node classes keep the node name. Rejects non-chordal blocks,
/// distinguished pairs that are faces, loop blocks with fewer than three
/// vertices, and gluings that identify two distinct edges.
Thickening thickened_graph(const DirectedGraph& d, const std::vector<ArcBlock>& blocks);

} // namespace srpos

#endif
