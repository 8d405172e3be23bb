// Chordality recognition, perfect elimination orders and chordal covers.

#ifndef SRPOS_CHORDAL_HPP
#define SRPOS_CHORDAL_HPP

#include "srpos/complex.hpp"

#include <optional>
#include <vector>

namespace srpos {

/// Vertex indices in elimination order: each vertex is simplicial in the
/// graph induced on itself and the vertices after it.
using EliminationOrder = std::vector<int>;

/// Maximum cardinality search on the 1-skeleton of `c`, followed by a
/// verification pass. Faces of dimension >= 2 are ignored.
std::optional<EliminationOrder> perfect_elimination_order(const SimplicialComplex& c);

/// Throws when `g` has a face of dimension >= 2.
std::optional<EliminationOrder> is_chordal_graph(const SimplicialComplex& g);

bool is_perfect_elimination_order(const SimplicialComplex& c, const EliminationOrder& order);

/// True iff `c` is the clique complex of a chordal graph.
bool is_chordal_complex(const SimplicialComplex& c);

struct ChordalCover
{
    SimplicialComplex cover;
    SimplicialMap map;
    int extra_vertices = 0;
};

/// Chordal cover, face-surjective map, consistent vertex count.
bool is_chordal_cover(const ChordalCover& cc);

ChordalCover identity_cover(const SimplicialComplex& c);

/// Wraps a map as a cover. Throws unless it is a face-surjective simplicial
/// map out of a chordal complex.
ChordalCover make_chordal_cover(const SimplicialMap& m);

/// Path on n + 1 vertices whose endpoints both map to the first cycle
/// vertex; the copy is named "<v>*". Throws unless `c` is an n-cycle, n >= 4.
ChordalCover unroll_cycle_cover(const SimplicialComplex& c);

struct Deficiency
{
    int extra = 0;
    ChordalCover witness;
};

inline constexpr int kDeficiencyMaxVertices = 10;
inline constexpr int kDeficiencyMaxExtra = 3;

/// Exhaustive search for the least number of extra vertices of a chordal
/// cover, up to `max_extra`. Returns nullopt if none exists within the bound.
std::optional<Deficiency> chordal_deficiency(const SimplicialComplex& c, int max_extra);

} // namespace srpos

#endif
