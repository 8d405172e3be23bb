// Z/2 cochains on edges and the classification of full-support locally
// rank one forms by H^1(complex; Z/2).

#ifndef SRPOS_RANK1_HPP
#define SRPOS_RANK1_HPP

#include "srpos/quadratic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace srpos {

/// Bit 1 marks a -1 entry. Bits are aligned with `complex.edges()`.
struct SignCochain
{
    SimplicialComplex complex;
    std::vector<std::uint8_t> bits;

    static SignCochain zero(const SimplicialComplex& c);
    /// Throws unless both live on the same complex.
    friend SignCochain operator+(const SignCochain& a, const SignCochain& b);
    friend bool operator==(const SignCochain& a, const SignCochain& b) = default;
};

/// Bit sum vanishes on the three edges of every triangle.
bool is_cocycle(const SignCochain& f);

/// (delta g)(ij) = g(i) + g(j).
SignCochain coboundary(const SimplicialComplex& c, const std::vector<std::uint8_t>& g);

/// Some g with coboundary(g) = f, if one exists.
std::optional<std::vector<std::uint8_t>> coboundary_preimage(const SignCochain& f);
inline bool is_coboundary(const SignCochain& f) { return coboundary_preimage(f).has_value(); }

struct CohomologySummary
{
    int dim_cocycles = 0;
    int dim_coboundaries = 0;
    int dim_h1 = 0;
    /// One cocycle per class: all sums of a basis of a complement of the
    /// coboundaries inside the cocycles, the zero cochain first.
    std::vector<SignCochain> representatives;
};

inline constexpr int kMaxEnumeratedH1 = 20;

/// Throws if dim_h1 exceeds kMaxEnumeratedH1.
CohomologySummary h1_z2(const SimplicialComplex& c);

/// Sign cochain of a normalized locally rank one matrix. Throws on a
/// diagonal entry away from 1 or an edge entry away from +-1 by more than
/// sqrt(rank_tol).
SignCochain sign_pattern(const PartialMatrix& x, const Tolerances& tol);

/// Unit diagonal, (-1)^f on edges. Throws unless `f` is a cocycle.
PartialMatrix matrix_from_cocycle(const SignCochain& f);

/// Whether two full-support locally rank one matrices are diagonally
/// congruent. Throws on higher local rank or missing support.
bool same_diagonal_class(const PartialMatrix& x, const PartialMatrix& y, const Tolerances& tol);

/// One matrix per class, in the order of h1_z2(c).representatives.
std::vector<PartialMatrix> enumerate_classes(const SimplicialComplex& c);

/// Classification of a nonnegative locally rank <= 1 matrix through the
/// subcomplex induced on its support.
struct Rank1Class
{
    Face support;
    SignCochain pattern; ///< on the induced subcomplex
    bool trivial = true;
    /// Vertex signs realising the pattern when trivial.
    std::vector<std::uint8_t> potential;
};

/// Throws unless `x` is nonnegative of local rank <= 1.
Rank1Class classify_rank1(const PartialMatrix& x, const Tolerances& tol);

} // namespace srpos

#endif
