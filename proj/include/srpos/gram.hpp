// Gram-vector certificates and the decompositions built from them:
// minimum-rank chordal completion, Schur complements, (T,L)-splits, and the
// splits along chordal covers, odd cliques and thickened edges.

#ifndef SRPOS_GRAM_HPP
#define SRPOS_GRAM_HPP

#include "srpos/chordal.hpp"
#include "srpos/constructions.hpp"
#include "srpos/quadratic.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace srpos {

/// One row vector per named vertex, all of length dim().
struct GramVectors
{
    std::vector<std::string> vertices;
    Eigen::MatrixXd rows;

    int dim() const { return static_cast<int>(rows.cols()); }
    int index(std::string_view v) const;
    Eigen::VectorXd vector(std::string_view v) const { return rows.row(index(v)).transpose(); }
    /// Dense Gram matrix in `vertices` order.
    Eigen::MatrixXd gram() const { return rows * rows.transpose(); }
};

/// <v_i, v_j> on the closed skeleton of `c`. Throws if a vertex is missing.
PartialMatrix gram_matrix(const GramVectors& g, const SimplicialComplex& c);

/// Vectors with Gram matrix `m`, in dimension numeric_rank(m). Eigenvalues
/// at or below rank_tol * max(largest, scale) are dropped. Throws if `m` is
/// not PSD.
GramVectors psd_factor(const Eigen::MatrixXd& m, std::vector<std::string> names, const Tolerances& tol,
                       double scale = 0.0);

/// Orthogonal T (Procrustes) with T a_i ~ b_i for the named vertices.
/// Throws when the dimensions differ or the restricted Gram matrices
/// disagree by more than 100 * rank_tol * max(1, scale).
Eigen::MatrixXd align(const GramVectors& a, const GramVectors& b, const std::vector<std::string>& on,
                      const Tolerances& tol);

/// Completion of `x` by vectors of dimension local_rank(x), built along a
/// perfect elimination order. Throws unless the complex is chordal and `x`
/// nonnegative.
GramVectors chordal_min_rank_completion(const PartialMatrix& x, const Tolerances& tol);

struct SchurSplit
{
    PartialMatrix sos_part; ///< rank one, X_{i*} X_{*j} / X_{**}
    PartialMatrix residual; ///< zero on the apex row
};

/// Throws unless `apex` is a cone vertex with positive diagonal and `x` is
/// nonnegative.
SchurSplit schur_complement_split(const PartialMatrix& x, std::string_view apex, const Tolerances& tol);

struct TLSplit
{
    Eigen::MatrixXd basis; ///< orthonormal columns spanning L
    GramVectors left;      ///< coordinates of the projections onto L
    GramVectors right;     ///< coordinates of the projections onto L-perp
};

/// Throws unless the columns of `basis` are orthonormal within 1e-10.
TLSplit tl_split(const GramVectors& g, const Eigen::MatrixXd& basis);

struct Split
{
    PartialMatrix q1; ///< locally rank <= 1 on the split region
    PartialMatrix q2;
};

/// Splits along a chordal cover; nullopt when local_rank(q) <= extra
/// vertices. Throws if `q` is not nonnegative or the push-down fails.
std::optional<Split> decompose_via_chordal_cover(const PartialMatrix& q, const ChordalCover& cover,
                                                 const Tolerances& tol);

/// A chordal complex with two disjoint k-faces glued by s1[i] ~ s2[i].
struct OddCliqueGluing
{
    SimplicialComplex cover;
    std::vector<std::string> s1;
    std::vector<std::string> s2;
};

/// Checks the hypotheses (chordal cover, disjoint faces of equal odd size
/// k > 1, no vertex adjacent to both) and returns the quotient. Merged
/// vertices are named "x|y" in cover vertex order.
Quotient glue_odd_cliques(const OddCliqueGluing& g);

/// Split of `q` (on the glued complex) whose first summand is locally rank
/// <= 1. Falls back to decompose_via_chordal_cover when local rank < k and
/// returns nullopt for local rank > k.
std::optional<Split> odd_clique_split(const PartialMatrix& q, const OddCliqueGluing& g, const Tolerances& tol);

/// Splits block `e` of a thickening so that q1 has rank one on that block
/// and equals beta * q elsewhere. nullopt when the block has rank <= 1.
std::optional<Split> thickened_edge_split(const PartialMatrix& q, const Thickening& t, std::size_t e,
                                          const Tolerances& tol);

/// Repeats thickened_edge_split on q1 until every block has rank <= 1.
/// nullopt when q is already locally rank <= 1.
std::optional<Split> thickened_rank1_split(const PartialMatrix& q, const Thickening& t, const Tolerances& tol);

} // namespace srpos

#endif
