// PSD completability of partial matrices, decided in tiers: chordal
// complexes exactly, locally rank one matrices by the sign obstruction, and
// everything else by Dykstra's alternating projections.

#ifndef SRPOS_COMPLETION_HPP
#define SRPOS_COMPLETION_HPP

#include "srpos/quadratic.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>

namespace srpos {

enum class CompletionKind { Completable, NotCompletable, Inconclusive };

const char* to_string(CompletionKind k);

struct Completion
{
    CompletionKind kind = CompletionKind::Inconclusive;
    /// 0: a face block is not PSD; 1: chordal support; 2: locally rank one;
    /// 3: Dykstra, or a separating functional when NotCompletable.
    int tier = 0;
    std::string reason;
    /// Full symmetric matrix in vertex order, PSD, agreeing with the input
    /// on the closed skeleton.
    std::optional<Eigen::MatrixXd> witness;
    /// Rank of the witness's Gram factorisation (tiers 1 and 2).
    int witness_dim = -1;
    /// Largest deviation of the witness from the specified entries.
    double residual = 0.0;
    int iterations = 0;
};

Completion completability(const PartialMatrix& x, const Tolerances& tol);

/// Dykstra's projections between the PSD cone and the matrices agreeing with
/// `x`; reported as Completable only when the residual drops to
/// completion_tol * max(1, |x|). Every few sweeps the gap between the two sets
/// is tested as a certificate of infeasibility: a PSD matrix Z supported on
/// the closed skeleton with <Z, x> < 0.
Completion dykstra_completion(const PartialMatrix& x, const Tolerances& tol);

} // namespace srpos

#endif
