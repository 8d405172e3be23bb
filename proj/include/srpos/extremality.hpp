// Facial structure of the cone of nonnegative partial matrices: face spans,
// extreme rays, purification and a sampling probe for extreme local rank.

#ifndef SRPOS_EXTREMALITY_HPP
#define SRPOS_EXTREMALITY_HPP

#include "srpos/completion.hpp"
#include "srpos/constructions.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace srpos {

/// Directions Y with restrict(Y, F) u = 0 for every facet F and every u in
/// the numerical kernel of restrict(x, F).
struct FaceSpan
{
    std::vector<PartialMatrix> basis;
    int dim = 0;
};

/// Throws unless x is nonnegative and nonzero.
FaceSpan face_span(const PartialMatrix& x, const Tolerances& tol);

bool is_extreme_ray(const PartialMatrix& x, const Tolerances& tol);

/// Thrown when purification runs out of steps; carries the last iterate.
class PurifyError : public Error
{
  public:
    PurifyError(const std::string& what, PartialMatrix last) : Error(what), last_(std::move(last)) {}
    const PartialMatrix& last() const { return last_; }

  private:
    PartialMatrix last_;
};

/// Walks to an extreme ray of the smallest face containing x: a random
/// direction of the face span orthogonal to the iterate, followed to the
/// boundary by bisection. The result is scaled to max |entry| = 1.
PartialMatrix purify(const PartialMatrix& x, const Tolerances& tol, std::uint64_t seed);

/// Start point for purification: Gram matrix of standard normal vectors of
/// dimension num_vertices, an interior point with probability one.
PartialMatrix random_interior(const SimplicialComplex& c, std::uint64_t seed);

enum class RayKind { Sos, NonSos, Inconclusive };

const char* to_string(RayKind k);

struct ProbeSample
{
    std::uint64_t seed = 0;
    int local_rank = 0;
    RayKind kind = RayKind::Inconclusive;
    int tier = 0;
};

/// Histograms of local ranks of purified rays, by SOS status. A lower-bound
/// probe: the largest non-SOS local rank seen bounds the extreme local rank
/// from below.
struct ProbeResult
{
    std::vector<ProbeSample> samples;
    std::map<int, int> sos;
    std::map<int, int> non_sos;
    std::map<int, int> inconclusive;
    int failures = 0; ///< trials whose purification hit the step cap

    int max_non_sos_rank() const { return non_sos.empty() ? 0 : non_sos.rbegin()->first; }
};

/// Classifies an extreme ray. Chordal complexes and SOS witnesses give Sos;
/// local rank one uses the sign class; an extreme ray of local rank >= 2 is
/// never SOS, so tier 3 results other than Completable count as NonSos.
RayKind classify_ray(const PartialMatrix& ray, const Tolerances& tol, int* tier = nullptr);

/// Trial t purifies random_interior(c, seed + t) with seed seed + t. Trials
/// run on `threads` workers (0: hardware concurrency); the result does not
/// depend on the worker count.
ProbeResult elocr_probe(const SimplicialComplex& c, int trials, const Tolerances& tol, std::uint64_t seed,
                        unsigned threads = 0);

struct OneSumRestriction
{
    bool left_extreme = false;
    bool right_extreme = false;
    /// A zero restriction is the support-face case and counts as passing.
    bool left_zero = false;
    bool right_zero = false;
    int left_rank = 0;
    int right_rank = 0;

    bool ok() const { return left_extreme && right_extreme; }
};

/// Pulls x back along both inclusions of a 1-sum and tests each side.
OneSumRestriction one_sum_restriction_check(const PartialMatrix& x, const OneSum& s, const Tolerances& tol);

} // namespace srpos

#endif
