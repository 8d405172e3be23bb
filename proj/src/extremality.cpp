#include "srpos/extremality.hpp"

#include "srpos/gram.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace srpos {

namespace {

// Boundary search slack on iterates scaled to max 1.
constexpr double kFeasibleSlack = 1e-12;
constexpr double kBisectionTol = 1e-10;
constexpr int kMaxDoublings = 60;
constexpr int kPolishSweeps = 500;
constexpr double kPolishTol = 1e-15;
constexpr double kLooseFloor = 1e-6;

void require_nonzero_nonnegative(const PartialMatrix& x, const Tolerances& tol, const char* who)
{
    if (x.max_abs() == 0.0)
        throw Error(std::string(who) + ": matrix is zero");
    if (!is_nonnegative(x, tol))
        throw Error(std::string(who) + ": matrix is not nonnegative");
}

// Per facet, the eigenvectors of x outside its numerical kernel. Moving
// along a face-span direction keeps the kernel fixed, so the boundary is
// reached when one of these compressed blocks becomes singular.
struct Transverse
{
    std::vector<Face> facets;
    std::vector<Eigen::MatrixXd> frames;

    Transverse(const PartialMatrix& x, double floor)
    {
        for (Face f : x.complex().facets()) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x.restrict(f));
            Eigen::Index k = 0;
            while (k < es.eigenvalues().size() && es.eigenvalues()(k) <= floor)
                ++k;
            if (k == es.eigenvalues().size())
                continue;
            facets.push_back(f);
            frames.push_back(es.eigenvectors().rightCols(es.eigenvalues().size() - k));
        }
    }

    double min_eigenvalue(const PartialMatrix& x) const
    {
        double low = INFINITY;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            Eigen::MatrixXd m = frames[i].transpose() * x.restrict(facets[i]) * frames[i];
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
            low = std::min(low, es.eigenvalues()(0));
        }
        return low;
    }
};

PartialMatrix scaled_to_unit(const PartialMatrix& x) { return (1.0 / x.max_abs()) * x; }

// Zeroes every row whose diagonal is below the kernel floor. What remains of
// each facet block is a principal submatrix, so nonnegativity is kept.
PartialMatrix clear_null_rows(const PartialMatrix& x, const Tolerances& tol)
{
    const auto& c = x.complex();
    const double floor = tol.rank_tol * spectral_scale(x);
    PartialMatrix out = x;
    for (auto [i, j] : c.closed_skeleton())
        if (x(i, i) <= floor || x(j, j) <= floor)
            out.set(i, j, 0.0);
    return out;
}

// Averaged projections of the facet blocks onto PSD matrices of their
// current ranks. Near an extreme ray the rank conditions cut out the ray
// alone, so this removes the bisection error.
PartialMatrix polish(const PartialMatrix& x, double floor)
{
    const auto& c = x.complex();
    PartialMatrix cur = x;
    std::vector<Face> facets = c.facets();
    std::vector<Eigen::Index> ranks;
    for (Face f : facets) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cur.restrict(f), Eigen::EigenvaluesOnly);
        ranks.push_back((es.eigenvalues().array() > floor).count());
    }
    for (int it = 0; it < kPolishSweeps; ++it) {
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(cur.values().size());
        Eigen::VectorXd count = Eigen::VectorXd::Zero(cur.values().size());
        for (std::size_t k = 0; k < facets.size(); ++k) {
            auto ids = facets[k].members();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cur.restrict(facets[k]));
            const Eigen::Index n = es.eigenvalues().size();
            Eigen::MatrixXd v = es.eigenvectors().rightCols(ranks[k]);
            Eigen::VectorXd lam = es.eigenvalues().tail(ranks[k]).cwiseMax(0.0);
            Eigen::MatrixXd block = v * lam.asDiagonal() * v.transpose();
            for (Eigen::Index a = 0; a < n; ++a)
                for (Eigen::Index b = a; b < n; ++b) {
                    auto p = static_cast<Eigen::Index>(*c.pair_index(ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]));
                    sum(p) += block(a, b);
                    count(p) += 1.0;
                }
        }
        PartialMatrix next = scaled_to_unit(PartialMatrix(c, sum.cwiseQuotient(count)));
        const double change = max_abs_diff(next, cur);
        cur = std::move(next);
        if (change <= kPolishTol)
            break;
    }
    return cur;
}

} // namespace

FaceSpan face_span(const PartialMatrix& x, const Tolerances& tol)
{
    require_nonzero_nonnegative(x, tol, "face_span");
    const auto& c = x.complex();
    const auto n_vars = static_cast<Eigen::Index>(c.closed_skeleton().size());
    const double floor = tol.rank_tol * spectral_scale(x);

    std::vector<Eigen::VectorXd> rows;
    for (Face f : c.facets()) {
        auto ids = f.members();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x.restrict(f));
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
            if (es.eigenvalues()(k) > floor)
                continue;
            Eigen::VectorXd u = es.eigenvectors().col(k);
            for (std::size_t a = 0; a < ids.size(); ++a) {
                Eigen::VectorXd row = Eigen::VectorXd::Zero(n_vars);
                for (std::size_t b = 0; b < ids.size(); ++b)
                    row(static_cast<Eigen::Index>(*c.pair_index(ids[a], ids[b]))) += u(static_cast<Eigen::Index>(b));
                rows.push_back(std::move(row));
            }
        }
    }

    Eigen::MatrixXd basis;
    if (rows.empty()) {
        basis = Eigen::MatrixXd::Identity(n_vars, n_vars);
    } else {
        Eigen::MatrixXd a(static_cast<Eigen::Index>(rows.size()), n_vars);
        for (std::size_t r = 0; r < rows.size(); ++r)
            a.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const double cut = tol.rank_tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
        Eigen::Index rank = 0;
        while (rank < sv.size() && sv(rank) > cut)
            ++rank;
        basis = svd.matrixV().rightCols(n_vars - rank);
    }

    FaceSpan out;
    out.dim = static_cast<int>(basis.cols());
    for (Eigen::Index k = 0; k < basis.cols(); ++k)
        out.basis.emplace_back(c, basis.col(k));
    return out;
}

bool is_extreme_ray(const PartialMatrix& x, const Tolerances& tol) { return face_span(x, tol).dim == 1; }

PartialMatrix purify(const PartialMatrix& x, const Tolerances& tol, std::uint64_t seed)
{
    require_nonzero_nonnegative(x, tol, "purify");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    PartialMatrix cur = scaled_to_unit(x);
    const int cap = 2 * static_cast<int>(cur.values().size()) + 10;

    for (int step = 0; step < cap; ++step) {
        cur = scaled_to_unit(clear_null_rows(cur, tol));
        FaceSpan span = face_span(cur, tol);
        if (span.dim <= 1) {
            // Eigenvalues just above the kernel floor usually mean a nearby
            // lower-rank ray; try that first.
            const double scale = spectral_scale(cur);
            for (double floor : {kLooseFloor * scale, tol.rank_tol * scale}) {
                PartialMatrix sharp = polish(cur, floor);
                if (max_abs_diff(sharp, cur) <= std::sqrt(tol.rank_tol) && is_nonnegative(sharp, tol) &&
                    is_extreme_ray(sharp, tol))
                    return sharp;
            }
            return cur;
        }

        // Orthogonalise against the iterate's shadow in the span, so the
        // direction stays exactly inside the span.
        const Eigen::VectorXd& cv = cur.values();
        Eigen::VectorXd shadow = Eigen::VectorXd::Zero(cv.size());
        for (const auto& b : span.basis)
            shadow += b.values().dot(cv) * b.values();
        shadow.normalize();
        Eigen::VectorXd dir = Eigen::VectorXd::Zero(cv.size());
        for (int attempt = 0; attempt < 10 && dir.norm() <= 1e-9; ++attempt) {
            dir.setZero();
            for (const auto& b : span.basis)
                dir += normal(rng) * b.values();
            dir -= dir.dot(shadow) * shadow;
        }
        if (dir.norm() <= 1e-9)
            throw PurifyError("purify: no direction independent of the iterate", cur);
        dir /= dir.cwiseAbs().maxCoeff();
        PartialMatrix y(cur.complex(), dir);

        const Transverse watch(cur, tol.rank_tol * spectral_scale(cur));
        auto feasible = [&](double t) { return watch.min_eigenvalue(cur + t * y) >= -kFeasibleSlack; };
        double lo = 0.0, hi = 0.0;
        for (double sign : {1.0, -1.0}) {
            if (sign < 0)
                y *= -1.0;
            double t = 1.0;
            for (int k = 0; k < kMaxDoublings && feasible(t); ++k) {
                lo = t;
                t *= 2.0;
            }
            if (!feasible(t)) {
                hi = t;
                break;
            }
            lo = 0.0;
        }
        if (hi == 0.0)
            throw PurifyError("purify: face direction never leaves the cone", cur);
        while (hi - lo > kBisectionTol * hi) {
            double mid = 0.5 * (lo + hi);
            (feasible(mid) ? lo : hi) = mid;
        }
        cur = scaled_to_unit(cur + lo * y);
    }
    throw PurifyError("purify: step cap exceeded", cur);
}

PartialMatrix random_interior(const SimplicialComplex& c, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const int n = c.num_vertices();
    GramVectors g{c.vertices(), Eigen::MatrixXd(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.rows(i, j) = normal(rng);
    return gram_matrix(g, c);
}

const char* to_string(RayKind k)
{
    switch (k) {
    case RayKind::Sos:
        return "sos";
    case RayKind::NonSos:
        return "non-sos";
    case RayKind::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

RayKind classify_ray(const PartialMatrix& ray, const Tolerances& tol, int* tier)
{
    Completion verdict = completability(ray, tol);
    if (tier)
        *tier = verdict.tier;
    switch (verdict.kind) {
    case CompletionKind::Completable:
        return RayKind::Sos;
    case CompletionKind::NotCompletable:
        return RayKind::NonSos;
    case CompletionKind::Inconclusive:
        break;
    }
    if (local_rank(ray, tol) >= 2 && is_extreme_ray(ray, tol))
        return RayKind::NonSos;
    return RayKind::Inconclusive;
}

ProbeResult elocr_probe(const SimplicialComplex& c, int trials, const Tolerances& tol, std::uint64_t seed,
                        unsigned threads)
{
    if (trials < 0)
        throw Error("elocr_probe: negative trial count");
    std::vector<ProbeSample> samples(static_cast<std::size_t>(trials));
    std::vector<char> failed(static_cast<std::size_t>(trials), 0);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int t = next++; t < trials; t = next++) {
            const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
            ProbeSample& out = samples[static_cast<std::size_t>(t)];
            out.seed = s;
            try {
                PartialMatrix ray = purify(random_interior(c, s), tol, s);
                out.local_rank = local_rank(ray, tol);
                out.kind = classify_ray(ray, tol, &out.tier);
            } catch (const PurifyError&) {
                failed[static_cast<std::size_t>(t)] = 1;
            }
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(trials, 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned k = 1; k < threads; ++k)
            pool.emplace_back(work);
        work();
    }

    ProbeResult r;
    for (std::size_t t = 0; t < samples.size(); ++t) {
        if (failed[t]) {
            ++r.failures;
            continue;
        }
        const auto& s = samples[t];
        r.samples.push_back(s);
        auto& bucket = s.kind == RayKind::Sos ? r.sos : s.kind == RayKind::NonSos ? r.non_sos : r.inconclusive;
        ++bucket[s.local_rank];
    }
    return r;
}

OneSumRestriction one_sum_restriction_check(const PartialMatrix& x, const OneSum& s, const Tolerances& tol)
{
    OneSumRestriction out;
    const double zero = tol.rank_tol * std::max(1.0, x.max_abs());
    auto side = [&](const SimplicialMap& inc, bool& extreme, bool& is_zero, int& rank) {
        PartialMatrix part = pullback(inc, x);
        is_zero = part.max_abs() <= zero;
        extreme = is_zero || is_extreme_ray(part, tol);
        rank = is_zero ? 0 : local_rank(part, tol);
    };
    side(s.left, out.left_extreme, out.left_zero, out.left_rank);
    side(s.right, out.right_extreme, out.right_zero, out.right_rank);
    return out;
}

} // namespace srpos
