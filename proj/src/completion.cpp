#include "srpos/completion.hpp"

#include "srpos/gram.hpp"
#include "srpos/rank1.hpp"

#include <cmath>

namespace srpos {

namespace {

constexpr int kCertificateEvery = 50;

Eigen::MatrixXd project_psd(const Eigen::MatrixXd& m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

double entry_residual(const Eigen::MatrixXd& w, const PartialMatrix& x)
{
    double r = 0.0;
    for (auto [i, j] : x.complex().closed_skeleton())
        r = std::max(r, std::abs(w(i, j) - x(i, j)));
    return r;
}

// Separating functional from the gap between an affine point `a` and its PSD
// projection: Z = proj(a) - a is PSD; kept on the specified entries and
// shifted by |min eig| on the diagonal it stays PSD and supported. A negative
// pairing with x rules out every PSD completion.
std::optional<Eigen::MatrixXd> infeasibility_certificate(const Eigen::MatrixXd& a, const PartialMatrix& x,
                                                         const Tolerances& tol)
{
    const auto& c = x.complex();
    const int n = c.num_vertices();
    Eigen::MatrixXd gap = project_psd(a) - a;
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(n, n);
    for (auto [i, j] : c.closed_skeleton())
        z(i, j) = z(j, i) = gap(i, j);
    const double norm = z.norm();
    if (norm == 0.0)
        return std::nullopt;
    z /= norm;
    double low = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(z, Eigen::EigenvaluesOnly).eigenvalues()(0);
    if (low < 0.0)
        z.diagonal().array() -= low;
    double pairing = 0.0;
    for (auto [i, j] : c.closed_skeleton())
        pairing += (i == j ? 1.0 : 2.0) * z(i, j) * x(i, j);
    const double margin = 10.0 * tol.psd_tol * n * std::max(1.0, x.max_abs()) * std::max(1.0, z.norm());
    if (pairing < -margin)
        return z;
    return std::nullopt;
}

Eigen::MatrixXd embed(const Eigen::MatrixXd& part, Face keep, int n)
{
    auto ids = keep.members();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = 0; b < ids.size(); ++b)
            out(ids[a], ids[b]) = part(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    return out;
}

} // namespace

const char* to_string(CompletionKind k)
{
    switch (k) {
    case CompletionKind::Completable:
        return "completable";
    case CompletionKind::NotCompletable:
        return "not completable";
    case CompletionKind::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

Completion dykstra_completion(const PartialMatrix& x, const Tolerances& tol)
{
    const auto& c = x.complex();
    const int n = c.num_vertices();
    Eigen::MatrixXd fixed = Eigen::MatrixXd::Zero(n, n);
    for (auto [i, j] : c.closed_skeleton())
        fixed(i, j) = fixed(j, i) = x(i, j);
    auto project_affine = [&](Eigen::MatrixXd m) {
        for (auto [i, j] : c.closed_skeleton())
            m(i, j) = m(j, i) = fixed(i, j);
        return m;
    };

    const double target = tol.completion_tol * std::max(1.0, x.max_abs());
    Completion out;
    out.tier = 3;
    Eigen::MatrixXd cur = fixed, p = Eigen::MatrixXd::Zero(n, n), q = Eigen::MatrixXd::Zero(n, n);
    double residual = INFINITY;
    for (int it = 1; it <= tol.max_iter; ++it) {
        Eigen::MatrixXd y = project_psd(cur + p);
        p = cur + p - y;
        Eigen::MatrixXd next = project_affine(y + q);
        q = y + q - next;
        residual = entry_residual(y, x);
        out.iterations = it;
        if (residual > target && it % kCertificateEvery == 1 && infeasibility_certificate(project_affine(y), x, tol)) {
            out.kind = CompletionKind::NotCompletable;
            out.reason = "separating PSD functional found";
            out.residual = residual;
            return out;
        }
        if (residual <= target) {
            out.kind = CompletionKind::Completable;
            out.reason = "alternating projections converged";
            out.witness = y;
            out.residual = residual;
            return out;
        }
        cur = next;
    }
    out.kind = CompletionKind::Inconclusive;
    out.reason = "alternating projections stopped at residual " + std::to_string(residual);
    out.residual = residual;
    return out;
}

Completion completability(const PartialMatrix& x, const Tolerances& tol)
{
    const auto& c = x.complex();
    const int n = c.num_vertices();
    for (Face f : c.facets())
        if (!is_psd(x.restrict(f), tol)) {
            std::string names;
            for (const auto& s : c.names_of(f))
                names += (names.empty() ? "" : ",") + s;
            return Completion{CompletionKind::NotCompletable, 0, "face block {" + names + "} is not PSD",
                              std::nullopt, -1, 0.0, 0};
        }

    Face keep = support(x, tol);
    PartialMatrix sub = restrict_to(x, keep);
    Completion out;
    if (is_chordal_complex(sub.complex())) {
        GramVectors v = chordal_min_rank_completion(sub, tol);
        out.kind = CompletionKind::Completable;
        out.tier = 1;
        out.reason = "chordal support";
        out.witness = embed(v.gram(), keep, n);
        out.witness_dim = v.dim();
    } else if (local_rank(sub, tol) <= 1) {
        Rank1Class cls = classify_rank1(sub, tol);
        out.tier = 2;
        if (!cls.trivial) {
            out.kind = CompletionKind::NotCompletable;
            out.reason = "sign obstruction: the edge sign cocycle is not a coboundary";
            return out;
        }
        const int m = sub.complex().num_vertices();
        Eigen::VectorXd v(m);
        for (int i = 0; i < m; ++i)
            v[i] = std::sqrt(sub(i, i)) * (cls.potential[i] ? -1.0 : 1.0);
        out.kind = CompletionKind::Completable;
        out.reason = "locally rank one with trivial sign class";
        out.witness = embed(v * v.transpose(), keep, n);
        out.witness_dim = 1;
    } else {
        Completion d = dykstra_completion(sub, tol);
        if (d.witness)
            d.witness = embed(*d.witness, keep, n);
        out = d;
    }
    if (out.witness)
        out.residual = entry_residual(*out.witness, x);
    return out;
}

} // namespace srpos
