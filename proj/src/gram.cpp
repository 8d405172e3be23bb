#include "srpos/gram.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace srpos {

namespace {

// Restricted Gram matrices may disagree by this multiple of rank_tol.
constexpr double kAlignSlack = 100.0;

Eigen::MatrixXd rows_of(const GramVectors& g, const std::vector<std::string>& names)
{
    Eigen::MatrixXd out(static_cast<Eigen::Index>(names.size()), g.rows.cols());
    for (std::size_t k = 0; k < names.size(); ++k)
        out.row(static_cast<Eigen::Index>(k)) = g.rows.row(g.index(names[k]));
    return out;
}

Eigen::MatrixXd procrustes(const Eigen::MatrixXd& from, const Eigen::MatrixXd& to)
{
    const Eigen::Index k = from.cols();
    if (from.rows() == 0 || k == 0)
        return Eigen::MatrixXd::Identity(k, k);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to.transpose() * from, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().transpose();
}

/// Unit vector spanning the least singular direction of `c`.
Eigen::VectorXd least_direction(const Eigen::MatrixXd& c, double* sigma)
{
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c, Eigen::ComputeFullV);
    const Eigen::Index k = c.cols();
    Eigen::VectorXd s = Eigen::VectorXd::Zero(k);
    s.head(svd.singularValues().size()) = svd.singularValues();
    if (sigma)
        *sigma = s[k - 1];
    return svd.matrixV().col(k - 1);
}

/// Leading principal direction of the vectors.
Eigen::VectorXd principal_direction(const Eigen::MatrixXd& rows)
{
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
    return svd.matrixV().col(0);
}

std::optional<Split> push_down(const SimplicialMap& m, const TLSplit& s, const Tolerances& tol)
{
    auto q1 = in_pullback_image(m, gram_matrix(s.left, m.domain()), tol);
    auto q2 = in_pullback_image(m, gram_matrix(s.right, m.domain()), tol);
    if (!q1 || !q2)
        return std::nullopt;
    return Split{*q1, *q2};
}

void require_on(const PartialMatrix& q, const SimplicialComplex& c, const char* what)
{
    if (!(q.complex() == c) || q.complex().vertices() != c.vertices())
        throw Error(std::string(what) + ": matrix does not live on the expected complex");
}

} // namespace

int GramVectors::index(std::string_view v) const
{
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end())
        throw Error("no Gram vector for vertex '" + std::string(v) + "'");
    return static_cast<int>(it - vertices.begin());
}

PartialMatrix gram_matrix(const GramVectors& g, const SimplicialComplex& c)
{
    std::vector<int> slot(c.num_vertices());
    for (int v = 0; v < c.num_vertices(); ++v)
        slot[v] = g.index(c.name(v));
    PartialMatrix out(c);
    for (auto [i, j] : c.closed_skeleton())
        out.set(i, j, g.rows.row(slot[i]).dot(g.rows.row(slot[j])));
    return out;
}

GramVectors psd_factor(const Eigen::MatrixXd& m, std::vector<std::string> names, const Tolerances& tol, double scale)
{
    if (m.rows() != m.cols() || m.rows() != static_cast<Eigen::Index>(names.size()))
        throw Error("psd_factor: matrix shape does not match the vertex list");
    if (!is_psd(m, tol))
        throw Error("psd_factor: matrix is not positive semidefinite");
    GramVectors out{std::move(names), Eigen::MatrixXd(m.rows(), 0)};
    if (m.size() == 0)
        return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
    const Eigen::VectorXd& lam = es.eigenvalues();
    double cut = tol.rank_tol * std::max(lam.cwiseAbs().maxCoeff(), scale);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = lam.size() - 1; k >= 0; --k)
        if (lam[k] > cut)
            keep.push_back(k);
    out.rows.resize(m.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c)
        out.rows.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]) * std::sqrt(lam[keep[c]]);
    return out;
}

Eigen::MatrixXd align(const GramVectors& a, const GramVectors& b, const std::vector<std::string>& on,
                      const Tolerances& tol)
{
    if (a.dim() != b.dim())
        throw Error("align: Gram vectors live in different dimensions");
    Eigen::MatrixXd from = rows_of(a, on), to = rows_of(b, on);
    Eigen::MatrixXd ga = from * from.transpose(), gb = to * to.transpose();
    double scale = std::max({1.0, ga.size() ? ga.cwiseAbs().maxCoeff() : 0.0,
                             gb.size() ? gb.cwiseAbs().maxCoeff() : 0.0});
    if (ga.size() && (ga - gb).cwiseAbs().maxCoeff() > kAlignSlack * tol.rank_tol * scale)
        throw Error("align: Gram matrices on the shared vertices disagree");
    return procrustes(from, to);
}

GramVectors chordal_min_rank_completion(const PartialMatrix& x, const Tolerances& tol)
{
    const SimplicialComplex& c = x.complex();
    if (!is_chordal_complex(c))
        throw Error("minimum-rank completion needs a chordal complex");
    const int r = local_rank(x, tol);
    const double scale = spectral_scale(x);
    auto order = *perfect_elimination_order(c);
    const int n = c.num_vertices();
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k)
        pos[order[k]] = k;

    Eigen::MatrixXd placed = Eigen::MatrixXd::Zero(n, r);
    for (int k = n - 1; k >= 0; --k) {
        const int v = order[k];
        std::vector<int> later;
        for (int u : c.neighbors(v))
            if (pos[u] > k)
                later.push_back(u);
        Face clique = Face::single(v);
        for (int u : later)
            clique = clique.with(u);
        auto ids = clique.members();
        std::vector<std::string> names;
        for (int u : ids)
            names.push_back(c.name(u));
        GramVectors local = psd_factor(x.restrict(clique), names, tol, scale);
        if (local.dim() > r)
            throw Error("minimum-rank completion: clique rank exceeds the local rank");
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ids.size()), r);
        w.leftCols(local.dim()) = local.rows;

        Eigen::MatrixXd from(static_cast<Eigen::Index>(later.size()), r), to(from.rows(), r);
        Eigen::Index self = 0;
        for (std::size_t a = 0, row = 0; a < ids.size(); ++a) {
            if (ids[a] == v) {
                self = static_cast<Eigen::Index>(a);
                continue;
            }
            from.row(static_cast<Eigen::Index>(row)) = w.row(static_cast<Eigen::Index>(a));
            to.row(static_cast<Eigen::Index>(row)) = placed.row(ids[a]);
            ++row;
        }
        Eigen::MatrixXd t = procrustes(from, to);
        placed.row(v) = (t * w.row(self).transpose()).transpose();
    }
    return GramVectors{c.vertices(), placed};
}

SchurSplit schur_complement_split(const PartialMatrix& x, std::string_view apex, const Tolerances& tol)
{
    const SimplicialComplex& c = x.complex();
    const int a = c.index(apex);
    for (Face f : c.facets())
        if (!f.has(a))
            throw Error("schur_complement_split: '" + std::string(apex) + "' is not a cone vertex");
    if (!is_nonnegative(x, tol))
        throw Error("schur_complement_split: matrix is not nonnegative");
    const double d = x(a, a);
    if (!(d > tol.rank_tol * std::max(1.0, x.max_abs())))
        throw Error("schur_complement_split: apex diagonal is zero");
    PartialMatrix z(c);
    for (auto [i, j] : c.closed_skeleton())
        z.set(i, j, x(i, a) * x(a, j) / d);
    PartialMatrix y = x - z;
    for (int i = 0; i < c.num_vertices(); ++i)
        y.set(i, a, 0.0);
    return SchurSplit{z, y};
}

TLSplit tl_split(const GramVectors& g, const Eigen::MatrixXd& basis)
{
    const Eigen::Index k = g.rows.cols();
    if (basis.rows() != k)
        throw Error("tl_split: subspace basis has the wrong ambient dimension");
    const Eigen::Index l = basis.cols();
    if (l > 0 && (basis.transpose() * basis - Eigen::MatrixXd::Identity(l, l)).cwiseAbs().maxCoeff() > 1e-10)
        throw Error("tl_split: subspace basis is not orthonormal");
    Eigen::MatrixXd perp(k, k - l);
    if (k - l > 0) {
        if (l == 0) {
            perp = Eigen::MatrixXd::Identity(k, k);
        } else {
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
            Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(k, k);
            perp = q.rightCols(k - l);
        }
    }
    return TLSplit{basis, GramVectors{g.vertices, g.rows * basis}, GramVectors{g.vertices, g.rows * perp}};
}

std::optional<Split> decompose_via_chordal_cover(const PartialMatrix& q, const ChordalCover& cover,
                                                 const Tolerances& tol)
{
    require_on(q, cover.map.codomain(), "decompose_via_chordal_cover");
    if (!is_chordal_cover(cover))
        throw Error("decompose_via_chordal_cover: not a chordal cover");
    const int r = local_rank(q, tol);
    if (r <= cover.extra_vertices)
        return std::nullopt;
    GramVectors v = chordal_min_rank_completion(pullback(cover.map, q), tol);
    if (v.dim() != r)
        throw Error("decompose_via_chordal_cover: completion rank differs from the local rank");

    const SimplicialComplex& target = cover.map.codomain();
    std::vector<Eigen::VectorXd> eqs;
    for (int a = 0; a < target.num_vertices(); ++a) {
        auto fib = cover.map.fiber(a);
        for (std::size_t i = 1; i < fib.size(); ++i)
            eqs.push_back((v.rows.row(fib[i]) - v.rows.row(fib[0])).transpose());
    }
    Eigen::VectorXd omega;
    if (eqs.empty()) {
        omega = principal_direction(v.rows);
    } else {
        Eigen::MatrixXd sys(static_cast<Eigen::Index>(eqs.size()), r);
        for (std::size_t e = 0; e < eqs.size(); ++e)
            sys.row(static_cast<Eigen::Index>(e)) = eqs[e].transpose();
        omega = least_direction(sys, nullptr);
    }
    auto split = push_down(cover.map, tl_split(v, omega), tol);
    if (!split)
        throw Error("decompose_via_chordal_cover: the split does not descend to the target");
    return split;
}

Quotient glue_odd_cliques(const OddCliqueGluing& g)
{
    const SimplicialComplex& c = g.cover;
    const std::size_t k = g.s1.size();
    if (k != g.s2.size())
        throw Error("odd clique gluing: the two faces differ in size");
    if (k < 3 || k % 2 == 0)
        throw Error("odd clique gluing: face size must be odd and greater than one");
    if (!is_chordal_complex(c))
        throw Error("odd clique gluing: cover is not chordal");
    Face f1 = c.face_of(g.s1), f2 = c.face_of(g.s2);
    if (f1.size() != static_cast<int>(k) || f2.size() != static_cast<int>(k))
        throw Error("odd clique gluing: repeated vertex in a glued face");
    if (!(f1 & f2).empty())
        throw Error("odd clique gluing: the faces are not disjoint");
    if (!c.contains(f1) || !c.contains(f2))
        throw Error("odd clique gluing: the glued sets must be faces");
    for (int v = 0; v < c.num_vertices(); ++v) {
        bool to1 = false, to2 = false;
        for (int u : c.neighbors(v)) {
            to1 = to1 || f1.has(u);
            to2 = to2 || f2.has(u);
        }
        if (to1 && to2)
            throw Error("odd clique gluing: vertex '" + c.name(v) + "' has edges to both faces");
    }
    std::vector<std::vector<std::string>> partition;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
        int a = c.index(g.s1[i]), b = c.index(g.s2[i]);
        partition.push_back({g.s1[i], g.s2[i]});
        names.push_back(c.name(std::min(a, b)) + "|" + c.name(std::max(a, b)));
    }
    for (int v = 0; v < c.num_vertices(); ++v)
        if (!f1.has(v) && !f2.has(v)) {
            partition.push_back({c.name(v)});
            names.push_back(c.name(v));
        }
    return quotient(c, partition, names);
}

std::optional<Split> odd_clique_split(const PartialMatrix& q, const OddCliqueGluing& g, const Tolerances& tol)
{
    Quotient glued = glue_odd_cliques(g);
    require_on(q, glued.complex, "odd_clique_split");
    const int k = static_cast<int>(g.s1.size());
    const int r = local_rank(q, tol);
    if (r != k)
        return decompose_via_chordal_cover(q, make_chordal_cover(glued.map), tol);

    GramVectors v = chordal_min_rank_completion(pullback(glued.map, q), tol);
    std::vector<std::string> slots;
    for (int i = 0; i < k; ++i)
        slots.push_back(std::to_string(i));
    GramVectors a{slots, rows_of(v, g.s1)}, b{slots, rows_of(v, g.s2)};
    Eigen::MatrixXd t = align(a, b, slots, tol);
    const double lambda = t.determinant() > 0 ? 1.0 : -1.0;
    double sigma = 0.0;
    Eigen::VectorXd omega =
        least_direction(t.transpose() - lambda * Eigen::MatrixXd::Identity(k, k), &sigma);
    if (sigma > 1e-8)
        throw Error("odd_clique_split: no real eigenvector found for the gluing map");
    auto split = push_down(glued.map, tl_split(v, omega), tol);
    if (!split)
        throw Error("odd_clique_split: the split does not descend to the glued complex");
    return split;
}

std::optional<Split> thickened_edge_split(const PartialMatrix& q, const Thickening& t, std::size_t e,
                                          const Tolerances& tol)
{
    require_on(q, t.complex, "thickened_edge_split");
    if (e >= t.blocks.size())
        throw Error("thickened_edge_split: no such block");
    const SimplicialMap& m = t.block_maps[e];
    PartialMatrix xe = pullback(m, q);
    if (local_rank(xe, tol) <= 1)
        return std::nullopt;
    GramVectors v = chordal_min_rank_completion(xe, tol);

    Eigen::VectorXd vt = v.vector(t.blocks[e].tail_vertex);
    Eigen::VectorXd vh = v.vector(t.blocks[e].head_vertex);
    double top = 0.0;
    for (Eigen::Index i = 0; i < v.rows.rows(); ++i)
        top = std::max(top, v.rows.row(i).norm());
    const double zero = tol.rank_tol * top;
    const bool t0 = vt.norm() <= zero, h0 = vh.norm() <= zero;

    Eigen::VectorXd omega;
    double beta = 1.0;
    if (t0 && h0) {
        omega = principal_direction(v.rows);
    } else if (t0) {
        omega = vh.normalized();
    } else if (h0) {
        omega = vt.normalized();
    } else {
        Eigen::VectorXd s = vt.normalized() + vh.normalized();
        omega = s.norm() <= tol.rank_tol ? vt.normalized() : s.normalized();
    }
    if (!t0)
        beta = std::pow(omega.dot(vt), 2) / vt.squaredNorm();
    else if (!h0)
        beta = std::pow(omega.dot(vh), 2) / vh.squaredNorm();

    TLSplit s = tl_split(v, omega);
    PartialMatrix ye = gram_matrix(s.left, m.domain());
    PartialMatrix y = beta * q;
    for (auto [i, j] : m.domain().closed_skeleton())
        y.set(m(i), m(j), ye(i, j));
    return Split{y, q - y};
}

std::optional<Split> thickened_rank1_split(const PartialMatrix& q, const Thickening& t, const Tolerances& tol)
{
    if (local_rank(q, tol) <= 1)
        return std::nullopt;
    PartialMatrix y = q;
    for (std::size_t e = 0; e < t.blocks.size(); ++e)
        if (auto s = thickened_edge_split(y, t, e, tol))
            y = s->q1;
    return Split{y, q - y};
}

} // namespace srpos
