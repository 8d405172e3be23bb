#include "srpos/quadratic.hpp"

#include "srpos/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace srpos {

Tolerances Tolerances::from_env()
{
    Tolerances t;
    if (const char* s = std::getenv("SR_TOL_PSD"); s && *s) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end == s || *end != '\0')
            throw Error(std::string("SR_TOL_PSD is not a number: '") + s + "'");
        t.psd_tol = v;
    }
    t.validate();
    return t;
}

void Tolerances::validate() const
{
    if (!(psd_tol > 0) || !(rank_tol > 0) || !(completion_tol > 0) || max_iter <= 0)
        throw Error("tolerances and the iteration cap must be positive");
}

PartialMatrix::PartialMatrix(SimplicialComplex c)
    : c_(std::move(c)), v_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(c_.closed_skeleton().size())))
{
}

PartialMatrix::PartialMatrix(SimplicialComplex c, Eigen::VectorXd values) : c_(std::move(c)), v_(std::move(values))
{
    if (v_.size() != static_cast<Eigen::Index>(c_.closed_skeleton().size()))
        throw Error("partial matrix needs one value per diagonal entry and edge");
}

double PartialMatrix::operator()(int i, int j) const
{
    auto k = c_.pair_index(i, j);
    if (!k)
        throw Error("entry (" + c_.name(i) + "," + c_.name(j) + ") is not on the closed 1-skeleton");
    return v_[static_cast<Eigen::Index>(*k)];
}

double PartialMatrix::at(std::string_view a, std::string_view b) const
{
    return (*this)(c_.index(a), c_.index(b));
}

void PartialMatrix::set(int i, int j, double value)
{
    auto k = c_.pair_index(i, j);
    if (!k)
        throw Error("entry (" + c_.name(i) + "," + c_.name(j) + ") is not on the closed 1-skeleton");
    v_[static_cast<Eigen::Index>(*k)] = value;
}

void PartialMatrix::set(std::string_view a, std::string_view b, double value)
{
    set(c_.index(a), c_.index(b), value);
}

Eigen::MatrixXd PartialMatrix::restrict(Face f) const
{
    if (!c_.contains(f))
        throw Error("restriction to a set that is not a face");
    auto ids = f.members();
    const auto m = static_cast<Eigen::Index>(ids.size());
    Eigen::MatrixXd out(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = a; b < m; ++b)
            out(a, b) = out(b, a) = (*this)(ids[a], ids[b]);
    return out;
}

double PartialMatrix::max_abs() const { return v_.size() ? v_.cwiseAbs().maxCoeff() : 0.0; }

void PartialMatrix::require_same(const PartialMatrix& o) const
{
    if (!(c_ == o.c_) || c_.vertices() != o.c_.vertices())
        throw Error("partial matrices live on different complexes");
}

PartialMatrix& PartialMatrix::operator+=(const PartialMatrix& o)
{
    require_same(o);
    v_ += o.v_;
    return *this;
}

PartialMatrix& PartialMatrix::operator-=(const PartialMatrix& o)
{
    require_same(o);
    v_ -= o.v_;
    return *this;
}

PartialMatrix& PartialMatrix::operator*=(double s)
{
    v_ *= s;
    return *this;
}

double max_abs_diff(const PartialMatrix& a, const PartialMatrix& b) { return (a - b).max_abs(); }

bool is_psd(const Eigen::MatrixXd& m, const Tolerances& tol)
{
    if (m.size() == 0)
        return true;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return es.eigenvalues().minCoeff() >= -tol.psd_tol * scale;
}

int numeric_rank(const Eigen::MatrixXd& m, const Tolerances& tol, double scale)
{
    if (m.size() == 0)
        return 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    Eigen::VectorXd mag = es.eigenvalues().cwiseAbs();
    double cut = tol.rank_tol * std::max(mag.maxCoeff(), scale);
    int r = 0;
    for (Eigen::Index k = 0; k < mag.size(); ++k)
        r += mag[k] > cut;
    return r;
}

double spectral_scale(const PartialMatrix& x)
{
    double s = 0.0;
    for (Face f : x.complex().facets()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x.restrict(f), Eigen::EigenvaluesOnly);
        s = std::max(s, es.eigenvalues().cwiseAbs().maxCoeff());
    }
    return s;
}

bool is_nonnegative(const PartialMatrix& x, const Tolerances& tol)
{
    const auto& facets = x.complex().facets();
    return std::all_of(facets.begin(), facets.end(), [&](Face f) { return is_psd(x.restrict(f), tol); });
}

int local_rank(const PartialMatrix& x, const Tolerances& tol)
{
    if (!is_nonnegative(x, tol))
        throw Error("local rank is defined for nonnegative matrices only");
    const double scale = spectral_scale(x);
    int r = 0;
    for (Face f : x.complex().facets())
        r = std::max(r, numeric_rank(x.restrict(f), tol, scale));
    return r;
}

PartialMatrix hadamard(const PartialMatrix& x, const PartialMatrix& y)
{
    if (!(x.complex() == y.complex()) || x.complex().vertices() != y.complex().vertices())
        throw Error("hadamard product needs matrices on the same complex");
    return PartialMatrix(x.complex(), x.values().cwiseProduct(y.values()));
}

PartialMatrix pullback(const SimplicialMap& m, const PartialMatrix& x)
{
    if (!(m.codomain() == x.complex()) || m.codomain().vertices() != x.complex().vertices())
        throw Error("pullback: matrix does not live on the map's codomain");
    if (!validate_map(m).valid)
        throw Error("pullback along a map that sends a face to a nonface");
    PartialMatrix out(m.domain());
    for (auto [i, j] : m.domain().closed_skeleton())
        out.set(i, j, x(m(i), m(j)));
    return out;
}

std::optional<PartialMatrix> in_pullback_image(const SimplicialMap& m, const PartialMatrix& y, const Tolerances& tol)
{
    if (!(m.domain() == y.complex()) || m.domain().vertices() != y.complex().vertices())
        throw Error("in_pullback_image: matrix does not live on the map's domain");
    auto v = validate_map(m);
    if (!v.valid || !v.surjective_on_faces)
        throw Error("in_pullback_image needs a face-surjective simplicial map");
    const auto& cod = m.codomain();
    const std::size_t slots = cod.closed_skeleton().size();
    std::vector<double> lo(slots, INFINITY), hi(slots, -INFINITY), sum(slots, 0.0);
    std::vector<int> count(slots, 0);
    for (auto [i, j] : y.complex().closed_skeleton()) {
        std::size_t k = *cod.pair_index(m(i), m(j));
        double val = y(i, j);
        lo[k] = std::min(lo[k], val);
        hi[k] = std::max(hi[k], val);
        sum[k] += val;
        ++count[k];
    }
    const double slack = tol.rank_tol * std::max(1.0, y.max_abs());
    Eigen::VectorXd vals(static_cast<Eigen::Index>(slots));
    for (std::size_t k = 0; k < slots; ++k) {
        if (count[k] == 0 || hi[k] - lo[k] > slack)
            return std::nullopt;
        vals[static_cast<Eigen::Index>(k)] = sum[k] / count[k];
    }
    return PartialMatrix(cod, std::move(vals));
}

PartialMatrix diagonal_congruence(const PartialMatrix& x, const std::vector<double>& d)
{
    const auto& c = x.complex();
    if (static_cast<int>(d.size()) != c.num_vertices())
        throw Error("diagonal congruence needs one scale per vertex");
    for (double s : d)
        if (s == 0.0 || !std::isfinite(s))
            throw Error("diagonal congruence scales must be finite and nonzero");
    PartialMatrix out(c);
    for (auto [i, j] : c.closed_skeleton())
        out.set(i, j, d[i] * d[j] * x(i, j));
    return out;
}

PartialMatrix diagonal_congruence(const PartialMatrix& x, const std::map<std::string, double>& d)
{
    const auto& c = x.complex();
    std::vector<double> scales(c.num_vertices(), 0.0);
    for (int v = 0; v < c.num_vertices(); ++v) {
        auto it = d.find(c.name(v));
        if (it == d.end())
            throw Error("no scale given for vertex '" + c.name(v) + "'");
        scales[v] = it->second;
    }
    return diagonal_congruence(x, scales);
}

Face support(const PartialMatrix& x, const Tolerances& tol)
{
    const auto& c = x.complex();
    double top = 0.0;
    for (int v = 0; v < c.num_vertices(); ++v)
        top = std::max(top, x(v, v));
    Face s;
    for (int v = 0; v < c.num_vertices(); ++v)
        if (x(v, v) > tol.rank_tol * top)
            s = s.with(v);
    return s;
}

bool is_full_support(const PartialMatrix& x, const Tolerances& tol)
{
    return support(x, tol) == x.complex().all();
}

PartialMatrix normalize(const PartialMatrix& x, const Tolerances& tol)
{
    if (!is_full_support(x, tol))
        throw Error("normalize needs full support");
    if (!is_nonnegative(x, tol))
        throw Error("normalize needs a nonnegative matrix");
    std::vector<double> d(x.complex().num_vertices());
    for (int v = 0; v < x.complex().num_vertices(); ++v)
        d[v] = 1.0 / std::sqrt(x(v, v));
    PartialMatrix out = diagonal_congruence(x, d);
    for (int v = 0; v < x.complex().num_vertices(); ++v)
        out.set(v, v, 1.0);
    return out;
}

PartialMatrix restrict_to(const PartialMatrix& x, Face keep)
{
    SimplicialComplex sub = induced_subcomplex(x.complex(), keep);
    auto ids = keep.members();
    PartialMatrix out(sub);
    for (auto [a, b] : sub.closed_skeleton())
        out.set(a, b, x(ids[a], ids[b]));
    return out;
}

} // namespace srpos
