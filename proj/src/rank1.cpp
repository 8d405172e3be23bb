#include "srpos/rank1.hpp"

#include <cmath>

namespace srpos {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void flip(Bits& b, std::size_t i) { b[i / 64] ^= std::uint64_t{1} << (i % 64); }
void add_into(Bits& a, const Bits& b)
{
    for (std::size_t w = 0; w < a.size(); ++w)
        a[w] ^= b[w];
}
bool is_zero(const Bits& b)
{
    for (auto w : b)
        if (w)
            return false;
    return true;
}
std::size_t lowest(const Bits& b)
{
    for (std::size_t w = 0; w < b.size(); ++w)
        if (b[w])
            return w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
    return SIZE_MAX;
}

/// Row-echelon basis over GF(2), kept reduced in insertion order.
class Echelon
{
  public:
    /// Reduces `x` in place; returns true if it was independent and was added.
    bool insert(Bits x)
    {
        reduce(x);
        if (is_zero(x))
            return false;
        pivots_.push_back(lowest(x));
        rows_.push_back(std::move(x));
        return true;
    }
    void reduce(Bits& x) const
    {
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (test(x, pivots_[k]))
                add_into(x, rows_[k]);
    }
    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    std::vector<Bits> rows_;
    std::vector<std::size_t> pivots_;
};

SignCochain from_bits(const SimplicialComplex& c, const Bits& b)
{
    SignCochain f = SignCochain::zero(c);
    for (std::size_t e = 0; e < f.bits.size(); ++e)
        f.bits[e] = test(b, e);
    return f;
}

std::vector<Bits> triangle_rows(const SimplicialComplex& c)
{
    std::vector<Bits> rows;
    const std::size_t m = c.edges().size();
    for (Face t : c.triangles()) {
        auto v = t.members();
        Bits r = make_bits(m);
        flip(r, *c.edge_index(v[0], v[1]));
        flip(r, *c.edge_index(v[0], v[2]));
        flip(r, *c.edge_index(v[1], v[2]));
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Basis of the kernel of the triangle incidence map.
std::vector<Bits> cocycle_basis(const SimplicialComplex& c)
{
    const std::size_t m = c.edges().size();
    // Reduced row echelon form, pivots chosen by increasing edge index.
    std::vector<Bits> rows = triangle_rows(c);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && !test(rows[p], col))
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && test(rows[i], col))
                add_into(rows[i], rows[r]);
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(m, false);
    for (auto col : pivot_col)
        is_pivot[col] = true;
    std::vector<Bits> basis;
    for (std::size_t free = 0; free < m; ++free) {
        if (is_pivot[free])
            continue;
        Bits z = make_bits(m);
        flip(z, free);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (test(rows[i], free))
                flip(z, pivot_col[i]);
        basis.push_back(std::move(z));
    }
    return basis;
}

void require_same(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (!(a == b) || a.vertices() != b.vertices())
        throw Error("cochains live on different complexes");
}

} // namespace

SignCochain SignCochain::zero(const SimplicialComplex& c)
{
    return SignCochain{c, std::vector<std::uint8_t>(c.edges().size(), 0)};
}

SignCochain operator+(const SignCochain& a, const SignCochain& b)
{
    require_same(a.complex, b.complex);
    SignCochain out = a;
    for (std::size_t e = 0; e < out.bits.size(); ++e)
        out.bits[e] ^= b.bits[e];
    return out;
}

bool is_cocycle(const SignCochain& f)
{
    const auto& c = f.complex;
    if (f.bits.size() != c.edges().size())
        throw Error("cochain has the wrong number of edge values");
    for (Face t : c.triangles()) {
        auto v = t.members();
        int s = f.bits[*c.edge_index(v[0], v[1])] + f.bits[*c.edge_index(v[0], v[2])] +
                f.bits[*c.edge_index(v[1], v[2])];
        if (s % 2)
            return false;
    }
    return true;
}

SignCochain coboundary(const SimplicialComplex& c, const std::vector<std::uint8_t>& g)
{
    if (static_cast<int>(g.size()) != c.num_vertices())
        throw Error("vertex cochain has the wrong length");
    SignCochain f = SignCochain::zero(c);
    const auto& edges = c.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        f.bits[e] = (g[edges[e].first] ^ g[edges[e].second]) & 1u;
    return f;
}

std::optional<std::vector<std::uint8_t>> coboundary_preimage(const SignCochain& f)
{
    const auto& c = f.complex;
    const int n = c.num_vertices();
    std::vector<int> g(n, -1);
    for (int root = 0; root < n; ++root) {
        if (g[root] >= 0)
            continue;
        g[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : c.neighbors(v)) {
                int want = g[v] ^ f.bits[*c.edge_index(v, u)];
                if (g[u] < 0) {
                    g[u] = want;
                    stack.push_back(u);
                } else if (g[u] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::vector<std::uint8_t>(g.begin(), g.end());
}

CohomologySummary h1_z2(const SimplicialComplex& c)
{
    const std::size_t m = c.edges().size();
    Echelon basis;
    for (int v = 0; v < c.num_vertices(); ++v) {
        Bits row = make_bits(m);
        for (int u : c.neighbors(v))
            flip(row, *c.edge_index(v, u));
        basis.insert(std::move(row));
    }
    CohomologySummary out;
    out.dim_coboundaries = basis.rank();
    auto cocycles = cocycle_basis(c);
    out.dim_cocycles = static_cast<int>(cocycles.size());
    std::vector<Bits> generators;
    for (auto z : cocycles) {
        basis.reduce(z);
        if (basis.insert(z))
            generators.push_back(z);
    }
    out.dim_h1 = static_cast<int>(generators.size());
    if (out.dim_h1 > kMaxEnumeratedH1)
        throw Error("H^1 has dimension " + std::to_string(out.dim_h1) + "; too many classes to enumerate");
    const std::uint64_t count = std::uint64_t{1} << out.dim_h1;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Bits sum = make_bits(m);
        for (int k = 0; k < out.dim_h1; ++k)
            if ((mask >> k) & 1u)
                add_into(sum, generators[k]);
        out.representatives.push_back(from_bits(c, sum));
    }
    return out;
}

SignCochain sign_pattern(const PartialMatrix& x, const Tolerances& tol)
{
    const auto& c = x.complex();
    const double slack = std::sqrt(tol.rank_tol);
    for (int v = 0; v < c.num_vertices(); ++v)
        if (std::abs(x(v, v) - 1.0) > slack)
            throw Error("sign_pattern: diagonal entry at '" + c.name(v) + "' is not 1");
    SignCochain f = SignCochain::zero(c);
    const auto& edges = c.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        double val = x(edges[e].first, edges[e].second);
        if (std::abs(std::abs(val) - 1.0) > slack)
            throw Error("sign_pattern: entry (" + c.name(edges[e].first) + "," + c.name(edges[e].second) +
                        ") is not +-1");
        f.bits[e] = val < 0;
    }
    return f;
}

PartialMatrix matrix_from_cocycle(const SignCochain& f)
{
    if (!is_cocycle(f))
        throw Error("matrix_from_cocycle: cochain is not a cocycle");
    const auto& c = f.complex;
    PartialMatrix x(c);
    for (int v = 0; v < c.num_vertices(); ++v)
        x.set(v, v, 1.0);
    const auto& edges = c.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        x.set(edges[e].first, edges[e].second, f.bits[e] ? -1.0 : 1.0);
    return x;
}

bool same_diagonal_class(const PartialMatrix& x, const PartialMatrix& y, const Tolerances& tol)
{
    for (const auto* m : {&x, &y})
        if (local_rank(*m, tol) > 1)
            throw Error("same_diagonal_class: matrix is not locally rank one");
    return is_coboundary(sign_pattern(normalize(x, tol), tol) + sign_pattern(normalize(y, tol), tol));
}

std::vector<PartialMatrix> enumerate_classes(const SimplicialComplex& c)
{
    std::vector<PartialMatrix> out;
    for (const auto& f : h1_z2(c).representatives)
        out.push_back(matrix_from_cocycle(f));
    return out;
}

Rank1Class classify_rank1(const PartialMatrix& x, const Tolerances& tol)
{
    if (local_rank(x, tol) > 1)
        throw Error("classify_rank1: matrix is not locally rank one");
    Face s = support(x, tol);
    PartialMatrix sub = restrict_to(x, s);
    // On the support every edge block has rank one, so entry signs are robust
    // even where rounding keeps the normalized entry a little away from +-1.
    SignCochain f = SignCochain::zero(sub.complex());
    const auto& edges = sub.complex().edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        f.bits[e] = sub(edges[e].first, edges[e].second) < 0;
    Rank1Class out{s, f, true, {}};
    auto g = coboundary_preimage(out.pattern);
    out.trivial = g.has_value();
    if (g)
        out.potential = *g;
    return out;
}

} // namespace srpos
