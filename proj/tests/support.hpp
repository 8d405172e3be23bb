// Random generators and brute-force oracles shared by the test binaries.

#ifndef SRPOS_TESTS_SUPPORT_HPP
#define SRPOS_TESTS_SUPPORT_HPP

#include "srpos/fixtures.hpp"
#include "srpos/gram.hpp"
#include "srpos/quadratic.hpp"
#include "srpos/rank1.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing {

using namespace srpos;

inline SimplicialComplex cx(const std::vector<std::vector<std::string>>& faces)
{
    return SimplicialComplex::from_faces(faces);
}

inline Eigen::MatrixXd gaussian(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols)
{
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = n(rng);
    return m;
}

inline GramVectors random_vectors(std::mt19937_64& rng, const SimplicialComplex& c, int dim)
{
    return GramVectors{c.vertices(), gaussian(rng, c.num_vertices(), dim)};
}

/// Gram matrix of random vectors: nonnegative and SOS.
inline PartialMatrix random_sos(std::mt19937_64& rng, const SimplicialComplex& c, int dim)
{
    return gram_matrix(random_vectors(rng, c, dim), c);
}

/// Entrywise product of a random SOS matrix with a random sign class:
/// always nonnegative, usually not completable when the class is nontrivial.
inline PartialMatrix random_twisted(std::mt19937_64& rng, const SimplicialComplex& c, int dim)
{
    auto reps = h1_z2(c).representatives;
    return hadamard(random_sos(rng, c, dim), matrix_from_cocycle(reps[rng() % reps.size()]));
}

/// Random flag complex of a random chordal graph: vertices added one at a
/// time, each joined to a random clique of the current graph.
inline SimplicialComplex random_chordal(std::mt19937_64& rng, int n)
{
    std::vector<std::string> names;
    std::vector<Face> cliques{Face::single(0)};
    std::vector<Face> facets{Face::single(0)};
    names.push_back("0");
    for (int v = 1; v < n; ++v) {
        names.push_back(std::to_string(v));
        Face base = cliques[rng() % cliques.size()];
        Face chosen;
        for (int u : base.members())
            if (rng() % 3 != 0)
                chosen = chosen.with(u);
        Face mine = chosen.with(v);
        cliques.push_back(mine);
        facets.push_back(mine);
    }
    return SimplicialComplex::from_masks(names, facets);
}

/// Brute force over every face, not just facets.
inline bool all_faces_psd(const PartialMatrix& x, const Tolerances& tol)
{
    for (Face f : x.complex().faces())
        if (!is_psd(x.restrict(f), tol))
            return false;
    return true;
}

inline std::vector<Face> triangles_of(const SimplicialComplex& c)
{
    std::vector<Face> out;
    for (Face f : c.faces())
        if (f.size() == 3)
            out.push_back(f);
    return out;
}

// Counts cocycles and coboundaries by enumerating every edge labelling and
// every vertex labelling.
struct BruteCohomology
{
    long cocycles = 0;
    long coboundaries = 0;
    int dim_h1() const { return static_cast<int>(std::lround(std::log2(double(cocycles) / double(coboundaries)))); }
};

inline BruteCohomology brute_h1(const SimplicialComplex& c)
{
    const auto& edges = c.edges();
    auto edge_of = [&](int a, int b) {
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((edges[e].first == a && edges[e].second == b) || (edges[e].first == b && edges[e].second == a))
                return e;
        throw std::logic_error("missing edge");
    };
    BruteCohomology out;
    auto tris = triangles_of(c);
    for (unsigned long m = 0; m < (1ul << edges.size()); ++m) {
        bool ok = true;
        for (Face t : tris) {
            auto v = t.members();
            int s = ((m >> edge_of(v[0], v[1])) & 1) + ((m >> edge_of(v[0], v[2])) & 1) + ((m >> edge_of(v[1], v[2])) & 1);
            ok = ok && s % 2 == 0;
        }
        out.cocycles += ok;
    }
    std::set<unsigned long> images;
    for (unsigned long g = 0; g < (1ul << c.num_vertices()); ++g) {
        unsigned long img = 0;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (((g >> edges[e].first) ^ (g >> edges[e].second)) & 1)
                img |= 1ul << e;
        images.insert(img);
    }
    out.coboundaries = static_cast<long>(images.size());
    return out;
}

/// Calls `visit` on every simplicial vertex map from `dom` to `cod` that hits
/// every codomain vertex. Backtracks on partial assignments.
inline void for_each_onto_map(const SimplicialComplex& dom, const SimplicialComplex& cod,
                              const std::function<void(const SimplicialMap&)>& visit)
{
    const int n = dom.num_vertices(), k = cod.num_vertices();
    std::vector<int> to(static_cast<std::size_t>(n), -1);
    auto faces = dom.faces();
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            std::vector<bool> hit(static_cast<std::size_t>(k), false);
            for (int t : to)
                hit[static_cast<std::size_t>(t)] = true;
            for (bool h : hit)
                if (!h)
                    return;
            visit(SimplicialMap(dom, cod, to));
            return;
        }
        for (int t = 0; t < k; ++t) {
            to[static_cast<std::size_t>(v)] = t;
            bool ok = true;
            for (Face f : faces) {
                if (!f.has(v) || f.bits >> (v + 1) != 0)
                    continue;
                Face img;
                for (int u : f.members())
                    img = img.with(to[static_cast<std::size_t>(u)]);
                if (!cod.contains(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                rec(v + 1);
        }
        to[static_cast<std::size_t>(v)] = -1;
    };
    rec(0);
}

/// Literal reading of strong connectivity: every codomain face is the image
/// of a face, and any two members of a fiber are joined by a path of the
/// required kind, found by breadth-first search.
struct BruteStrong
{
    bool surjective = true;
    bool property1 = true;
    bool property2 = true;
};

inline bool bfs_joined(std::size_t count, std::size_t from, std::size_t to,
                       const std::function<bool(std::size_t, std::size_t)>& step)
{
    std::vector<bool> seen(count, false);
    std::deque<std::size_t> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        if (u == to)
            return true;
        for (std::size_t w = 0; w < count; ++w)
            if (!seen[w] && step(u, w)) {
                seen[w] = true;
                queue.push_back(w);
            }
    }
    return false;
}

inline BruteStrong brute_strong(const SimplicialMap& m)
{
    const auto& dom = m.domain();
    const auto& cod = m.codomain();
    BruteStrong out;
    auto dom_faces = dom.faces();
    for (Face g : cod.faces()) {
        bool found = false;
        for (Face f : dom_faces)
            found = found || m.image(f) == g;
        out.surjective = out.surjective && found;
    }
    for (int c = 0; c < cod.num_vertices(); ++c) {
        std::vector<int> fib;
        for (int v = 0; v < dom.num_vertices(); ++v)
            if (m(v) == c)
                fib.push_back(v);
        for (std::size_t a = 0; a < fib.size(); ++a)
            for (std::size_t b = a + 1; b < fib.size(); ++b)
                out.property1 = out.property1 && bfs_joined(fib.size(), a, b, [&](std::size_t x, std::size_t y) {
                                    return dom.has_edge(fib[x], fib[y]);
                                });
    }
    for (auto [p, q] : cod.edges()) {
        std::vector<Face> fib;
        for (auto [i, j] : dom.edges())
            if (m.image(Face::of({i, j})) == Face::of({p, q}))
                fib.push_back(Face::of({i, j}));
        for (std::size_t a = 0; a < fib.size(); ++a)
            for (std::size_t b = a + 1; b < fib.size(); ++b)
                out.property2 = out.property2 && bfs_joined(fib.size(), a, b, [&](std::size_t x, std::size_t y) {
                                    return !(fib[x] & fib[y]).empty() && dom.contains(fib[x] | fib[y]);
                                });
    }
    return out;
}

} // namespace testing

#endif
