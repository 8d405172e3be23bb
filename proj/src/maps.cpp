#include "srpos/maps.hpp"

#include "srpos/constructions.hpp"

#include <map>
#include <numeric>
#include <optional>

namespace srpos {

namespace {

struct UnionFind
{
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string edge_name(const SimplicialComplex& c, int i, int j) { return c.name(i) + "," + c.name(j); }

// First element not joined to element 0, if any.
std::optional<std::size_t> split_point(UnionFind& uf, std::size_t n)
{
    for (std::size_t k = 1; k < n; ++k)
        if (uf.find(static_cast<int>(k)) != uf.find(0))
            return k;
    return std::nullopt;
}

bool connected_on(Face nodes, auto&& linked)
{
    auto ids = nodes.members();
    UnionFind uf(ids.size());
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (linked(ids[a], ids[b]))
                uf.unite(static_cast<int>(a), static_cast<int>(b));
    return !split_point(uf, ids.size());
}

} // namespace

StrongConnectivityReport is_strongly_connected(const SimplicialMap& m)
{
    auto validity = validate_map(m);
    if (!validity.valid)
        throw Error("is_strongly_connected: map does not send faces to faces");
    const auto& dom = m.domain();
    const auto& cod = m.codomain();
    StrongConnectivityReport r;
    r.surjective = validity.surjective_on_faces;
    for (Face g : cod.facets()) {
        bool hit = false;
        for (Face f : dom.facets())
            hit = hit || g.subset_of(m.image(f));
        if (!hit)
            r.unreached_facets.push_back(g);
    }

    r.property1_ok = true;
    for (int v = 0; v < cod.num_vertices(); ++v) {
        auto fib = m.fiber(v);
        UnionFind uf(fib.size());
        for (std::size_t a = 0; a < fib.size(); ++a)
            for (std::size_t b = a + 1; b < fib.size(); ++b)
                if (dom.has_edge(fib[a], fib[b]))
                    uf.unite(static_cast<int>(a), static_cast<int>(b));
        if (auto k = split_point(uf, fib.size())) {
            r.property1_ok = false;
            r.witnesses.push_back({cod.name(v), dom.name(fib[0]), dom.name(fib[*k])});
        }
    }

    r.property2_ok = true;
    for (auto [p, q] : cod.edges()) {
        std::vector<std::pair<int, int>> fib;
        for (auto [i, j] : dom.edges()) {
            int a = m(i), b = m(j);
            if ((a == p && b == q) || (a == q && b == p))
                fib.emplace_back(i, j);
        }
        UnionFind uf(fib.size());
        for (std::size_t a = 0; a < fib.size(); ++a)
            for (std::size_t b = a + 1; b < fib.size(); ++b) {
                Face e1 = Face::of({fib[a].first, fib[a].second});
                Face e2 = Face::of({fib[b].first, fib[b].second});
                if (!(e1 & e2).empty() && dom.contains(e1 | e2))
                    uf.unite(static_cast<int>(a), static_cast<int>(b));
            }
        if (auto k = split_point(uf, fib.size())) {
            r.property2_ok = false;
            r.witnesses.push_back({edge_name(cod, p, q), edge_name(dom, fib[0].first, fib[0].second),
                                   edge_name(dom, fib[*k].first, fib[*k].second)});
        }
    }
    return r;
}

EdgeContraction edge_contraction(const SimplicialComplex& c, const std::string& a, const std::string& b)
{
    if (!(flag_closure(c) == c))
        throw Error("edge_contraction: complex is not a clique complex");
    const int ia = c.index(a), ib = c.index(b);
    if (ia == ib || !c.has_edge(ia, ib))
        throw Error("edge_contraction: {" + a + "," + b + "} is not an edge");

    std::vector<std::vector<std::string>> blocks;
    for (int v = 0; v < c.num_vertices(); ++v) {
        if (v == std::max(ia, ib))
            continue;
        if (v == std::min(ia, ib))
            blocks.push_back({c.name(std::min(ia, ib)), c.name(std::max(ia, ib))});
        else
            blocks.push_back({c.name(v)});
    }
    Quotient q = quotient(k_skeleton(c, 1), blocks);
    SimplicialComplex target = clique_complex(q.complex);
    SimplicialMap map = SimplicialMap::from_names(c, target, [&] {
        std::map<std::string, std::string> named;
        for (int v = 0; v < c.num_vertices(); ++v)
            named[c.name(v)] = q.complex.name(q.map(v));
        return named;
    }());

    // An induced 4-cycle through {a,b} is a-b-y-x-a with x adjacent only to a
    // and y adjacent only to b.
    bool induced = false;
    for (int x : c.neighbors(ia))
        for (int y : c.neighbors(ib))
            induced = induced || (x != ib && y != ia && x != y && !c.has_edge(x, ib) && !c.has_edge(y, ia) &&
                                  c.has_edge(x, y));
    return {map, !induced};
}

SphereConditions facet_sphere_conditions(const SimplicialComplex& c, Face f)
{
    if (!c.is_facet(f))
        throw Error("facet_sphere_conditions: not a facet");
    if (f.size() < 2)
        throw Error("facet_sphere_conditions: facet needs at least two vertices");
    const Face rest{c.all().bits & ~f.bits};
    SphereConditions out;
    out.cond1 = connected_on(rest, [&](int x, int y) { return c.has_edge(x, y); });
    out.cond2 = true;
    out.cond3 = true;
    for (int v : f.members()) {
        Face near;
        for (int u : c.neighbors(v))
            if (rest.has(u))
                near = near.with(u);
        out.cond2 = out.cond2 &&
                    connected_on(near, [&](int x, int y) { return c.contains(Face::of({x, y, v})); });
        bool swap = false;
        for (int w : rest.members())
            swap = swap || c.contains(f.without(v).with(w));
        out.cond3 = out.cond3 && swap;
    }
    return out;
}

SimplicialMap build_sphere_map(const SimplicialComplex& c, Face f)
{
    if (!facet_sphere_conditions(c, f).all())
        throw Error("build_sphere_map: facet fails the sphere conditions");
    const int d = f.size() - 1;
    std::vector<int> to(c.num_vertices(), d + 1);
    int next = 0;
    for (int v : f.members())
        to[v] = next++;
    return SimplicialMap(c, sphere(d), std::move(to));
}

} // namespace srpos
