#include "srpos/chordal.hpp"

#include "graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace srpos {

std::optional<EliminationOrder> perfect_elimination_order(const SimplicialComplex& c)
{
    return detail::elimination_order(detail::adjacency(c));
}

std::optional<EliminationOrder> is_chordal_graph(const SimplicialComplex& g)
{
    if (g.dimension() > 1)
        throw Error("is_chordal_graph expects a graph (dimension <= 1)");
    return perfect_elimination_order(g);
}

bool is_perfect_elimination_order(const SimplicialComplex& c, const EliminationOrder& order)
{
    const int n = c.num_vertices();
    if (static_cast<int>(order.size()) != n)
        return false;
    std::vector<int> pos(n, -1);
    for (int k = 0; k < n; ++k) {
        if (order[k] < 0 || order[k] >= n || pos[order[k]] >= 0)
            return false;
        pos[order[k]] = k;
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> later;
        for (int u : c.neighbors(v))
            if (pos[u] > pos[v])
                later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!c.has_edge(later[a], later[b]))
                    return false;
    }
    return true;
}

bool is_chordal_complex(const SimplicialComplex& c)
{
    if (!perfect_elimination_order(c))
        return false;
    std::vector<Face> mine = c.facets();
    std::vector<Face> flag = detail::maximal_cliques(detail::adjacency(c));
    std::sort(mine.begin(), mine.end());
    std::sort(flag.begin(), flag.end());
    return mine == flag;
}

bool is_chordal_cover(const ChordalCover& cc)
{
    if (cc.extra_vertices != cc.cover.num_vertices() - cc.map.codomain().num_vertices())
        return false;
    if (!(cc.map.domain() == cc.cover))
        return false;
    if (!is_chordal_complex(cc.cover))
        return false;
    MapValidity v = validate_map(cc.map);
    return v.valid && v.surjective_on_faces;
}

ChordalCover identity_cover(const SimplicialComplex& c)
{
    if (!is_chordal_complex(c))
        throw Error("identity cover requires a chordal complex");
    return ChordalCover{c, SimplicialMap::identity(c), 0};
}

ChordalCover make_chordal_cover(const SimplicialMap& m)
{
    ChordalCover cc{m.domain(), m, m.domain().num_vertices() - m.codomain().num_vertices()};
    if (!is_chordal_complex(cc.cover))
        throw Error("cover complex is not chordal");
    MapValidity v = validate_map(m);
    if (!v.valid)
        throw Error("cover map sends a face to a nonface");
    if (!v.surjective_on_faces)
        throw Error("cover map is not surjective on faces");
    return cc;
}

ChordalCover unroll_cycle_cover(const SimplicialComplex& c)
{
    const int n = c.num_vertices();
    bool cycle = n >= 4 && c.dimension() == 1 && static_cast<int>(c.edges().size()) == n;
    for (int v = 0; cycle && v < n; ++v)
        cycle = c.neighbors(v).size() == 2;
    std::vector<int> walk;
    if (cycle) {
        walk.push_back(0);
        int prev = -1, cur = 0;
        while (true) {
            auto nb = c.neighbors(cur);
            int next = nb[0] == prev ? nb[1] : nb[0];
            if (next == 0)
                break;
            walk.push_back(next);
            prev = cur;
            cur = next;
        }
        cycle = static_cast<int>(walk.size()) == n;
    }
    if (!cycle)
        throw Error("unroll_cycle_cover expects a cycle on at least four vertices");

    std::vector<std::string> names;
    for (int v : walk)
        names.push_back(c.name(v));
    names.push_back(c.name(walk[0]) + "*");
    std::vector<Face> path;
    for (int k = 0; k < n; ++k)
        path.push_back(Face::of({k, k + 1}));
    SimplicialComplex cover = SimplicialComplex::from_masks(names, path);
    std::vector<int> map;
    for (int v : walk)
        map.push_back(v);
    map.push_back(walk[0]);
    return make_chordal_cover(SimplicialMap(cover, c, std::move(map)));
}

namespace {

std::string copy_name(const SimplicialComplex& c, int v, int copy)
{
    return c.name(v) + std::string(static_cast<std::size_t>(copy), '*');
}

class CoverSearch
{
  public:
    CoverSearch(const SimplicialComplex& target, std::vector<int> multiplicity) : c_(target)
    {
        for (int v = 0; v < c_.num_vertices(); ++v)
            for (int k = 0; k < multiplicity[v]; ++k) {
                names_.push_back(copy_name(c_, v, k));
                phi_.push_back(v);
            }
        const int m = static_cast<int>(phi_.size());
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (phi_[a] == phi_[b] || c_.has_edge(phi_[a], phi_[b]))
                    candidates_.emplace_back(a, b);
        adj_.assign(m, 0);
        // Remaining candidate preimages per target edge.
        for (auto [a, b] : candidates_)
            if (phi_[a] != phi_[b])
                ++remaining_[key(phi_[a], phi_[b])];
    }

    std::optional<ChordalCover> run()
    {
        for (auto [i, j] : c_.edges())
            if (remaining_[key(i, j)] == 0)
                return std::nullopt;
        if (recurse(0))
            return found_;
        return std::nullopt;
    }

  private:
    static std::pair<int, int> key(int i, int j) { return std::minmax(i, j); }

    Face image(Face t) const
    {
        Face out;
        for (int a : t.members())
            out = out.with(phi_[a]);
        return out;
    }

    bool recurse(std::size_t k)
    {
        if (k == candidates_.size())
            return leaf();
        auto [a, b] = candidates_[k];
        std::uint64_t common = adj_[a] & adj_[b];
        bool can_include = true;
        for (std::uint64_t w = common; w != 0; w &= w - 1) {
            int x = std::countr_zero(w);
            if (!c_.contains(image(Face::of({a, b, x})))) {
                can_include = false;
                break;
            }
        }
        if (can_include) {
            adj_[a] |= std::uint64_t{1} << b;
            adj_[b] |= std::uint64_t{1} << a;
            bool ok = recurse(k + 1);
            adj_[a] &= ~(std::uint64_t{1} << b);
            adj_[b] &= ~(std::uint64_t{1} << a);
            if (ok)
                return true;
        }
        bool can_exclude = true;
        if (phi_[a] != phi_[b]) {
            int& left = remaining_[key(phi_[a], phi_[b])];
            can_exclude = left > 1;
            if (can_exclude) {
                --left;
                bool ok = recurse(k + 1);
                ++left;
                return ok;
            }
            return false;
        }
        return recurse(k + 1);
    }

    bool leaf()
    {
        if (!detail::elimination_order(adj_))
            return false;
        std::vector<Face> cliques = detail::maximal_cliques(adj_);
        std::vector<Face> images;
        for (Face k : cliques) {
            Face im = image(k);
            if (!c_.contains(im))
                return false;
            images.push_back(im);
        }
        for (Face f : c_.facets())
            if (std::none_of(images.begin(), images.end(), [f](Face im) { return f.subset_of(im); }))
                return false;
        SimplicialComplex cover = SimplicialComplex::from_masks(names_, cliques);
        SimplicialMap map(cover, c_, phi_);
        found_ = ChordalCover{cover, map, cover.num_vertices() - c_.num_vertices()};
        return true;
    }

    const SimplicialComplex& c_;
    std::vector<std::string> names_;
    std::vector<int> phi_;
    std::vector<std::pair<int, int>> candidates_;
    detail::Adjacency adj_;
    std::map<std::pair<int, int>, int> remaining_;
    std::optional<ChordalCover> found_;
};

// Calls `visit` with every multiplicity vector (entries >= 1) whose excess
// over all-ones sums to `extra`.
void for_each_pattern(int n, int extra, const std::function<bool(const std::vector<int>&)>& visit)
{
    std::vector<int> m(n, 1);
    std::function<bool(int, int)> go = [&](int v, int left) -> bool {
        if (v == n)
            return left == 0 ? visit(m) : false;
        for (int add = left; add >= 0; --add) {
            m[v] = 1 + add;
            if (go(v + 1, left - add))
                return true;
        }
        m[v] = 1;
        return false;
    };
    go(0, extra);
}

} // namespace

std::optional<Deficiency> chordal_deficiency(const SimplicialComplex& c, int max_extra)
{
    if (c.num_vertices() > kDeficiencyMaxVertices)
        throw Error("chordal_deficiency: at most " + std::to_string(kDeficiencyMaxVertices) + " vertices supported");
    if (max_extra < 0 || max_extra > kDeficiencyMaxExtra)
        throw Error("chordal_deficiency: max_extra must lie in [0, " + std::to_string(kDeficiencyMaxExtra) + "]");
    if (is_chordal_complex(c))
        return Deficiency{0, identity_cover(c)};
    for (int k = 1; k <= max_extra; ++k) {
        std::optional<ChordalCover> hit;
        for_each_pattern(c.num_vertices(), k, [&](const std::vector<int>& m) {
            hit = CoverSearch(c, m).run();
            return hit.has_value();
        });
        if (hit)
            return Deficiency{k, *hit};
    }
    return std::nullopt;
}

} // namespace srpos
