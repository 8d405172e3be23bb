#include "srpos/constructions.hpp"

#include "srpos/chordal.hpp"

#include "graph.hpp"

#include <algorithm>
#include <set>

namespace srpos {

SimplicialComplex k_skeleton(const SimplicialComplex& c, int k)
{
    if (k < 0)
        throw Error("skeleton degree must be nonnegative");
    std::vector<Face> kept;
    for (Face f : c.faces())
        if (f.size() <= k + 1)
            kept.push_back(f);
    return SimplicialComplex::from_masks(c.vertices(), kept);
}

std::vector<Face> strict_k_skeleton(const SimplicialComplex& c, int k)
{
    if (k < 0)
        throw Error("skeleton degree must be nonnegative");
    std::vector<Face> out;
    for (Face f : c.faces())
        if (f.size() == k + 1)
            out.push_back(f);
    return out;
}

SimplicialComplex link(const SimplicialComplex& c, std::string_view v)
{
    const int apex = c.index(v);
    std::vector<std::string> names;
    std::vector<int> remap(c.num_vertices(), -1);
    for (int u = 0; u < c.num_vertices(); ++u)
        if (u != apex) {
            remap[u] = static_cast<int>(names.size());
            names.push_back(c.name(u));
        }
    std::vector<Face> faces;
    for (Face f : c.facets()) {
        if (!f.has(apex))
            continue;
        Face g;
        for (int u : f.without(apex).members())
            g = g.with(remap[u]);
        faces.push_back(g);
    }
    // The link's ground set is the set of vertices adjacent to v.
    Face support;
    for (Face g : faces)
        support = support | g;
    std::vector<std::string> kept;
    std::vector<int> reindex(names.size(), -1);
    for (int u : support.members()) {
        reindex[u] = static_cast<int>(kept.size());
        kept.push_back(names[u]);
    }
    std::vector<Face> out;
    for (Face g : faces) {
        Face h;
        for (int u : g.members())
            h = h.with(reindex[u]);
        if (!h.empty())
            out.push_back(h);
    }
    return SimplicialComplex::from_masks(std::move(kept), out);
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c)
{
    std::set<Face> out;
    const int n = c.num_vertices();
    for (Face f : c.faces()) {
        for (int v = 0; v < n; ++v) {
            if (f.has(v))
                continue;
            Face s = f.with(v);
            if (c.contains(s))
                continue;
            bool minimal = true;
            for (int u : s.members())
                if (!c.contains(s.without(u))) {
                    minimal = false;
                    break;
                }
            if (minimal)
                out.insert(s);
        }
    }
    return {out.begin(), out.end()};
}

SimplicialComplex flag_closure(const SimplicialComplex& c)
{
    return SimplicialComplex::from_masks(c.vertices(), detail::maximal_cliques(detail::adjacency(c)));
}

SimplicialComplex clique_complex(const SimplicialComplex& g)
{
    if (g.dimension() > 1)
        throw Error("clique_complex expects a graph (dimension <= 1)");
    return flag_closure(g);
}

SimplicialComplex cone(const SimplicialComplex& c, const std::string& apex)
{
    if (c.find(apex))
        throw Error("cone apex '" + apex + "' collides with an existing vertex");
    auto names = c.vertices();
    names.push_back(apex);
    const int a = c.num_vertices();
    std::vector<Face> faces;
    for (Face f : c.facets())
        faces.push_back(f.with(a));
    if (faces.empty())
        faces.push_back(Face::single(a));
    return SimplicialComplex::from_masks(std::move(names), faces);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, Face keep)
{
    std::vector<std::string> names;
    std::vector<int> remap(c.num_vertices(), -1);
    for (int v : keep.members()) {
        remap[v] = static_cast<int>(names.size());
        names.push_back(c.name(v));
    }
    std::vector<Face> faces;
    for (Face f : c.facets()) {
        Face g;
        for (int v : (f & keep).members())
            g = g.with(remap[v]);
        if (!g.empty())
            faces.push_back(g);
    }
    return SimplicialComplex::from_masks(std::move(names), faces);
}

SimplicialComplex prefixed(const SimplicialComplex& c, const std::string& prefix)
{
    auto names = c.vertices();
    for (auto& s : names)
        s = prefix + s;
    return SimplicialComplex::from_masks(std::move(names), c.facets());
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b)
{
    auto names = a.vertices();
    for (const auto& s : b.vertices()) {
        if (a.find(s))
            throw Error("vertex '" + s + "' occurs in both complexes; rename before joining");
        names.push_back(s);
    }
    std::vector<Face> faces = a.facets();
    const int shift = a.num_vertices();
    for (Face f : b.facets())
        faces.push_back(Face{f.bits << shift});
    return SimplicialComplex::from_masks(std::move(names), faces);
}

OneSum one_sum_with_inclusions(const SimplicialComplex& a, const SimplicialComplex& b, const std::string& va,
                               const std::string& vb)
{
    SimplicialComplex joined = disjoint_union(a, b);
    const std::string merged = va + "|" + vb;
    a.index(va);
    b.index(vb);
    std::vector<std::vector<std::string>> partition;
    partition.push_back({va, vb});
    std::vector<std::string> names{merged};
    for (const auto& s : joined.vertices())
        if (s != va && s != vb) {
            partition.push_back({s});
            names.push_back(s);
        }
    Quotient q = quotient(joined, partition, names);
    auto inclusion_of = [&](const SimplicialComplex& part, const std::string& glued) {
        std::vector<int> m(part.num_vertices());
        for (int v = 0; v < part.num_vertices(); ++v)
            m[v] = q.complex.index(part.name(v) == glued ? merged : part.name(v));
        return SimplicialMap(part, q.complex, std::move(m));
    };
    return OneSum{q.complex, inclusion_of(a, va), inclusion_of(b, vb)};
}

SimplicialComplex one_sum(const SimplicialComplex& a, const SimplicialComplex& b, const std::string& va,
                          const std::string& vb)
{
    return one_sum_with_inclusions(a, b, va, vb).complex;
}

Quotient quotient(const SimplicialComplex& c, const std::vector<std::vector<std::string>>& partition)
{
    std::vector<std::string> names;
    for (const auto& block : partition) {
        std::vector<int> ids;
        for (const auto& s : block)
            ids.push_back(c.index(s));
        std::sort(ids.begin(), ids.end());
        std::string joined;
        for (std::size_t k = 0; k < ids.size(); ++k)
            joined += (k ? "|" : "") + c.name(ids[k]);
        names.push_back(joined);
    }
    return quotient(c, partition, names);
}

Quotient quotient(const SimplicialComplex& c, const std::vector<std::vector<std::string>>& partition,
                  const std::vector<std::string>& block_names)
{
    if (partition.size() != block_names.size())
        throw Error("one name is needed per partition block");
    std::vector<int> map(c.num_vertices(), -1);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        if (partition[b].empty())
            throw Error("partition has an empty block");
        for (const auto& s : partition[b]) {
            int v = c.index(s);
            if (map[v] >= 0)
                throw Error("vertex '" + s + "' appears in two partition blocks");
            map[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < c.num_vertices(); ++v)
        if (map[v] < 0)
            throw Error("partition does not cover vertex '" + c.name(v) + "'");

    std::vector<int> identity(c.num_vertices());
    for (int v = 0; v < c.num_vertices(); ++v)
        identity[v] = v;
    std::vector<Face> images;
    for (Face f : c.facets()) {
        Face g;
        for (int v : f.members())
            g = g.with(map[v]);
        images.push_back(g);
    }
    SimplicialComplex target = SimplicialComplex::from_masks(block_names, images);
    return Quotient{target, SimplicialMap(c, target, std::move(map))};
}

SimplicialComplex sphere(int d)
{
    if (d < 0)
        throw Error("sphere dimension must be nonnegative");
    std::vector<std::string> names;
    for (int i = 1; i <= d + 2; ++i)
        names.push_back(std::to_string(i));
    if (d + 2 > kMaxVertices)
        throw Error("sphere too large");
    std::vector<Face> facets;
    Face all;
    for (int i = 0; i < d + 2; ++i)
        all = all.with(i);
    for (int i = 0; i < d + 2; ++i)
        facets.push_back(all.without(i));
    return SimplicialComplex::from_masks(std::move(names), facets);
}

Thickening thickened_graph(const DirectedGraph& d, const std::vector<ArcBlock>& blocks)
{
    if (blocks.size() != d.arcs.size())
        throw Error("thickened_graph needs exactly one block per arc");
    std::set<std::string> node_names(d.nodes.begin(), d.nodes.end());
    if (node_names.size() != d.nodes.size())
        throw Error("duplicate node name in directed graph");
    std::set<std::string> arc_names;
    for (const Arc& a : d.arcs) {
        if (!arc_names.insert(a.name).second)
            throw Error("duplicate arc name '" + a.name + "'");
        if (!node_names.count(a.head) || !node_names.count(a.tail))
            throw Error("arc '" + a.name + "' refers to an unknown node");
    }

    if (d.nodes.empty())
        throw Error("directed graph has no nodes");
    SimplicialComplex unio = SimplicialComplex::from_faces({}, d.nodes);
    for (std::size_t e = 0; e < d.arcs.size(); ++e) {
        const ArcBlock& blk = blocks[e];
        const Arc& arc = d.arcs[e];
        int h = blk.block.index(blk.head_vertex);
        int t = blk.block.index(blk.tail_vertex);
        if (h == t)
            throw Error("arc '" + arc.name + "': distinguished vertices must differ");
        if (blk.block.has_edge(h, t))
            throw Error("arc '" + arc.name + "': {H, T} is a face of its block");
        if (!is_chordal_complex(blk.block))
            throw Error("arc '" + arc.name + "': block is not chordal");
        if (arc.head == arc.tail && blk.block.num_vertices() < 3)
            throw Error("arc '" + arc.name + "': a loop needs a block with at least three vertices");
        unio = disjoint_union(unio, prefixed(blk.block, arc.name + ":"));
    }

    // Union-find over the disjoint union, anchored at the node vertices.
    std::vector<int> parent(unio.num_vertices());
    for (int v = 0; v < unio.num_vertices(); ++v)
        parent[v] = v;
    auto root = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    auto join = [&](int a, int b) {
        a = root(a);
        b = root(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b); // node vertices come first and stay roots
    };
    for (std::size_t e = 0; e < d.arcs.size(); ++e) {
        const std::string prefix = d.arcs[e].name + ":";
        join(unio.index(d.arcs[e].head), unio.index(prefix + blocks[e].head_vertex));
        join(unio.index(d.arcs[e].tail), unio.index(prefix + blocks[e].tail_vertex));
    }
    std::vector<std::vector<std::string>> partition;
    std::vector<std::string> names;
    std::vector<int> slot(unio.num_vertices(), -1);
    for (int v = 0; v < unio.num_vertices(); ++v) {
        int r = root(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(partition.size());
            partition.emplace_back();
            names.push_back(unio.name(r));
        }
        partition[slot[r]].push_back(unio.name(v));
    }
    Quotient q = quotient(unio, partition, names);

    // Distinct edges of the union must stay distinct.
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : unio.edges()) {
        int a = q.map(i), b = q.map(j);
        if (a == b)
            throw Error("thickening collapses an edge to a vertex");
        if (!seen.insert(std::minmax(a, b)).second)
            throw Error("thickening identifies two distinct edges ('" + unio.name(i) + "','" + unio.name(j) +
                        "'); gluing rejected");
    }

    Thickening out{q.complex, q.map, blocks, {}};
    for (std::size_t e = 0; e < d.arcs.size(); ++e) {
        const auto& blk = blocks[e].block;
        std::vector<int> m(blk.num_vertices());
        for (int v = 0; v < blk.num_vertices(); ++v)
            m[v] = q.map(unio.index(d.arcs[e].name + ":" + blk.name(v)));
        out.block_maps.emplace_back(blk, q.complex, std::move(m));
    }
    return out;
}

} // namespace srpos
