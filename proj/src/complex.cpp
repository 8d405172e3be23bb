#include "srpos/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace srpos {

std::vector<int> Face::members() const
{
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

struct SimplicialComplex::Data
{
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    std::vector<Face> facets;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> closed;
    std::vector<int> pair_slot; // n*n, -1 off the closed skeleton
};

std::shared_ptr<const SimplicialComplex::Data> SimplicialComplex::build(std::vector<std::string> names, std::vector<Face> faces)
{
    const int n = static_cast<int>(names.size());
    if (n > kMaxVertices)
        throw Error("complex has " + std::to_string(n) + " vertices; at most 64 are supported");

    auto d = std::make_shared<SimplicialComplex::Data>();
    for (int i = 0; i < n; ++i) {
        if (names[i].empty())
            throw Error("empty vertex name");
        if (!d->index.emplace(names[i], i).second)
            throw Error("duplicate vertex name '" + names[i] + "'");
    }
    const std::uint64_t universe = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::uint64_t covered = 0;
    for (Face f : faces) {
        if (f.bits & ~universe)
            throw Error("face uses a vertex outside the ground set");
        covered |= f.bits;
    }
    for (int v = 0; v < n; ++v)
        if (!((covered >> v) & 1u))
            faces.push_back(Face::single(v));

    // Keep inclusion-maximal faces only.
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) { return b < a; });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> facets;
    for (Face f : faces) {
        if (f.empty())
            continue;
        bool absorbed = std::any_of(facets.begin(), facets.end(), [f](Face g) { return f.subset_of(g); });
        if (!absorbed)
            facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end());
    d->facets = std::move(facets);
    d->names = std::move(names);

    d->pair_slot.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i)
        d->closed.emplace_back(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Face e = Face::of({i, j});
            bool found = std::any_of(d->facets.begin(), d->facets.end(), [e](Face g) { return e.subset_of(g); });
            if (found)
                d->edges.emplace_back(i, j);
        }
    d->closed.insert(d->closed.end(), d->edges.begin(), d->edges.end());
    for (std::size_t k = 0; k < d->closed.size(); ++k) {
        auto [i, j] = d->closed[k];
        d->pair_slot[static_cast<std::size_t>(i) * n + j] = static_cast<int>(k);
        d->pair_slot[static_cast<std::size_t>(j) * n + i] = static_cast<int>(k);
    }
    return d;
}

SimplicialComplex::SimplicialComplex() : d_(build({}, {})) {}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Data> data) : d_(std::move(data)) {}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<std::vector<std::string>>& faces,
                                                const std::vector<std::string>& vertices)
{
    if (faces.empty() && vertices.empty())
        throw Error("from_faces needs at least one face or an explicit vertex list");
    std::vector<std::string> names;
    std::unordered_map<std::string, int> idx;
    auto intern = [&](const std::string& s) {
        auto [it, fresh] = idx.emplace(s, static_cast<int>(names.size()));
        if (fresh)
            names.push_back(s);
        return it->second;
    };
    for (const auto& v : vertices) {
        if (idx.count(v))
            throw Error("duplicate vertex '" + v + "' in vertex list");
        intern(v);
    }
    std::vector<std::vector<int>> raw;
    for (const auto& f : faces) {
        std::vector<int> ids;
        for (const auto& v : f)
            ids.push_back(intern(v));
        raw.push_back(std::move(ids));
    }
    if (names.size() > static_cast<std::size_t>(kMaxVertices))
        throw Error("complex has more than 64 vertices");
    std::vector<Face> masks;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        Face f;
        for (int v : raw[k]) {
            if (f.has(v))
                throw Error("face lists vertex '" + names[v] + "' twice");
            f = f.with(v);
        }
        masks.push_back(f);
    }
    return SimplicialComplex(build(std::move(names), std::move(masks)));
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<std::string> vertices, const std::vector<Face>& faces)
{
    return SimplicialComplex(build(std::move(vertices), faces));
}

int SimplicialComplex::num_vertices() const { return static_cast<int>(d_->names.size()); }
const std::vector<std::string>& SimplicialComplex::vertices() const { return d_->names; }
const std::string& SimplicialComplex::name(int v) const { return d_->names.at(v); }

std::optional<int> SimplicialComplex::find(std::string_view name) const
{
    auto it = d_->index.find(std::string(name));
    if (it == d_->index.end())
        return std::nullopt;
    return it->second;
}

int SimplicialComplex::index(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw Error("unknown vertex '" + std::string(name) + "'");
}

Face SimplicialComplex::all() const
{
    const int n = num_vertices();
    return Face{n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
}

const std::vector<Face>& SimplicialComplex::facets() const { return d_->facets; }

bool SimplicialComplex::contains(Face f) const
{
    if (f.empty())
        return true;
    return std::any_of(d_->facets.begin(), d_->facets.end(), [f](Face g) { return f.subset_of(g); });
}

bool SimplicialComplex::contains(const std::vector<std::string>& names) const
{
    Face f;
    for (const auto& s : names) {
        auto i = find(s);
        if (!i)
            return false;
        f = f.with(*i);
    }
    return contains(f);
}

bool SimplicialComplex::has_edge(int i, int j) const
{
    const int n = num_vertices();
    return i != j && d_->pair_slot[static_cast<std::size_t>(i) * n + j] >= 0;
}

bool SimplicialComplex::is_facet(Face f) const
{
    return std::find(d_->facets.begin(), d_->facets.end(), f) != d_->facets.end();
}

int SimplicialComplex::dimension() const
{
    int dim = -1;
    for (Face f : d_->facets)
        dim = std::max(dim, f.dimension());
    return dim;
}

std::vector<Face> SimplicialComplex::faces() const
{
    std::set<Face> out;
    for (Face f : d_->facets) {
        // Enumerate nonempty submasks.
        for (std::uint64_t s = f.bits; s != 0; s = (s - 1) & f.bits)
            out.insert(Face{s});
    }
    return {out.begin(), out.end()};
}

const std::vector<std::pair<int, int>>& SimplicialComplex::edges() const { return d_->edges; }

std::vector<Face> SimplicialComplex::triangles() const
{
    std::vector<Face> out;
    for (Face f : faces())
        if (f.size() == 3)
            out.push_back(f);
    return out;
}

const std::vector<std::pair<int, int>>& SimplicialComplex::closed_skeleton() const { return d_->closed; }

std::optional<std::size_t> SimplicialComplex::pair_index(int i, int j) const
{
    const int n = num_vertices();
    if (i < 0 || j < 0 || i >= n || j >= n)
        return std::nullopt;
    int slot = d_->pair_slot[static_cast<std::size_t>(i) * n + j];
    if (slot < 0)
        return std::nullopt;
    return static_cast<std::size_t>(slot);
}

std::optional<std::size_t> SimplicialComplex::edge_index(int i, int j) const
{
    if (i == j)
        return std::nullopt;
    auto k = pair_index(i, j);
    if (!k)
        return std::nullopt;
    return *k - static_cast<std::size_t>(num_vertices());
}

std::vector<int> SimplicialComplex::neighbors(int v) const
{
    std::vector<int> out;
    for (int u = 0; u < num_vertices(); ++u)
        if (has_edge(u, v))
            out.push_back(u);
    return out;
}

Face SimplicialComplex::face_of(const std::vector<std::string>& names) const
{
    Face f;
    for (const auto& s : names) {
        int i = index(s);
        if (f.has(i))
            throw Error("vertex '" + s + "' listed twice");
        f = f.with(i);
    }
    return f;
}

std::vector<std::string> SimplicialComplex::names_of(Face f) const
{
    std::vector<std::string> out;
    for (int v : f.members())
        out.push_back(name(v));
    return out;
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_names() const
{
    std::vector<std::vector<std::string>> out;
    for (Face f : d_->facets)
        out.push_back(names_of(f));
    return out;
}

std::string SimplicialComplex::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first_facet = true;
    for (Face f : d_->facets) {
        os << (first_facet ? "" : ", ") << '{';
        bool first = true;
        for (int v : f.members()) {
            os << (first ? "" : ",") << name(v);
            first = false;
        }
        os << '}';
        first_facet = false;
    }
    os << '}';
    return os.str();
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (a.num_vertices() != b.num_vertices())
        return false;
    std::vector<int> to_b(a.num_vertices());
    for (int v = 0; v < a.num_vertices(); ++v) {
        auto j = b.find(a.name(v));
        if (!j)
            return false;
        to_b[v] = *j;
    }
    if (a.facets().size() != b.facets().size())
        return false;
    for (Face f : a.facets()) {
        Face g;
        for (int v : f.members())
            g = g.with(to_b[v]);
        if (!b.is_facet(g))
            return false;
    }
    return true;
}

SimplicialMap::SimplicialMap(SimplicialComplex domain, SimplicialComplex codomain, std::vector<int> vertex_map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(vertex_map))
{
    if (static_cast<int>(map_.size()) != domain_.num_vertices())
        throw Error("vertex map is not total on the domain");
    for (int t : map_)
        if (t < 0 || t >= codomain_.num_vertices())
            throw Error("vertex map target outside the codomain");
}

SimplicialMap SimplicialMap::from_names(SimplicialComplex domain, SimplicialComplex codomain,
                                        const std::map<std::string, std::string>& vertex_map)
{
    std::vector<int> m(domain.num_vertices(), -1);
    for (const auto& [from, to] : vertex_map) {
        auto i = domain.find(from);
        if (!i)
            throw Error("vertex map names unknown domain vertex '" + from + "'");
        auto j = codomain.find(to);
        if (!j)
            throw Error("vertex map names unknown codomain vertex '" + to + "'");
        m[*i] = *j;
    }
    for (int v = 0; v < domain.num_vertices(); ++v)
        if (m[v] < 0)
            throw Error("vertex map is not total: '" + domain.name(v) + "' is unmapped");
    return SimplicialMap(std::move(domain), std::move(codomain), std::move(m));
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& c)
{
    std::vector<int> m(c.num_vertices());
    for (int v = 0; v < c.num_vertices(); ++v)
        m[v] = v;
    return SimplicialMap(c, c, std::move(m));
}

SimplicialMap SimplicialMap::inclusion(const SimplicialComplex& sub, const SimplicialComplex& super)
{
    std::vector<int> m(sub.num_vertices());
    for (int v = 0; v < sub.num_vertices(); ++v)
        m[v] = super.index(sub.name(v));
    return SimplicialMap(sub, super, std::move(m));
}

Face SimplicialMap::image(Face f) const
{
    Face out;
    for (std::uint64_t b = f.bits; b != 0; b &= b - 1)
        out = out.with(map_[std::countr_zero(b)]);
    return out;
}

std::vector<int> SimplicialMap::fiber(int codomain_vertex) const
{
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(map_.size()); ++v)
        if (map_[v] == codomain_vertex)
            out.push_back(v);
    return out;
}

std::map<std::string, std::string> SimplicialMap::named() const
{
    std::map<std::string, std::string> out;
    for (int v = 0; v < static_cast<int>(map_.size()); ++v)
        out[domain_.name(v)] = codomain_.name(map_[v]);
    return out;
}

MapValidity validate_map(const SimplicialMap& m)
{
    MapValidity r;
    r.valid = std::all_of(m.domain().facets().begin(), m.domain().facets().end(),
                          [&](Face f) { return m.codomain().contains(m.image(f)); });
    // A codomain facet has a preimage face iff it lies inside the image of
    // some domain facet; subfaces then follow by restriction.
    r.surjective_on_faces = std::all_of(m.codomain().facets().begin(), m.codomain().facets().end(), [&](Face g) {
        return std::any_of(m.domain().facets().begin(), m.domain().facets().end(),
                           [&](Face f) { return g.subset_of(m.image(f)); });
    });
    return r;
}

} // namespace srpos
