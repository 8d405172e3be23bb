#include "srpos/io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace srpos::io {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// A JSON value together with where it came from, for error messages.
struct Node
{
    const json& value;
    std::string origin;
    std::string path;
    fs::path base;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw IoError(origin + ": " + (path.empty() ? "<root>" : path) + ": " + what);
    }

    Node operator[](const char* key) const
    {
        if (!value.is_object())
            fail("expected an object");
        auto it = value.find(key);
        if (it == value.end())
            fail(std::string("missing key '") + key + "'");
        return {*it, origin, path.empty() ? key : path + "." + key, base};
    }
    Node at(std::size_t k) const { return {value[k], origin, path + "[" + std::to_string(k) + "]", base}; }
    Node member(const std::string& key, const json& v) const
    {
        return {v, origin, (path.empty() ? "" : path + ".") + key, base};
    }

    const json& array() const
    {
        if (!value.is_array())
            fail("expected an array");
        return value;
    }
    const json& object() const
    {
        if (!value.is_object())
            fail("expected an object");
        return value;
    }
    std::string string() const
    {
        if (!value.is_string())
            fail("expected a string");
        return value.get<std::string>();
    }
    double number() const
    {
        if (!value.is_number())
            fail("expected a number");
        return value.get<double>();
    }
    int integer() const
    {
        if (!value.is_number_integer())
            fail("expected an integer");
        return value.get<int>();
    }
    std::vector<std::string> strings() const
    {
        std::vector<std::string> out;
        for (std::size_t k = 0; k < array().size(); ++k)
            out.push_back(at(k).string());
        return out;
    }
};

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw IoError(p.string() + ": cannot open file");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw IoError(p.string() + ": cannot write file");
    out << text << '\n';
}

json parse(const std::string& text, const std::string& origin)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(origin + ": malformed JSON: " + e.what());
    }
}

SimplicialComplex complex_from(const Node& n)
{
    auto names = n["vertices"].strings();
    std::set<std::string> seen;
    for (std::size_t k = 0; k < names.size(); ++k)
        if (!seen.insert(names[k]).second)
            n["vertices"].at(k).fail("duplicate vertex '" + names[k] + "'");
    Node facets = n["facets"];
    std::vector<std::vector<std::string>> faces;
    for (std::size_t k = 0; k < facets.array().size(); ++k) {
        Node f = facets.at(k);
        auto members = f.strings();
        for (std::size_t m = 0; m < members.size(); ++m)
            if (!seen.count(members[m]))
                f.at(m).fail("unknown vertex '" + members[m] + "'");
        if (members.empty())
            f.fail("empty facet");
        faces.push_back(std::move(members));
    }
    try {
        return SimplicialComplex::from_faces(faces, names);
    } catch (const Error& e) {
        n.fail(e.what());
    }
}

// A complex given inline or as a file reference.
SimplicialComplex complex_ref(const Node& n)
{
    if (n.value.is_string()) {
        fs::path p = n.base / n.string();
        return load_complex(p);
    }
    return complex_from(n);
}

json complex_value(const SimplicialComplex& c)
{
    json out;
    out["vertices"] = c.vertices();
    out["facets"] = c.facet_names();
    return out;
}

Node root(const json& j, const fs::path& p) { return {j, p.string(), "", p.parent_path()}; }

} // namespace

SimplicialComplex parse_complex(const std::string& text, const std::string& origin)
{
    json j = parse(text, origin);
    return complex_from({j, origin, "", fs::path{}});
}

std::string complex_json(const SimplicialComplex& c) { return complex_value(c).dump(2); }

SimplicialComplex load_complex(const fs::path& p)
{
    json j = parse(read_file(p), p.string());
    return complex_from(root(j, p));
}

void save_complex(const fs::path& p, const SimplicialComplex& c) { write_file(p, complex_json(c)); }

PartialMatrix load_matrix(const fs::path& p)
{
    json j = parse(read_file(p), p.string());
    Node r = root(j, p);
    SimplicialComplex c = complex_ref(r["complex"]);
    PartialMatrix x(c);
    std::vector<bool> given(c.closed_skeleton().size(), false);
    Node entries = r["entries"];
    for (std::size_t k = 0; k < entries.array().size(); ++k) {
        Node e = entries.at(k);
        std::string a = e["i"].string(), b = e["j"].string();
        double v = e["v"].number();
        auto ia = c.find(a), ib = c.find(b);
        if (!ia)
            e["i"].fail("unknown vertex '" + a + "'");
        if (!ib)
            e["j"].fail("unknown vertex '" + b + "'");
        auto slot = c.pair_index(*ia, *ib);
        if (!slot)
            e.fail("{" + a + "," + b + "} is not an edge of the complex");
        if (given[*slot] && x(*ia, *ib) != v)
            e.fail("conflicting duplicate entry for {" + a + "," + b + "}");
        given[*slot] = true;
        x.set(*ia, *ib, v);
    }
    for (int v = 0; v < c.num_vertices(); ++v)
        if (!given[static_cast<std::size_t>(*c.pair_index(v, v))])
            entries.fail("missing diagonal entry for '" + c.name(v) + "'");
    return x;
}

std::string matrix_json(const PartialMatrix& x, const std::optional<std::string>& complex_ref)
{
    const auto& c = x.complex();
    json out;
    if (complex_ref)
        out["complex"] = *complex_ref;
    else
        out["complex"] = complex_value(c);
    json entries = json::array();
    for (auto [i, j] : c.closed_skeleton())
        entries.push_back({{"i", c.name(i)}, {"j", c.name(j)}, {"v", x(i, j)}});
    out["entries"] = std::move(entries);
    return out.dump(2);
}

void save_matrix(const fs::path& p, const PartialMatrix& x, const std::optional<std::string>& complex_ref)
{
    write_file(p, matrix_json(x, complex_ref));
}

SimplicialMap load_map(const fs::path& p)
{
    json j = parse(read_file(p), p.string());
    Node r = root(j, p);
    SimplicialComplex dom = complex_ref(r["domain"]);
    SimplicialComplex cod = complex_ref(r["codomain"]);
    Node vm = r["vertex_map"];
    std::map<std::string, std::string> named;
    for (const auto& [k, v] : vm.object().items()) {
        Node target = vm.member(k, v);
        std::string to = target.string();
        if (!dom.find(k))
            target.fail("unknown domain vertex '" + k + "'");
        if (!cod.find(to))
            target.fail("unknown codomain vertex '" + to + "'");
        named[k] = to;
    }
    for (const auto& v : dom.vertices())
        if (!named.count(v))
            vm.fail("domain vertex '" + v + "' is not mapped");
    return SimplicialMap::from_names(dom, cod, named);
}

void save_map(const fs::path& p, const SimplicialMap& m, const std::optional<std::string>& domain_ref,
              const std::optional<std::string>& codomain_ref)
{
    json out;
    out["domain"] = domain_ref ? json(*domain_ref) : complex_value(m.domain());
    out["codomain"] = codomain_ref ? json(*codomain_ref) : complex_value(m.codomain());
    json vm = json::object();
    for (int v = 0; v < m.domain().num_vertices(); ++v)
        vm[m.domain().name(v)] = m.codomain().name(m(v));
    out["vertex_map"] = std::move(vm);
    write_file(p, out.dump(2));
}

std::string gram_json(const GramVectors& g)
{
    json out;
    out["dim"] = g.dim();
    json vectors = json::object();
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        std::vector<double> row(static_cast<std::size_t>(g.dim()));
        for (int d = 0; d < g.dim(); ++d)
            row[static_cast<std::size_t>(d)] = g.rows(static_cast<Eigen::Index>(k), d);
        vectors[g.vertices[k]] = row;
    }
    out["vectors"] = std::move(vectors);
    return out.dump(2);
}

void save_gram(const fs::path& p, const GramVectors& g) { write_file(p, gram_json(g)); }

GramVectors load_gram(const fs::path& p)
{
    json j = parse(read_file(p), p.string());
    Node r = root(j, p);
    const int dim = r["dim"].integer();
    if (dim < 0)
        r["dim"].fail("negative dimension");
    Node vectors = r["vectors"];
    GramVectors g;
    g.rows.resize(static_cast<Eigen::Index>(vectors.object().size()), dim);
    for (const auto& [name, v] : vectors.object().items()) {
        Node row = vectors.member(name, v);
        if (row.array().size() != static_cast<std::size_t>(dim))
            row.fail("expected " + std::to_string(dim) + " coordinates");
        for (int d = 0; d < dim; ++d)
            g.rows(static_cast<Eigen::Index>(g.vertices.size()), d) = row.at(static_cast<std::size_t>(d)).number();
        g.vertices.push_back(name);
    }
    return g;
}

Thickening load_thickening(const fs::path& p)
{
    json j = parse(read_file(p), p.string());
    Node r = root(j, p);
    DirectedGraph g;
    g.nodes = r["nodes"].strings();
    std::vector<ArcBlock> blocks;
    Node arcs = r["arcs"];
    for (std::size_t k = 0; k < arcs.array().size(); ++k) {
        Node a = arcs.at(k);
        g.arcs.push_back({a["name"].string(), a["head"].string(), a["tail"].string()});
        blocks.push_back({complex_ref(a["block"]), a["head_vertex"].string(), a["tail_vertex"].string()});
    }
    try {
        return thickened_graph(g, blocks);
    } catch (const IoError&) {
        throw;
    } catch (const Error& e) {
        r.fail(e.what());
    }
}

std::string relative_ref(const fs::path& target, const fs::path& file)
{
    fs::path dir = fs::absolute(file).parent_path();
    return fs::relative(fs::absolute(target), dir).generic_string();
}

} // namespace srpos::io
