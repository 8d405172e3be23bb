#include "srpos/fixtures.hpp"

#include <functional>
#include <map>

namespace srpos {

namespace {

SimplicialComplex faces(std::vector<std::vector<std::string>> f) { return SimplicialComplex::from_faces(f); }

SimplicialComplex octahedron()
{
    std::vector<std::vector<std::string>> f;
    for (const char* a : {"1", "2"})
        for (const char* b : {"3", "4"})
            for (const char* c : {"5", "6"})
                f.push_back({a, b, c});
    return faces(f);
}

const std::map<std::string, std::function<SimplicialComplex()>, std::less<>>& complexes()
{
    static const std::map<std::string, std::function<SimplicialComplex()>, std::less<>> table{
        {"p3", [] { return faces({{"1", "2"}, {"2", "3"}}); }},
        {"p5", [] { return faces({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1*"}}); }},
        {"c4", [] { return cycle_complex(4); }},
        {"c5", [] { return cycle_complex(5); }},
        {"c6", [] { return cycle_complex(6); }},
        {"full3", [] { return faces({{"1", "2", "3"}}); }},
        {"sphere-1", [] { return sphere(1); }},
        {"sphere-2", [] { return sphere(2); }},
        {"octahedron", octahedron},
        {"wedge-c4", [] { return one_sum(prefixed(cycle_complex(4), "a"), prefixed(cycle_complex(4), "b"), "a1", "b1"); }},
        {"cone-c4", [] { return cone(cycle_complex(4), "*"); }},
        {"thick-two-block", [] { return two_block_thickening().complex; }},
    };
    return table;
}

PartialMatrix c4_matrix(double x12, double x23, double x34, double x14, double diag)
{
    PartialMatrix x(cycle_complex(4));
    for (const char* v : {"1", "2", "3", "4"})
        x.set(v, v, diag);
    x.set("1", "2", x12);
    x.set("2", "3", x23);
    x.set("3", "4", x34);
    x.set("1", "4", x14);
    return x;
}

} // namespace

SimplicialComplex cycle_complex(int n)
{
    if (n < 3)
        throw Error("a cycle needs at least three vertices");
    std::vector<std::vector<std::string>> e;
    for (int i = 1; i <= n; ++i)
        e.push_back({std::to_string(i), std::to_string(i % n + 1)});
    return faces(e);
}

Thickening two_block_thickening()
{
    auto path = faces({{"a", "b"}, {"b", "c"}, {"c", "d"}});
    auto fan = faces({{"a", "b", "c"}, {"a", "c", "d"}});
    DirectedGraph g{{"x", "y"}, {{"e", "y", "x"}, {"f", "x", "y"}}};
    return thickened_graph(g, {{path, "d", "a"}, {fan, "d", "b"}});
}

std::vector<std::string> fixture_complex_names()
{
    std::vector<std::string> out;
    for (const auto& [k, v] : complexes())
        out.push_back(k);
    return out;
}

SimplicialComplex fixture_complex(std::string_view name)
{
    auto it = complexes().find(name);
    if (it == complexes().end())
        throw Error("unknown fixture '" + std::string(name) + "'");
    return it->second();
}

std::vector<std::string> fixture_matrix_names() { return {"c4-paper-matrix", "c4-all-ones", "c4-identity"}; }

PartialMatrix fixture_matrix(std::string_view name)
{
    if (name == "c4-paper-matrix")
        return c4_matrix(-1, 1, 1, 1, 1);
    if (name == "c4-all-ones")
        return c4_matrix(1, 1, 1, 1, 1);
    if (name == "c4-identity")
        return c4_matrix(0, 0, 0, 0, 1);
    throw Error("unknown matrix fixture '" + std::string(name) + "'");
}

} // namespace srpos
