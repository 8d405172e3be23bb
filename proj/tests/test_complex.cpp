#include "doctest.h"

#include "srpos/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace srpos;

namespace {

using Names = std::vector<std::vector<std::string>>;

SimplicialComplex cx(const Names& faces) { return SimplicialComplex::from_faces(faces); }

std::set<std::vector<std::string>> facet_set(const SimplicialComplex& c)
{
    std::set<std::vector<std::string>> out;
    for (auto f : c.facet_names()) {
        std::sort(f.begin(), f.end());
        out.insert(f);
    }
    return out;
}

std::set<std::vector<std::string>> sorted(Names faces)
{
    std::set<std::vector<std::string>> out;
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        out.insert(f);
    }
    return out;
}

// Brute force: every subset of the ground set, tested against the facets.
std::vector<std::uint64_t> all_faces_brute(const SimplicialComplex& c)
{
    std::vector<std::uint64_t> out;
    const int n = c.num_vertices();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        bool in = false;
        for (Face f : c.facets())
            in = in || (s & ~f.bits) == 0;
        if (in)
            out.push_back(s);
    }
    return out;
}

const SimplicialComplex c4 = cx({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
const SimplicialComplex p3 = cx({{"1", "2"}, {"2", "3"}});
const SimplicialComplex full3 = cx({{"1", "2", "3"}});
const SimplicialComplex oct = cx({{"1", "3", "5"}, {"1", "3", "6"}, {"1", "4", "5"}, {"1", "4", "6"},
                                  {"2", "3", "5"}, {"2", "3", "6"}, {"2", "4", "5"}, {"2", "4", "6"}});

SimplicialComplex random_complex(std::mt19937_64& rng, int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back("v" + std::to_string(i));
    std::vector<Face> faces;
    int count = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < count; ++k)
        faces.push_back(Face{rng() & ((std::uint64_t{1} << n) - 1)});
    return SimplicialComplex::from_masks(names, faces);
}

} // namespace

TEST_CASE("from_faces keeps maximal faces and adds singletons")
{
    CHECK(facet_set(p3) == sorted({{"1", "2"}, {"2", "3"}}));
    CHECK(facet_set(cx({{"1", "2", "3"}, {"1", "2"}})) == sorted({{"1", "2", "3"}}));
    CHECK(facet_set(cx({{"1"}, {"2"}})) == sorted({{"1"}, {"2"}}));
    auto iso = SimplicialComplex::from_faces({{"a", "b"}}, {"z"});
    CHECK(iso.num_vertices() == 3);
    CHECK(iso.contains(std::vector<std::string>{"z"}));
    CHECK_THROWS_AS(cx({{"1", "1"}}), Error);
}

TEST_CASE("face membership is the subset test")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto c = random_complex(rng, 2 + static_cast<int>(rng() % 6));
        auto brute = all_faces_brute(c);
        std::vector<std::uint64_t> listed;
        for (Face f : c.faces())
            listed.push_back(f.bits);
        std::sort(listed.begin(), listed.end());
        CHECK(listed == brute);
        for (Face f : c.facets())
            for (Face g : c.facets())
                if (!(f == g))
                    CHECK_FALSE(f.subset_of(g));
        for (int v = 0; v < c.num_vertices(); ++v)
            CHECK(c.contains(Face::single(v)));
    }
}

TEST_CASE("skeleta")
{
    auto s1 = k_skeleton(full3, 1);
    CHECK(facet_set(s1) == sorted({{"1", "2"}, {"1", "3"}, {"2", "3"}}));
    CHECK(strict_k_skeleton(c4, 1).size() == 4);
    auto s0 = k_skeleton(c4, 0);
    CHECK(s0.facets().size() == 4);
    CHECK(s0.dimension() == 0);
    CHECK_THROWS_AS(k_skeleton(c4, -1), Error);
}

TEST_CASE("links")
{
    auto l = link(oct, "1");
    CHECK(facet_set(l) == sorted({{"3", "5"}, {"3", "6"}, {"4", "5"}, {"4", "6"}}));
    // Oracle: faces F with 1 not in F and F + 1 a face.
    int one = oct.index("1");
    std::set<std::vector<std::string>> expect;
    for (Face f : oct.faces())
        if (!f.has(one) && oct.contains(f.with(one))) {
            auto nm = oct.names_of(f);
            std::sort(nm.begin(), nm.end());
            expect.insert(nm);
        }
    std::set<std::vector<std::string>> got;
    for (Face f : l.faces()) {
        auto nm = l.names_of(f);
        std::sort(nm.begin(), nm.end());
        got.insert(nm);
    }
    CHECK(got == expect);
    CHECK(facet_set(link(p3, "2")) == sorted({{"1"}, {"3"}}));
    CHECK(facet_set(link(full3, "1")) == sorted({{"2", "3"}}));
    CHECK_THROWS_AS(link(p3, "9"), Error);
}

TEST_CASE("minimal nonfaces against brute force")
{
    CHECK(minimal_nonfaces(c4).size() == 2);
    CHECK(minimal_nonfaces(full3).empty());
    auto s2 = cx({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
    auto mn = minimal_nonfaces(s2);
    REQUIRE(mn.size() == 1);
    CHECK(mn[0].size() == 4);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        auto c = random_complex(rng, 2 + static_cast<int>(rng() % 6));
        std::set<std::uint64_t> brute;
        const int n = c.num_vertices();
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
            if (c.contains(Face{s}))
                continue;
            bool minimal = true;
            for (int v = 0; v < n; ++v)
                if ((s >> v) & 1u)
                    minimal = minimal && c.contains(Face{s & ~(std::uint64_t{1} << v)});
            if (minimal)
                brute.insert(s);
        }
        std::set<std::uint64_t> got;
        for (Face f : minimal_nonfaces(c))
            got.insert(f.bits);
        CHECK(got == brute);
    }
}

TEST_CASE("clique complexes")
{
    CHECK(facet_set(clique_complex(k_skeleton(full3, 1))) == facet_set(full3));
    CHECK(facet_set(clique_complex(c4)) == facet_set(c4));
    auto k4e = cx({{"1", "2"}, {"1", "3"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
    CHECK(facet_set(clique_complex(k4e)) == sorted({{"1", "2", "3"}, {"2", "3", "4"}}));
    CHECK_THROWS_AS(clique_complex(full3), Error);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        auto g = k_skeleton(random_complex(rng, 3 + static_cast<int>(rng() % 5)), 1);
        for (Face f : minimal_nonfaces(clique_complex(g)))
            CHECK(f.size() == 2);
    }
}

TEST_CASE("cones")
{
    auto cc = cone(c4, "*");
    CHECK(cc.facets().size() == 4);
    CHECK(cc.dimension() == 2);
    auto e = cone(cx({{"x"}}), "*");
    CHECK(facet_set(e) == sorted({{"x", "*"}}));
    auto s1 = k_skeleton(full3, 1);
    CHECK(facet_set(cone(s1, "*")) == sorted({{"*", "1", "2"}, {"*", "1", "3"}, {"*", "2", "3"}}));
    CHECK_THROWS_AS(cone(c4, "1"), Error);
    for (const auto& base : {c4, p3, full3, oct})
        CHECK(link(cone(base, "apex"), "apex") == base);
}

TEST_CASE("one sums")
{
    auto w = one_sum(prefixed(c4, "a"), prefixed(c4, "b"), "a1", "b1");
    CHECK(w.num_vertices() == 7);
    CHECK(w.edges().size() == 8);
    CHECK(w.find("a1|b1"));
    auto e = cx({{"1", "2"}});
    auto p = one_sum(prefixed(e, "a"), prefixed(e, "b"), "a2", "b1");
    CHECK(p.num_vertices() == 3);
    CHECK(p.edges().size() == 2);
    CHECK(p.dimension() == 1);
    auto m = one_sum(prefixed(full3, "t"), prefixed(c4, "c"), "t1", "c1");
    CHECK(m.num_vertices() == 6);
    CHECK(m.facets().size() == 5);
    CHECK_THROWS_AS(one_sum(c4, c4, "1", "1"), Error);

    auto s = one_sum_with_inclusions(prefixed(c4, "a"), prefixed(full3, "b"), "a2", "b3");
    for (const auto* inc : {&s.left, &s.right})
        CHECK(validate_map(*inc).valid);
    CHECK(s.complex.faces().size() == c4.faces().size() + full3.faces().size() - 1);
}

TEST_CASE("quotients")
{
    auto p5 = cx({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1*"}});
    auto q = quotient(p5, {{"1", "1*"}, {"2"}, {"3"}, {"4"}}, {"1", "2", "3", "4"});
    CHECK(q.complex == c4);
    auto v = validate_map(q.map);
    CHECK(v.valid);
    CHECK(v.surjective_on_faces);

    auto id = quotient(c4, {{"1"}, {"2"}, {"3"}, {"4"}});
    CHECK(id.complex == c4);
    auto edge = cx({{"1", "2"}});
    auto pt = quotient(edge, {{"1", "2"}});
    CHECK(pt.complex.num_vertices() == 1);
    CHECK(pt.complex.vertices()[0] == "1|2");

    CHECK_THROWS_AS(quotient(c4, {{"1", "2"}, {"2", "3", "4"}}), Error);
    CHECK_THROWS_AS(quotient(c4, {{"1", "2"}}), Error);
}

TEST_CASE("spheres")
{
    auto s1 = sphere(1);
    CHECK(s1.num_vertices() == 3);
    CHECK(s1.facets().size() == 3);
    CHECK(s1.dimension() == 1);
    CHECK(sphere(2).facets().size() == 4);
    CHECK(sphere(0).num_vertices() == 2);
    CHECK(sphere(0).dimension() == 0);
    CHECK_THROWS_AS(sphere(-1), Error);
}

TEST_CASE("map validation")
{
    CHECK(validate_map(SimplicialMap::identity(c4)).valid);
    CHECK(validate_map(SimplicialMap::identity(c4)).surjective_on_faces);
    // C4 onto the clique complex of C4 with {1,2} contracted: a triangle.
    auto tri = cx({{"v", "3", "4"}});
    auto m = SimplicialMap::from_names(c4, tri, {{"1", "v"}, {"2", "v"}, {"3", "3"}, {"4", "4"}});
    auto r = validate_map(m);
    CHECK(r.valid);
    CHECK_FALSE(r.surjective_on_faces);
    auto bad = SimplicialMap::from_names(p3, cx({{"a", "b"}, {"b", "c"}}), {{"1", "a"}, {"2", "c"}, {"3", "b"}});
    CHECK_FALSE(validate_map(bad).valid);
    CHECK_THROWS_AS(SimplicialMap::from_names(p3, c4, {{"1", "1"}}), Error);
}

TEST_CASE("thickened graphs")
{
    auto p4 = cx({{"a", "b"}, {"b", "c"}, {"c", "d"}});
    DirectedGraph loop{{"n"}, {{"e", "n", "n"}}};
    auto t = thickened_graph(loop, {{p4, "a", "d"}});
    CHECK(t.complex.num_vertices() == 3);
    CHECK(t.complex.edges().size() == 3);
    CHECK(t.complex.dimension() == 1);
    CHECK(validate_map(t.cover).surjective_on_faces);

    auto p3b = cx({{"h", "m"}, {"m", "t"}});
    DirectedGraph one{{"x", "y"}, {{"e", "x", "y"}}};
    auto t1 = thickened_graph(one, {{p3b, "h", "t"}});
    CHECK(t1.complex.num_vertices() == 3);
    CHECK(t1.complex.find("e:m"));
    auto edge = cx({{"h", "t"}});
    CHECK_THROWS_AS(thickened_graph(one, {{edge, "h", "t"}}), Error);
    CHECK_THROWS_AS(thickened_graph(loop, {{p3b, "h", "t"}}), Error);
    CHECK_THROWS_AS(thickened_graph(one, {{c4, "1", "3"}}), Error);

    DirectedGraph par{{"x", "y"}, {{"e", "x", "y"}, {"f", "x", "y"}}};
    auto t2 = thickened_graph(par, {{p3b, "h", "t"}, {p3b, "h", "t"}});
    CHECK(t2.complex.num_vertices() == 4);
    CHECK(t2.complex.edges().size() == 4);
    CHECK(facet_set(t2.complex) == sorted({{"x", "e:m"}, {"e:m", "y"}, {"x", "f:m"}, {"f:m", "y"}}));

    // A loop whose block has a vertex adjacent to both ends folds two edges together.
    auto fan = cx({{"h", "m", "w"}, {"m", "w", "t"}});
    CHECK_THROWS_AS(thickened_graph(loop, {{fan, "h", "t"}}), Error);
}

TEST_CASE("thickening equals the quotient of its blocks")
{
    auto p4 = cx({{"a", "b"}, {"b", "c"}, {"c", "d"}});
    auto fan = cx({{"a", "b", "c"}, {"a", "c", "d"}});
    DirectedGraph g{{"x", "y"}, {{"e", "x", "y"}, {"f", "y", "x"}}};
    auto t = thickened_graph(g, {{p4, "a", "d"}, {fan, "b", "d"}});
    // Rebuild: image of every facet of every block under its inclusion.
    std::vector<Face> images;
    for (const auto& m : t.block_maps) {
        CHECK(validate_map(m).valid);
        for (Face f : m.domain().facets())
            images.push_back(m.image(f));
    }
    auto rebuilt = SimplicialComplex::from_masks(t.complex.vertices(), images);
    CHECK(rebuilt == t.complex);
    auto v = validate_map(t.cover);
    CHECK(v.valid);
    CHECK(v.surjective_on_faces);
}
