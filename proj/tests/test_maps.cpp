#include "doctest.h"

#include "support.hpp"

#include "srpos/chordal.hpp"
#include "srpos/constructions.hpp"
#include "srpos/maps.hpp"

using namespace testing;

namespace {

Face face(const SimplicialComplex& c, std::vector<std::string> names) { return c.face_of(names); }

} // namespace

TEST_CASE("strong connectivity examples")
{
    auto c6 = fixture_complex("c6");
    auto contraction = edge_contraction(c6, "1", "2");
    CHECK(contraction.no_induced_4cycle);
    CHECK(contraction.map.codomain().num_vertices() == 5);
    CHECK(contraction.map.codomain().find("1|2"));
    auto r = is_strongly_connected(contraction.map);
    CHECK(r.strongly_connected());
    CHECK(r.witnesses.empty());

    auto c4 = fixture_complex("c4");
    auto bad = edge_contraction(c4, "1", "2");
    CHECK_FALSE(bad.no_induced_4cycle);
    CHECK(bad.map.codomain().dimension() == 2);
    auto rb = is_strongly_connected(bad.map);
    CHECK_FALSE(rb.surjective);
    CHECK_FALSE(rb.strongly_connected());
    REQUIRE(rb.unreached_facets.size() == 1);
    CHECK(rb.unreached_facets[0].size() == 3);

    for (const auto& name : fixture_complex_names())
        CHECK(is_strongly_connected(SimplicialMap::identity(fixture_complex(name))).strongly_connected());

    // Folding P3 onto an edge splits the fiber of the end vertex.
    auto p3 = fixture_complex("p3");
    auto edge = cx({{"x", "y"}});
    auto fold = SimplicialMap::from_names(p3, edge, {{"1", "x"}, {"2", "y"}, {"3", "x"}});
    auto rf = is_strongly_connected(fold);
    CHECK(rf.surjective);
    CHECK_FALSE(rf.property1_ok);
    CHECK_FALSE(rf.property2_ok);
    REQUIRE_FALSE(rf.witnesses.empty());
    CHECK(rf.witnesses[0].fiber == "x");

    auto invalid = SimplicialMap::from_names(edge, cx({{"u"}, {"v"}}), {{"x", "u"}, {"y", "v"}});
    CHECK_THROWS_AS(is_strongly_connected(invalid), Error);
}

TEST_CASE("edge contraction")
{
    CHECK_THROWS_AS(edge_contraction(fixture_complex("c4"), "1", "3"), Error);
    CHECK_THROWS_AS(edge_contraction(fixture_complex("sphere-1"), "1", "2"), Error);

    // A chord removes the induced 4-cycle.
    auto chorded = clique_complex(cx({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"2", "4"}}));
    auto k = edge_contraction(chorded, "1", "2");
    CHECK(k.no_induced_4cycle);
    CHECK(is_strongly_connected(k.map).strongly_connected());

    std::mt19937_64 rng(21);
    int checked = 0;
    for (int t = 0; t < 150; ++t) {
        auto c = random_chordal(rng, 2 + static_cast<int>(rng() % 7));
        for (auto [i, j] : c.edges()) {
            auto e = edge_contraction(c, c.name(i), c.name(j));
            CHECK(e.no_induced_4cycle);
            CHECK(is_strongly_connected(e.map).strongly_connected());
            ++checked;
        }
    }
    CHECK(checked > 100);

    // Flag true always agrees with the checker on random flag complexes.
    for (int t = 0; t < 150; ++t) {
        int n = 3 + static_cast<int>(rng() % 5);
        std::vector<std::vector<std::string>> edges;
        for (int a = 0; a < n; ++a) {
            edges.push_back({std::to_string(a)});
            for (int b = a + 1; b < n; ++b)
                if (rng() % 2)
                    edges.push_back({std::to_string(a), std::to_string(b)});
        }
        auto c = clique_complex(cx(edges));
        for (auto [i, j] : c.edges()) {
            auto e = edge_contraction(c, c.name(i), c.name(j));
            if (e.no_induced_4cycle)
                CHECK(is_strongly_connected(e.map).strongly_connected());
        }
    }
}

TEST_CASE("sphere conditions")
{
    auto oct = fixture_complex("octahedron");
    auto s = facet_sphere_conditions(oct, face(oct, {"1", "3", "5"}));
    CHECK(s.cond1);
    CHECK(s.cond2);
    CHECK(s.cond3);

    auto s2 = fixture_complex("sphere-2");
    auto t = facet_sphere_conditions(s2, face(s2, {"1", "2", "3"}));
    CHECK(t.all());

    auto cc4 = fixture_complex("cone-c4");
    auto u = facet_sphere_conditions(cc4, face(cc4, {"*", "1", "2"}));
    CHECK_FALSE(u.all());
    CHECK_FALSE(u.cond3);

    auto c4 = fixture_complex("c4");
    auto v = facet_sphere_conditions(c4, face(c4, {"1", "2"}));
    CHECK(v.all());

    CHECK_THROWS_AS(facet_sphere_conditions(oct, face(oct, {"1", "3"})), Error);
    CHECK_THROWS_AS(facet_sphere_conditions(cx({{"a"}, {"b"}}), face(cx({{"a"}, {"b"}}), {"a"})), Error);
    CHECK_THROWS_AS(build_sphere_map(cc4, face(cc4, {"*", "1", "2"})), Error);
}

TEST_CASE("sphere maps")
{
    auto oct = fixture_complex("octahedron");
    auto m = build_sphere_map(oct, face(oct, {"1", "3", "5"}));
    CHECK(m.codomain() == sphere(2));
    CHECK(m.named().at("1") == "1");
    CHECK(m.named().at("3") == "2");
    CHECK(m.named().at("5") == "3");
    CHECK(m.named().at("2") == "4");
    CHECK(is_strongly_connected(m).strongly_connected());

    auto c4 = fixture_complex("c4");
    CHECK(is_strongly_connected(build_sphere_map(c4, face(c4, {"1", "2"}))).strongly_connected());

    int built = 0;
    for (const auto& name : fixture_complex_names()) {
        auto c = fixture_complex(name);
        for (Face f : c.facets()) {
            if (f.size() < 2 || !facet_sphere_conditions(c, f).all())
                continue;
            auto map = build_sphere_map(c, f);
            CAPTURE(name);
            CHECK(validate_map(map).valid);
            CHECK(is_strongly_connected(map).strongly_connected());
            ++built;
        }
    }
    CHECK(built > 10);
    for (int d = 1; d <= 4; ++d) {
        auto sd = sphere(d);
        for (Face f : sd.facets())
            CHECK(is_strongly_connected(build_sphere_map(sd, f)).strongly_connected());
    }
}

TEST_CASE("checker agrees with fiber path search")
{
    long maps = 0, strong = 0;
    const std::vector<std::string> small{"p3", "c4", "full3", "sphere-1", "sphere-2", "c5", "cone-c4"};
    for (const auto& a : small)
        for (const auto& b : small) {
            auto dom = fixture_complex(a), cod = fixture_complex(b);
            if (cod.num_vertices() > dom.num_vertices())
                continue;
            for_each_onto_map(dom, cod, [&](const SimplicialMap& m) {
                auto r = is_strongly_connected(m);
                auto brute = brute_strong(m);
                CHECK(r.surjective == brute.surjective);
                CHECK(r.property1_ok == brute.property1);
                CHECK(r.property2_ok == brute.property2);
                ++maps;
                strong += r.strongly_connected();
            });
        }
    CHECK(maps > 1000);
    CHECK(strong > 0);
}
