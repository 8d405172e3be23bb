#include "doctest.h"

#include "support.hpp"

#include "srpos/completion.hpp"
#include "srpos/rank1.hpp"

#include <cstdlib>

using namespace testing;

namespace {

const Tolerances tol;

// All principal minors nonnegative, checked by determinants.
bool psd_by_minors(const Eigen::MatrixXd& m)
{
    const auto n = m.rows();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        std::vector<Eigen::Index> ids;
        for (Eigen::Index i = 0; i < n; ++i)
            if ((s >> i) & 1u)
                ids.push_back(i);
        Eigen::MatrixXd sub(ids.size(), ids.size());
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = 0; b < ids.size(); ++b)
                sub(a, b) = m(ids[a], ids[b]);
        if (sub.determinant() < -1e-9)
            return false;
    }
    return true;
}

PartialMatrix c4_with(double x11)
{
    PartialMatrix x = fixture_matrix("c4-paper-matrix");
    x.set("1", "1", x11);
    return x;
}

} // namespace

TEST_CASE("restriction")
{
    auto x = fixture_matrix("c4-paper-matrix");
    auto& c = x.complex();
    Eigen::Matrix2d expect;
    expect << 1, -1, -1, 1;
    CHECK(x.restrict(c.face_of({"1", "2"})).isApprox(expect));
    CHECK(x.restrict(c.face_of({"3"}))(0, 0) == 1.0);
    auto ones = fixture_matrix("c4-all-ones");
    CHECK(ones.restrict(c.face_of({"2", "3"})).isApprox(Eigen::Matrix2d::Ones()));
    CHECK_THROWS_AS(x.restrict(c.face_of({"1", "3"})), Error);
    CHECK_THROWS_AS(x.at("1", "3"), Error);
}

TEST_CASE("nonnegativity")
{
    CHECK(is_nonnegative(fixture_matrix("c4-paper-matrix"), tol));
    CHECK_FALSE(is_nonnegative(c4_with(-1), tol));
    CHECK(is_nonnegative(PartialMatrix(fixture_complex("c4")), tol));
}

TEST_CASE("facet check equals the all-faces check")
{
    std::mt19937_64 rng(1);
    for (const auto& name : fixture_complex_names()) {
        auto c = fixture_complex(name);
        for (int t = 0; t < 20; ++t) {
            PartialMatrix x = random_twisted(rng, c, 1 + static_cast<int>(rng() % 3));
            // Perturb a random entry so that some samples fail.
            if (t % 2) {
                auto k = static_cast<Eigen::Index>(rng() % x.values().size());
                Eigen::VectorXd v = x.values();
                v[k] += 0.8 * (static_cast<double>(rng() % 5) - 2.0);
                x = PartialMatrix(c, v);
            }
            CHECK(is_nonnegative(x, tol) == all_faces_psd(x, tol));
        }
    }
}

TEST_CASE("complete complexes: nonnegative iff PSD iff completable")
{
    std::mt19937_64 rng(2);
    auto full = cx({{"a", "b", "c", "d"}});
    for (int t = 0; t < 60; ++t) {
        Eigen::MatrixXd g = gaussian(rng, 4, 4);
        Eigen::MatrixXd m = g * g.transpose();
        m.diagonal().array() -= (t % 3) * 0.7;
        PartialMatrix x(full);
        for (auto [i, j] : full.closed_skeleton())
            x.set(i, j, m(i, j));
        bool nn = is_nonnegative(x, tol);
        CHECK(nn == psd_by_minors(m));
        auto r = completability(x, tol);
        CHECK((r.kind == CompletionKind::Completable) == nn);
    }
}

TEST_CASE("completability tiers")
{
    auto xc4 = fixture_matrix("c4-paper-matrix");
    auto r = completability(xc4, tol);
    CHECK(r.kind == CompletionKind::NotCompletable);
    CHECK(r.tier == 2);

    auto ones = fixture_matrix("c4-all-ones");
    auto s = completability(ones, tol);
    REQUIRE(s.kind == CompletionKind::Completable);
    REQUIRE(s.witness);
    CHECK(s.witness->isApprox(Eigen::Matrix4d::Ones(), 1e-12));
    CHECK(s.witness_dim == 1);

    auto full3 = fixture_complex("full3");
    std::mt19937_64 rng(4);
    auto y = random_sos(rng, full3, 2);
    auto u = completability(y, tol);
    CHECK(u.kind == CompletionKind::Completable);
    CHECK(u.tier == 1);
    CHECK(u.residual < 1e-10);

    auto bad = c4_with(-1);
    CHECK(completability(bad, tol).kind == CompletionKind::NotCompletable);
    CHECK(completability(bad, tol).tier == 0);

    // Interior of the C4 cone: tier 3, completable.
    auto id = fixture_matrix("c4-identity");
    auto w = completability(id, tol);
    CHECK(w.kind == CompletionKind::Completable);
    CHECK(w.tier == 3);
    CHECK(w.residual <= 1e-9);
}

TEST_CASE("tier 3 never certifies a nontrivial sign class")
{
    std::mt19937_64 rng(9);
    auto c4 = fixture_complex("c4");
    for (int t = 0; t < 10; ++t) {
        // Local rank two, twisted by the nontrivial class, still completable
        // or not; tier 3 must not claim completability for the pure class.
        auto cls = enumerate_classes(c4);
        auto twisted = hadamard(random_sos(rng, c4, 1), cls[1]);
        auto r = completability(twisted, tol);
        CHECK(r.kind == CompletionKind::NotCompletable);
        Tolerances quick = tol;
        quick.max_iter = 500;
        auto d = dykstra_completion(twisted, quick);
        CHECK(d.kind != CompletionKind::Completable);
    }
}

TEST_CASE("tier 3 separating certificates")
{
    // Every triangle of the tetrahedron boundary is PSD, the 4x4 matrix is not.
    auto s2 = fixture_complex("sphere-2");
    PartialMatrix x(s2);
    for (auto [i, j] : s2.closed_skeleton())
        x.set(i, j, i == j ? 1.0 : -0.45);
    REQUIRE(is_nonnegative(x, tol));
    auto r = completability(x, tol);
    CHECK(r.kind == CompletionKind::NotCompletable);
    CHECK(r.tier == 3);
    CHECK(r.iterations < 100);

    // Unit diagonal C4 with edge angles a*pi; completable iff no edge angle
    // exceeds the sum of the other three (angles below pi/2 elsewhere).
    auto c4 = fixture_complex("c4");
    auto angled = [&](double last) {
        PartialMatrix m(c4);
        for (int i = 0; i < 4; ++i)
            m.set(i, i, 1.0);
        m.set("1", "2", std::cos(0.2 * M_PI));
        m.set("2", "3", std::cos(0.2 * M_PI));
        m.set("3", "4", std::cos(0.2 * M_PI));
        m.set("1", "4", std::cos(last * M_PI));
        return m;
    };
    auto no = completability(angled(0.9), tol);
    CHECK(no.kind == CompletionKind::NotCompletable);
    CHECK(no.tier == 3);
    auto yes = completability(angled(0.5), tol);
    CHECK(yes.kind == CompletionKind::Completable);
    CHECK(yes.residual <= 1e-9);
}

TEST_CASE("local rank")
{
    CHECK(local_rank(fixture_matrix("c4-paper-matrix"), tol) == 1);
    CHECK(local_rank(fixture_matrix("c4-identity"), tol) == 2);
    auto pt = cx({{"v"}});
    PartialMatrix a(pt);
    CHECK(local_rank(a, tol) == 0);
    a.set("v", "v", 3.0);
    CHECK(local_rank(a, tol) == 1);
    CHECK_THROWS_AS(local_rank(c4_with(-1), tol), Error);
}

TEST_CASE("hadamard products")
{
    auto xc4 = fixture_matrix("c4-paper-matrix");
    auto ones = fixture_matrix("c4-all-ones");
    CHECK(max_abs_diff(hadamard(xc4, xc4), ones) == 0.0);
    CHECK(max_abs_diff(hadamard(xc4, ones), xc4) == 0.0);
    CHECK_THROWS_AS(hadamard(xc4, PartialMatrix(fixture_complex("p3"))), Error);

    std::mt19937_64 rng(5);
    for (const auto& name : fixture_complex_names()) {
        auto c = fixture_complex(name);
        for (int t = 0; t < 10; ++t) {
            auto x = random_twisted(rng, c, 2), y = random_twisted(rng, c, 3);
            CHECK(is_nonnegative(hadamard(x, y), tol));
        }
    }
}

TEST_CASE("pullbacks")
{
    auto p5 = fixture_complex("p5");
    auto c4 = fixture_complex("c4");
    auto m = SimplicialMap::from_names(p5, c4, {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"}, {"1*", "1"}});
    auto xc4 = fixture_matrix("c4-paper-matrix");
    auto y = pullback(m, xc4);
    for (auto [i, j] : p5.closed_skeleton())
        CHECK(y(i, j) == xc4(m(i), m(j)));
    CHECK(y.at("4", "1*") == 1.0);
    CHECK(y.at("1*", "1*") == 1.0);

    CHECK(max_abs_diff(pullback(SimplicialMap::identity(c4), xc4), xc4) == 0.0);
    auto ones_p5 = pullback(m, fixture_matrix("c4-all-ones"));
    CHECK(ones_p5.values().isApprox(Eigen::VectorXd::Ones(ones_p5.values().size())));

    auto back = in_pullback_image(m, y, tol);
    REQUIRE(back);
    CHECK(max_abs_diff(*back, xc4) == 0.0);

    auto off = y;
    off.set("1*", "1*", 2.0);
    CHECK_FALSE(in_pullback_image(m, off, tol));

    // Constant on fibers: the values descend to C4 entry by entry.
    PartialMatrix z(p5);
    for (auto [i, j] : p5.closed_skeleton())
        z.set(i, j, 1.0 + m(i) + m(j));
    auto zd = in_pullback_image(m, z, tol);
    REQUIRE(zd);
    for (auto [a, b] : c4.closed_skeleton())
        CHECK((*zd)(a, b) == 1.0 + a + b);
}

TEST_CASE("pullback round trip and rank preservation")
{
    std::mt19937_64 rng(6);
    auto p5 = fixture_complex("p5");
    auto c4 = fixture_complex("c4");
    auto m = SimplicialMap::from_names(p5, c4, {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"4", "4"}, {"1*", "1"}});
    for (int t = 0; t < 30; ++t) {
        auto x = random_twisted(rng, c4, 1 + t % 3);
        auto y = pullback(m, x);
        auto back = in_pullback_image(m, y, tol);
        REQUIRE(back);
        CHECK(max_abs_diff(*back, x) < 1e-15);
        CHECK(is_nonnegative(y, tol));
        CHECK(local_rank(y, tol) == local_rank(x, tol));
    }
}

TEST_CASE("diagonal congruence")
{
    auto xc4 = fixture_matrix("c4-paper-matrix");
    CHECK(max_abs_diff(diagonal_congruence(xc4, std::vector<double>(4, 1.0)), xc4) == 0.0);
    CHECK(max_abs_diff(diagonal_congruence(xc4, std::vector<double>(4, -1.0)), xc4) == 0.0);
    auto d = diagonal_congruence(xc4, std::map<std::string, double>{{"1", -1}, {"2", 1}, {"3", 1}, {"4", 1}});
    CHECK(d.at("1", "2") == 1.0);
    CHECK(d.at("1", "4") == -1.0);
    CHECK(d.at("2", "3") == 1.0);
    CHECK(d.at("3", "4") == 1.0);
    CHECK_THROWS_AS(diagonal_congruence(xc4, std::vector<double>{1, 0, 1, 1}), Error);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for (const auto& name : fixture_complex_names()) {
        auto c = fixture_complex(name);
        for (int t = 0; t < 5; ++t) {
            auto x = random_twisted(rng, c, 1 + t % 3);
            std::vector<double> s(c.num_vertices());
            for (auto& v : s)
                v = (rng() % 2 ? -1 : 1) * u(rng);
            auto y = diagonal_congruence(x, s);
            CHECK(is_nonnegative(y, tol));
            CHECK(local_rank(y, tol) == local_rank(x, tol));
        }
    }
}

TEST_CASE("support and normalization")
{
    auto xc4 = fixture_matrix("c4-paper-matrix");
    CHECK(is_full_support(xc4));
    CHECK(max_abs_diff(normalize(xc4), xc4) == 0.0);
    auto scaled = diagonal_congruence(xc4, std::vector<double>{2, 1, 1, 1});
    CHECK(scaled.at("1", "1") == 4.0);
    auto back = normalize(scaled);
    CHECK(same_diagonal_class(back, xc4, tol));
    CHECK(max_abs_diff(back, xc4) < 1e-15);
    CHECK(support(PartialMatrix(fixture_complex("c4"))).empty());
    CHECK_THROWS_AS(normalize(PartialMatrix(fixture_complex("c4"))), Error);
}

TEST_CASE("tolerances from the environment")
{
    setenv("SR_TOL_PSD", "1e-6", 1);
    CHECK(Tolerances::from_env().psd_tol == 1e-6);
    setenv("SR_TOL_PSD", "abc", 1);
    CHECK_THROWS_AS(Tolerances::from_env(), Error);
    setenv("SR_TOL_PSD", "-1", 1);
    CHECK_THROWS_AS(Tolerances::from_env(), Error);
    unsetenv("SR_TOL_PSD");
    CHECK(Tolerances::from_env().psd_tol == 1e-9);
}
