#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "symcurve/discrete.hpp"
#include "symcurve/interpolate.hpp"
#include "test_util.hpp"

using namespace symcurve;
using namespace symcurve::testutil;

namespace {

std::vector<Point2> regular_ngon(int n, double radius = 1.0, double phase = 0.0) {
    std::vector<Point2> out;
    for (int j = 0; j < n; ++j)
        out.emplace_back(radius * std::cos(kTwoPi * j / n + phase),
                         radius * std::sin(kTwoPi * j / n + phase));
    return out;
}

const std::vector<Point2> kSquare{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};

// 12 uniform samples, offset in parameter, of the 4-fold symmetric cycloid
// e^{it} + 0.3 e^{5it}.  The sample offset breaks the curve's reflections
// on the vertex level, so Sym(C) = C4 while Sym(T_C) = D4.
std::vector<Point2> c4_vertices_of_d4_curve(double offset = 0.37) {
    std::vector<Point2> out;
    for (int j = 0; j < 12; ++j) {
        const double t = kTwoPi * j / 12 + offset;
        out.emplace_back(std::cos(t) + 0.3 * std::cos(5 * t),
                         std::sin(t) + 0.3 * std::sin(5 * t));
    }
    return out;
}

bool has_note(const SymmetryReport& r, const std::string& needle) {
    for (const std::string& n : r.notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("prune_collinear") {
    SUBCASE("edge midpoint is removed") {
        std::vector<Point2> pts = kSquare;
        pts.insert(pts.begin() + 1, Point2(0, 1));
        const DiscreteCurve c = prune_collinear(pts);
        CHECK(c.size() == 4);
    }
    SUBCASE("triangle unchanged") {
        const DiscreteCurve c = prune_collinear({{0, 0}, {1, 0}, {0, 1}});
        CHECK(c.size() == 3);
    }
    SUBCASE("collinear input is degenerate") {
        CHECK_THROWS_WITH_AS(prune_collinear({{0, 0}, {1, 0}, {2, 0}, {3, 0}}),
                             "degenerate polyline", std::domain_error);
    }
    SUBCASE("consecutive duplicates are removed") {
        const DiscreteCurve c = prune_collinear({{0, 0}, {0, 0}, {1, 0}, {0, 1}});
        CHECK(c.size() == 3);
    }
}

TEST_CASE("interpolant") {
    SUBCASE("regular n-gon gives a circle") {
        for (int n : {3, 5, 8}) {
            const TrigCurve tc = interpolant(DiscreteCurve(regular_ngon(n, 2.0, 0.4)));
            CHECK(tc.active_frequencies().size() == 1);
            const Harmonic& h = tc.harmonic(1);
            CHECK(classify_harmonic(h.a, h.b, 1e-9).kind == HarmonicKind::Circle);
        }
    }
    SUBCASE("non-regular quadrilateral: degree 2, b2 = 0") {
        const TrigCurve tc =
            interpolant(DiscreteCurve({{2, 0}, {0, 1}, {-1, 0}, {0, -1}}));
        CHECK(tc.degree() == 2);
        CHECK(tc.harmonic(2).b.x == 0.0);
        CHECK(tc.harmonic(2).b.y == 0.0);
    }
    SUBCASE("vertex order shift reparameterizes T_C") {
        std::mt19937 rng(307);
        const std::vector<Point2> pts = random_polyline(9, rng);
        std::vector<Point2> shifted(pts.begin() + 4, pts.end());
        shifted.insert(shifted.end(), pts.begin(), pts.begin() + 4);
        const TrigCurve a = interpolant(DiscreteCurve(pts));
        const TrigCurve b = interpolant(DiscreteCurve(shifted));
        CHECK(curves_equal(b, reparameterize(a, 1, kTwoPi * 4 / 9), 1e-9));
    }
}

TEST_CASE("verify_on_vertices") {
    const DiscreteCurve sq(kSquare);
    const Point2 c(0, 0);
    CHECK(verify_on_vertices(Isometry2::rotation(c, kPi / 2), sq));
    CHECK_FALSE(verify_on_vertices(Isometry2::rotation(c, kPi / 4), sq));
    CHECK(verify_on_vertices(Isometry2::reflection(c, kPi / 4), sq));  // diagonal
    CHECK(verify_on_vertices(Isometry2::reflection(c, 0.0), sq));
    CHECK_FALSE(verify_on_vertices(Isometry2::translation(Point2(1, 0)), sq));
}

TEST_CASE("detect: regular pentagon is D5") {
    const SymmetryReport r = detect(DiscreteCurve(regular_ngon(5)));
    CHECK(r.group.name() == "D5");
    CHECK(norm(r.group.center()) <= 1e-9);
    CHECK(has_note(r, "regular 5-gon"));
    CHECK(r.witnesses.size() == 10);
}

TEST_CASE("detect: C4 vertices of a D4 interpolant") {
    const DiscreteCurve c(c4_vertices_of_d4_curve());
    // The interpolant itself has the full dihedral group...
    const CurveDetection cd = detect_symmetry_group(interpolant(c));
    CHECK(cd.group.name() == "D4");
    // ...but its reflections do not fix the vertex set.
    const SymmetryReport r = detect(c);
    CHECK(r.group.name() == "C4");
    CHECK(r.rejected_candidates >= 4);
    CHECK(has_note(r, "rejected on the vertices"));
    CHECK(brute_force_group(c).equals(r.group, 1e-8, 1e-8));
}

TEST_CASE("detect: dihedral orbit polylines") {
    std::mt19937 rng(311);
    const DiscreteCurve c(dihedral_orbit_polyline(3, 4, rng));
    const SymmetryReport r = detect(c);
    CHECK(r.group.name() == "D3");
    CHECK(r.group.equals(brute_force_group(c), 1e-8, 1e-8));
}

TEST_CASE("brute_force_group basics") {
    CHECK(brute_force_group(DiscreteCurve(kSquare)).name() == "D4");
    std::mt19937 rng(313);
    CHECK(brute_force_group(DiscreteCurve(random_polyline(11, rng))).name() == "C1");
}

TEST_CASE("detect equals brute force on mixed inputs") {
    std::mt19937 rng(317);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const int r = 3 + static_cast<int>(rng() % 3);
        std::vector<Point2> pts;
        switch (trial % 3) {
            case 0: pts = cyclic_orbit_polyline(m, r, rng); break;
            case 1: pts = dihedral_orbit_polyline(m, r, rng); break;
            default: pts = random_polyline(6 + (int)(rng() % 12), rng); break;
        }
        CAPTURE(trial);
        const DiscreteCurve c(pts);
        CHECK(detect(c).group.equals(brute_force_group(c), 1e-8, 1e-8));
    }
}

TEST_CASE("Corollary: vertex symmetries are interpolant symmetries") {
    std::mt19937 rng(331);
    for (int trial = 0; trial < 10; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 4);
        const DiscreteCurve c(dihedral_orbit_polyline(m, 3, rng));
        const TrigCurve tc = interpolant(c);
        const int n = c.size();
        for (const Isometry2& phi : brute_force_group(c).elements()) {
            bool ok = false;
            for (int i = 0; i < n && !ok; ++i) {
                const double beta = kTwoPi * i / n;
                const int alpha = phi.direct() ? 1 : -1;
                ok = curves_equal(apply_isometry(phi, tc), reparameterize(tc, alpha, beta),
                                  1e-9);
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("Lemma 9 converse: non-regular polylines do not interpolate to circles") {
    std::mt19937 rng(337);
    for (int trial = 0; trial < 10; ++trial) {
        const TrigCurve tc = interpolant(DiscreteCurve(random_polyline(8, rng)));
        const bool single_circle =
            tc.active_frequencies().size() == 1 &&
            classify_harmonic(tc.harmonic(1).a, tc.harmonic(1).b, 1e-9).kind ==
                HarmonicKind::Circle;
        CHECK_FALSE(single_circle);
    }
}

TEST_CASE("laplacian_smooth") {
    SUBCASE("zero steps is the identity") {
        const DiscreteCurve sq(kSquare);
        const DiscreteCurve s = laplacian_smooth(sq, 0.3, 0);
        REQUIRE(s.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(distance(s.vertex(i), sq.vertex(i)) <= 1e-15);
    }
    SUBCASE("one step scales the rotated square by 1 - lambda") {
        // Neighbor midpoints of this square land on the centroid.
        const DiscreteCurve sq(std::vector<Point2>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
        const double lambda = 0.4;
        const DiscreteCurve s = laplacian_smooth(sq, lambda, 1);
        for (int i = 0; i < 4; ++i)
            CHECK(distance(s.vertex(i), (1.0 - lambda) * sq.vertex(i)) <= 1e-12);
    }
    SUBCASE("vertex count preserved even when smoothing flattens the shape") {
        std::mt19937 rng(347);
        const DiscreteCurve c(random_polyline(30, rng));
        CHECK(laplacian_smooth(c, 0.5, 200).size() == 30);
    }
    SUBCASE("symmetry group survives smoothing") {
        std::mt19937 rng(349);
        const DiscreteCurve c(dihedral_orbit_polyline(4, 10, rng));
        const SymmetryGroup before = brute_force_group(c);
        CHECK(before.name() == "D4");
        for (int steps : {10, 100}) {
            const SymmetryGroup after = brute_force_group(laplacian_smooth(c, 0.5, steps));
            CHECK(after.equals(before, 1e-8, 1e-8));
        }
    }
    SUBCASE("commutes with isometries") {
        std::mt19937 rng(353);
        const std::vector<Point2> pts = random_polyline(15, rng);
        const DiscreteCurve c(pts);
        for (int i = 0; i < 10; ++i) {
            const Isometry2 phi = random_isometry(rng);
            std::vector<Point2> moved;
            for (const Point2& p : pts) moved.push_back(phi.apply(p));
            const DiscreteCurve a = laplacian_smooth(DiscreteCurve(moved), 0.5, 7);
            const DiscreteCurve b = laplacian_smooth(c, 0.5, 7);
            REQUIRE(a.size() == b.size());
            for (int j = 0; j < a.size(); ++j)
                CHECK(distance(a.vertex(j), phi.apply(b.vertex(j))) <= 1e-10);
        }
    }
    SUBCASE("parameter validation") {
        const DiscreteCurve sq(kSquare);
        CHECK_THROWS_AS(laplacian_smooth(sq, 0.0, 1), std::invalid_argument);
        CHECK_THROWS_AS(laplacian_smooth(sq, 1.0, 1), std::invalid_argument);
        CHECK_THROWS_AS(laplacian_smooth(sq, 0.5, -1), std::invalid_argument);
    }
}

TEST_CASE("filtered_interpolants") {
    std::mt19937 rng(359);
    const DiscreteCurve c(dihedral_orbit_polyline(3, 4, rng));
    const TrigCurve tc = interpolant(c);
    const int N = tc.degree();

    const auto chain = filtered_interpolants(c, N - 1);
    REQUIRE(static_cast<int>(chain.size()) == N);
    CHECK(curves_equal(chain[0], tc, 1e-15));

    // Group chain is monotone under subgroup inclusion.
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const SymmetryGroup a = detect_symmetry_group(chain[i]).group;
        const SymmetryGroup b = detect_symmetry_group(chain[i + 1]).group;
        CAPTURE(i);
        CHECK(group_contained(a, b, 1e-7));
    }

    CHECK_THROWS_AS(filtered_interpolants(c, N), std::domain_error);
}

TEST_CASE("detect: equivariance") {
    std::mt19937 rng(367);
    const DiscreteCurve c(dihedral_orbit_polyline(3, 4, rng));
    const SymmetryGroup base = detect(c).group;
    for (int i = 0; i < 10; ++i) {
        const Isometry2 phi = random_isometry(rng);
        std::vector<Point2> moved;
        for (const Point2& p : c.vertices()) moved.push_back(phi.apply(p));
        CHECK(detect(DiscreteCurve(moved)).group.equals(conjugate(base, phi), 1e-8, 1e-8));
    }
}
