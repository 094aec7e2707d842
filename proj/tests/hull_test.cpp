#include <doctest.h>

#include <cmath>
#include <vector>

#include "latticehull/geometry.hpp"
#include "latticehull/hull.hpp"
#include "latticehull/lattice.hpp"
#include "latticehull/rng.hpp"
#include "oracles.hpp"

using namespace lh;

TEST_CASE("monotone chain basics") {
    const std::vector<Vec> cloud = {Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(0.2, 0.2)};
    const Polygon hull = convex_hull_2d(cloud);
    CHECK(hull.size() == 3);

    const std::vector<Vec> single = {Vec(3, 4)};
    CHECK(convex_hull_2d(single).size() == 1);

    const std::vector<Vec> collinear = {Vec(0, 0), Vec(1, 1), Vec(2, 2), Vec(3, 3)};
    const Polygon seg = convex_hull_2d(collinear);
    CHECK(seg.size() == 2);

    CHECK(convex_hull_2d(std::vector<Vec>{}).empty());

    // square with an interior duplicate-heavy cloud
    const std::vector<Vec> square = {Vec(0, 0), Vec(1, 0), Vec(1, 1), Vec(0, 1),
                                     Vec(0.5, 0.5), Vec(0, 0), Vec(1, 1)};
    CHECK(convex_hull_2d(square).size() == 4);
    CHECK(polygon_area(convex_hull_2d(square)) == doctest::Approx(1.0));
}

TEST_CASE("hull contains every input point and is idempotent") {
    RandomStream g(SeededStream{5, 0});
    std::vector<Vec> cloud;
    for (int i = 0; i < 1000; ++i) {
        const double r = std::sqrt(g.uniform01()) * 3.0;
        const double phi = g.uniform(0.0, 2.0 * kPi);
        cloud.emplace_back(r * std::cos(phi), r * std::sin(phi));
    }
    const Polygon hull = convex_hull_2d(cloud);
    REQUIRE(hull.size() >= 3);

    // membership via the polygon body machinery
    const Body poly = Body::polygon(hull.vertices);
    for (const Vec& p : cloud) CHECK(poly.contains(p, 1e-9));

    const Polygon again = convex_hull_2d(hull.vertices);
    REQUIRE(again.size() == hull.size());

    // every input point lies weakly below every support value of the hull
    for (int k = 0; k < 64; ++k) {
        const UnitVector u = UnitVector::from_angle(g.uniform(0.0, 2.0 * kPi));
        const double hs = *support_of_points(hull.vertices, u);
        for (const Vec& p : cloud) CHECK(dot(p, u.vec()) <= hs + 1e-9);
    }
}

TEST_CASE("support of points") {
    const std::vector<Vec> two = {Vec(0, 0), Vec(2, 0)};
    CHECK(*support_of_points(two, UnitVector(Vec(1.0, 0.0))) == doctest::Approx(2.0));
    CHECK_FALSE(support_of_points(std::vector<Vec>{}, UnitVector(Vec(1.0, 0.0))).has_value());

    // support of a cloud equals the support of its hull, for random clouds
    RandomStream g(SeededStream{29, 0});
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vec> cloud;
        const int n = 3 + static_cast<int>(g.uniform01() * 60.0);
        for (int i = 0; i < n; ++i) cloud.emplace_back(g.uniform(-5, 5), g.uniform(-5, 5));
        const Polygon hull = convex_hull_2d(cloud);
        const UnitVector u = UnitVector::from_angle(g.uniform(0.0, 2.0 * kPi));
        CHECK(*support_of_points(cloud, u) == *support_of_points(hull.vertices, u));
    }
}

TEST_CASE("mean width of point sets") {
    const std::vector<Vec> single = {Vec(2.5, -1.0)};
    CHECK(*mean_width_of_points(single, 256) == doctest::Approx(0.0));

    // the 5-point cross hulls to the diamond with vertices (±1,0),(0,±1):
    // perimeter 4*sqrt(2), mean width (4 sqrt 2)/pi ≈ 1.80063
    const std::vector<Vec> cross = {Vec(0, 0), Vec(1, 0), Vec(-1, 0), Vec(0, 1), Vec(0, -1)};
    const double expected = 4.0 * std::sqrt(2.0) / kPi;
    CHECK(expected == doctest::Approx(1.8006326323142122).epsilon(1e-12));
    CHECK(*mean_width_of_points(cross, 4096) == doctest::Approx(expected).epsilon(1e-5));

    // unit square corners: perimeter/pi = 4/pi
    const std::vector<Vec> sq = {Vec(0, 0), Vec(1, 0), Vec(1, 1), Vec(0, 1)};
    CHECK(*mean_width_of_points(sq, 4096) == doctest::Approx(4.0 / kPi).epsilon(1e-5));

    CHECK_FALSE(mean_width_of_points(std::vector<Vec>{}, 256).has_value());
}

TEST_CASE("support gap") {
    const Body square = Body::polygon({Vec(0, 0), Vec(1, 0), Vec(1, 1), Vec(0, 1)});
    const std::vector<Vec> corners = {Vec(0, 0), Vec(1, 0), Vec(1, 1), Vec(0, 1)};
    CHECK(support_gap_max(square, corners, 512) == doctest::Approx(0.0).epsilon(1e-12));

    const Body disk = Body::ball(Vec(0.0, 0.0), 1.0);
    const std::vector<Vec> origin = {Vec(0.0, 0.0)};
    CHECK(support_gap_max(disk, origin, 512) == doctest::Approx(1.0).epsilon(1e-6));

    CHECK(std::isinf(support_gap_max(disk, std::vector<Vec>{}, 512)));
}

TEST_CASE("containment and monotonicity of cloud supports") {
    // cloud = K ∩ L is inside K, so h_cloud <= h_K on the whole grid; and
    // growing the body grows the cloud support
    const Body small = Body::ball(Vec(0.0, 0.0), 4.0);
    const Body large = Body::ball(Vec(0.0, 0.0), 6.5);
    const auto grid = direction_grid(2, 128);
    for (int i = 0; i < 40; ++i) {
        const LatticeSample L = sample_lattice(2, SeededStream{61, static_cast<std::uint64_t>(i)});
        const auto pts_small = lattice_points_in(small, L);
        const auto pts_large = lattice_points_in(large, L);
        REQUIRE(!pts_small.empty());
        for (const UnitVector& u : grid) {
            const double hs = *support_of_points(pts_small, u);
            CHECK(hs <= small.support(u) + 1e-9);
            CHECK(hs <= *support_of_points(pts_large, u) + 1e-12);
        }
    }
}
