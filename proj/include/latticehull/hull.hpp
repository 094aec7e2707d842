#pragma once

#include <optional>
#include <span>
#include <vector>

#include "latticehull/geometry.hpp"
#include "latticehull/vec.hpp"

namespace lh {

/// Convex polygon, vertices in counterclockwise order, strictly convex (no
/// three collinear vertices retained). Degenerate hulls keep 0, 1 or 2
/// vertices.
struct Polygon {
    std::vector<Vec> vertices;

    bool empty() const { return vertices.empty(); }
    std::size_t size() const { return vertices.size(); }
};

/// Monotone-chain convex hull. Orientation decisions use a cross-product
/// tolerance of 1e-12 scaled to the cloud's coordinate magnitude; collinear
/// points are dropped. Duplicates are fine.
Polygon convex_hull_2d(std::span<const Vec> cloud);

/// Shoelace area; degenerate polygons have area 0.
double polygon_area(const Polygon& poly);

/// max over the cloud of <p,u>; nullopt for an empty cloud. Equals the
/// support function of the cloud's convex hull.
std::optional<double> support_of_points(std::span<const Vec> cloud, const UnitVector& u);

/// Mean width of the hull of the cloud, evaluated directly from point
/// supports on the same quadrature grid as mean_width. nullopt when empty.
std::optional<double> mean_width_of_points(std::span<const Vec> cloud, int n_dirs);

/// max over the direction grid of h_K(u) - h_cloud(u); a lower bound for
/// the Hausdorff distance when cloud ⊂ K (the gap is one-sided). Empty
/// cloud yields +infinity.
double support_gap_max(const Body& body, std::span<const Vec> cloud, int n_dirs);

}  // namespace lh
