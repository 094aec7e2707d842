#include "latticehull/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lh {

namespace {

double cross_orient(const Vec& o, const Vec& a, const Vec& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Polygon convex_hull_2d(std::span<const Vec> cloud) {
    Polygon out;
    if (cloud.empty()) return out;

    std::vector<Vec> pts(cloud.begin(), cloud.end());
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec& a, const Vec& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());

    const std::size_t n = pts.size();
    if (n <= 2) {
        out.vertices = std::move(pts);
        return out;
    }

    double scale = 1.0;
    for (const Vec& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const double eps = 1e-12 * scale * scale;  // tolerance on the orientation determinant

    std::vector<Vec>& hull = out.vertices;
    hull.reserve(2 * n);

    // lower chain
    for (const Vec& p : pts) {
        while (hull.size() >= 2 && cross_orient(hull[hull.size() - 2], hull.back(), p) <= eps)
            hull.pop_back();
        hull.push_back(p);
    }
    // upper chain
    const std::size_t lower_size = hull.size() + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        const Vec& p = pts[i];
        while (hull.size() >= lower_size && cross_orient(hull[hull.size() - 2], hull.back(), p) <= eps)
            hull.pop_back();
        hull.push_back(p);
    }
    hull.pop_back();  // last point repeats the first
    return out;
}

double polygon_area(const Polygon& poly) {
    const auto& v = poly.vertices;
    if (v.size() < 3) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec& a = v[i];
        const Vec& b = v[(i + 1) % v.size()];
        acc += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(acc);
}

std::optional<double> support_of_points(std::span<const Vec> cloud, const UnitVector& u) {
    if (cloud.empty()) return std::nullopt;
    const Vec& uv = u.vec();
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec& p : cloud) best = std::max(best, dot(p, uv));
    return best;
}

std::optional<double> mean_width_of_points(std::span<const Vec> cloud, int n_dirs) {
    if (cloud.empty()) return std::nullopt;
    if (n_dirs < 16) throw std::invalid_argument("mean_width_of_points: n_dirs must be at least 16");
    const auto grid = direction_grid(cloud.front().dim, n_dirs);
    double acc = 0.0;
    for (const UnitVector& u : grid) acc += *support_of_points(cloud, u);
    return 2.0 * acc / static_cast<double>(n_dirs);
}

double support_gap_max(const Body& body, std::span<const Vec> cloud, int n_dirs) {
    if (cloud.empty()) return std::numeric_limits<double>::infinity();
    const auto grid = direction_grid(body.dim(), n_dirs);
    double worst = 0.0;
    for (const UnitVector& u : grid) {
        const double gap = body.support(u) - *support_of_points(cloud, u);
        worst = std::max(worst, gap);
    }
    return worst;
}

}  // namespace lh
