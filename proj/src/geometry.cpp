#include "latticehull/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "latticehull/hull.hpp"

namespace lh {

double unit_ball_volume(int d) {
    switch (d) {
        case 1: return 2.0;
        case 2: return kPi;
        case 3: return 4.0 * kPi / 3.0;
    }
    throw std::invalid_argument("unit_ball_volume: dimension must be 1, 2 or 3");
}

double sphere_measure(int d) {
    if (d != 2 && d != 3) throw std::invalid_argument("sphere_measure: dimension must be 2 or 3");
    return static_cast<double>(d) * unit_ball_volume(d);
}

// ---------------------------------------------------------------------------
// UnitVector

UnitVector::UnitVector(const Vec& v) : v_(v) {
    if (v.dim != 2 && v.dim != 3) throw std::invalid_argument("UnitVector: dimension must be 2 or 3");
    if (std::abs(norm(v) - 1.0) > 1e-12) throw std::invalid_argument("UnitVector: norm deviates from 1");
}

UnitVector UnitVector::normalize(const Vec& v) {
    const double n = norm(v);
    if (n == 0.0) throw std::invalid_argument("UnitVector: cannot normalize the zero vector");
    return UnitVector((1.0 / n) * v);
}

UnitVector UnitVector::from_angle(double theta) {
    return UnitVector(Vec(std::cos(theta), std::sin(theta)));
}

std::vector<UnitVector> direction_grid(int dim, int n) {
    if (n < 1) throw std::invalid_argument("direction_grid: n must be positive");
    std::vector<UnitVector> grid;
    grid.reserve(static_cast<std::size_t>(n));
    if (dim == 2) {
        for (int i = 0; i < n; ++i) {
            const double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
            grid.push_back(UnitVector::from_angle(theta));
        }
        return grid;
    }
    if (dim == 3) {
        // spherical Fibonacci lattice
        const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < n; ++i) {
            const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = golden_angle * static_cast<double>(i);
            grid.push_back(UnitVector::normalize(Vec(rho * std::cos(phi), rho * std::sin(phi), z)));
        }
        return grid;
    }
    throw std::invalid_argument("direction_grid: dimension must be 2 or 3");
}

// ---------------------------------------------------------------------------
// Body construction

namespace {

// Chebyshev center of a convex polygon with unit outward edge normals n_i
// and offsets b_i: maximize r subject to <n_i,c> + r <= b_i. With three
// unknowns the optimum sits on an intersection of three active constraints,
// so all triples are enumerated (polygons here are small).
void chebyshev_center_2d(const std::vector<Vec>& normals, const std::vector<double>& offsets,
                         const std::vector<Vec>& hull, Vec& center, double& radius) {
    const std::size_t m = normals.size();
    double best_r = -1.0;
    Vec best_c;
    double scale = 1.0;
    for (const Vec& v : hull) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                // active triple: <n_q,c> + r = b_q. Eliminating r leaves a
                // 2x2 system in c from the row differences.
                const Vec dij = normals[i] - normals[j];
                const Vec dik = normals[i] - normals[k];
                const double det = cross2(dij, dik);
                if (std::abs(det) < 1e-12) continue;
                const double bij = offsets[i] - offsets[j];
                const double bik = offsets[i] - offsets[k];
                const double cx = (bij * dik.y - bik * dij.y) / det;
                const double cy = (bik * dij.x - bij * dik.x) / det;
                const double r = offsets[i] - normals[i].x * cx - normals[i].y * cy;
                if (r <= 0.0) continue;
                bool feasible = true;
                for (std::size_t q = 0; q < m; ++q) {
                    if (normals[q].x * cx + normals[q].y * cy + r > offsets[q] + 1e-9 * scale) {
                        feasible = false;
                        break;
                    }
                }
                if (feasible && r > best_r) {
                    best_r = r;
                    best_c = Vec(cx, cy);
                }
            }
        }
    }
    if (best_r <= 0.0) throw std::invalid_argument("polygon has empty interior");
    center = best_c;
    radius = best_r;
}

}  // namespace

Body Body::ball(const Vec& center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
    if (center.dim != 2 && center.dim != 3) throw std::invalid_argument("ball: dimension must be 2 or 3");
    Body b;
    b.kind_ = Kind::ball;
    b.dim_ = center.dim;
    b.data_ = BallData{center, radius};
    return b;
}

Body Body::polygon(std::vector<Vec> vertices) {
    if (vertices.empty()) throw std::invalid_argument("polygon needs vertices");
    for (const Vec& v : vertices)
        if (v.dim != 2) throw std::invalid_argument("polygon vertices must be 2D");

    Polygon hull = convex_hull_2d(vertices);
    if (hull.size() < 3) throw std::invalid_argument("polygon vertices do not span the plane");

    PolytopeData data;
    data.input = std::move(vertices);
    data.hull = hull.vertices;
    const std::size_t m = data.hull.size();
    data.edge_normals.reserve(m);
    data.edge_offsets.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& a = data.hull[i];
        const Vec& b = data.hull[(i + 1) % m];
        const Vec e = b - a;
        const double len = norm(e);
        const Vec n(e.y / len, -e.x / len);  // outward for a CCW polygon
        data.edge_normals.push_back(n);
        data.edge_offsets.push_back(dot(n, a));
    }
    chebyshev_center_2d(data.edge_normals, data.edge_offsets, data.hull, data.cheby_center,
                        data.cheby_radius);

    Body b;
    b.kind_ = Kind::polytope;
    b.dim_ = 2;
    b.data_ = std::move(data);
    return b;
}

Body Body::ellipse(const Vec& center, double semi_major, double semi_minor, double angle) {
    if (center.dim != 2) throw std::invalid_argument("ellipse is 2D only");
    if (!(semi_minor > 0.0) || semi_major < semi_minor)
        throw std::invalid_argument("ellipse needs a >= b > 0");
    Body b;
    b.kind_ = Kind::ellipse;
    b.dim_ = 2;
    b.data_ = EllipseData{center, semi_major, semi_minor, angle};
    return b;
}

// ---------------------------------------------------------------------------
// Body operations

double Body::support(const UnitVector& u) const {
    if (u.dim() != dim_) throw std::invalid_argument("support: dimension mismatch");
    const Vec& uv = u.vec();
    switch (kind_) {
        case Kind::ball:
            return dot(as_ball().center, uv) + as_ball().radius;
        case Kind::polytope: {
            double best = -std::numeric_limits<double>::infinity();
            for (const Vec& v : as_poly().hull) best = std::max(best, dot(v, uv));
            return best;
        }
        case Kind::ellipse: {
            const EllipseData& e = as_ellipse();
            const double p = e.a * dot(uv, e.axis1());
            const double q = e.b * dot(uv, e.axis2());
            return dot(e.center, uv) + std::sqrt(p * p + q * q);
        }
    }
    throw std::logic_error("unreachable");
}

Vec Body::support_point(const UnitVector& u) const {
    const Vec& uv = u.vec();
    switch (kind_) {
        case Kind::ball:
            return as_ball().center + as_ball().radius * uv;
        case Kind::polytope: {
            const auto& hull = as_poly().hull;
            double best = -std::numeric_limits<double>::infinity();
            double scale = 1.0;
            for (const Vec& v : hull) {
                best = std::max(best, dot(v, uv));
                scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
            }
            // centroid of the support set (a vertex or an edge)
            Vec acc(0.0, 0.0);
            int count = 0;
            for (const Vec& v : hull) {
                if (dot(v, uv) >= best - 1e-12 * scale) {
                    acc = acc + v;
                    ++count;
                }
            }
            return (1.0 / static_cast<double>(count)) * acc;
        }
        case Kind::ellipse: {
            const EllipseData& e = as_ellipse();
            const Vec a1 = e.axis1();
            const Vec a2 = e.axis2();
            const double p = e.a * dot(uv, a1);
            const double q = e.b * dot(uv, a2);
            const double denom = std::sqrt(p * p + q * q);
            return e.center + (e.a * p / denom) * a1 + (e.b * q / denom) * a2;
        }
    }
    throw std::logic_error("unreachable");
}

double Body::width(const UnitVector& u) const { return support(u) + support(-u); }

double Body::volume() const {
    switch (kind_) {
        case Kind::ball: {
            const double r = as_ball().radius;
            return dim_ == 2 ? kPi * r * r : 4.0 * kPi * r * r * r / 3.0;
        }
        case Kind::polytope: {
            Polygon p{as_poly().hull};
            return polygon_area(p);
        }
        case Kind::ellipse:
            return kPi * as_ellipse().a * as_ellipse().b;
    }
    throw std::logic_error("unreachable");
}

bool Body::contains(const Vec& x, double tol) const {
    if (x.dim != dim_) return false;
    switch (kind_) {
        case Kind::ball:
            return norm(x - as_ball().center) <= as_ball().radius + tol;
        case Kind::polytope: {
            const PolytopeData& p = as_poly();
            for (std::size_t i = 0; i < p.edge_normals.size(); ++i)
                if (dot(p.edge_normals[i], x) > p.edge_offsets[i] + tol) return false;
            return true;
        }
        case Kind::ellipse: {
            const EllipseData& e = as_ellipse();
            const Vec d = x - e.center;
            const double p = dot(d, e.axis1()) / e.a;
            const double q = dot(d, e.axis2()) / e.b;
            return std::sqrt(p * p + q * q) <= 1.0 + tol;
        }
    }
    throw std::logic_error("unreachable");
}

Body Body::scaled(double lambda) const {
    if (!(lambda > 0.0)) throw std::invalid_argument("scale factor must be positive");
    switch (kind_) {
        case Kind::ball:
            return Body::ball(lambda * as_ball().center, lambda * as_ball().radius);
        case Kind::polytope: {
            std::vector<Vec> verts = as_poly().input;
            for (Vec& v : verts) v = lambda * v;
            return Body::polygon(std::move(verts));
        }
        case Kind::ellipse: {
            const EllipseData& e = as_ellipse();
            return Body::ellipse(lambda * e.center, lambda * e.a, lambda * e.b, e.angle);
        }
    }
    throw std::logic_error("unreachable");
}

Body Body::translated(const Vec& shift) const {
    if (shift.dim != dim_) throw std::invalid_argument("translate: dimension mismatch");
    switch (kind_) {
        case Kind::ball:
            return Body::ball(as_ball().center + shift, as_ball().radius);
        case Kind::polytope: {
            std::vector<Vec> verts = as_poly().input;
            for (Vec& v : verts) v = v + shift;
            return Body::polygon(std::move(verts));
        }
        case Kind::ellipse: {
            const EllipseData& e = as_ellipse();
            return Body::ellipse(e.center + shift, e.a, e.b, e.angle);
        }
    }
    throw std::logic_error("unreachable");
}

Vec Body::inball_center() const {
    switch (kind_) {
        case Kind::ball: return as_ball().center;
        case Kind::polytope: return as_poly().cheby_center;
        case Kind::ellipse: return as_ellipse().center;
    }
    throw std::logic_error("unreachable");
}

double Body::inradius() const {
    switch (kind_) {
        case Kind::ball: return as_ball().radius;
        case Kind::polytope: return as_poly().cheby_radius;
        case Kind::ellipse: return as_ellipse().b;
    }
    throw std::logic_error("unreachable");
}

double Body::circumradius() const {
    switch (kind_) {
        case Kind::ball: return norm(as_ball().center) + as_ball().radius;
        case Kind::polytope: {
            double best = 0.0;
            for (const Vec& v : as_poly().hull) best = std::max(best, norm(v));
            return best;
        }
        case Kind::ellipse: {
            const EllipseData& e = as_ellipse();
            return norm(e.center) + e.a;
        }
    }
    throw std::logic_error("unreachable");
}

std::optional<double> Body::rolling_radius() const {
    switch (kind_) {
        case Kind::ball: return as_ball().radius;
        case Kind::ellipse: {
            const EllipseData& e = as_ellipse();
            return e.b * e.b / e.a;
        }
        case Kind::polytope: return std::nullopt;
    }
    throw std::logic_error("unreachable");
}

const std::vector<Vec>& Body::hull_vertices() const {
    if (kind_ != Kind::polytope) throw std::invalid_argument("hull_vertices: not a polytope");
    return as_poly().hull;
}

const std::vector<Vec>& Body::input_vertices() const {
    if (kind_ != Kind::polytope) throw std::invalid_argument("input_vertices: not a polytope");
    return as_poly().input;
}

double Body::ellipse_semi_major() const {
    if (kind_ != Kind::ellipse) throw std::invalid_argument("not an ellipse");
    return as_ellipse().a;
}

double Body::ellipse_semi_minor() const {
    if (kind_ != Kind::ellipse) throw std::invalid_argument("not an ellipse");
    return as_ellipse().b;
}

double Body::ellipse_angle() const {
    if (kind_ != Kind::ellipse) throw std::invalid_argument("not an ellipse");
    return as_ellipse().angle;
}

// ---------------------------------------------------------------------------
// Caps

Cap::Cap(Body b, UnitVector dir, double depth) : body(std::move(b)), u(dir), t(depth) {
    if (t < 0.0) throw std::invalid_argument("cap depth must be nonnegative");
    if (u.dim() != body.dim()) throw std::invalid_argument("cap direction dimension mismatch");
}

bool cap_contains(const Body& body, const UnitVector& u, double t, const Vec& x) {
    if (!body.contains(x)) return false;
    return dot(x, u.vec()) >= body.support(u) - t - Body::kBoundaryTol;
}

bool cap_membership(const Cap& cap, const Vec& x) { return cap_contains(cap.body, cap.u, cap.t, x); }

std::vector<Vec> clip_halfplane(std::span<const Vec> poly, const Vec& n, double c) {
    std::vector<Vec> out;
    const std::size_t m = poly.size();
    if (m == 0) return out;
    out.reserve(m + 2);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& a = poly[i];
        const Vec& b = poly[(i + 1) % m];
        const double da = dot(n, a) - c;
        const double db = dot(n, b) - c;
        if (da >= 0.0) out.push_back(a);
        if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) {
            const double s = da / (da - db);
            out.push_back(a + s * (b - a));
        }
    }
    return out;
}

namespace {

// Support of the unit-disk/ball cap of depth t in direction v (all unit).
// If the ball's own maximizer lies in the cap it wins; otherwise the optimum
// sits on the rim sphere of the cut plane.
double unit_ball_cap_support(const Vec& u, double tt, const Vec& v) {
    const double t = std::clamp(tt, 0.0, 2.0);
    const double c = dot(v, u);
    if (c >= 1.0 - t) return 1.0;
    const double rim = std::sqrt(std::max(0.0, 1.0 - (1.0 - t) * (1.0 - t)));
    const double vperp = std::sqrt(std::max(0.0, 1.0 - c * c));
    return (1.0 - t) * c + rim * vperp;
}

}  // namespace

double cap_support(const Body& body, const UnitVector& u, double t, const UnitVector& v) {
    switch (body.kind()) {
        case Body::Kind::ball: {
            const double r = body.inradius();  // ball radius
            const Vec center = body.inball_center();
            return dot(center, v.vec()) + r * unit_ball_cap_support(u.vec(), t / r, v.vec());
        }
        case Body::Kind::polytope: {
            const double h = body.support(u);
            const auto cap_poly = clip_halfplane(body.hull_vertices(), u.vec(), h - t);
            double best = -std::numeric_limits<double>::infinity();
            for (const Vec& p : cap_poly) best = std::max(best, dot(p, v.vec()));
            return best;
        }
        case Body::Kind::ellipse: {
            // The ellipse is c + A p over the unit disk (A maps e1 -> a*axis1,
            // e2 -> b*axis2), so its cap is the affine image of a disk cap of
            // depth t / |A^T u| and the support pulls back through A^T.
            const Vec center = body.inball_center();
            const double a = body.ellipse_semi_major();
            const double b = body.ellipse_semi_minor();
            const double phi = body.ellipse_angle();
            const Vec ax1(std::cos(phi), std::sin(phi));
            const Vec ax2(-std::sin(phi), std::cos(phi));
            const Vec w(a * dot(ax1, u.vec()), b * dot(ax2, u.vec()));
            const Vec z(a * dot(ax1, v.vec()), b * dot(ax2, v.vec()));
            const double wn = norm(w);
            const double zn = norm(z);
            if (zn == 0.0) return dot(center, v.vec());
            return dot(center, v.vec()) +
                   zn * unit_ball_cap_support((1.0 / wn) * w, t / wn, (1.0 / zn) * z);
        }
    }
    throw std::logic_error("unreachable");
}

double ball_cap_volume_exact(double radius, double t, int dim) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball_cap_volume_exact: radius must be positive");
    const double tc = std::clamp(t, 0.0, 2.0 * radius);
    if (dim == 2) {
        const double r = radius;
        return r * r * std::acos(1.0 - tc / r) - (r - tc) * std::sqrt(std::max(0.0, 2.0 * r * tc - tc * tc));
    }
    if (dim == 3) {
        return kPi * tc * tc * (3.0 * radius - tc) / 3.0;
    }
    throw std::invalid_argument("ball_cap_volume_exact: dimension must be 2 or 3");
}

double mean_width(const Body& body, int n_dirs) {
    if (n_dirs < 16) throw std::invalid_argument("mean_width: n_dirs must be at least 16");
    const auto grid = direction_grid(body.dim(), n_dirs);
    double acc = 0.0;
    for (const UnitVector& u : grid) acc += body.support(u);
    // (2/omega_d) * integral h du with equal-weight nodes collapses to 2*mean
    return 2.0 * acc / static_cast<double>(n_dirs);
}

Estimate cap_volume(const Cap& cap, int n_mc, SeededStream rng) {
    const Body& body = cap.body;
    Estimate est;
    est.seed = rng.seed;

    const double w = body.width(cap.u);
    double t = cap.t;
    if (t > w) {
        est.flags["clamped"] = 1;
        t = w;
    }
    if (t <= 0.0) {
        est.flags["exact"] = 1;
        return est;  // zero-depth cap has zero volume
    }

    if (body.kind() == Body::Kind::ball) {
        est.value = ball_cap_volume_exact(body.inradius(), t, body.dim());
        est.flags["exact"] = 1;
        return est;
    }
    if (t >= w) {
        // the clamped cap is the whole body; its volume is closed-form
        est.value = body.volume();
        est.flags["exact"] = 1;
        return est;
    }

    if (n_mc < 2) throw std::invalid_argument("cap_volume: n_mc must be at least 2");

    // rejection sampling in the cap's axis-aligned bounding box
    const int d = body.dim();
    double lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
    double box_vol = 1.0;
    for (int i = 0; i < d; ++i) {
        Vec e(0.0, 0.0);
        e.dim = d;
        e[i] = 1.0;
        hi[i] = cap_support(body, cap.u, t, UnitVector(e));
        lo[i] = -cap_support(body, cap.u, t, UnitVector(-e));
        box_vol *= std::max(0.0, hi[i] - lo[i]);
    }
    if (box_vol <= 0.0) {
        est.n_samples = n_mc;
        return est;
    }

    RandomStream g(rng);
    std::int64_t hits = 0;
    for (int i = 0; i < n_mc; ++i) {
        Vec x(0.0, 0.0);
        x.dim = d;
        for (int k = 0; k < d; ++k) x[k] = g.uniform(lo[k], hi[k]);
        if (cap_contains(body, cap.u, t, x)) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(n_mc);
    est.value = p * box_vol;
    est.std_error = box_vol * std::sqrt(p * (1.0 - p) / static_cast<double>(n_mc));
    est.n_samples = n_mc;
    return est;
}

std::pair<double, double> ball_cap_bounds(double radius, double t, int dim) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball_cap_bounds: radius must be positive");
    if (t < 0.0 || t > radius)
        throw std::invalid_argument("ball_cap_bounds: requires 0 <= t <= r");
    if (dim != 2 && dim != 3) throw std::invalid_argument("ball_cap_bounds: dimension must be 2 or 3");
    const double kappa = unit_ball_volume(dim - 1);
    const double c1 = kappa / static_cast<double>(dim);
    const double c2 = std::pow(2.0, (dim - 1) / 2.0) * kappa;
    const double common = std::pow(radius, (dim - 1) / 2.0) * std::pow(t, (dim + 1) / 2.0);
    return {c1 * common, c2 * common};
}

// ---------------------------------------------------------------------------
// Flatness constants

FlatnessConstants flatness_constants(const Body& body, int grid_size) {
    if (grid_size < 64) throw std::invalid_argument("flatness_constants: grid_size must be >= 64");
    const int d = body.dim();
    if (d == 3 && body.kind() != Body::Kind::ball)
        throw std::invalid_argument("flatness_constants: 3D supported for balls only");

    // recenter so the inscribed ball E sits at the origin
    const Body centered = body.translated(-body.inball_center());
    const double e = centered.inradius();
    const double sqrt_d = std::sqrt(static_cast<double>(d));

    FlatnessConstants fc;
    fc.direction_grid_size = grid_size;
    const auto grid = direction_grid(d, grid_size);
    for (const UnitVector& u : grid) {
        const Vec apex = centered.support_point(u);
        const double h = dot(apex, u.vec());
        double r_u = 0.0;
        if (d == 2) {
            const Vec w = perp2(u.vec());
            r_u = triangle_inradius(apex, e * w, -e * w);
        } else {
            // ball: the cone over E ∩ u^perp is a cone of revolution; its
            // insphere radius equals the incircle radius of the axial triangle
            r_u = e * h / (e + std::sqrt(e * e + h * h));
        }
        if (!(r_u > 0.0)) throw std::runtime_error("flatness_constants: degenerate cone");
        fc.tau_grid_max = std::max(fc.tau_grid_max, sqrt_d * h / (2.0 * r_u));
        fc.lambda_grid_max = std::max(fc.lambda_grid_max, sqrt_d / (2.0 * r_u));
    }
    fc.tau = fc.tau_grid_max * FlatnessConstants::kSafetyFactor;
    fc.lambda_min = fc.lambda_grid_max * FlatnessConstants::kSafetyFactor;
    return fc;
}

double triangle_inradius(const Vec& a, const Vec& b, const Vec& c) {
    const double area = 0.5 * std::abs(cross2(b - a, c - a));
    const double s = 0.5 * (norm(b - a) + norm(c - b) + norm(a - c));
    if (s <= 0.0) return 0.0;
    return area / s;
}

AngularInterval normal_cone_2d(const Body& polytope, int vertex_index) {
    if (polytope.kind() != Body::Kind::polytope || polytope.dim() != 2)
        throw std::invalid_argument("normal_cone_2d: needs a 2D polytope");
    const auto& input = polytope.input_vertices();
    if (vertex_index < 0 || vertex_index >= static_cast<int>(input.size()))
        throw std::invalid_argument("normal_cone_2d: vertex index out of range");
    const Vec v = input[static_cast<std::size_t>(vertex_index)];

    const auto& hull = polytope.hull_vertices();
    double scale = 1.0;
    for (const Vec& h : hull) scale = std::max({scale, std::abs(h.x), std::abs(h.y)});
    int hull_idx = -1;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (norm(hull[i] - v) <= 1e-12 * scale) {
            hull_idx = static_cast<int>(i);
            break;
        }
    }
    if (hull_idx < 0) throw std::invalid_argument("normal_cone_2d: vertex is not extreme");

    const std::size_t m = hull.size();
    const std::size_t i = static_cast<std::size_t>(hull_idx);
    const Vec e_prev = hull[i] - hull[(i + m - 1) % m];
    const Vec e_next = hull[(i + 1) % m] - hull[i];
    const double lo = std::atan2(-e_prev.x, e_prev.y);  // angle of outward normal (e.y, -e.x)
    double hi = std::atan2(-e_next.x, e_next.y);
    while (hi <= lo) hi += 2.0 * kPi;
    return AngularInterval{lo, hi};
}

}  // namespace lh
