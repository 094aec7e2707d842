#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "latticehull/estimate.hpp"
#include "latticehull/rng.hpp"
#include "latticehull/vec.hpp"

namespace lh {

inline constexpr double kPi = 3.14159265358979323846;

/// Volume of the d-dimensional unit ball, d in {1,2,3}.
double unit_ball_volume(int d);

/// Surface measure omega_d = d * kappa_d of the sphere S^{d-1}, d in {2,3}.
double sphere_measure(int d);

/// Direction on S^{d-1}; construction rejects vectors whose norm deviates
/// from 1 by more than 1e-12.
class UnitVector {
public:
    explicit UnitVector(const Vec& v);
    static UnitVector normalize(const Vec& v);
    static UnitVector from_angle(double theta);  // 2D

    const Vec& vec() const { return v_; }
    operator const Vec&() const { return v_; }
    int dim() const { return v_.dim; }
    UnitVector operator-() const { return UnitVector(-v_); }

private:
    Vec v_;
};

/// Quadrature grid on S^{d-1}: uniform angles in 2D (trapezoid rule on a
/// periodic integrand), spherical Fibonacci points in 3D. Equal weights
/// sphere_measure(d)/n.
std::vector<UnitVector> direction_grid(int dim, int n);

/// Convex body: ball (2D/3D), V-polytope (2D), or ellipse (2D).
/// Immutable after construction; all operations are pure.
class Body {
public:
    enum class Kind { ball, polytope, ellipse };

    static Body ball(const Vec& center, double radius);
    /// Vertices must span the plane (nonempty interior); duplicates and
    /// interior points are tolerated, collinear-only input is rejected.
    static Body polygon(std::vector<Vec> vertices);
    static Body ellipse(const Vec& center, double semi_major, double semi_minor, double angle);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }

    /// Support function h_K(u) = max over K of <x,u>, exact per variant.
    double support(const UnitVector& u) const;
    /// A maximizer of <x,u>; for a polytope face the tied vertices' centroid.
    Vec support_point(const UnitVector& u) const;
    /// Width h_K(u) + h_K(-u).
    double width(const UnitVector& u) const;
    /// Closed-form volume (area in 2D).
    double volume() const;
    /// Membership with boundary points included up to `tol`.
    bool contains(const Vec& x, double tol = kBoundaryTol) const;

    /// Image of K under x -> lambda x. Support values scale exactly by
    /// lambda; bodies positioned at the origin stay put.
    Body scaled(double lambda) const;
    Body translated(const Vec& shift) const;

    /// Center of a maximal inscribed ball (Chebyshev center for polytopes).
    Vec inball_center() const;
    double inradius() const;
    /// max |x| over K (used to normalize bodies into the unit ball).
    double circumradius() const;

    /// Radius of a ball that rolls freely inside the body: r for a ball,
    /// b^2/a for an ellipse. Not available for polytopes.
    std::optional<double> rolling_radius() const;

    // polytope accessors
    const std::vector<Vec>& hull_vertices() const;   // CCW, strictly convex
    const std::vector<Vec>& input_vertices() const;  // as given at construction

    // ellipse accessors
    double ellipse_semi_major() const;
    double ellipse_semi_minor() const;
    double ellipse_angle() const;

    static constexpr double kBoundaryTol = 1e-12;

private:
    struct BallData {
        Vec center;
        double radius;
    };
    struct PolytopeData {
        std::vector<Vec> input;
        std::vector<Vec> hull;           // CCW
        std::vector<Vec> edge_normals;   // unit outward, edge i: hull[i] -> hull[i+1]
        std::vector<double> edge_offsets;
        Vec cheby_center;
        double cheby_radius = 0.0;
    };
    struct EllipseData {
        Vec center;
        double a;
        double b;
        double angle;
        Vec axis1() const { return Vec(std::cos(angle), std::sin(angle)); }
        Vec axis2() const { return Vec(-std::sin(angle), std::cos(angle)); }
    };

    Body() = default;
    Kind kind_ = Kind::ball;
    int dim_ = 2;
    std::variant<BallData, PolytopeData, EllipseData> data_;

    const BallData& as_ball() const { return std::get<BallData>(data_); }
    const PolytopeData& as_poly() const { return std::get<PolytopeData>(data_); }
    const EllipseData& as_ellipse() const { return std::get<EllipseData>(data_); }
};

/// Cap K_{t,u}: the part of K at depth <= t below the supporting hyperplane
/// with outer normal u. t = 0 gives an empty-interior cap.
struct Cap {
    Body body;
    UnitVector u;
    double t;

    Cap(Body b, UnitVector dir, double depth);
};

/// x in K_{t,u}  <=>  x in K and <x,u> >= h_K(u) - t.
bool cap_contains(const Body& body, const UnitVector& u, double t, const Vec& x);
bool cap_membership(const Cap& cap, const Vec& x);

/// Exact support function of the cap K_{t,u} in direction v (ball: closed
/// form; polytope: support of the clipped polygon; ellipse: affine image of
/// the disk cap). Used to bound the cap for lattice enumeration and
/// rejection sampling.
double cap_support(const Body& body, const UnitVector& u, double t, const UnitVector& v);

/// Exact volume of a ball cap of depth t (circular segment in 2D, spherical
/// cap in 3D). t is clamped to [0, 2r].
double ball_cap_volume_exact(double radius, double t, int dim);

/// Mean width (2/omega_d) * integral of h_K over S^{d-1} by quadrature.
/// Requires n_dirs >= 16. Closed forms for tests: ball 2r, polygon
/// perimeter/pi.
double mean_width(const Body& body, int n_dirs);

/// Volume of the cap. Balls are exact (zero standard error, flag exact=1);
/// polytopes and ellipses use rejection sampling in the cap's bounding box.
/// A depth beyond the body's width is clamped to the whole body (flagged).
Estimate cap_volume(const Cap& cap, int n_mc, SeededStream rng);

/// Cone/cylinder bracket for the ball-cap volume:
///   c1 r^{(d-1)/2} t^{(d+1)/2} <= V_d(B(0,r)_{t,u}) <= c2 r^{(d-1)/2} t^{(d+1)/2}
/// with c1 = kappa_{d-1}/d and c2 = 2^{(d-1)/2} kappa_{d-1}. Requires
/// 0 <= t <= r.
std::pair<double, double> ball_cap_bounds(double radius, double t, int dim);

/// Flatness constants of a body, computed on a finite direction grid.
/// tau and lambda_min carry the safety factor applied to the raw grid maxima
/// (a grid maximum underestimates the supremum over the sphere).
struct FlatnessConstants {
    double tau = 0.0;             // adjusted: grid max * kSafetyFactor
    double lambda_min = 0.0;      // adjusted
    double tau_grid_max = 0.0;    // raw grid maximum
    double lambda_grid_max = 0.0; // raw grid maximum
    int direction_grid_size = 0;

    static constexpr double kSafetyFactor = 1.25;
};

/// For each grid direction u, build the cone [x(u), E ∩ u^perp] over the
/// inscribed ball E (body recentered at its inball center), take its
/// inradius r(u), and maximize sqrt(d) h(u) / (2 r(u)) and
/// sqrt(d) / (2 r(u)) over the grid. Requires grid_size >= 64.
FlatnessConstants flatness_constants(const Body& body, int grid_size = 2048);

/// Open arc of outer-normal angles, (lo, lo + measure), measure in (0, 2*pi).
struct AngularInterval {
    double lo = 0.0;
    double hi = 0.0;
    double measure() const { return hi - lo; }
};

/// Normal cone of a 2D polytope at one of its input vertices, as the open
/// arc of outer-normal angles between the two incident edges. Arcs over all
/// hull vertices partition S^1 up to a null set. Non-extreme vertices are
/// rejected.
AngularInterval normal_cone_2d(const Body& polytope, int vertex_index);

/// Inradius of the triangle ABC (area / semiperimeter).
double triangle_inradius(const Vec& a, const Vec& b, const Vec& c);

/// Clip a convex CCW polygon against the halfplane <x,n> >= c.
std::vector<Vec> clip_halfplane(std::span<const Vec> poly, const Vec& n, double c);

}  // namespace lh
