#include "latticehull/estimators.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "latticehull/hull.hpp"
#include "latticehull/lattice.hpp"
#include "latticehull/parallel.hpp"

namespace lh {

namespace {

constexpr int kFlatnessGrid = 2048;

// Trapezoid weight sum over the first k of n uniform nodes (node values 1
// before the switch index, 0 after). Equals the full range when k == n.
double trapezoid_prefix(double step, int k, int n) {
    if (k <= 0) return 0.0;
    if (k >= n) return step * static_cast<double>(n - 1);
    // half weight at node 0 plus full weight at the k-1 interior nodes 1..k-1
    return step * (static_cast<double>(k) - 0.5);
}

// Smallest node index whose cap contains a lattice point; n if none does.
// Valid because caps nest in t, so the per-node indicator is monotone.
template <typename HitFn>
int first_hit_node(int n_t, HitFn&& hit) {
    int lo = 0, hi = n_t;  // invariant: nodes < lo miss, hi..n_t-1 unknown-or-hit
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (hit(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace

Estimate cap_avoidance_probability(const Body& body, double t, const UnitVector& u, int n,
                                   SeededStream rng, int threads) {
    if (n < 2) throw std::invalid_argument("cap_avoidance_probability: n must be at least 2");
    if (t < 0.0) throw std::invalid_argument("cap_avoidance_probability: t must be nonnegative");
    std::vector<std::uint8_t> avoided(static_cast<std::size_t>(n));
    parallel_for(n, threads, [&](std::int64_t i) {
        const LatticeSample L =
            sample_lattice(body.dim(), rng.with_stream(rng.stream + static_cast<std::uint64_t>(i)));
        avoided[static_cast<std::size_t>(i)] = cap_contains_lattice_point(body, u, t, L) ? 0 : 1;
    });
    std::int64_t count = 0;
    for (std::uint8_t a : avoided) count += a;
    const double p = static_cast<double>(count) / static_cast<double>(n);
    Estimate est;
    est.value = p;
    est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    est.n_samples = n;
    est.seed = rng.seed;
    return est;
}

Estimate expected_lattice_count(const Body& body, int n, SeededStream rng, int threads) {
    if (n < 2) throw std::invalid_argument("expected_lattice_count: n must be at least 2");
    std::vector<double> counts(static_cast<std::size_t>(n));
    parallel_for(n, threads, [&](std::int64_t i) {
        const LatticeSample L =
            sample_lattice(body.dim(), rng.with_stream(rng.stream + static_cast<std::uint64_t>(i)));
        counts[static_cast<std::size_t>(i)] =
            static_cast<double>(lattice_points_in(body, L).size());
    });
    return estimate_from_samples(counts, rng.seed);
}

Estimate width_difference_direct(const Body& body, double lambda, int n_lattices, int n_dirs,
                                 SeededStream rng, int threads) {
    if (lambda < 1.0) throw std::invalid_argument("width_difference_direct: lambda must be >= 1");
    if (n_lattices < 2) throw std::invalid_argument("width_difference_direct: need >= 2 lattices");
    const Body big = body.scaled(lambda);
    const auto grid = direction_grid(big.dim(), n_dirs);

    std::vector<double> body_support(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) body_support[i] = big.support(grid[i]);
    double body_width = 0.0;
    for (double h : body_support) body_width += h;
    body_width *= 2.0 / static_cast<double>(n_dirs);

    std::vector<double> diffs(static_cast<std::size_t>(n_lattices));
    std::vector<std::uint8_t> empties(static_cast<std::size_t>(n_lattices), 0);
    parallel_for(n_lattices, threads, [&](std::int64_t i) {
        const LatticeSample L =
            sample_lattice(big.dim(), rng.with_stream(rng.stream + static_cast<std::uint64_t>(i)));
        const std::vector<Vec> pts = lattice_points_in(big, L);
        if (pts.empty()) {
            diffs[static_cast<std::size_t>(i)] = body_width;  // W(K_L) = 0 by convention
            empties[static_cast<std::size_t>(i)] = 1;
            return;
        }
        // the support of a point set equals the support of its hull, so 2D
        // clouds are reduced to hull vertices before the direction sweep
        std::span<const Vec> cloud(pts);
        Polygon hull;
        if (big.dim() == 2 && pts.size() > 8) {
            hull = convex_hull_2d(pts);
            cloud = hull.vertices;
        }
        double acc = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k)
            acc += body_support[k] - *support_of_points(cloud, grid[k]);
        diffs[static_cast<std::size_t>(i)] = 2.0 * acc / static_cast<double>(n_dirs);
    });

    Estimate est = estimate_from_samples(diffs, rng.seed);
    std::int64_t empty_count = 0;
    for (std::uint8_t e : empties) empty_count += e;
    if (empty_count > 0) est.flags["empty_intersection"] = empty_count;
    return est;
}

Estimate width_difference_cap_integral(const Body& body, double lambda, int n_lattices, int n_dirs,
                                       int n_t, SeededStream rng, int threads) {
    if (n_lattices < 2) throw std::invalid_argument("width_difference_cap_integral: need >= 2 lattices");
    if (n_t < 2) throw std::invalid_argument("width_difference_cap_integral: n_t must be >= 2");
    const FlatnessConstants fc = flatness_constants(body, kFlatnessGrid);
    if (lambda < fc.lambda_min)
        throw std::invalid_argument(
            "width_difference_cap_integral: lambda below lambda(K); the depth integral may not "
            "be truncated at tau(K)");

    const Body big = body.scaled(lambda);
    const double tau = fc.tau;
    const double step = tau / static_cast<double>(n_t - 1);
    const auto grid = direction_grid(big.dim(), n_dirs);

    std::vector<double> samples(static_cast<std::size_t>(n_lattices));
    parallel_for(n_lattices, threads, [&](std::int64_t i) {
        const LatticeSample L =
            sample_lattice(big.dim(), rng.with_stream(rng.stream + static_cast<std::uint64_t>(i)));
        double acc = 0.0;
        for (const UnitVector& u : grid) {
            const int k_hit = first_hit_node(n_t, [&](int node) {
                const double t = step * static_cast<double>(node);
                return cap_contains_lattice_point(big, u, t, L);
            });
            acc += trapezoid_prefix(step, k_hit, n_t);
        }
        samples[static_cast<std::size_t>(i)] = 2.0 * acc / static_cast<double>(n_dirs);
    });
    return estimate_from_samples(samples, rng.seed);
}

Estimate area_difference(const Body& body, double lambda, int n_lattices, SeededStream rng,
                         int threads) {
    if (body.dim() != 2) throw std::invalid_argument("area_difference: 2D only");
    if (lambda < 1.0) throw std::invalid_argument("area_difference: lambda must be >= 1");
    if (n_lattices < 2) throw std::invalid_argument("area_difference: need >= 2 lattices");
    const Body big = body.scaled(lambda);
    const double body_area = big.volume();

    std::vector<double> diffs(static_cast<std::size_t>(n_lattices));
    std::vector<std::uint8_t> empties(static_cast<std::size_t>(n_lattices), 0);
    parallel_for(n_lattices, threads, [&](std::int64_t i) {
        const LatticeSample L =
            sample_lattice(2, rng.with_stream(rng.stream + static_cast<std::uint64_t>(i)));
        const std::vector<Vec> pts = lattice_points_in(big, L);
        if (pts.empty()) {
            diffs[static_cast<std::size_t>(i)] = body_area;
            empties[static_cast<std::size_t>(i)] = 1;
            return;
        }
        diffs[static_cast<std::size_t>(i)] = body_area - polygon_area(convex_hull_2d(pts));
    });

    Estimate est = estimate_from_samples(diffs, rng.seed);
    std::int64_t empty_count = 0;
    for (std::uint8_t e : empties) empty_count += e;
    if (empty_count > 0) est.flags["empty_intersection"] = empty_count;
    return est;
}

Estimate gamma_polytope(const Body& polytope, int n_lattices, int n_dirs_per_cone, int n_t,
                        SeededStream rng, int threads) {
    if (polytope.kind() != Body::Kind::polytope || polytope.dim() != 2)
        throw std::invalid_argument("gamma_polytope: needs a 2D polytope");
    if (n_lattices < 2) throw std::invalid_argument("gamma_polytope: need >= 2 lattices");
    if (n_dirs_per_cone < 2) throw std::invalid_argument("gamma_polytope: need >= 2 nodes per cone");
    if (n_t < 2) throw std::invalid_argument("gamma_polytope: n_t must be >= 2");

    const FlatnessConstants fc = flatness_constants(polytope, kFlatnessGrid);
    const double tau = fc.tau;
    const double step = tau / static_cast<double>(n_t - 1);

    const auto& hull = polytope.hull_vertices();
    double min_edge = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i)
        min_edge = std::min(min_edge, norm(hull[(i + 1) % hull.size()] - hull[i]));

    // The vertex cone is realized as a large scaled copy of P - v: its caps
    // of depth <= tau coincide with the infinite cone's caps once the scale
    // clears the cap region by a wide margin.
    const double cone_scale = 1.0e4 * tau / min_edge;

    struct ConeNode {
        UnitVector dir;
        double weight;  // arc measure / nodes
    };
    std::vector<Body> cones;
    std::vector<std::vector<ConeNode>> cone_nodes;
    for (std::size_t vi = 0; vi < hull.size(); ++vi) {
        std::vector<Vec> shifted;
        shifted.reserve(hull.size());
        for (const Vec& w : hull) shifted.push_back(cone_scale * (w - hull[vi]));
        cones.push_back(Body::polygon(std::move(shifted)));

        // normal cone arc at this hull vertex
        const std::size_t m = hull.size();
        const Vec e_prev = hull[vi] - hull[(vi + m - 1) % m];
        const Vec e_next = hull[(vi + 1) % m] - hull[vi];
        const double lo = std::atan2(-e_prev.x, e_prev.y);
        double hi = std::atan2(-e_next.x, e_next.y);
        while (hi <= lo) hi += 2.0 * kPi;

        std::vector<ConeNode> nodes;
        nodes.reserve(static_cast<std::size_t>(n_dirs_per_cone));
        const double arc = hi - lo;
        const double w = arc / static_cast<double>(n_dirs_per_cone);
        for (int k = 0; k < n_dirs_per_cone; ++k) {
            // midpoint rule keeps nodes strictly inside the open arc
            const double phi = lo + (static_cast<double>(k) + 0.5) * w;
            nodes.push_back(ConeNode{UnitVector::from_angle(phi), w});
        }
        cone_nodes.push_back(std::move(nodes));
    }

    const double norm_factor = 2.0 / sphere_measure(2);
    std::vector<double> samples(static_cast<std::size_t>(n_lattices));
    parallel_for(n_lattices, threads, [&](std::int64_t i) {
        const LatticeSample L =
            sample_lattice(2, rng.with_stream(rng.stream + static_cast<std::uint64_t>(i)));
        double acc = 0.0;
        for (std::size_t vi = 0; vi < cones.size(); ++vi) {
            const Body& cone = cones[vi];
            for (const ConeNode& node : cone_nodes[vi]) {
                const int k_hit = first_hit_node(n_t, [&](int nk) {
                    const double t = step * static_cast<double>(nk);
                    return cap_contains_lattice_point(cone, node.dir, t, L);
                });
                acc += node.weight * trapezoid_prefix(step, k_hit, n_t);
            }
        }
        samples[static_cast<std::size_t>(i)] = norm_factor * acc;
    });
    return estimate_from_samples(samples, rng.seed);
}

}  // namespace lh
