#pragma once

#include "latticehull/estimate.hpp"
#include "latticehull/geometry.hpp"
#include "latticehull/rng.hpp"

namespace lh {

/// Probability that the cap K_{t,u} misses the random lattice, over n
/// lattice samples on streams rng.stream + i. Binomial standard error.
Estimate cap_avoidance_probability(const Body& body, double t, const UnitVector& u, int n,
                                   SeededStream rng, int threads = 1);

/// Mean number of lattice points inside the body; the target identity is
/// E #(K ∩ L) = V_d(K).
Estimate expected_lattice_count(const Body& body, int n, SeededStream rng, int threads = 1);

/// W(lambda K) - mean over lattices of W((lambda K)_L), both sides evaluated
/// on the same direction grid. Empty intersections contribute W(lambda K)
/// and are counted in flags["empty_intersection"].
Estimate width_difference_direct(const Body& body, double lambda, int n_lattices, int n_dirs,
                                 SeededStream rng, int threads = 1);

/// The same width difference through the cap-avoidance identity:
/// (2/omega_d) * integral over directions and depths of
/// P(cap avoided), with the depth integral truncated at tau(K) (valid once
/// lambda >= lambda(K), which is enforced) and evaluated by trapezoid on n_t
/// nodes. Lattice samples are shared across all quadrature nodes.
Estimate width_difference_cap_integral(const Body& body, double lambda, int n_lattices, int n_dirs,
                                       int n_t, SeededStream rng, int threads = 1);

/// V_2(lambda K) - mean area of the hull of (lambda K) ∩ L (2D only).
Estimate area_difference(const Body& body, double lambda, int n_lattices, SeededStream rng,
                         int threads = 1);

/// Limit constant of a 2D polytope: sum over vertices of the cap-avoidance
/// integral over the vertex's normal cone and depths up to tau(P), with the
/// infinite vertex cone realized as a large scaled copy of P - v. Includes
/// the 2/omega_d normalization, so the value is directly comparable to the
/// width-difference estimates.
Estimate gamma_polytope(const Body& polytope, int n_lattices, int n_dirs_per_cone, int n_t,
                        SeededStream rng, int threads = 1);

}  // namespace lh
