#pragma once

#include <vector>

#include "latticehull/geometry.hpp"
#include "latticehull/rng.hpp"
#include "latticehull/vec.hpp"

namespace lh {

/// Proper rotation in SO(d), d in {2,3}.
class Rotation {
public:
    Rotation() = default;  // 2D identity
    static Rotation identity(int dim);
    static Rotation from_angle(double theta);  // 2D
    static Rotation from_matrix3(const double m[3][3]);

    int dim() const { return dim_; }
    double entry(int row, int col) const { return m_[row][col]; }

    Vec apply(const Vec& v) const;          // rho * v
    Vec apply_transpose(const Vec& v) const;  // rho^T * v = rho^{-1} * v
    /// Column j as a unit vector (columns of a rotation are orthonormal).
    Vec column(int j) const;

    /// max |R^T R - I| entry, for orthogonality checks.
    double orthogonality_defect() const;
    double determinant() const;

private:
    double m_[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    int dim_ = 2;
};

/// One random lattice L = rho(Z^d + t): a Haar rotation plus a uniform
/// translation with components in [0,1).
struct LatticeSample {
    Rotation rotation;
    Vec translation;

    int dim() const { return rotation.dim(); }
    /// The lattice point rho(z + t) for an integer vector z.
    Vec point(const Vec& z) const { return rotation.apply(z + translation); }
};

/// Haar-uniform rotation: uniform angle in 2D; in 3D the Q factor of a
/// Gaussian matrix (Gram-Schmidt yields the positive-diagonal R convention),
/// with one column negated when det = -1 to land in SO(3).
Rotation sample_rotation(int dim, RandomStream& g);

/// Independent Haar rotation and uniform translation, fully determined by
/// the (seed, stream) pair.
LatticeSample sample_lattice(int dim, SeededStream s);

/// All lattice points inside the body: the body is pulled back through
/// rho^{-1} and -t, integer candidates are scanned from the axis-aligned
/// support box, and membership is tested in original coordinates. Points
/// within 1e-12 of the boundary are included.
std::vector<Vec> lattice_points_in(const Body& body, const LatticeSample& L);

/// Same candidates, restricted to the cap K_{t,u}; stops at the first hit.
bool cap_contains_lattice_point(const Body& body, const UnitVector& u, double t,
                                const LatticeSample& L);

/// Full list of lattice points inside the cap (test support).
std::vector<Vec> lattice_points_in_cap(const Body& body, const UnitVector& u, double t,
                                       const LatticeSample& L);

}  // namespace lh
