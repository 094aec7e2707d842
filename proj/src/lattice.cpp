#include "latticehull/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace lh {

namespace {

constexpr double kEnumTol = 1e-12;          // boundary inclusion tolerance
constexpr double kMaxCandidates = 5.0e7;    // enumeration guard

}  // namespace

Rotation Rotation::identity(int dim) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("Rotation: dimension must be 2 or 3");
    Rotation r;
    r.dim_ = dim;
    return r;
}

Rotation Rotation::from_angle(double theta) {
    Rotation r;
    r.dim_ = 2;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    r.m_[0][0] = c;
    r.m_[0][1] = -s;
    r.m_[1][0] = s;
    r.m_[1][1] = c;
    return r;
}

Rotation Rotation::from_matrix3(const double m[3][3]) {
    Rotation r;
    r.dim_ = 3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m_[i][j] = m[i][j];
    return r;
}

Vec Rotation::apply(const Vec& v) const {
    Vec out;
    out.dim = dim_;
    out.x = m_[0][0] * v.x + m_[0][1] * v.y + m_[0][2] * v.z;
    out.y = m_[1][0] * v.x + m_[1][1] * v.y + m_[1][2] * v.z;
    out.z = dim_ == 3 ? m_[2][0] * v.x + m_[2][1] * v.y + m_[2][2] * v.z : 0.0;
    return out;
}

Vec Rotation::apply_transpose(const Vec& v) const {
    Vec out;
    out.dim = dim_;
    out.x = m_[0][0] * v.x + m_[1][0] * v.y + m_[2][0] * v.z;
    out.y = m_[0][1] * v.x + m_[1][1] * v.y + m_[2][1] * v.z;
    out.z = dim_ == 3 ? m_[0][2] * v.x + m_[1][2] * v.y + m_[2][2] * v.z : 0.0;
    return out;
}

Vec Rotation::column(int j) const {
    Vec out;
    out.dim = dim_;
    out.x = m_[0][j];
    out.y = m_[1][j];
    out.z = dim_ == 3 ? m_[2][j] : 0.0;
    return out;
}

double Rotation::orthogonality_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            double acc = 0.0;
            for (int k = 0; k < dim_; ++k) acc += m_[k][i] * m_[k][j];
            worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double Rotation::determinant() const {
    if (dim_ == 2) return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0];
    return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
           m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
           m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

Rotation sample_rotation(int dim, RandomStream& g) {
    if (dim == 2) return Rotation::from_angle(g.uniform(0.0, 2.0 * kPi));
    if (dim != 3) throw std::invalid_argument("sample_rotation: dimension must be 2 or 3");

    // Gram-Schmidt on a Gaussian matrix gives the Haar Q factor under the
    // positive-diagonal R convention; a second orthogonalization pass keeps
    // the defect near machine precision.
    while (true) {
        double col[3][3];
        for (auto& c : col)
            for (double& x : c) x = g.normal();

        bool ok = true;
        for (int j = 0; j < 3 && ok; ++j) {
            for (int pass = 0; pass < 2; ++pass) {
                for (int k = 0; k < j; ++k) {
                    double proj = 0.0;
                    for (int i = 0; i < 3; ++i) proj += col[j][i] * col[k][i];
                    for (int i = 0; i < 3; ++i) col[j][i] -= proj * col[k][i];
                }
            }
            double nrm = 0.0;
            for (int i = 0; i < 3; ++i) nrm += col[j][i] * col[j][i];
            nrm = std::sqrt(nrm);
            if (nrm < 1e-8) {
                ok = false;  // near-degenerate draw, resample
                break;
            }
            for (int i = 0; i < 3; ++i) col[j][i] /= nrm;
        }
        if (!ok) continue;

        double m[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = col[j][i];
        Rotation r = Rotation::from_matrix3(m);
        if (r.determinant() < 0.0) {
            // right-multiply by diag(1,1,-1): Haar on O(3) restricted to the
            // reflection component maps onto Haar on SO(3)
            for (int i = 0; i < 3; ++i) m[i][2] = -m[i][2];
            r = Rotation::from_matrix3(m);
        }
        return r;
    }
}

LatticeSample sample_lattice(int dim, SeededStream s) {
    RandomStream g(s);
    LatticeSample L;
    L.rotation = sample_rotation(dim, g);
    Vec t;
    t.dim = dim;
    for (int i = 0; i < dim; ++i) t[i] = g.uniform01();
    L.translation = t;
    return L;
}

namespace {

// Integer candidate ranges for z with rho(z + t) inside a convex set S,
// where support(v) bounds S in direction v. The set is pulled back through
// rho^{-1} (support in direction e_i becomes support at the i-th rotation
// column) and shifted by -t.
struct CandidateBox {
    long lo[3] = {0, 0, 0};
    long hi[3] = {-1, -1, -1};  // empty by default
    bool empty = false;
};

template <typename SupportFn>
CandidateBox candidate_box(int dim, const LatticeSample& L, SupportFn&& support) {
    CandidateBox box;
    double count = 1.0;
    for (int i = 0; i < dim; ++i) {
        const Vec ci = L.rotation.column(i);
        const double hi_s = support(UnitVector(ci));
        const double lo_s = -support(UnitVector(-ci));
        const double ti = L.translation[i];
        const double lo = std::ceil(lo_s - ti - kEnumTol);
        const double hi = std::floor(hi_s - ti + kEnumTol);
        if (hi < lo) {
            box.empty = true;
            return box;
        }
        box.lo[i] = static_cast<long>(lo);
        box.hi[i] = static_cast<long>(hi);
        count *= static_cast<double>(box.hi[i] - box.lo[i] + 1);
    }
    if (count > kMaxCandidates) throw std::runtime_error("lattice enumeration: candidate box too large");
    return box;
}

template <typename SupportFn, typename Visit>
void scan_candidates(const Body& body, const LatticeSample& L, SupportFn&& support, Visit&& visit) {
    const int dim = body.dim();
    const CandidateBox box = candidate_box(dim, L, support);
    if (box.empty) return;
    Vec z;
    z.dim = dim;
    if (dim == 2) {
        for (long a = box.lo[0]; a <= box.hi[0]; ++a) {
            z.x = static_cast<double>(a);
            for (long b = box.lo[1]; b <= box.hi[1]; ++b) {
                z.y = static_cast<double>(b);
                if (!visit(L.point(z))) return;
            }
        }
        return;
    }
    for (long a = box.lo[0]; a <= box.hi[0]; ++a) {
        z.x = static_cast<double>(a);
        for (long b = box.lo[1]; b <= box.hi[1]; ++b) {
            z.y = static_cast<double>(b);
            for (long c = box.lo[2]; c <= box.hi[2]; ++c) {
                z.z = static_cast<double>(c);
                if (!visit(L.point(z))) return;
            }
        }
    }
}

}  // namespace

std::vector<Vec> lattice_points_in(const Body& body, const LatticeSample& L) {
    if (L.dim() != body.dim()) throw std::invalid_argument("lattice_points_in: dimension mismatch");
    std::vector<Vec> out;
    scan_candidates(
        body, L, [&](const UnitVector& v) { return body.support(v); },
        [&](const Vec& x) {
            if (body.contains(x, kEnumTol)) out.push_back(x);
            return true;
        });
    return out;
}

bool cap_contains_lattice_point(const Body& body, const UnitVector& u, double t,
                                const LatticeSample& L) {
    if (t <= 0.0) {
        // zero-depth cap: only points exactly on the supporting hyperplane
        t = 0.0;
    }
    bool found = false;
    scan_candidates(
        body, L, [&](const UnitVector& v) { return cap_support(body, u, t, v); },
        [&](const Vec& x) {
            if (cap_contains(body, u, t, x)) {
                found = true;
                return false;  // stop scanning
            }
            return true;
        });
    return found;
}

std::vector<Vec> lattice_points_in_cap(const Body& body, const UnitVector& u, double t,
                                       const LatticeSample& L) {
    std::vector<Vec> out;
    scan_candidates(
        body, L, [&](const UnitVector& v) { return cap_support(body, u, t, v); },
        [&](const Vec& x) {
            if (cap_contains(body, u, t, x)) out.push_back(x);
            return true;
        });
    return out;
}

}  // namespace lh
