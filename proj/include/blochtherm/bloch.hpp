// bloch.hpp — Bloch-vector geometry of a two-level state and its driving field

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace blochtherm {

using Vec3 = Eigen::Vector3d;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;
using complex = std::complex<double>;

/** tolerance for geometric identities */
inline constexpr double geometry_tol = 1e-10;
/** Bloch norms may exceed 1 by at most this before a state is rejected */
inline constexpr double norm_slack = 1e-9;
/** below this norm a direction (and its phase) counts as undefined */
inline constexpr double degenerate_norm = 1e-12;

// Pauli matrices in the atom basis, |e> = (1,0), |g> = (0,1).
inline Matrix2c pauli_x() {
    Matrix2c m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

inline Matrix2c pauli_y() {
    Matrix2c m;
    m << complex(0, 0), complex(0, -1), complex(0, 1), complex(0, 0);
    return m;
}

inline Matrix2c pauli_z() {
    Matrix2c m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

inline Matrix2c pauli_plus() {  // |e><g|
    Matrix2c m;
    m << 0.0, 1.0, 0.0, 0.0;
    return m;
}

inline Matrix2c pauli_minus() {  // |g><e|
    Matrix2c m;
    m << 0.0, 0.0, 1.0, 0.0;
    return m;
}

/**
 * Two-level state as the real vector n with rho = (1 + n.sigma)/2.
 *
 * The vector is the internal representation; the 2x2 density matrix and the
 * eigen-decomposition are derived on demand. Construction rejects |n| > 1
 * beyond numerical slack.
 */
class BlochState {
public:
    BlochState() = default;
    explicit BlochState(const Vec3& n);
    BlochState(double nx, double ny, double nz) : BlochState(Vec3(nx, ny, nz)) {}
    static BlochState from_density_matrix(const Matrix2c& rho);

    const Vec3& vec() const { return n_; }
    double norm() const { return n_.norm(); }
    double population_inversion() const { return n_.z(); }

    /** off-diagonal element <e|rho|g> = (n_x - i n_y)/2 */
    complex coherence() const { return {0.5 * n_.x(), -0.5 * n_.y()}; }
    /** phase phi with rho_eg = |rho_eg| e^{-i phi}; 0 when the coherence vanishes */
    double coherence_phase() const;
    /** eigenbasis half-angle phi_m, cos(2 phi_m) = inversion/norm */
    double mixing_angle() const;

    double eigenvalue_plus() const { return 0.5 * (1.0 + norm()); }
    double eigenvalue_minus() const { return 0.5 * (1.0 - norm()); }

    Matrix2c density_matrix() const;

private:
    Vec3 n_ = Vec3::Zero();
};

/**
 * Driving Hamiltonian H = h.sigma (traceless by convention, hbar = 1).
 * Eigen-energies are +/-|h|.
 */
class DrivingField {
public:
    DrivingField() = default;
    explicit DrivingField(const Vec3& h) : h_(h) {}
    DrivingField(double hx, double hy, double hz) : h_(hx, hy, hz) {}

    const Vec3& vec() const { return h_; }
    double norm() const { return h_.norm(); }
    double energy_plus() const { return norm(); }
    double energy_minus() const { return -norm(); }

    /** eigenbasis half-angle theta, cos(2 theta) = h_z/|h| */
    double mixing_angle() const;
    /** phase Theta with <e|H|g> = |H_eg| e^{-i Theta}; 0 when the field is axial */
    double azimuth() const;

    Matrix2c matrix() const;

private:
    Vec3 h_ = Vec3::Zero();
};

struct StateEigensystem {
    double value_plus = 1.0;
    double value_minus = 0.0;
    Vector2c vector_plus;
    Vector2c vector_minus;
    /** the coherence vanished, so the azimuthal phase was fixed to 0 */
    bool gauge_arbitrary = false;
};

struct FieldEigensystem {
    double energy_plus = 0.0;
    double energy_minus = 0.0;
    Vector2c vector_plus;
    Vector2c vector_minus;
    bool gauge_arbitrary = false;
};

StateEigensystem state_eigensystem(const BlochState& s);
FieldEigensystem field_eigensystem(const DrivingField& f);

struct Alignment {
    /** cosine of the angle between the state and field directions */
    double cos_alpha = 0.0;
    /** one of the directions is undefined; the value is fixed to 0 */
    bool degenerate = false;
};

Alignment alignment(const BlochState& s, const DrivingField& f);

/** Tr(rho^2) = (1 + n^2)/2 */
double purity(const BlochState& s);

/** -Tr(rho ln rho), with 0 ln 0 = 0 */
double von_neumann_entropy(const BlochState& s);

/** U = Tr(H rho) = n.h */
double internal_energy(const BlochState& s, const DrivingField& f);

/** ln((1-n)/(1+n)); diverges to -inf for a pure state */
inline double entropy_log_ratio(double n) { return -2.0 * std::atanh(n); }

}  // namespace blochtherm
