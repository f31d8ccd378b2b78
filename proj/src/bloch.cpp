#include "blochtherm/bloch.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace blochtherm {

BlochState::BlochState(const Vec3& n) : n_(n) {
    const double len = n.norm();
    if (!(len <= 1.0 + norm_slack)) {
        throw std::invalid_argument("BlochState: unphysical norm |n| = " + std::to_string(len));
    }
}

BlochState BlochState::from_density_matrix(const Matrix2c& rho) {
    const double trace = (rho(0, 0) + rho(1, 1)).real();
    if (std::abs(trace - 1.0) > 1e-9) {
        throw std::invalid_argument("BlochState: density matrix trace differs from 1");
    }
    Vec3 n;
    n.x() = 2.0 * rho(0, 1).real();
    n.y() = -2.0 * rho(0, 1).imag();
    n.z() = (rho(0, 0) - rho(1, 1)).real();
    return BlochState(n);
}

double BlochState::coherence_phase() const {
    const complex rho_eg = coherence();
    if (std::abs(rho_eg) < degenerate_norm) return 0.0;
    return -std::arg(rho_eg);
}

double BlochState::mixing_angle() const {
    const double transverse = 2.0 * std::abs(coherence());
    if (transverse < degenerate_norm && std::abs(population_inversion()) < degenerate_norm) return 0.0;
    return 0.5 * std::atan2(transverse, population_inversion());
}

Matrix2c BlochState::density_matrix() const {
    Matrix2c rho;
    rho << complex(0.5 * (1.0 + n_.z()), 0.0), complex(0.5 * n_.x(), -0.5 * n_.y()),
        complex(0.5 * n_.x(), 0.5 * n_.y()), complex(0.5 * (1.0 - n_.z()), 0.0);
    return rho;
}

double DrivingField::mixing_angle() const {
    const double transverse = std::hypot(h_.x(), h_.y());
    if (transverse < degenerate_norm && std::abs(h_.z()) < degenerate_norm) return 0.0;
    return 0.5 * std::atan2(transverse, h_.z());
}

double DrivingField::azimuth() const {
    if (std::hypot(h_.x(), h_.y()) < degenerate_norm) return 0.0;
    return std::atan2(h_.y(), h_.x());
}

Matrix2c DrivingField::matrix() const {
    Matrix2c m;
    m << complex(h_.z(), 0.0), complex(h_.x(), -h_.y()), complex(h_.x(), h_.y()), complex(-h_.z(), 0.0);
    return m;
}

StateEigensystem state_eigensystem(const BlochState& s) {
    StateEigensystem out;
    out.value_plus = s.eigenvalue_plus();
    out.value_minus = s.eigenvalue_minus();
    out.gauge_arbitrary = std::abs(s.coherence()) < degenerate_norm;

    const double half = s.mixing_angle();
    const double phase = s.coherence_phase();
    const complex up = std::polar(1.0, phase);  // e^{+i phi} on the |g> component

    out.vector_plus << complex(std::cos(half), 0.0), up * std::sin(half);
    out.vector_minus << -std::conj(up) * std::sin(half), complex(std::cos(half), 0.0);
    return out;
}

FieldEigensystem field_eigensystem(const DrivingField& f) {
    FieldEigensystem out;
    out.energy_plus = f.energy_plus();
    out.energy_minus = f.energy_minus();
    out.gauge_arbitrary = std::hypot(f.vec().x(), f.vec().y()) < degenerate_norm;

    const double half = f.mixing_angle();
    const double phase = f.azimuth();
    const complex up = std::polar(1.0, phase);

    out.vector_plus << complex(std::cos(half), 0.0), up * std::sin(half);
    out.vector_minus << -std::conj(up) * std::sin(half), complex(std::cos(half), 0.0);
    return out;
}

Alignment alignment(const BlochState& s, const DrivingField& f) {
    const double n = s.norm();
    const double h = f.norm();
    if (n < degenerate_norm || h < degenerate_norm) return {0.0, true};
    const double c = s.vec().dot(f.vec()) / (n * h);
    return {std::clamp(c, -1.0, 1.0), false};
}

double purity(const BlochState& s) { return 0.5 * (1.0 + s.vec().squaredNorm()); }

double von_neumann_entropy(const BlochState& s) {
    const auto xlnx = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
    return -xlnx(s.eigenvalue_plus()) - xlnx(s.eigenvalue_minus());
}

double internal_energy(const BlochState& s, const DrivingField& f) { return s.vec().dot(f.vec()); }

}  // namespace blochtherm
