#include "blochtherm/driven_qubit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace blochtherm {

void ModelParams::validate() const {
    if (!(omega0 > 0.0)) throw std::invalid_argument("ModelParams: omega0 must be positive");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("ModelParams: epsilon must be nonnegative");
    if (!(omega_laser >= 0.0)) throw std::invalid_argument("ModelParams: laser frequency must be nonnegative");
}

DrivingField ModelParams::field(double t) const {
    const double wt = omega_laser * t;
    return DrivingField(epsilon * std::cos(wt), epsilon * std::sin(wt), 0.5 * omega0);
}

Vec3 ModelParams::field_rate(double t) const {
    const double wt = omega_laser * t;
    return {-epsilon * omega_laser * std::sin(wt), epsilon * omega_laser * std::cos(wt), 0.0};
}

void BathRates::validate() const {
    if (!(gamma_plus >= 0.0 && gamma_minus >= 0.0 && gamma_zero >= 0.0)) {
        throw std::invalid_argument("BathRates: rates must be nonnegative");
    }
}

double BathRates::asymmetry() const {
    const double total = gamma_plus + gamma_minus;
    if (total <= 0.0) return 0.0;
    return 0.5 * (gamma_minus - gamma_plus) / total;
}

InitialState::InitialState(const BlochState& s, const ModelParams& m) : lab_(s) {
    const double c2 = m.cos2theta();
    const double s2 = m.sin2theta();
    const double delta0 = s.population_inversion();
    const complex rho_eg = s.coherence();
    floquet_inversion_ = delta0 * c2 + 2.0 * rho_eg.real() * s2;
    floquet_coherence_ = complex(-0.5 * delta0 * s2 + rho_eg.real() * c2, rho_eg.imag());
}

Vec3 floquet_components(const ModelParams& m, const BathRates& r, const InitialState& init, double t) {
    const complex rotated = std::polar(1.0, -m.rabi() * t) * init.floquet_coherence();
    const double transverse_decay = std::exp(-r.Gamma2() * t);
    const double kappa2 = 2.0 * r.asymmetry();
    const double x = 2.0 * transverse_decay * rotated.real();
    const double y = -2.0 * transverse_decay * rotated.imag();
    const double z = std::exp(-r.Gamma1() * t) * (init.floquet_inversion() + kappa2) - kappa2;
    return {x, y, z};
}

Vec3 floquet_component_rates(const ModelParams& m, const BathRates& r, const Vec3& xyz) {
    const double wr = m.rabi();
    return {-r.Gamma2() * xyz.x() - wr * xyz.y(), -r.Gamma2() * xyz.y() + wr * xyz.x(),
            -r.Gamma1() * (xyz.z() + 2.0 * r.asymmetry())};
}

BlochState lab_state(const ModelParams& m, const Vec3& xyz, double t) {
    const double c2 = m.cos2theta();
    const double s2 = m.sin2theta();
    const double wt = m.omega_laser * t;
    const double cw = std::cos(wt);
    const double sw = std::sin(wt);
    const double planar = xyz.x() * c2 + xyz.z() * s2;
    return BlochState(planar * cw - xyz.y() * sw, planar * sw + xyz.y() * cw, xyz.z() * c2 - xyz.x() * s2);
}

Vec3 lab_state_rate(const ModelParams& m, const Vec3& xyz, const Vec3& xyz_rate, double t) {
    const double c2 = m.cos2theta();
    const double s2 = m.sin2theta();
    const double wl = m.omega_laser;
    const double wt = wl * t;
    const double cw = std::cos(wt);
    const double sw = std::sin(wt);
    const double planar = xyz.x() * c2 + xyz.z() * s2;
    const double planar_rate = xyz_rate.x() * c2 + xyz_rate.z() * s2;
    return {planar_rate * cw - planar * wl * sw - xyz_rate.y() * sw - xyz.y() * wl * cw,
            planar_rate * sw + planar * wl * cw + xyz_rate.y() * cw - xyz.y() * wl * sw,
            xyz_rate.z() * c2 - xyz_rate.x() * s2};
}

BlochState closed_form_state(const ModelParams& m, const BathRates& r, const InitialState& init, double t) {
    return lab_state(m, floquet_components(m, r, init, t), t);
}

TrajectoryPoint trajectory_point(const ModelParams& m, const BathRates& r, const InitialState& init,
                                 double t) {
    const Vec3 xyz = floquet_components(m, r, init, t);
    const Vec3 xyz_rate = floquet_component_rates(m, r, xyz);
    TrajectoryPoint p;
    p.t = t;
    p.state = lab_state(m, xyz, t);
    p.field = m.field(t);
    p.state_rate = lab_state_rate(m, xyz, xyz_rate, t);
    p.field_rate = m.field_rate(t);
    return p;
}

double internal_energy_model(const ModelParams& m, double x, double z) {
    const double c2 = m.cos2theta();
    const double s2 = m.sin2theta();
    return z * (0.5 * m.omega0 * c2 + m.epsilon * s2) + x * (m.epsilon * c2 - 0.5 * m.omega0 * s2);
}

SteadyState steady_state(const ModelParams& m, const BathRates& r) {
    m.validate();
    r.validate();
    if (!(r.Gamma1() > 0.0)) {
        throw std::domain_error("steady_state: no relaxation (Gamma1 = 0), fixed point undefined");
    }
    const double kappa = r.asymmetry();
    const double c2 = m.cos2theta();
    const double s2 = m.sin2theta();
    SteadyState out;
    out.norm = 2.0 * std::abs(kappa);
    out.population_inversion = -2.0 * kappa * c2;
    out.coherence_amplitude = -kappa * s2;
    out.purity = 2.0 * kappa * kappa + 0.5;
    const double a = 2.0 * std::abs(kappa);
    out.entropy = (a >= 1.0) ? 0.0
                             : std::log(2.0 / std::sqrt(1.0 - 4.0 * kappa * kappa)) +
                                   std::abs(kappa) * std::log((1.0 - a) / (1.0 + a));
    out.internal_energy = -kappa * (2.0 * m.epsilon * s2 + m.omega0 * c2);
    const double lock = kappa * s2;
    out.phase_cosine = lock > 0.0 ? -1.0 : (lock < 0.0 ? 1.0 : 0.0);
    return out;
}

Matrix2c floquet_basis(const ModelParams& m) {
    const double th = m.theta();
    Matrix2c b;
    b << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    return b;
}

Matrix2c floquet_pauli(const ModelParams& m, int q) {
    Matrix2c sigma;
    switch (q) {
        case -1: sigma = pauli_minus(); break;
        case 0: sigma = pauli_z(); break;
        case +1: sigma = pauli_plus(); break;
        default: throw std::invalid_argument("floquet_pauli: q must be -1, 0 or +1");
    }
    const Matrix2c b = floquet_basis(m);
    return b * sigma * b.adjoint();
}

Matrix2c evolution_operator(const ModelParams& m, double t) {
    const complex drive_phase = std::polar(1.0, -0.5 * m.omega_laser * t);
    Matrix2c periodic;
    periodic << drive_phase, 0.0, 0.0, std::conj(drive_phase);
    const complex rabi_phase = std::polar(1.0, -0.5 * m.rabi() * t);
    Matrix2c avg;
    avg << rabi_phase, 0.0, 0.0, std::conj(rabi_phase);
    const Matrix2c b = floquet_basis(m);
    return periodic * (b * avg * b.adjoint());
}

Matrix2c interaction_picture_state(const ModelParams& m, const BathRates& r, const InitialState& init,
                                   double t) {
    const double g1 = r.Gamma1();
    const double pop0 = 0.5 * (1.0 + init.floquet_inversion());
    double pop = pop0;
    if (g1 > 0.0) {
        const double fixed = r.gamma_plus / g1;
        pop = fixed + (pop0 - fixed) * std::exp(-g1 * t);
    }
    const complex coh = init.floquet_coherence() * std::exp(-r.Gamma2() * t);
    Matrix2c rho;
    rho << complex(pop, 0.0), coh, std::conj(coh), complex(1.0 - pop, 0.0);
    return rho;
}

BlochState lab_from_interaction(const ModelParams& m, const Matrix2c& floquet_repr, double t) {
    const Matrix2c b = floquet_basis(m);
    const Matrix2c atom_repr = b * floquet_repr * b.adjoint();
    const Matrix2c u = evolution_operator(m, t);
    return BlochState::from_density_matrix(u * atom_repr * u.adjoint());
}

std::size_t FourierCoefficients::idx(int k) {
    if (k < -1 || k > 1) throw std::invalid_argument("FourierCoefficients: index must be -1, 0 or +1");
    return static_cast<std::size_t>(k + 1);
}

FourierCoefficients::FourierCoefficients(const ModelParams& m) {
    const double c2 = m.cos2theta();
    const double s2 = m.sin2theta();
    z_[idx(0)][idx(0)] = c2;
    z_[idx(+1)][idx(0)] = -s2;
    z_[idx(-1)][idx(0)] = -s2;
    x_[idx(0)][idx(+1)] = 0.5 * s2;
    x_[idx(0)][idx(-1)] = 0.5 * s2;
    x_[idx(+1)][idx(+1)] = 0.5 * (c2 + 1.0);
    x_[idx(-1)][idx(-1)] = 0.5 * (c2 + 1.0);
    x_[idx(+1)][idx(-1)] = 0.5 * (c2 - 1.0);
    x_[idx(-1)][idx(+1)] = 0.5 * (c2 - 1.0);
}

void OhmicBath::validate() const {
    if (!(coupling >= 0.0)) throw std::invalid_argument("OhmicBath: coupling must be nonnegative");
    if (!(beta > 0.0)) throw std::invalid_argument("OhmicBath: beta must be positive");
    if (!(cutoff > 0.0)) throw std::invalid_argument("OhmicBath: cutoff must be positive");
}

double OhmicBath::spectrum(double omega) const {
    if (omega == 0.0) return 1.0 / beta;
    const double w = std::abs(omega);
    const double density = w * std::exp(-w / cutoff);
    const double occupation = 1.0 / std::expm1(beta * w);
    return omega > 0.0 ? density * (occupation + 1.0) : density * occupation;
}

BathRates rates_from_spectra(const ModelParams& m, const SpectralModel& s) {
    s.dephasing.validate();
    s.photon.validate();
    return rates_from_spectral_functions(
        m, s.dephasing.coupling, [&](double w) { return s.dephasing.spectrum(w); }, s.photon.coupling,
        [&](double w) { return s.photon.spectrum(w); });
}

BathRates rates_from_spectra_explicit(const ModelParams& m, const SpectralModel& s) {
    s.dephasing.validate();
    s.photon.validate();
    return rates_from_spectral_functions_explicit(
        m, s.dephasing.coupling, [&](double w) { return s.dephasing.spectrum(w); }, s.photon.coupling,
        [&](double w) { return s.photon.spectrum(w); });
}

BlochState thermal_state_bare(double beta, const ModelParams& m) {
    m.validate();
    return BlochState(0.0, 0.0, -std::tanh(0.5 * beta * m.omega0));
}

BlochState thermal_state_full(double beta, const ModelParams& m) {
    m.validate();
    const DrivingField h0 = m.field(0.0);
    const Vec3 direction = h0.vec() / h0.norm();
    return BlochState(Vec3(-std::tanh(beta * h0.norm()) * direction));
}

BlochState maximally_mixed_state() { return BlochState(); }

BlochState ground_state() { return BlochState(0.0, 0.0, -1.0); }

}  // namespace blochtherm
