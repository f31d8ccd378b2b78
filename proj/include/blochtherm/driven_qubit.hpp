// driven_qubit.hpp — periodically driven atom coupled to dephasing and photon baths:
// exact trajectory, rates, dressed-frame machinery, steady state

#pragma once

#include "blochtherm/bloch.hpp"
#include "blochtherm/first_law.hpp"

#include <array>
#include <stdexcept>

namespace blochtherm {

/** atom and laser parameters, in units of the atomic transition frequency */
struct ModelParams {
    double omega0 = 1.0;       // atomic transition frequency (sets the unit)
    double omega_laser = 1.0;  // drive frequency
    double epsilon = 0.3;      // drive amplitude

    void validate() const;

    double detuning() const { return omega0 - omega_laser; }
    double rabi() const { return std::hypot(2.0 * epsilon, detuning()); }
    /** Floquet-basis mixing angle: cos(2 theta) = detuning/rabi */
    double theta() const { return 0.5 * std::atan2(2.0 * epsilon, detuning()); }
    double cos2theta() const { return rabi() > 0.0 ? detuning() / rabi() : 1.0; }
    double sin2theta() const { return rabi() > 0.0 ? 2.0 * epsilon / rabi() : 0.0; }

    /** |h|, constant for the circular drive */
    double field_norm() const { return std::hypot(epsilon, 0.5 * omega0); }
    DrivingField field(double t) const;
    Vec3 field_rate(double t) const;
};

/** jump rates of the lowering, dephasing and raising channels in the Floquet basis */
struct BathRates {
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;
    double gamma_zero = 0.0;

    void validate() const;

    double Gamma1() const { return gamma_plus + gamma_minus; }
    double Gamma2() const { return 0.5 * Gamma1() + 2.0 * gamma_zero; }
    /**
     * Pump asymmetry (gamma_minus - gamma_plus)/(2 (gamma_minus + gamma_plus)),
     * bounded by 1/2; the Floquet-frame steady inversion is -2 times this.
     * Zero when both rates vanish.
     */
    double asymmetry() const;
};

/** initial condition with its Floquet-frame components precomputed */
class InitialState {
public:
    InitialState(const BlochState& s, const ModelParams& m);

    const BlochState& lab() const { return lab_; }
    double floquet_inversion() const { return floquet_inversion_; }
    complex floquet_coherence() const { return floquet_coherence_; }

private:
    BlochState lab_;
    double floquet_inversion_ = 0.0;
    complex floquet_coherence_;
};

// ------------------------- closed-form trajectory ---------------------------

/** Floquet-frame Bloch components (X, Y, Z) at time t */
Vec3 floquet_components(const ModelParams& m, const BathRates& r, const InitialState& init, double t);

/** (dX, dY, dZ) at the given components */
Vec3 floquet_component_rates(const ModelParams& m, const BathRates& r, const Vec3& xyz);

/** lab-frame state assembled from Floquet components */
BlochState lab_state(const ModelParams& m, const Vec3& xyz, double t);

/** lab-frame d(n)/dt by the product rule on the frame rotation */
Vec3 lab_state_rate(const ModelParams& m, const Vec3& xyz, const Vec3& xyz_rate, double t);

BlochState closed_form_state(const ModelParams& m, const BathRates& r, const InitialState& init, double t);

/** state, field, and exact derivatives at t, ready for the rate layer */
TrajectoryPoint trajectory_point(const ModelParams& m, const BathRates& r, const InitialState& init, double t);

/** U from the Floquet components: Z (w0/2 c2 + eps s2) + X (eps c2 - w0/2 s2) */
double internal_energy_model(const ModelParams& m, double x, double z);

struct SteadyState {
    double norm = 0.0;
    double population_inversion = 0.0;
    double coherence_amplitude = 0.0;  // rho_eg(t) = amplitude * e^{-i Omega t}
    double purity = 0.5;
    double entropy = 0.0;
    double internal_energy = 0.0;
    double phase_cosine = 0.0;  // cos(phi - Omega t), constant at the fixed point
};

/** fixed point of the dissipative dynamics; throws std::domain_error when Gamma1 = 0 */
SteadyState steady_state(const ModelParams& m, const BathRates& r);

// --------------------------- Floquet machinery ------------------------------

/** columns are the Floquet (dressed) eigenstates expressed in the atom basis */
Matrix2c floquet_basis(const ModelParams& m);

/** sigma_{-1,0,+1} rotated into the Floquet basis (atom-basis representation) */
Matrix2c floquet_pauli(const ModelParams& m, int q);

/** U_S(t) = P_t e^{-i Hbar t} */
Matrix2c evolution_operator(const ModelParams& m, double t);

/** interaction-picture solution, components in the Floquet basis */
Matrix2c interaction_picture_state(const ModelParams& m, const BathRates& r, const InitialState& init, double t);

/** rotate an interaction-picture state (Floquet-basis components) back to the lab frame */
BlochState lab_from_interaction(const ModelParams& m, const Matrix2c& floquet_repr, double t);

/**
 * Fourier weights of the coupling operators in the rotating Floquet frame:
 * sigma_j(t) = sum_{q,p} e^{i (q rabi + p Omega) t} s_{q,p} sigma_bar_q.
 */
class FourierCoefficients {
public:
    explicit FourierCoefficients(const ModelParams& m);

    double dephasing(int q, int p) const { return z_[idx(q)][idx(p)]; }  // sigma_z coupling
    double photon(int q, int p) const { return x_[idx(q)][idx(p)]; }     // sigma_x coupling

private:
    static std::size_t idx(int k);
    std::array<std::array<double, 3>, 3> z_{};
    std::array<std::array<double, 3>, 3> x_{};
};

inline FourierCoefficients fourier_coefficients(const ModelParams& m) { return FourierCoefficients(m); }

// ----------------------------- bath spectra ---------------------------------

/**
 * Ohmic spectral function with exponential cutoff at inverse temperature beta:
 * spectrum(w) = J(w)(N(w)+1) for w > 0, J(|w|)N(|w|) for w < 0, and the w -> 0
 * limit 1/beta, with J(w) = w e^{-w/cutoff}. The coupling enters the rates
 * squared and is kept outside the spectrum.
 */
struct OhmicBath {
    double coupling = 0.0;
    double beta = 1.0;
    double cutoff = 10.0;

    void validate() const;
    double spectrum(double omega) const;
};

struct SpectralModel {
    OhmicBath dephasing;
    OhmicBath photon;
};

/**
 * gamma_q = sum_j lambda_j^2 sum_p s_{q,p}^2 G_j(-q rabi - p Omega).
 * The dephasing bath feeds no q = 0 channel. Throws on negative spectral values.
 */
template <class Gz, class Gx>
BathRates rates_from_spectral_functions(const ModelParams& m, double lambda_z, Gz&& gz, double lambda_x,
                                        Gx&& gx) {
    m.validate();
    const FourierCoefficients s(m);
    const double wr = m.rabi();
    const double wl = m.omega_laser;
    const auto sample = [](auto&& g, double w) {
        const double v = g(w);
        if (v < 0.0) throw std::invalid_argument("rates_from_spectral_functions: negative spectral value");
        return v;
    };
    std::array<double, 3> gamma{};
    for (int q = -1; q <= 1; ++q) {
        double acc = 0.0;
        for (int p = -1; p <= 1; ++p) {
            const double w = -q * wr - p * wl;
            const double cz = s.dephasing(q, p);
            const double cx = s.photon(q, p);
            if (q != 0 && cz != 0.0) acc += lambda_z * lambda_z * cz * cz * sample(gz, w);
            if (cx != 0.0) acc += lambda_x * lambda_x * cx * cx * sample(gx, w);
        }
        gamma[static_cast<std::size_t>(q + 1)] = acc;
    }
    BathRates rates{gamma[2], gamma[0], gamma[1]};
    rates.validate();
    return rates;
}

/**
 * Same rates from the closed-form Gamma1/Gamma2/kappa expressions in terms of
 * g+-(w) = G(w) +- G(-w); second algebraic route kept for verification.
 */
template <class Gz, class Gx>
BathRates rates_from_spectral_functions_explicit(const ModelParams& m, double lambda_z, Gz&& gz,
                                                 double lambda_x, Gx&& gx) {
    m.validate();
    const double wr = m.rabi();
    if (wr <= 0.0) {
        throw std::domain_error("rates_from_spectral_functions_explicit: vanishing quasi-energy splitting");
    }
    const double wl = m.omega_laser;
    const double w0 = m.omega0;
    const double eps = m.epsilon;
    const auto g_plus = [](auto&& g, double w) { return g(w) + g(-w); };
    const auto g_minus = [](auto&& g, double w) { return g(w) - g(-w); };

    const double w_up = wl + wr;
    const double w_dn = wl - wr;
    const double c_up = w0 - w_dn;  // = 2 rabi (cos2theta + 1)/2
    const double c_dn = w0 - w_up;  // = 2 rabi (cos2theta - 1)/2
    const double az = lambda_z * lambda_z;
    const double ax = lambda_x * lambda_x;
    const double denom = 4.0 * wr * wr;
    const double eps16 = 16.0 * eps * eps;  // (4 eps)^2

    const double g1 = (az * eps16 * g_plus(gz, wr) + ax * c_up * c_up * g_plus(gx, w_up) +
                       ax * c_dn * c_dn * g_plus(gx, w_dn)) /
                      denom;
    const double g2 = (ax * c_up * c_up * g_plus(gx, w_up) + ax * c_dn * c_dn * g_plus(gx, w_dn) +
                       eps16 * (ax * g_plus(gx, wl) + az * g_plus(gz, wr))) /
                      (2.0 * denom);
    double kappa = 0.0;
    if (g1 > 0.0) {
        kappa = (ax * c_up * c_up * g_minus(gx, w_up) - ax * c_dn * c_dn * g_minus(gx, w_dn) +
                 az * eps16 * g_minus(gz, wr)) /
                (2.0 * denom * g1);
    }
    BathRates rates;
    rates.gamma_plus = 0.5 * g1 * (1.0 - 2.0 * kappa);
    rates.gamma_minus = 0.5 * g1 * (1.0 + 2.0 * kappa);
    rates.gamma_zero = 0.5 * (g2 - 0.5 * g1);
    rates.validate();
    return rates;
}

BathRates rates_from_spectra(const ModelParams& m, const SpectralModel& s);
BathRates rates_from_spectra_explicit(const ModelParams& m, const SpectralModel& s);

// ------------------------- initial-state builders ---------------------------

/** thermal with respect to the bare splitting omega0 sigma_z / 2 */
BlochState thermal_state_bare(double beta, const ModelParams& m);
/** thermal with respect to the full field at t = 0 (drive term included) */
BlochState thermal_state_full(double beta, const ModelParams& m);
BlochState maximally_mixed_state();
BlochState ground_state();

}  // namespace blochtherm
