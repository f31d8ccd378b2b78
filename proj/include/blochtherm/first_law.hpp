// first_law.hpp — heat/work splittings, entropy rate, nonequilibrium temperature,
// and irreversible entropy for an instant of a two-level trajectory

#pragma once

#include "blochtherm/bloch.hpp"

namespace blochtherm {

/**
 * One instant of a trajectory: state, field, and their exact time derivatives.
 * Derivatives are inputs here; analytic sources supply them exactly, generic
 * trajectories may use central differences.
 */
struct TrajectoryPoint {
    double t = 0.0;
    BlochState state;
    DrivingField field;
    Vec3 state_rate = Vec3::Zero();  // d n / dt
    Vec3 field_rate = Vec3::Zero();  // d h / dt
};

struct WorkHeat {
    double work = 0.0;
    double heat = 0.0;
};

/** dU = dh.n + h.dn */
double energy_rate(const TrajectoryPoint& p);

/** d|n|/dt; the one-sided limit |dn| is used when the norm vanishes */
double norm_rate(const TrajectoryPoint& p);

/** h_hat . d(n_hat)/dt, with n_hat := dn/|dn| at vanishing norm */
double direction_rate_along_field(const TrajectoryPoint& p);

/** work from the field variation, heat from the state variation */
WorkHeat conventional_rates(const TrajectoryPoint& p);

/**
 * Work from eigen-energy changes, heat from eigen-population changes.
 * Throws std::domain_error for a degenerate field (|h| = 0).
 */
WorkHeat hamiltonian_based_rates(const TrajectoryPoint& p);

/** heat tied to the change of the state eigenvalues (Bloch norm); the rest is work */
WorkHeat entropy_based_rates(const TrajectoryPoint& p);

/** dS = (dn/2) ln((1-n)/(1+n)); non-finite at a pure state */
double entropy_rate(const TrajectoryPoint& p);

/**
 * Instantaneous inverse temperature (cos alpha / 2h) ln((1-n)/(1+n)).
 * Equals -cov(H, ln rho)/(Delta H)^2. Zero for degenerate geometry,
 * non-finite at a pure state.
 */
double inverse_temperature(const TrajectoryPoint& p);

struct IrreversibleEntropyRates {
    double conventional = 0.0;
    double hamiltonian_based = 0.0;
    double entropy_based = 0.0;
};

/** dSi = dS - beta dQ with the approach-matching heat */
IrreversibleEntropyRates irreversible_entropy_rates(const TrajectoryPoint& p);

/** (dn/2) sin^2(alpha) ln((1-n)/(1+n)); closed form of the entropy-based dSi */
double entropy_based_irreversible_closed_form(const TrajectoryPoint& p);

struct FirstLawRates {
    double energy = 0.0;          // dU
    WorkHeat conventional;        // field/state variation split
    WorkHeat hamiltonian_based;   // eigen-energy/population split
    WorkHeat entropy_based;       // eigenvalue split
    double entropy = 0.0;         // dS
    double beta = 0.0;            // instantaneous inverse temperature
    double irr_conventional = 0.0;
    double irr_hamiltonian_based = 0.0;
    double irr_entropy_based = 0.0;
};

/** all rate quantities at one instant */
FirstLawRates evaluate_rates(const TrajectoryPoint& p);

}  // namespace blochtherm
