// numerics.hpp — fixed-step propagation of the dissipative dynamics, finite
// differences, and quadrature; independent checks for the closed forms

#pragma once

#include "blochtherm/driven_qubit.hpp"

#include <span>
#include <vector>

namespace blochtherm {

struct IntegratorConfig {
    double dt = 1e-3;     // step, in 1/omega0
    double t_end = 30.0;  // horizon
};

/** interaction-picture states sampled every step (atom-basis representation) */
struct DissipativeTrajectory {
    double dt = 0.0;
    std::vector<Matrix2c> states;

    double time(std::size_t k) const { return dt * static_cast<double>(k); }
};

/**
 * Classical 4th-order fixed-step integration of
 * d rho/dt = sum_q gamma_q (L_q rho L_q^dag - {L_q^dag L_q, rho}/2)
 * with the Floquet-basis Pauli operators as jumps. Enforces the stability
 * guard dt * max(Gamma1, Gamma2, rabi, Omega) < 0.1.
 */
DissipativeTrajectory integrate_lindblad(const ModelParams& m, const BathRates& r, const BlochState& initial,
                                         const IntegratorConfig& cfg);

template <class F>
double central_difference(F&& f, double t, double h) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

/**
 * Composite Simpson rule on a uniform grid; a trapezoid closes the final
 * interval when the sample count is even. Needs at least 3 samples.
 */
double integrate_samples(std::span<const double> samples, double dt);

}  // namespace blochtherm
