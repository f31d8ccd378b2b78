#include "blochtherm/first_law.hpp"

#include <algorithm>
#include <stdexcept>

namespace blochtherm {

double energy_rate(const TrajectoryPoint& p) {
    return p.field_rate.dot(p.state.vec()) + p.field.vec().dot(p.state_rate);
}

double norm_rate(const TrajectoryPoint& p) {
    const double n = p.state.norm();
    if (n < degenerate_norm) return p.state_rate.norm();
    return p.state.vec().dot(p.state_rate) / n;
}

double direction_rate_along_field(const TrajectoryPoint& p) {
    const double n = p.state.norm();
    const double h = p.field.norm();
    if (n < degenerate_norm || h < degenerate_norm) return 0.0;
    const Vec3 nhat = p.state.vec() / n;
    const Vec3 hhat = p.field.vec() / h;
    return hhat.dot((p.state_rate - norm_rate(p) * nhat) / n);
}

WorkHeat conventional_rates(const TrajectoryPoint& p) {
    return {p.field_rate.dot(p.state.vec()), p.field.vec().dot(p.state_rate)};
}

WorkHeat hamiltonian_based_rates(const TrajectoryPoint& p) {
    const double h = p.field.norm();
    if (h < degenerate_norm) {
        throw std::domain_error("hamiltonian_based_rates: degenerate field (|h| = 0)");
    }
    const Vec3 hhat = p.field.vec() / h;
    const double h_rate = hhat.dot(p.field_rate);
    const Vec3 hhat_rate = (p.field_rate - h_rate * hhat) / h;
    const double work = h_rate * p.state.vec().dot(hhat);
    const double heat = h * (p.state_rate.dot(hhat) + p.state.vec().dot(hhat_rate));
    return {work, heat};
}

WorkHeat entropy_based_rates(const TrajectoryPoint& p) {
    const double n = p.state.norm();
    const double h = p.field.norm();
    double heat = 0.0;
    if (n >= degenerate_norm) {
        heat = norm_rate(p) * h * alignment(p.state, p.field).cos_alpha;
    } else if (p.state_rate.norm() > 0.0) {
        // limit form: n_hat aligns with the direction of escape
        heat = p.field.vec().dot(p.state_rate);
    }
    return {energy_rate(p) - heat, heat};
}

double entropy_rate(const TrajectoryPoint& p) {
    return 0.5 * norm_rate(p) * entropy_log_ratio(p.state.norm());
}

double inverse_temperature(const TrajectoryPoint& p) {
    const Alignment a = alignment(p.state, p.field);
    if (a.degenerate) return 0.0;
    return 0.5 * a.cos_alpha / p.field.norm() * entropy_log_ratio(p.state.norm());
}

IrreversibleEntropyRates irreversible_entropy_rates(const TrajectoryPoint& p) {
    const double dS = entropy_rate(p);
    const double beta = inverse_temperature(p);
    return {dS - beta * conventional_rates(p).heat,
            dS - beta * hamiltonian_based_rates(p).heat,
            dS - beta * entropy_based_rates(p).heat};
}

double entropy_based_irreversible_closed_form(const TrajectoryPoint& p) {
    const Alignment a = alignment(p.state, p.field);
    const double sin_sq = std::max(0.0, 1.0 - a.cos_alpha * a.cos_alpha);
    return 0.5 * norm_rate(p) * sin_sq * entropy_log_ratio(p.state.norm());
}

FirstLawRates evaluate_rates(const TrajectoryPoint& p) {
    FirstLawRates out;
    out.energy = energy_rate(p);
    out.conventional = conventional_rates(p);
    out.hamiltonian_based = hamiltonian_based_rates(p);
    out.entropy_based = entropy_based_rates(p);
    out.entropy = entropy_rate(p);
    out.beta = inverse_temperature(p);
    out.irr_conventional = out.entropy - out.beta * out.conventional.heat;
    out.irr_hamiltonian_based = out.entropy - out.beta * out.hamiltonian_based.heat;
    out.irr_entropy_based = out.entropy - out.beta * out.entropy_based.heat;
    return out;
}

}  // namespace blochtherm
