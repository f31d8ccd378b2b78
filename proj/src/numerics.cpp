#include "blochtherm/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace blochtherm {

DissipativeTrajectory integrate_lindblad(const ModelParams& m, const BathRates& r, const BlochState& initial,
                                         const IntegratorConfig& cfg) {
    m.validate();
    r.validate();
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("integrate_lindblad: dt must be positive");
    if (!(cfg.t_end >= 0.0)) throw std::invalid_argument("integrate_lindblad: t_end must be nonnegative");
    const double fastest = std::max({r.Gamma1(), r.Gamma2(), m.rabi(), m.omega_laser});
    if (cfg.dt * fastest >= 0.1) {
        throw std::invalid_argument("integrate_lindblad: stability guard violated (dt too large)");
    }

    struct Channel {
        double rate;
        Matrix2c jump;
        Matrix2c weight;  // jump^dag jump
    };
    std::array<Channel, 3> channels{};
    const std::array<std::pair<int, double>, 3> spec{
        {{-1, r.gamma_minus}, {0, r.gamma_zero}, {+1, r.gamma_plus}}};
    for (std::size_t i = 0; i < 3; ++i) {
        const Matrix2c jump = floquet_pauli(m, spec[i].first);
        channels[i] = {spec[i].second, jump, jump.adjoint() * jump};
    }

    const auto rhs = [&](const Matrix2c& rho) {
        Matrix2c d = Matrix2c::Zero();
        for (const auto& c : channels) {
            if (c.rate == 0.0) continue;
            d += c.rate * (c.jump * rho * c.jump.adjoint() - 0.5 * (c.weight * rho + rho * c.weight));
        }
        return d;
    };

    const auto steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    DissipativeTrajectory out;
    out.dt = cfg.dt;
    out.states.reserve(steps + 1);
    Matrix2c rho = initial.density_matrix();
    out.states.push_back(rho);
    for (std::size_t k = 0; k < steps; ++k) {
        const Matrix2c k1 = rhs(rho);
        const Matrix2c k2 = rhs(rho + (0.5 * cfg.dt) * k1);
        const Matrix2c k3 = rhs(rho + (0.5 * cfg.dt) * k2);
        const Matrix2c k4 = rhs(rho + cfg.dt * k3);
        rho += (cfg.dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        out.states.push_back(rho);
    }
    return out;
}

double integrate_samples(std::span<const double> samples, double dt) {
    if (samples.size() < 3) throw std::invalid_argument("integrate_samples: need at least 3 samples");
    if (!(dt > 0.0)) throw std::invalid_argument("integrate_samples: dt must be positive");
    std::size_t n = samples.size();
    double tail = 0.0;
    if (n % 2 == 0) {
        tail = 0.5 * dt * (samples[n - 2] + samples[n - 1]);
        n -= 1;
    }
    double acc = samples[0] + samples[n - 1];
    for (std::size_t k = 1; k + 1 < n; ++k) {
        acc += samples[k] * (k % 2 == 1 ? 4.0 : 2.0);
    }
    return acc * dt / 3.0 + tail;
}

}  // namespace blochtherm
