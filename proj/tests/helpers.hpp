// helpers.hpp — shared fixtures and random generators for the test suites

#pragma once

#include "blochtherm/driven_qubit.hpp"
#include "blochtherm/first_law.hpp"

#include <random>

namespace blochtherm::testing {

// resonant drive with the demo decay rates used across the suites
inline ModelParams baseline_params() { return {1.0, 1.0, 0.3}; }
inline BathRates baseline_rates() { return {0.1, 0.05, 0.05}; }
inline BlochState baseline_initial() { return thermal_state_bare(1.0, baseline_params()); }

inline Vec3 random_direction(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec3 v;
    do {
        v = Vec3(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-6);
    return v.normalized();
}

inline BlochState random_state(std::mt19937& rng, double max_norm = 0.98, double min_norm = 0.0) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double r = min_norm + (max_norm - min_norm) * std::cbrt(uni(rng));
    return BlochState(Vec3(r * random_direction(rng)));
}

inline DrivingField random_field(std::mt19937& rng, double min_norm = 0.1, double max_norm = 2.0) {
    std::uniform_real_distribution<double> uni(min_norm, max_norm);
    return DrivingField(Vec3(uni(rng) * random_direction(rng)));
}

inline Vec3 random_rate(std::mt19937& rng, double scale = 1.0) {
    std::normal_distribution<double> gauss(0.0, scale);
    return {gauss(rng), gauss(rng), gauss(rng)};
}

inline TrajectoryPoint random_point(std::mt19937& rng, double max_norm = 0.98) {
    TrajectoryPoint p;
    p.state = random_state(rng, max_norm);
    p.field = random_field(rng);
    p.state_rate = random_rate(rng);
    p.field_rate = random_rate(rng);
    return p;
}

inline ModelParams random_model(std::mt19937& rng) {
    std::uniform_real_distribution<double> laser(0.5, 1.5);
    std::uniform_real_distribution<double> amp(0.05, 0.5);
    return {1.0, laser(rng), amp(rng)};
}

inline BathRates random_bath_rates(std::mt19937& rng, double max_rate = 0.15) {
    std::uniform_real_distribution<double> uni(0.0, max_rate);
    return {uni(rng), uni(rng), uni(rng)};
}

}  // namespace blochtherm::testing
