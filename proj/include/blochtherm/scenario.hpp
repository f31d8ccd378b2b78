// scenario.hpp — run configuration, time-series and sweep generation, CSV and
// plot-script emission, and the named-invariant verification suite

#pragma once

#include "blochtherm/driven_qubit.hpp"
#include "blochtherm/first_law.hpp"
#include "blochtherm/numerics.hpp"

#include <string>
#include <vector>

namespace blochtherm {

enum class RateMode { direct, spectral };
enum class InitialKind { thermal, maximally_mixed, ground, bloch };
enum class ThermalBasis { bare, full };

/**
 * Full description of a run. All frequencies and rates are in units of
 * omega0, times in 1/omega0.
 */
struct Scenario {
    ModelParams model;
    RateMode rate_mode = RateMode::direct;
    BathRates rates{0.1, 0.05, 0.05};
    SpectralModel spectra;
    InitialKind initial_kind = InitialKind::thermal;
    double initial_beta = 1.0;
    ThermalBasis thermal_basis = ThermalBasis::bare;
    Vec3 initial_bloch = Vec3::Zero();
    double t_end = 30.0;
    double dt_output = 0.01;
    double integrator_dt = 1e-3;

    void validate() const;
    BathRates effective_rates() const;
    BlochState initial_state() const;
    InitialState floquet_initial() const;

    static Scenario from_json_text(const std::string& text);
    static Scenario from_json_file(const std::string& path);
};

/** resonant drive, direct rates, thermal start: the default demo setup */
Scenario default_scenario();

struct OutputRow {
    double t = 0.0;
    double n_x = 0.0, n_y = 0.0, n_z = 0.0;
    double norm = 0.0;
    double inversion = 0.0;
    double coherence_abs = 0.0;
    double energy = 0.0;
    FirstLawRates rates;
};

OutputRow evaluate_row(const ModelParams& m, const BathRates& r, const InitialState& init, double t);
std::vector<OutputRow> simulate_rows(const Scenario& sc);

const std::vector<std::string>& csv_columns();
std::string csv_header();
/** comma-separated, 12 significant digits, empty cells for non-finite values */
std::string to_csv(const std::vector<OutputRow>& rows);
/** gnuplot script rendering the CSV columns into an image */
std::string plot_script(const std::string& csv_path, const std::string& image_path);

enum class SweepParam { gamma_plus, gamma_zero };

struct SweepSpec {
    SweepParam param = SweepParam::gamma_plus;
    double from = 0.0;
    double to = 0.0;
    int steps = 2;
};

/** rate quantities integrated from the initial state to t_end */
struct NetVariation {
    double param_value = 0.0;
    double entropy = 0.0;       // DS
    double energy = 0.0;        // DU
    double heat_wc = 0.0;       // DQ, conventional
    double heat_hb = 0.0;       // Dq, Hamiltonian-based
    double heat_eb = 0.0;       // DQ, entropy-based
    double irr_wc = 0.0;
    double irr_hb = 0.0;
    double irr_eb = 0.0;
};

NetVariation net_variation(const ModelParams& m, const BathRates& r, const InitialState& init, double t_end,
                           double dt);
/** sweep points evaluate concurrently; rows come back in parameter order */
std::vector<NetVariation> run_sweep(const Scenario& base, const SweepSpec& spec);
std::string sweep_csv_header(SweepParam param);
std::string sweep_to_csv(const std::vector<NetVariation>& rows, SweepParam param);

std::string steady_report(const Scenario& sc);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

/**
 * Named-invariant suite: first-law closure, heat-splitting identities,
 * frame consistency, integrator equivalence, steady-state identities.
 * Configuration problems (invalid rates, stability guard) throw instead of
 * reporting, so callers can distinguish validation from invariant failures.
 */
VerifyReport run_verification(const Scenario& sc);

}  // namespace blochtherm
