#include "blochtherm/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <initializer_list>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace blochtherm {

using nlohmann::json;

// ------------------------------ configuration -------------------------------

void Scenario::validate() const {
    model.validate();
    if (rate_mode == RateMode::direct) {
        rates.validate();
    } else {
        spectra.dephasing.validate();
        spectra.photon.validate();
    }
    if (initial_kind == InitialKind::thermal && !(initial_beta >= 0.0)) {
        throw std::invalid_argument("initial.beta must be nonnegative");
    }
    if (initial_kind == InitialKind::bloch && !(initial_bloch.norm() <= 1.0 + norm_slack)) {
        throw std::invalid_argument("initial.n must lie inside the Bloch ball");
    }
    if (!(t_end > 0.0)) throw std::invalid_argument("grid.t_end must be positive");
    if (!(dt_output > 0.0) || dt_output > t_end) {
        throw std::invalid_argument("grid.dt_output must be positive and at most t_end");
    }
    if (!(integrator_dt > 0.0)) throw std::invalid_argument("integrator.dt must be positive");
}

BathRates Scenario::effective_rates() const {
    if (rate_mode == RateMode::direct) return rates;
    return rates_from_spectra(model, spectra);
}

BlochState Scenario::initial_state() const {
    switch (initial_kind) {
        case InitialKind::thermal:
            return thermal_basis == ThermalBasis::bare ? thermal_state_bare(initial_beta, model)
                                                       : thermal_state_full(initial_beta, model);
        case InitialKind::maximally_mixed: return maximally_mixed_state();
        case InitialKind::ground: return ground_state();
        case InitialKind::bloch: return BlochState(initial_bloch);
    }
    throw std::logic_error("initial_state: unreachable");
}

InitialState Scenario::floquet_initial() const { return InitialState(initial_state(), model); }

Scenario default_scenario() { return Scenario{}; }

namespace {

void expect_keys(const json& node, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!node.is_object()) throw std::invalid_argument("config: '" + where + "' must be an object");
    for (const auto& [key, value] : node.items()) {
        (void)value;
        bool known = false;
        for (const char* k : allowed) {
            if (key == k) {
                known = true;
                break;
            }
        }
        if (!known) throw std::invalid_argument("config: unknown key '" + where + "." + key + "'");
    }
}

double get_number(const json& node, const char* key, double fallback, const std::string& where) {
    if (!node.contains(key)) return fallback;
    const json& v = node.at(key);
    if (!v.is_number()) throw std::invalid_argument("config: '" + where + "." + key + "' must be a number");
    return v.get<double>();
}

std::string get_string(const json& node, const char* key, const std::string& fallback,
                       const std::string& where) {
    if (!node.contains(key)) return fallback;
    const json& v = node.at(key);
    if (!v.is_string()) throw std::invalid_argument("config: '" + where + "." + key + "' must be a string");
    return v.get<std::string>();
}

OhmicBath parse_bath(const json& node, const std::string& where) {
    expect_keys(node, {"coupling", "beta", "cutoff"}, where);
    OhmicBath bath;
    bath.coupling = get_number(node, "coupling", bath.coupling, where);
    bath.beta = get_number(node, "beta", bath.beta, where);
    bath.cutoff = get_number(node, "cutoff", bath.cutoff, where);
    return bath;
}

Scenario parse_scenario(const json& root) {
    if (!root.is_object()) throw std::invalid_argument("config: top level must be a JSON object");
    expect_keys(root, {"model", "rates", "initial", "grid", "integrator"}, "config");
    Scenario sc = default_scenario();

    if (root.contains("model")) {
        const json& m = root.at("model");
        expect_keys(m, {"omega0", "Omega", "epsilon"}, "model");
        sc.model.omega0 = get_number(m, "omega0", sc.model.omega0, "model");
        sc.model.omega_laser = get_number(m, "Omega", sc.model.omega_laser, "model");
        sc.model.epsilon = get_number(m, "epsilon", sc.model.epsilon, "model");
    }

    if (root.contains("rates")) {
        const json& r = root.at("rates");
        const std::string mode = get_string(r, "mode", "direct", "rates");
        if (mode == "direct") {
            expect_keys(r, {"mode", "gamma_plus", "gamma_minus", "gamma_zero"}, "rates");
            sc.rate_mode = RateMode::direct;
            sc.rates.gamma_plus = get_number(r, "gamma_plus", sc.rates.gamma_plus, "rates");
            sc.rates.gamma_minus = get_number(r, "gamma_minus", sc.rates.gamma_minus, "rates");
            sc.rates.gamma_zero = get_number(r, "gamma_zero", sc.rates.gamma_zero, "rates");
        } else if (mode == "spectral") {
            expect_keys(r, {"mode", "dephasing", "photon"}, "rates");
            sc.rate_mode = RateMode::spectral;
            if (r.contains("dephasing")) sc.spectra.dephasing = parse_bath(r.at("dephasing"), "rates.dephasing");
            if (r.contains("photon")) sc.spectra.photon = parse_bath(r.at("photon"), "rates.photon");
        } else {
            throw std::invalid_argument("config: rates.mode must be 'direct' or 'spectral'");
        }
    }

    if (root.contains("initial")) {
        const json& ini = root.at("initial");
        expect_keys(ini, {"type", "beta", "thermal_basis", "n"}, "initial");
        const std::string kind = get_string(ini, "type", "thermal", "initial");
        if (kind == "thermal") {
            sc.initial_kind = InitialKind::thermal;
            sc.initial_beta = get_number(ini, "beta", sc.initial_beta, "initial");
            const std::string basis = get_string(ini, "thermal_basis", "bare", "initial");
            if (basis == "bare") {
                sc.thermal_basis = ThermalBasis::bare;
            } else if (basis == "full") {
                sc.thermal_basis = ThermalBasis::full;
            } else {
                throw std::invalid_argument("config: initial.thermal_basis must be 'bare' or 'full'");
            }
        } else if (kind == "maximally_mixed") {
            sc.initial_kind = InitialKind::maximally_mixed;
        } else if (kind == "ground") {
            sc.initial_kind = InitialKind::ground;
        } else if (kind == "bloch") {
            sc.initial_kind = InitialKind::bloch;
            if (!ini.contains("n") || !ini.at("n").is_array() || ini.at("n").size() != 3) {
                throw std::invalid_argument("config: initial.n must be an array of 3 numbers");
            }
            for (int k = 0; k < 3; ++k) {
                const json& c = ini.at("n").at(static_cast<std::size_t>(k));
                if (!c.is_number()) throw std::invalid_argument("config: initial.n must be numeric");
                sc.initial_bloch[k] = c.get<double>();
            }
        } else {
            throw std::invalid_argument("config: unknown initial.type '" + kind + "'");
        }
    }

    if (root.contains("grid")) {
        const json& g = root.at("grid");
        expect_keys(g, {"t_end", "dt_output"}, "grid");
        sc.t_end = get_number(g, "t_end", sc.t_end, "grid");
        sc.dt_output = get_number(g, "dt_output", sc.dt_output, "grid");
    }

    if (root.contains("integrator")) {
        const json& g = root.at("integrator");
        expect_keys(g, {"dt"}, "integrator");
        sc.integrator_dt = get_number(g, "dt", sc.integrator_dt, "integrator");
    }

    sc.validate();
    return sc;
}

}  // namespace

Scenario Scenario::from_json_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    return parse_scenario(root);
}

Scenario Scenario::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

// ------------------------------- time series --------------------------------

OutputRow evaluate_row(const ModelParams& m, const BathRates& r, const InitialState& init, double t) {
    const TrajectoryPoint p = trajectory_point(m, r, init, t);
    OutputRow row;
    row.t = t;
    row.n_x = p.state.vec().x();
    row.n_y = p.state.vec().y();
    row.n_z = p.state.vec().z();
    row.norm = p.state.norm();
    row.inversion = p.state.population_inversion();
    row.coherence_abs = std::abs(p.state.coherence());
    row.energy = internal_energy(p.state, p.field);
    row.rates = evaluate_rates(p);
    return row;
}

std::vector<OutputRow> simulate_rows(const Scenario& sc) {
    sc.validate();
    const BathRates r = sc.effective_rates();
    const InitialState init = sc.floquet_initial();
    const auto count = static_cast<std::size_t>(std::floor(sc.t_end / sc.dt_output + 1e-9)) + 1;
    std::vector<OutputRow> rows;
    rows.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        rows.push_back(evaluate_row(sc.model, r, init, static_cast<double>(k) * sc.dt_output));
    }
    return rows;
}

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols = {
        "t",     "n_x",   "n_y",   "n_z",   "n",     "delta", "coh_abs", "U",      "dU",     "dW_wc",
        "dQ_wc", "dw_hb", "dq_hb", "dW_eb", "dQ_eb", "dS",    "beta",    "dSi_wc", "dSi_hb", "dSi_eb"};
    return cols;
}

std::string csv_header() {
    const auto& cols = csv_columns();
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i > 0) out += ',';
        out += cols[i];
    }
    return out;
}

namespace {

std::string csv_cell(double v) {
    if (!std::isfinite(v)) return {};  // divergences stay visible as gaps, never as zeros
    if (v == 0.0) v = 0.0;             // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void append_cells(std::string& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out += ',';
        out += csv_cell(v);
        first = false;
    }
}

}  // namespace

std::string to_csv(const std::vector<OutputRow>& rows) {
    std::string out = csv_header();
    out += '\n';
    for (const OutputRow& row : rows) {
        const FirstLawRates& fr = row.rates;
        append_cells(out, {row.t, row.n_x, row.n_y, row.n_z, row.norm, row.inversion, row.coherence_abs,
                           row.energy, fr.energy, fr.conventional.work, fr.conventional.heat,
                           fr.hamiltonian_based.work, fr.hamiltonian_based.heat, fr.entropy_based.work,
                           fr.entropy_based.heat, fr.entropy, fr.beta, fr.irr_conventional,
                           fr.irr_hamiltonian_based, fr.irr_entropy_based});
        out += '\n';
    }
    return out;
}

std::string plot_script(const std::string& csv_path, const std::string& image_path) {
    const auto& cols = csv_columns();
    const auto series = [&](std::initializer_list<const char*> names) {
        std::string s;
        bool first = true;
        for (const char* name : names) {
            std::size_t index = 0;
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (cols[i] == name) {
                    index = i + 1;
                    break;
                }
            }
            if (!first) s += ", ";
            s += first ? ("'" + csv_path + "'") : std::string("''");
            s += " using 1:" + std::to_string(index) + " with lines title '" + name + "'";
            first = false;
        }
        return "plot " + s + "\n";
    };
    std::string out;
    out += "# gnuplot script generated alongside " + csv_path + "\n";
    out += "set datafile separator ','\n";
    out += "set datafile missing ''\n";
    out += "set key outside\n";
    out += "set grid\n";
    out += "set xlabel 't [1/omega0]'\n";
    out += "set terminal pngcairo size 1400,1000\n";
    out += "set output '" + image_path + "'\n";
    out += "set multiplot layout 2,2 title 'driven open two-level system'\n";
    out += series({"n_x", "n_y", "n_z", "n"});
    out += series({"dU", "dQ_wc", "dq_hb", "dQ_eb"});
    out += series({"dS", "dSi_wc", "dSi_hb", "dSi_eb"});
    out += series({"beta", "delta"});
    out += "unset multiplot\n";
    return out;
}

// ---------------------------------- sweeps ----------------------------------

NetVariation net_variation(const ModelParams& m, const BathRates& r, const InitialState& init, double t_end,
                           double dt) {
    const auto count = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9)) + 1;
    std::vector<double> ds(count), du(count), q_wc(count), q_hb(count), q_eb(count), i_wc(count),
        i_hb(count), i_eb(count);
    for (std::size_t k = 0; k < count; ++k) {
        const TrajectoryPoint p = trajectory_point(m, r, init, static_cast<double>(k) * dt);
        const FirstLawRates fr = evaluate_rates(p);
        ds[k] = fr.entropy;
        du[k] = fr.energy;
        q_wc[k] = fr.conventional.heat;
        q_hb[k] = fr.hamiltonian_based.heat;
        q_eb[k] = fr.entropy_based.heat;
        i_wc[k] = fr.irr_conventional;
        i_hb[k] = fr.irr_hamiltonian_based;
        i_eb[k] = fr.irr_entropy_based;
    }
    NetVariation out;
    out.entropy = integrate_samples(ds, dt);
    out.energy = integrate_samples(du, dt);
    out.heat_wc = integrate_samples(q_wc, dt);
    out.heat_hb = integrate_samples(q_hb, dt);
    out.heat_eb = integrate_samples(q_eb, dt);
    out.irr_wc = integrate_samples(i_wc, dt);
    out.irr_hb = integrate_samples(i_hb, dt);
    out.irr_eb = integrate_samples(i_eb, dt);
    return out;
}

std::vector<NetVariation> run_sweep(const Scenario& base, const SweepSpec& spec) {
    base.validate();
    if (base.rate_mode != RateMode::direct) {
        throw std::invalid_argument("sweep: requires rates.mode = 'direct'");
    }
    if (spec.steps < 2) throw std::invalid_argument("sweep: steps must be at least 2");
    if (!(spec.from >= 0.0) || !(spec.to > spec.from)) {
        throw std::invalid_argument("sweep: need 0 <= from < to");
    }

    const InitialState init = base.floquet_initial();
    const auto value_at = [&](int i) {
        return spec.from + (spec.to - spec.from) * static_cast<double>(i) / (spec.steps - 1);
    };

    std::vector<NetVariation> results(static_cast<std::size_t>(spec.steps));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;

    const auto worker = [&]() {
        for (int i = next.fetch_add(1); i < spec.steps; i = next.fetch_add(1)) {
            try {
                BathRates r = base.rates;
                const double v = value_at(i);
                (spec.param == SweepParam::gamma_plus ? r.gamma_plus : r.gamma_zero) = v;
                r.validate();
                NetVariation row = net_variation(base.model, r, init, base.t_end, base.dt_output);
                row.param_value = v;
                results[static_cast<std::size_t>(i)] = row;
            } catch (...) {
                const std::scoped_lock lock(failure_lock);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads = std::min<unsigned>(hw, static_cast<unsigned>(spec.steps));
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

std::string sweep_csv_header(SweepParam param) {
    std::string out = param == SweepParam::gamma_plus ? "gamma_plus" : "gamma_zero";
    out += ",DS,DU,DQ_wc,Dq_hb,DQ_eb,DSi_wc,DSi_hb,DSi_eb";
    return out;
}

std::string sweep_to_csv(const std::vector<NetVariation>& rows, SweepParam param) {
    std::string out = sweep_csv_header(param);
    out += '\n';
    for (const NetVariation& row : rows) {
        append_cells(out, {row.param_value, row.entropy, row.energy, row.heat_wc, row.heat_hb, row.heat_eb,
                           row.irr_wc, row.irr_hb, row.irr_eb});
        out += '\n';
    }
    return out;
}

std::string steady_report(const Scenario& sc) {
    sc.validate();
    const SteadyState ss = steady_state(sc.model, sc.effective_rates());
    std::string out;
    const auto line = [&out](const char* name, double v) {
        char buf[80];
        std::snprintf(buf, sizeof buf, "%-18s = %.12g\n", name, v);
        out += buf;
    };
    line("asymmetry", sc.effective_rates().asymmetry());
    line("n", ss.norm);
    line("delta", ss.population_inversion);
    line("coherence_amp", ss.coherence_amplitude);
    line("purity", ss.purity);
    line("entropy", ss.entropy);
    line("U", ss.internal_energy);
    line("phase_cosine", ss.phase_cosine);
    return out;
}

// ------------------------------- verification -------------------------------

bool VerifyReport::all_passed() const {
    for (const CheckResult& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

namespace {

std::string max_detail(double value, double tol) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max deviation %.3g (tolerance %.1g)", value, tol);
    return buf;
}

}  // namespace

VerifyReport run_verification(const Scenario& sc) {
    sc.validate();
    const BathRates r = sc.effective_rates();
    const InitialState init = sc.floquet_initial();
    const ModelParams& m = sc.model;
    VerifyReport report;

    // row-level first-law closure for the three splittings
    {
        double worst = 0.0;
        const auto count = static_cast<std::size_t>(std::floor(sc.t_end / sc.dt_output + 1e-9)) + 1;
        for (std::size_t k = 0; k < count; ++k) {
            const TrajectoryPoint p = trajectory_point(m, r, init, static_cast<double>(k) * sc.dt_output);
            const FirstLawRates fr = evaluate_rates(p);
            worst = std::max(worst, std::abs(fr.energy - fr.conventional.work - fr.conventional.heat));
            worst = std::max(worst,
                             std::abs(fr.energy - fr.hamiltonian_based.work - fr.hamiltonian_based.heat));
            worst = std::max(worst, std::abs(fr.energy - fr.entropy_based.work - fr.entropy_based.heat));
        }
        report.checks.push_back({"first-law-closure", worst < 1e-9, max_detail(worst, 1e-9)});
    }

    // conventional minus entropy-based heat equals the transverse drift term
    {
        double worst = 0.0;
        const auto count = static_cast<std::size_t>(std::floor(sc.t_end / sc.dt_output + 1e-9)) + 1;
        for (std::size_t k = 0; k < count; ++k) {
            const TrajectoryPoint p = trajectory_point(m, r, init, static_cast<double>(k) * sc.dt_output);
            const double lhs = conventional_rates(p).heat - entropy_based_rates(p).heat;
            const double rhs =
                p.field.norm() * p.state.norm() * direction_rate_along_field(p);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        report.checks.push_back({"heat-splitting-identity", worst < 1e-10, max_detail(worst, 1e-10)});
    }

    // circular drive: no eigen-energy work; conventional work = eps*Omega*Y
    {
        double worst = 0.0;
        const auto count = static_cast<std::size_t>(std::floor(sc.t_end / sc.dt_output + 1e-9)) + 1;
        for (std::size_t k = 0; k < count; ++k) {
            const double t = static_cast<double>(k) * sc.dt_output;
            const TrajectoryPoint p = trajectory_point(m, r, init, t);
            const Vec3 xyz = floquet_components(m, r, init, t);
            worst = std::max(worst, std::abs(hamiltonian_based_rates(p).work));
            worst = std::max(worst, std::abs(conventional_rates(p).work -
                                             m.epsilon * m.omega_laser * xyz.y()));
        }
        report.checks.push_back({"constant-norm-accounting", worst < 1e-10, max_detail(worst, 1e-10)});
    }

    // interaction-picture solution rotated back equals the lab closed form
    {
        double worst = 0.0;
        for (int k = 0; k <= 24; ++k) {
            const double t = sc.t_end * static_cast<double>(k) / 24.0;
            const BlochState via_frames = lab_from_interaction(m, interaction_picture_state(m, r, init, t), t);
            const BlochState direct = closed_form_state(m, r, init, t);
            worst = std::max(worst, (via_frames.vec() - direct.vec()).cwiseAbs().maxCoeff());
        }
        report.checks.push_back({"frame-consistency", worst < 1e-10, max_detail(worst, 1e-10)});
    }

    // fixed-step integration of the dissipator tracks the closed form
    {
        IntegratorConfig cfg;
        cfg.dt = sc.integrator_dt;
        cfg.t_end = std::min(sc.t_end, 30.0);
        const DissipativeTrajectory traj = integrate_lindblad(m, r, init.lab(), cfg);
        double worst = 0.0;
        for (std::size_t k = 0; k < traj.states.size(); ++k) {
            const double t = traj.time(k);
            const Matrix2c u = evolution_operator(m, t);
            const BlochState numeric = BlochState::from_density_matrix(u * traj.states[k] * u.adjoint());
            const BlochState exact = closed_form_state(m, r, init, t);
            worst = std::max(worst, (numeric.vec() - exact.vec()).cwiseAbs().maxCoeff());
        }
        report.checks.push_back({"integrator-equivalence", worst < 1e-6, max_detail(worst, 1e-6)});
    }

    // long-time state reproduces the steady-state closed forms
    if (r.Gamma1() > 0.0) {
        const double t = 200.0;
        const SteadyState ss = steady_state(m, r);
        const BlochState late = closed_form_state(m, r, init, t);
        double worst = std::abs(late.norm() - ss.norm);
        worst = std::max(worst, std::abs(late.population_inversion() - ss.population_inversion));
        worst = std::max(worst, std::abs(purity(late) - ss.purity));
        worst = std::max(worst, std::abs(von_neumann_entropy(late) - ss.entropy));
        worst = std::max(worst, std::abs(internal_energy(late, m.field(t)) - ss.internal_energy));
        worst = std::max(worst, std::abs(std::abs(late.coherence()) - std::abs(ss.coherence_amplitude)));
        if (std::abs(ss.coherence_amplitude) > 1e-9) {
            const double phase_cos = std::cos(late.coherence_phase() - m.omega_laser * t);
            worst = std::max(worst, std::abs(phase_cos - ss.phase_cosine));
        }
        report.checks.push_back({"steady-state-identities", worst < 1e-8, max_detail(worst, 1e-8)});
    } else {
        report.checks.push_back({"steady-state-identities", true, "skipped (Gamma1 = 0, no relaxation)"});
    }

    return report;
}

}  // namespace blochtherm
