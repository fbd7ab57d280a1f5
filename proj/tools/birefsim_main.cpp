// birefsim — filtered transit of polarized waves through a birefringent
// crystal slab: single-point queries, sweep CSV generators, envelope peak
// extraction and quadrature validation of the closed forms.
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 solver failure.

#include <CLI11.hpp>

#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "birefsim/oracle.hpp"
#include "birefsim/pulse.hpp"
#include "birefsim/sweeps.hpp"
#include "birefsim/timeshift.hpp"
#include "cli_support.hpp"

namespace {

using birefsim::format_double;

constexpr double speed_of_light_m_per_s = 299792458.0;

struct OutputTarget {
    std::string out_path;    // --out: exact file, empty = stdout
    std::string out_dir;     // --outdir: hashed naming convention (tables only)
};

void add_output_options(CLI::App* cmd, OutputTarget& target, bool tables) {
    auto* out = cmd->add_option("--out", target.out_path, "write output to this file");
    if (tables) {
        auto* dir = cmd->add_option("--outdir", target.out_dir,
                                    "write <generator>_<hash>.csv plus a .params manifest here");
        out->excludes(dir);
    }
}

void emit_text(const OutputTarget& target, const std::string& text) {
    if (target.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(target.out_path, std::ios::binary);
    if (!out) throw birefsim::cli::usage_error("cannot open output file: " + target.out_path);
    out << text;
}

void emit_table(const OutputTarget& target, std::string_view generator,
                const birefsim::SweepParams& params, const birefsim::CsvTable& table) {
    if (!target.out_dir.empty()) {
        const auto files = birefsim::write_table(target.out_dir, generator, params, table);
        std::cout << files.csv.string() << "\n" << files.manifest.string() << "\n";
        return;
    }
    emit_text(target, table.to_csv());
}

// flag > config > fallback
double resolve(const CLI::Option* opt, double flag_value, const std::optional<double>& cfg,
               double fallback) {
    if (opt->count() > 0) return flag_value;
    if (cfg) return *cfg;
    return fallback;
}

struct MediumOptions {
    double n_o = 0.0;
    double n_e = 0.0;
    CLI::Option* n_o_opt = nullptr;
    CLI::Option* n_e_opt = nullptr;

    void add_to(CLI::App* cmd) {
        n_o_opt = cmd->add_option("--no", n_o, "ordinary refractive index");
        n_e_opt = cmd->add_option("--ne", n_e, "extraordinary refractive index");
    }
    birefsim::CrystalMedium resolve_medium(const birefsim::cli::SceneConfig& cfg,
                                           double def_no = 1.225, double def_ne = 1.375) const {
        return {resolve(n_o_opt, n_o, cfg.n_o, def_no), resolve(n_e_opt, n_e, cfg.n_e, def_ne)};
    }
};

struct AngleOption {
    std::string text;
    CLI::Option* opt = nullptr;

    void add_to(CLI::App* cmd, const std::string& name, const std::string& help) {
        opt = cmd->add_option(name, text, help + " (radians, or a multiple of pi like 0.21pi)");
    }
    double resolve_angle(const std::optional<double>& cfg, double fallback) const {
        if (opt->count() > 0) return birefsim::cli::parse_angle(text);
        if (cfg) return *cfg;
        return fallback;
    }
};

std::string key_value(std::string_view key, double value) {
    return std::string(key) + " = " + format_double(value) + "\n";
}

std::string key_value(std::string_view key, bool value) {
    return std::string(key) + " = " + (value ? "1" : "0") + "\n";
}

birefsim::GridSpec resolve_grid(CLI::App* cmd, const birefsim::GridSpec& preset,
                                double beta_min, double beta_max, int beta_count, double dkd_min,
                                double dkd_max, int dkd_count) {
    birefsim::GridSpec grid = preset;
    if (cmd->count("--beta-min")) grid.beta.min = beta_min;
    if (cmd->count("--beta-max")) grid.beta.max = beta_max;
    if (cmd->count("--beta-count")) grid.beta.count = beta_count;
    if (cmd->count("--dkd-min")) grid.dkd.min = dkd_min;
    if (cmd->count("--dkd-max")) grid.dkd.max = dkd_max;
    if (cmd->count("--dkd-count")) grid.dkd.count = dkd_count;
    return grid;
}

int run(int argc, char** argv) {
    CLI::App app{"polarized wave transit through a birefringent crystal with a polarization "
                 "filter: amplitude/phase maps, stationary-phase time shifts, Gaussian pulse "
                 "envelopes and their peaks"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key = value scene config file")
        ->check(CLI::ExistingFile);

    // reflectance
    auto* c_refl = app.add_subcommand("reflectance", "interface reflection coefficient");
    double refl_n1 = 1.0, refl_n2 = 1.25;
    c_refl->add_option("--n1", refl_n1, "index on the incoming side")->required();
    c_refl->add_option("--n2", refl_n2, "index on the transmitted side")->required();
    OutputTarget refl_out;
    add_output_options(c_refl, refl_out, false);

    // amplitude
    auto* c_amp = app.add_subcommand("amplitude", "filtered complex amplitude at one point");
    AngleOption amp_beta;
    amp_beta.add_to(c_amp, "--beta", "filter angle");
    AngleOption amp_dkd;
    amp_dkd.add_to(c_amp, "--dkd", "optical phase difference");
    OutputTarget amp_out;
    add_output_options(c_amp, amp_out, false);

    // timeshift
    auto* c_ts = app.add_subcommand("timeshift", "stationary-phase time shift at one point");
    AngleOption ts_beta;
    ts_beta.add_to(c_ts, "--beta", "filter angle");
    AngleOption ts_dkd;
    ts_dkd.add_to(c_ts, "--dkd", "optical phase difference");
    MediumOptions ts_medium;
    ts_medium.add_to(c_ts);
    double ts_d_physical = 0.0;
    auto* ts_dphys = c_ts->add_option("--d-physical", ts_d_physical,
                                      "crystal width in meters (adds tau in seconds)");
    OutputTarget ts_out;
    add_output_options(c_ts, ts_out, false);

    // map-amplitude
    auto* c_mapamp = app.add_subcommand("map-amplitude", "CSV map of |z| and chi on a grid");
    std::string mapamp_window = "fig2";
    c_mapamp->add_option("--window", mapamp_window,
                         "preset window; fig2 = beta in [0,pi] x dkd in [0,2pi], 201x201");
    double ma_bmin = 0, ma_bmax = 0, ma_dmin = 0, ma_dmax = 0;
    int ma_bcount = 0, ma_dcount = 0;
    c_mapamp->add_option("--beta-min", ma_bmin);
    c_mapamp->add_option("--beta-max", ma_bmax);
    c_mapamp->add_option("--beta-count", ma_bcount);
    c_mapamp->add_option("--dkd-min", ma_dmin);
    c_mapamp->add_option("--dkd-max", ma_dmax);
    c_mapamp->add_option("--dkd-count", ma_dcount);
    OutputTarget mapamp_out;
    add_output_options(c_mapamp, mapamp_out, true);

    // map-timeshift
    auto* c_mapts = app.add_subcommand("map-timeshift", "CSV map of tau on a grid");
    std::string mapts_window = "vortex";
    c_mapts->add_option("--window", mapts_window,
                        "preset window; vortex = 400x400 around beta=pi/4, dkd=pi");
    double mt_bmin = 0, mt_bmax = 0, mt_dmin = 0, mt_dmax = 0;
    int mt_bcount = 0, mt_dcount = 0;
    c_mapts->add_option("--beta-min", mt_bmin);
    c_mapts->add_option("--beta-max", mt_bmax);
    c_mapts->add_option("--beta-count", mt_bcount);
    c_mapts->add_option("--dkd-min", mt_dmin);
    c_mapts->add_option("--dkd-max", mt_dmax);
    c_mapts->add_option("--dkd-count", mt_dcount);
    MediumOptions mapts_medium;
    mapts_medium.add_to(c_mapts);
    OutputTarget mapts_out;
    add_output_options(c_mapts, mapts_out, true);

    // profiles
    auto* c_prof = app.add_subcommand("profiles", "outgoing envelope f(xi) for several widths");
    AngleOption prof_beta;
    prof_beta.add_to(c_prof, "--beta", "filter angle");
    std::vector<double> prof_mu{2.6, 1.6, 0.6};
    c_prof->add_option("--mu", prof_mu, "crystal-width / pulse-width ratios d/ell")
        ->delimiter(',');
    double prof_xi_min = -1.2, prof_xi_max = 1.2;
    int prof_points = 481;
    c_prof->add_option("--xi-min", prof_xi_min);
    c_prof->add_option("--xi-max", prof_xi_max);
    c_prof->add_option("--points", prof_points);
    MediumOptions prof_medium;
    prof_medium.add_to(c_prof);
    OutputTarget prof_out;
    add_output_options(c_prof, prof_out, true);

    // evolve
    auto* c_evo = app.add_subcommand("evolve", "field envelope frames at several times");
    AngleOption evo_beta;
    evo_beta.add_to(c_evo, "--beta", "filter angle");
    double evo_ell = 0.0;
    auto* evo_ell_opt = c_evo->add_option("--ell", evo_ell, "pulse spatial width / d");
    int evo_wpindex = 0;
    auto* evo_wp_opt =
        c_evo->add_option("--waveplate-index", evo_wpindex, "half-waveplate integer N");
    std::vector<double> evo_times{-12.0, 0.7, 4.0, 16.0};
    c_evo->add_option("--times", evo_times, "frame times, units d/c")->delimiter(',');
    double evo_x_min = -20.0, evo_x_max = 25.0;
    int evo_points = 901;
    c_evo->add_option("--x-min", evo_x_min);
    c_evo->add_option("--x-max", evo_x_max);
    c_evo->add_option("--points", evo_points);
    MediumOptions evo_medium;
    evo_medium.add_to(c_evo);
    OutputTarget evo_out;
    add_output_options(c_evo, evo_out, true);

    // peaks
    auto* c_peaks = app.add_subcommand("peaks", "extrema of the outgoing envelope");
    AngleOption peaks_beta;
    peaks_beta.add_to(c_peaks, "--beta", "filter angle");
    double peaks_mu = 2.6, peaks_dn = 0.15;
    c_peaks->add_option("--mu", peaks_mu, "crystal-width / pulse-width ratio d/ell");
    c_peaks->add_option("--dn", peaks_dn, "birefringence n_e - n_o");
    OutputTarget peaks_out;
    add_output_options(c_peaks, peaks_out, false);

    // validate
    auto* c_val = app.add_subcommand("validate",
                                     "compare the closed-form field against the "
                                     "frequency-quadrature synthesis");
    std::string val_set = "wide";
    c_val->add_option("--set", val_set,
                      "parameter preset: 'narrow' (weakly birefringent slab, packet "
                      "narrower than the crystal) or 'wide' (strong birefringence, ell = 4d)");
    int val_points = 200;
    c_val->add_option("--points", val_points, "sample points per region");
    int val_nodes = 2048;
    double val_span = 8.0, val_tol = 1e-8;
    c_val->add_option("--nodes", val_nodes, "quadrature node budget");
    c_val->add_option("--span", val_span, "integration half-width in spectral std devs");
    c_val->add_option("--tol", val_tol, "max |closed - quadrature| allowed");
    OutputTarget val_out;
    add_output_options(c_val, val_out, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    birefsim::cli::SceneConfig cfg;
    if (!config_path.empty()) cfg = birefsim::cli::load_scene_config(config_path);
    constexpr double default_beta = 0.21 * std::numbers::pi;

    if (app.got_subcommand(c_refl)) {
        emit_text(refl_out, key_value("R", birefsim::fresnel_reflectance(refl_n1, refl_n2)));
        return 0;
    }

    if (app.got_subcommand(c_amp)) {
        const double beta = amp_beta.resolve_angle(cfg.beta, default_beta);
        const double dkd = amp_dkd.resolve_angle(std::nullopt, std::numbers::pi);
        const auto p = birefsim::modulus_and_phase(beta, dkd);
        std::string text;
        text += key_value("beta", p.beta);
        text += key_value("dkd", p.dkd);
        text += key_value("re", p.z.real());
        text += key_value("im", p.z.imag());
        text += key_value("modulus", p.modulus);
        text += key_value("chi", p.chi);
        text += key_value("singular", p.singular);
        emit_text(amp_out, text);
        return 0;
    }

    if (app.got_subcommand(c_ts)) {
        const auto medium = ts_medium.resolve_medium(cfg);
        const double beta = ts_beta.resolve_angle(cfg.beta, default_beta);
        const double dkd = ts_dkd.resolve_angle(std::nullopt, 0.5 * std::numbers::pi);
        const auto r = birefsim::time_shift(medium, beta, dkd);
        std::string text;
        text += key_value("tau", r.tau); // units d/c
        text += key_value("superluminal", r.superluminal);
        const double d_phys = ts_dphys->count() > 0
                                  ? ts_d_physical
                                  : cfg.d_physical.value_or(0.0);
        if (d_phys > 0.0)
            text += key_value("tau_seconds", r.tau * d_phys / speed_of_light_m_per_s);
        emit_text(ts_out, text);
        return 0;
    }

    if (app.got_subcommand(c_mapamp)) {
        if (mapamp_window != "fig2")
            throw birefsim::cli::usage_error("unknown --window preset: " + mapamp_window);
        const auto grid =
            resolve_grid(c_mapamp, birefsim::GridSpec::amplitude_window(), ma_bmin, ma_bmax,
                         ma_bcount, ma_dmin, ma_dmax, ma_dcount);
        birefsim::SweepParams params{{"beta_min", format_double(grid.beta.min)},
                                     {"beta_max", format_double(grid.beta.max)},
                                     {"beta_count", std::to_string(grid.beta.count)},
                                     {"dkd_min", format_double(grid.dkd.min)},
                                     {"dkd_max", format_double(grid.dkd.max)},
                                     {"dkd_count", std::to_string(grid.dkd.count)}};
        emit_table(mapamp_out, "map_amplitude", params, birefsim::amplitude_phase_map(grid));
        return 0;
    }

    if (app.got_subcommand(c_mapts)) {
        if (mapts_window != "vortex")
            throw birefsim::cli::usage_error("unknown --window preset: " + mapts_window);
        const auto medium = mapts_medium.resolve_medium(cfg);
        const auto grid =
            resolve_grid(c_mapts, birefsim::GridSpec::timeshift_window(), mt_bmin, mt_bmax,
                         mt_bcount, mt_dmin, mt_dmax, mt_dcount);
        birefsim::SweepParams params{{"n_o", format_double(medium.n_ordinary())},
                                     {"n_e", format_double(medium.n_extraordinary())},
                                     {"beta_min", format_double(grid.beta.min)},
                                     {"beta_max", format_double(grid.beta.max)},
                                     {"beta_count", std::to_string(grid.beta.count)},
                                     {"dkd_min", format_double(grid.dkd.min)},
                                     {"dkd_max", format_double(grid.dkd.max)},
                                     {"dkd_count", std::to_string(grid.dkd.count)}};
        emit_table(mapts_out, "map_timeshift", params, birefsim::timeshift_map(medium, grid));
        return 0;
    }

    if (app.got_subcommand(c_prof)) {
        const auto medium = prof_medium.resolve_medium(cfg);
        const double beta = prof_beta.resolve_angle(cfg.beta, default_beta);
        const birefsim::AxisSpec xi_axis{prof_xi_min, prof_xi_max, prof_points};
        std::string mu_joined;
        for (std::size_t i = 0; i < prof_mu.size(); ++i)
            mu_joined += (i ? "," : "") + format_double(prof_mu[i]);
        birefsim::SweepParams params{{"n_o", format_double(medium.n_ordinary())},
                                     {"n_e", format_double(medium.n_extraordinary())},
                                     {"beta", format_double(beta)},
                                     {"mu", mu_joined},
                                     {"xi_min", format_double(xi_axis.min)},
                                     {"xi_max", format_double(xi_axis.max)},
                                     {"points", std::to_string(xi_axis.count)}};
        emit_table(prof_out, "profiles", params,
                   birefsim::profile_set(medium, beta, prof_mu, xi_axis));
        return 0;
    }

    if (app.got_subcommand(c_evo)) {
        // built-in scene for this generator: strongly birefringent slab, wide pulse
        const auto medium = evo_medium.resolve_medium(cfg, 1.10, 1.60);
        const double beta = evo_beta.resolve_angle(cfg.beta, default_beta);
        const double ell = evo_ell_opt->count() > 0 ? evo_ell : cfg.ell.value_or(4.0);
        const int wp = evo_wp_opt->count() > 0 ? evo_wpindex : cfg.waveplate_index.value_or(0);
        const auto pulse = birefsim::GaussianPulse::tuned(medium, wp, ell);
        const birefsim::AxisSpec x_axis{evo_x_min, evo_x_max, evo_points};
        std::string times_joined;
        for (std::size_t i = 0; i < evo_times.size(); ++i)
            times_joined += (i ? "," : "") + format_double(evo_times[i]);
        birefsim::SweepParams params{{"n_o", format_double(medium.n_ordinary())},
                                     {"n_e", format_double(medium.n_extraordinary())},
                                     {"beta", format_double(beta)},
                                     {"ell", format_double(ell)},
                                     {"waveplate_index", std::to_string(wp)},
                                     {"times", times_joined},
                                     {"x_min", format_double(x_axis.min)},
                                     {"x_max", format_double(x_axis.max)},
                                     {"points", std::to_string(x_axis.count)}};
        emit_table(evo_out, "evolve", params,
                   birefsim::evolution_frames(medium, beta, pulse, evo_times, x_axis));
        return 0;
    }

    if (app.got_subcommand(c_peaks)) {
        const double beta = peaks_beta.resolve_angle(cfg.beta, default_beta);
        const auto set = birefsim::find_extrema(beta, peaks_mu, peaks_dn);
        std::string text;
        try {
            text += key_value("xi1", birefsim::xi1_stationary(beta, peaks_dn));
        } catch (const birefsim::singularity_error&) {
            // symmetric case, no stationary-phase marker
        }
        text += key_value("advanced_xi", set.advanced.xi);
        text += key_value("advanced_f", set.advanced.f);
        if (set.retarded) {
            text += key_value("retarded_xi", set.retarded->xi);
            text += key_value("retarded_f", set.retarded->f);
        }
        for (std::size_t i = 0; i < set.minima.size(); ++i)
            text += key_value("minimum_xi_" + std::to_string(i), set.minima[i]);
        emit_text(peaks_out, text);
        return 0;
    }

    if (app.got_subcommand(c_val)) {
        birefsim::CrystalMedium medium{1.225, 1.375};
        double ell = 1.0 / 2.6;
        if (val_set == "wide") {
            medium = birefsim::CrystalMedium{1.10, 1.60};
            ell = 4.0;
        } else if (val_set != "narrow") {
            throw birefsim::cli::usage_error("unknown --set preset: " + val_set);
        }
        const double beta = default_beta;
        const auto pulse = birefsim::GaussianPulse::tuned(medium, 0, ell);
        const birefsim::QuadratureSpec spec{val_nodes, val_span};

        std::mt19937_64 rng(0x5eedf00dULL);
        const double d = medium.width();
        const double inset = 1e-3;
        const std::pair<double, double> region_x[] = {
            {-25.0, -inset}, {inset, d - inset}, {d + inset, 25.0}};
        std::string text;
        double overall = 0.0;
        for (int r = 0; r < 3; ++r) {
            std::uniform_real_distribution<double> ux(region_x[r].first, region_x[r].second);
            std::uniform_real_distribution<double> ut(-8.0, 18.0);
            std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(val_points));
            for (auto& p : pts) p = {ux(rng), ut(rng)};
            const auto rep = birefsim::compare_grid(pts, medium, beta, pulse, spec);
            static const char* names[] = {"before", "inside", "after"};
            text += std::string("max_abs_error_") + names[r] + " = " +
                    format_double(rep.max_abs_error) + "\n";
            overall = std::max(overall, rep.max_abs_error);
        }
        // self-consistency of the quadrature itself under node doubling
        birefsim::QuadratureSpec doubled{2 * val_nodes, val_span};
        const double x_probe = 0.5 * d, t_probe = 0.6;
        const double drift =
            std::abs(birefsim::quadrature_field(x_probe, t_probe, medium, beta, pulse, spec) -
                     birefsim::quadrature_field(x_probe, t_probe, medium, beta, pulse, doubled));
        text += key_value("self_convergence", drift);
        text += key_value("max_abs_error", overall);
        text += std::string("status = ") + (overall <= val_tol ? "ok" : "tolerance_exceeded") +
                "\n";
        emit_text(val_out, text);
        return overall <= val_tol ? 0 : 4;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const birefsim::cli::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const birefsim::solver_error& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 4;
    } catch (const birefsim::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
