#include "birefsim/sweeps.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

namespace birefsim {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
} // namespace

void AxisSpec::validate() const {
    if (!std::isfinite(min) || !std::isfinite(max) || min > max)
        throw domain_error("AxisSpec: range must be finite and ordered");
    if (count < 2) throw domain_error("AxisSpec: resolution must be >= 2");
}

void GridSpec::validate() const {
    beta.validate();
    dkd.validate();
}

GridSpec GridSpec::amplitude_window() {
    return {{0.0, pi, 201}, {0.0, 2.0 * pi, 201}};
}

GridSpec GridSpec::timeshift_window() {
    return {{0.25 * pi - 0.35, 0.25 * pi + 0.05, 400}, {pi - 0.40, pi + 0.40, 400}};
}

std::string format_double(double value) {
    std::array<char, 32> buf;
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string CsvTable::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

CsvTable amplitude_phase_map(const GridSpec& grid) {
    grid.validate();
    CsvTable table;
    table.columns = {"beta", "dkd", "modulus", "chi", "is_singular"};
    table.rows.reserve(static_cast<std::size_t>(grid.beta.count) * grid.dkd.count);
    for (int i = 0; i < grid.beta.count; ++i) {
        const double beta = grid.beta.at(i);
        for (int j = 0; j < grid.dkd.count; ++j) {
            const double dkd = grid.dkd.at(j);
            const PhasePoint p = modulus_and_phase(beta, dkd);
            table.rows.push_back({beta, dkd, p.modulus, p.chi, p.singular ? 1.0 : 0.0});
        }
    }
    return table;
}

CsvTable timeshift_map(const CrystalMedium& medium, const GridSpec& grid) {
    grid.validate();
    CsvTable table;
    table.columns = {"beta", "dkd", "tau", "superluminal", "is_singular"};
    table.rows.reserve(static_cast<std::size_t>(grid.beta.count) * grid.dkd.count);
    for (int i = 0; i < grid.beta.count; ++i) {
        const double beta = grid.beta.at(i);
        for (int j = 0; j < grid.dkd.count; ++j) {
            const double dkd = grid.dkd.at(j);
            try {
                const TimeShiftResult r = time_shift(medium, beta, dkd);
                table.rows.push_back({beta, dkd, r.tau, r.superluminal ? 1.0 : 0.0, 0.0});
            } catch (const singularity_error&) {
                table.rows.push_back({beta, dkd, 0.0, 0.0, 1.0});
            }
        }
    }
    return table;
}

CsvTable profile_set(const CrystalMedium& medium, double beta, std::span<const double> mu_list,
                     const AxisSpec& xi_axis) {
    xi_axis.validate();
    if (mu_list.empty()) throw domain_error("profile_set: at least one mu required");
    for (double mu : mu_list)
        if (!(mu > 0.0)) throw domain_error("profile_set: mu values must be positive");

    const double dn = medium.birefringence();
    CsvTable table;
    table.columns.push_back("xi");
    for (double mu : mu_list) table.columns.push_back("f_mu" + format_double(mu));
    table.columns.push_back("marker");

    const auto emit = [&](double xi, double marker) {
        std::vector<double> row;
        row.reserve(mu_list.size() + 2);
        row.push_back(xi);
        for (double mu : mu_list) row.push_back(envelope_f(xi, beta, mu, dn));
        row.push_back(marker);
        table.rows.push_back(std::move(row));
    };

    for (int i = 0; i < xi_axis.count; ++i) emit(xi_axis.at(i), 0.0);
    emit(xi0_lightspeed(medium), 1.0);
    try {
        emit(xi1_stationary(beta, dn), 2.0);
    } catch (const singularity_error&) {
        // beta = pi/4: no stationary-phase marker
    }
    return table;
}

CsvTable evolution_frames(const CrystalMedium& medium, double beta, const GaussianPulse& pulse,
                          std::span<const double> times, const AxisSpec& x_axis) {
    x_axis.validate();
    if (times.empty()) throw domain_error("evolution_frames: at least one time required");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw domain_error("evolution_frames: times must be strictly increasing");

    const double cb = std::cos(beta);
    const double sb = std::sin(beta);
    CsvTable table;
    table.columns = {"t", "x", "f_filtered", "f_freespace"};
    table.rows.reserve(times.size() * static_cast<std::size_t>(x_axis.count));
    for (double t : times) {
        for (int i = 0; i < x_axis.count; ++i) {
            const double x = x_axis.at(i);
            const double f = std::norm(closed_form_field(x, t, medium, beta, pulse).value);
            const double s = x - t;
            const double free_env = inv_sqrt2 * (cb + sb) * std::exp(-s * s / pulse.sigma);
            table.rows.push_back({t, x, f, free_env * free_env});
        }
    }
    return table;
}

std::uint64_t params_hash(const SweepParams& params) {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a offset basis
    const auto mix = [&](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [key, value] : params) {
        mix(key);
        mix("=");
        mix(value);
        mix("\n");
    }
    return h;
}

WrittenFiles write_table(const std::filesystem::path& dir, std::string_view generator,
                         const SweepParams& params, const CsvTable& table) {
    std::filesystem::create_directories(dir);

    std::array<char, 17> hex{};
    const std::uint64_t h = params_hash(params);
    static const char digits[] = "0123456789abcdef";
    for (int i = 0; i < 16; ++i) hex[i] = digits[(h >> (60 - 4 * i)) & 0xF];
    const std::string stem = std::string(generator) + "_" + std::string(hex.data(), 16);

    WrittenFiles files;
    files.csv = dir / (stem + ".csv");
    files.manifest = dir / (stem + ".params");

    {
        std::ofstream out(files.csv, std::ios::binary);
        if (!out) throw solver_error("write_table: cannot open " + files.csv.string());
        out << table.to_csv();
    }
    {
        std::ofstream out(files.manifest, std::ios::binary);
        if (!out) throw solver_error("write_table: cannot open " + files.manifest.string());
        out << "generator = " << generator << "\n";
        for (const auto& [key, value] : params) out << key << " = " << value << "\n";
    }
    return files;
}

} // namespace birefsim
