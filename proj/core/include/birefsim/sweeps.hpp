#pragma once

/**
 * sweeps.hpp — parameter sweeps emitted as deterministic CSV tables.
 *
 * Every generator produces a rectangular table of doubles with a header
 * row. Formatting is fixed (17 significant digits, '.' decimal separator,
 * '\n' line endings), so identical inputs give byte-identical output.
 * Cells that would be singular are flagged through an is_singular / marker
 * column instead of emitting NaN.
 */

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "birefsim/pulse.hpp"
#include "birefsim/timeshift.hpp"

namespace birefsim {

/// Inclusive uniform sampling of [min, max] with `count` >= 2 points.
struct AxisSpec {
    double min;
    double max;
    int count;
    void validate() const;
    double at(int i) const { return min + (max - min) * static_cast<double>(i) / (count - 1); }
};

/// Sampling rectangle in the (beta, dkd) plane.
struct GridSpec {
    AxisSpec beta;
    AxisSpec dkd;
    void validate() const;

    /// beta in [0, pi], dkd in [0, 2 pi], 201 x 201; hits the three
    /// amplitude zeros of that window exactly.
    static GridSpec amplitude_window();

    /// 400 x 400 window around the half-waveplate vortex, covering the
    /// superluminality ellipse of moderately birefringent media.
    static GridSpec timeshift_window();
};

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::string to_csv() const;
};

/// Locale-independent rendering with 17 significant digits.
std::string format_double(double value);

/// Columns: beta, dkd, modulus, chi, is_singular.
CsvTable amplitude_phase_map(const GridSpec& grid);

/// Columns: beta, dkd, tau, superluminal, is_singular. Singular cells keep
/// their row with tau = 0 and the flag set.
CsvTable timeshift_map(const CrystalMedium& medium, const GridSpec& grid);

/**
 * Columns: xi, f_mu<mu>..., marker. One row per xi sample (marker 0), then
 * one marker row at xi0 (marker 1) and, away from the beta = pi/4 pole, one
 * at xi1 (marker 2).
 */
CsvTable profile_set(const CrystalMedium& medium, double beta, std::span<const double> mu_list,
                     const AxisSpec& xi_axis);

/**
 * Columns: t, x, f_filtered, f_freespace. One block of x samples per time;
 * f_freespace is the same packet propagated without the crystal.
 */
CsvTable evolution_frames(const CrystalMedium& medium, double beta, const GaussianPulse& pulse,
                          std::span<const double> times, const AxisSpec& x_axis);

/// Ordered key/value parameter list describing a generated table.
using SweepParams = std::vector<std::pair<std::string, std::string>>;

/// FNV-1a over the canonical "key=value\n" rendering.
std::uint64_t params_hash(const SweepParams& params);

struct WrittenFiles {
    std::filesystem::path csv;
    std::filesystem::path manifest;
};

/**
 * Writes `<generator>_<hash>.csv` plus the `<generator>_<hash>.params`
 * key = value manifest into `dir`, creating it if needed.
 */
WrittenFiles write_table(const std::filesystem::path& dir, std::string_view generator,
                         const SweepParams& params, const CsvTable& table);

} // namespace birefsim
