#include "birefsim/timeshift.hpp"

#include <cmath>
#include <numbers>

namespace birefsim {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double regime_limit = 0.3;
constexpr double denominator_guard = 1e-12;
} // namespace

SmallSignalCoords SmallSignalCoords::from_plane(double beta, double dkd) {
    // nearest odd multiple of pi: (2N+1) pi with N = round((dkd/pi - 1)/2)
    const int n = static_cast<int>(std::lround(0.5 * (dkd / pi - 1.0)));
    SmallSignalCoords c;
    c.waveplate_index = n;
    c.epsilon = beta - 0.25 * pi;
    c.phi = dkd - static_cast<double>(2 * n + 1) * pi;
    return c;
}

double SmallSignalCoords::beta() const { return 0.25 * pi + epsilon; }

double SmallSignalCoords::dkd() const {
    return static_cast<double>(2 * waveplate_index + 1) * pi + phi;
}

bool SmallSignalCoords::in_regime() const {
    return std::abs(epsilon) <= regime_limit && std::abs(phi) <= regime_limit;
}

TimeShiftResult time_shift(const CrystalMedium& medium, double beta, double dkd) {
    const double denom = 1.0 + std::cos(dkd) * std::sin(2.0 * beta);
    if (denom < denominator_guard)
        throw singularity_error("time_shift: amplitude zero, shift unbounded");
    const double tau = medium.mean_index() - 1.0 -
                       0.5 * std::cos(2.0 * beta) * medium.birefringence() / denom;
    return {tau, tau < 0.0, true};
}

TimeShiftResult small_signal_tau(const CrystalMedium& medium, const SmallSignalCoords& coords) {
    const double r2 = 4.0 * coords.epsilon * coords.epsilon + coords.phi * coords.phi;
    if (r2 < 1e-24)
        throw singularity_error("small_signal_tau: unbounded at the phase vortex");
    const double tau =
        medium.mean_index() - 1.0 + 2.0 * coords.epsilon * medium.birefringence() / r2;
    return {tau, tau < 0.0, coords.in_regime()};
}

double superluminal_scale(const CrystalMedium& medium) {
    return medium.birefringence() / (4.0 * (medium.mean_index() - 1.0));
}

bool superluminal_region(const CrystalMedium& medium, const SmallSignalCoords& coords) {
    const double a = superluminal_scale(medium);
    const double u = (coords.epsilon + a) / a;
    const double v = coords.phi / (2.0 * a);
    return u * u + v * v < 1.0;
}

} // namespace birefsim
