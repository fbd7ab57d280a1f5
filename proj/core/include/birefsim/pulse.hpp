#pragma once

/**
 * pulse.hpp — closed-form transit of a Gaussian wave packet.
 *
 * The incoming packet is a superposition of monochromatic plane waves with
 * spectral weight e^{-sigma (omega - omega0)^2 / 4}; the frequency integral
 * evaluates in closed form in each region. In the comoving coordinate
 *
 *   xi = (x - ct)/d + (nbar - 1)
 *
 * outgoing waves are stationary, the light-speed reference peak sits at
 * xi0 = nbar - 1 and the ordinary/extraordinary Gaussians at +-dn/2. Under
 * half-waveplate tuning (omega0 dn d / c an odd multiple of pi) the outgoing
 * filtered envelope is
 *
 *   f(xi) = (1/2) [cos b e^{-mu^2 (xi - dn/2)^2} - sin b e^{-mu^2 (xi + dn/2)^2}]^2,
 *
 * mu = d / ell, ell = sqrt(sigma c^2). Its extrema obey
 *
 *   cos b (xi - dn/2) e^{mu^2 xi dn} - sin b (xi + dn/2) e^{-mu^2 xi dn} = 0,
 *
 * which in the wide-packet limit mu^2 xi dn -> 0 reduces to the stationary
 * phase prediction xi1 = (dn/2)(cos b + sin b)/(cos b - sin b).
 *
 * Units: c = 1, lengths in units of the crystal width d unless stated.
 */

#include <complex>
#include <optional>
#include <vector>

#include "birefsim/planewave.hpp"

namespace birefsim {

/**
 * Gaussian wave packet: center frequency omega0 and spectral-width
 * parameter sigma (spatial width ell = sqrt(sigma), mu = d/ell).
 * `waveplate_index` is set when omega0 satisfies the half-waveplate
 * condition for the medium it was built against.
 */
struct GaussianPulse {
    double omega0;
    double sigma;
    double ell;
    double mu;
    std::optional<int> waveplate_index;

    static GaussianPulse from_sigma(double omega0, double sigma, const CrystalMedium& medium);

    /// Packet of spatial width `ell` tuned to the N-th half-waveplate frequency.
    static GaussianPulse tuned(const CrystalMedium& medium, int half_waveplate_index, double ell);
};

/// One sample of the filtered field E_beta / E_0.
struct FieldSample {
    double xi;
    std::complex<double> value;
    Region region;
};

struct Extremum {
    double xi;
    double f;
};

/// Maxima and interior zeros of the outgoing envelope f.
struct PeakSet {
    Extremum advanced;                  ///< maximum with the largest xi
    std::optional<Extremum> retarded;   ///< trailing maximum, when present
    std::vector<double> minima;         ///< zeros of f (double roots)
};

/// Packet widths relevant to the stationary-phase approximation, in units
/// of the crystal width. Both are thresholds the packet width ell should
/// comfortably exceed; `universal_lower_bound` is the beta-independent floor
/// below which no superluminal stationary-phase regime exists.
struct ValidityBounds {
    double ell_star;
    double universal_lower_bound;
};

/// Comoving coordinate xi = (x - ct)/d + (nbar - 1).
double xi_of(double x, double t, const CrystalMedium& medium);

/// Light-speed reference peak position xi0 = nbar - 1.
double xi0_lightspeed(const CrystalMedium& medium);

/// Region-appropriate closed form of the filtered Gaussian field.
FieldSample closed_form_field(double x, double t, const CrystalMedium& medium, double beta,
                              const GaussianPulse& pulse);

/// Outgoing squared envelope f(xi) under half-waveplate tuning.
double envelope_f(double xi, double beta, double mu, double dn);

/// Stationary-phase peak position xi1 = (dn/2)(cos b + sin b)/(cos b - sin b).
/// Throws singularity_error at the beta = pi/4 pole.
double xi1_stationary(double beta, double dn);

/**
 * Residual of the envelope extremum equation. For |mu^2 xi dn| > 700 the
 * value is rescaled by e^{-|mu^2 xi dn|} to stay finite; zeros and signs
 * are unaffected.
 */
double peak_residual(double xi, double beta, double mu, double dn);

/**
 * All extrema of f in the window xi in [-dn/2 - 6/mu, dn/2 + 6/mu], from
 * bracketed bisection on the two factors of f': the extremum-equation factor
 * yields the maxima, the amplitude factor the interior zeros. Requires
 * 0 <= beta < pi/2. Throws solver_error if no maximum is bracketed.
 */
PeakSet find_extrema(double beta, double mu, double dn);

/**
 * Width thresholds for trusting the stationary-phase peak position on the
 * superluminal side: ell_star = sqrt[(cos b + sin b)/(cos b - sin b)] dn d
 * and the universal floor sqrt(2 dn (nbar - 1)) d. Requires 0 <= beta < pi/4.
 */
ValidityBounds validity_constraint(double beta, const CrystalMedium& medium);

/// N-th half-waveplate center frequency omega0 = (2N+1) pi c / (dn d), N >= 0.
double half_waveplate_omega(const CrystalMedium& medium, int half_waveplate_index);

} // namespace birefsim
