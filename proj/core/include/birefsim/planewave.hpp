#pragma once

/**
 * planewave.hpp — monochromatic plane waves in a birefringent crystal slab
 * and the complex amplitude left after a downstream polarization filter.
 *
 * Geometry: propagation along x, crystal occupying 0 <= x <= d with optical
 * axis along z. A wave polarized at 45 degrees enters, splits into ordinary
 * (fast, index n_o, polarization y) and extraordinary (slow, index n_e,
 * polarization z) components, and is projected after exit onto a linear
 * filter at angle beta from the y-axis.
 *
 * The filtered relative amplitude is
 *
 *     z(beta, dkd) = (cos beta + sin beta * e^{i dkd}) / sqrt(2),
 *
 * with dkd = (k_e - k_o) d the optical phase difference accumulated across
 * the slab. |z| vanishes at isolated points of the (beta, dkd) plane and
 * the phase arg(z) winds by 2*pi around each of them.
 *
 * Units: c = 1 throughout; lengths in units of the crystal width d.
 */

#include <complex>
#include <vector>

#include "birefsim/errors.hpp"

namespace birefsim {

/// |z| below this is treated as an amplitude zero (the phase is undefined).
inline constexpr double singular_amplitude_tol = 1e-12;

/**
 * The physical scene: ordinary/extraordinary refractive indices and the
 * crystal width. Requires n_o >= 1, n_e >= 1 and n_e > n_o (the ordinary
 * wave is the fast one).
 */
class CrystalMedium {
public:
    CrystalMedium(double n_ordinary, double n_extraordinary, double width = 1.0);

    double n_ordinary() const { return n_o_; }
    double n_extraordinary() const { return n_e_; }
    double width() const { return d_; }

    double mean_index() const { return 0.5 * (n_e_ + n_o_); }
    double birefringence() const { return n_e_ - n_o_; }

    // dispersion relations, c = 1
    double wavenumber_vacuum(double omega) const { return omega; }
    double wavenumber_ordinary(double omega) const { return omega * n_o_; }
    double wavenumber_extraordinary(double omega) const { return omega * n_e_; }

    /// Optical phase difference dkd = omega * (n_e - n_o) * d.
    double phase_difference(double omega) const { return omega * birefringence() * d_; }

private:
    double n_o_;
    double n_e_;
    double d_;
};

/// Polarization angle of the downstream filter, canonicalized to [0, 2*pi).
class FilterSetting {
public:
    explicit FilterSetting(double beta);
    double angle() const { return beta_; }

private:
    double beta_;
};

/// Which of the three propagation regions a position x falls in.
enum class Region { before, inside, after };

Region classify_region(double x, double width);

/// A point of the (beta, dkd) parameter plane.
struct PhasePlanePoint {
    double beta;
    double dkd;
};

/// Axis-aligned rectangle in the (beta, dkd) plane. Empty (min > max on
/// either axis) windows are legal and contain nothing.
struct PhaseWindow {
    double beta_min;
    double beta_max;
    double dkd_min;
    double dkd_max;
};

/**
 * Filtered amplitude at one (beta, dkd) point, in polar decomposition
 * z = modulus * e^{i chi}. `modulus` is evaluated from the closed form
 * sqrt([1 + sin(2 beta) cos(dkd)] / 2); `z` from the complex expression.
 * At an amplitude zero `singular` is set and `chi` is meaningless.
 */
struct PhasePoint {
    double beta;
    double dkd;
    std::complex<double> z;
    double modulus;
    double chi;      ///< principal argument of z, in (-pi, pi]; 0 when singular
    bool singular;
};

/// Intensity reflection coefficient |(n1 - n2)/(n1 + n2)|^2 at a normal
/// interface. Diagnostic for the non-reflecting treatment of the slab.
double fresnel_reflectance(double n1, double n2);

/// z = (cos beta + sin beta * e^{i dkd}) / sqrt(2). No argument reduction.
std::complex<double> filtered_amplitude(double beta, double dkd);

PhasePoint modulus_and_phase(double beta, double dkd);

/**
 * All amplitude zeros inside `window`, enumerated analytically from the two
 * families
 *
 *   (a) beta = pi/4 (mod pi),   dkd = pi (mod 2*pi)   [half waveplate]
 *   (b) beta = 3*pi/4 (mod pi), dkd = 0  (mod 2*pi)
 *
 * sorted by (beta, dkd).
 */
std::vector<PhasePlanePoint> zero_points(const PhaseWindow& window);

/**
 * Winding number of chi along a counterclockwise circle of radius `radius`
 * around `center`, from summed principal-value phase increments over
 * `samples` loop points (samples >= 16). Throws singularity_error if the
 * loop passes through an amplitude zero.
 */
int phase_winding(const PhasePlanePoint& center, double radius, int samples);

/**
 * The monochromatic filtered field component E_beta(omega; x, t) / E_0 in
 * the region containing x:
 *
 *   x < 0:      e^{i(kx - wt)} (cos b + sin b) / sqrt(2)
 *   0 <= x <= d: [cos b e^{i(k_o x - wt)} + sin b e^{i(k_e x - wt)}] / sqrt(2)
 *   x > d:      e^{i(kx - wt)} [cos b e^{i(k_o - k)d} + sin b e^{i(k_e - k)d}] / sqrt(2)
 *
 * The region-pinned overload evaluates a specific branch regardless of x
 * (useful at the region boundaries, where the branches agree).
 */
std::complex<double> monochromatic_field(double omega, double x, double t,
                                         const CrystalMedium& medium, double beta);
std::complex<double> monochromatic_field(Region region, double omega, double x, double t,
                                         const CrystalMedium& medium, double beta);

} // namespace birefsim
