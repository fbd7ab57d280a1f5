#pragma once

/**
 * oracle.hpp — frequency-quadrature synthesis of the Gaussian packet.
 *
 * Rebuilds the filtered field by direct numerical integration of the
 * monochromatic components against the spectral weight,
 *
 *   E_beta(x, t) = sqrt(sigma/4 pi) * Int dw e^{-sigma (w - w0)^2 / 4} E_beta(w; x, t),
 *
 * with no use of the closed-form region expressions. Serves as ground truth
 * for them: with span >= 8 spectral standard deviations and >= 2048 nodes
 * the combined truncation + quadrature error is below 1e-10.
 */

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "birefsim/pulse.hpp"

namespace birefsim {

/// Gauss–Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    static GaussLegendreRule order(int n);
};

/// Discretization of the spectral integral: total node budget and the
/// half-width of the integration window in spectral standard deviations
/// (std of the weight is sqrt(2/sigma)). nodes >= 64, span >= 6.
struct QuadratureSpec {
    int nodes = 2048;
    double span = 8.0;
    void validate() const;
};

/// Spectral integral evaluated with the integrand of the region containing x.
std::complex<double> quadrature_field(double x, double t, const CrystalMedium& medium,
                                      double beta, const GaussianPulse& pulse,
                                      const QuadratureSpec& spec);

/// Same, with the region pinned explicitly (for boundary studies).
std::complex<double> quadrature_field(Region region, double x, double t,
                                      const CrystalMedium& medium, double beta,
                                      const GaussianPulse& pulse, const QuadratureSpec& spec);

struct GridComparison {
    double max_abs_error = 0.0;
    double argmax_x = 0.0;
    double argmax_t = 0.0;
    int points = 0;
};

/// Max |closed_form_field - quadrature_field| over (x, t) samples.
GridComparison compare_grid(std::span<const std::pair<double, double>> points,
                            const CrystalMedium& medium, double beta,
                            const GaussianPulse& pulse, const QuadratureSpec& spec);

} // namespace birefsim
