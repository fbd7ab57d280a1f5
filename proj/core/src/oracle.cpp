#include "birefsim/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace birefsim {

namespace {
constexpr double pi = std::numbers::pi;
constexpr int panel_order = 64;
} // namespace

GaussLegendreRule GaussLegendreRule::order(int n) {
    if (n < 1) throw domain_error("GaussLegendreRule: order must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration on P_n from the Chebyshev-based initial guess
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

void QuadratureSpec::validate() const {
    if (nodes < 64) throw domain_error("QuadratureSpec: nodes must be >= 64");
    if (!(span >= 6.0)) throw domain_error("QuadratureSpec: span must be >= 6");
}

std::complex<double> quadrature_field(Region region, double x, double t,
                                      const CrystalMedium& medium, double beta,
                                      const GaussianPulse& pulse, const QuadratureSpec& spec) {
    spec.validate();
    static const GaussLegendreRule rule = GaussLegendreRule::order(panel_order);

    const double spectral_std = std::sqrt(2.0 / pulse.sigma);
    const double lo = pulse.omega0 - spec.span * spectral_std;
    const double hi = pulse.omega0 + spec.span * spectral_std;
    const int panels = std::max(1, spec.nodes / panel_order);

    std::complex<double> acc{0.0, 0.0};
    for (int p = 0; p < panels; ++p) {
        const double a = lo + (hi - lo) * static_cast<double>(p) / panels;
        const double b = lo + (hi - lo) * static_cast<double>(p + 1) / panels;
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        for (int i = 0; i < panel_order; ++i) {
            const double omega = mid + half * rule.nodes[i];
            const double dw = omega - pulse.omega0;
            const std::complex<double> sample =
                std::exp(-0.25 * pulse.sigma * dw * dw) *
                monochromatic_field(region, omega, x, t, medium, beta);
            if (!std::isfinite(sample.real()) || !std::isfinite(sample.imag())) {
                std::ostringstream msg;
                msg << "quadrature_field: non-finite integrand sample at omega=" << omega
                    << " (x=" << x << ", t=" << t << ")";
                throw solver_error(msg.str());
            }
            acc += rule.weights[i] * half * sample;
        }
    }
    return std::sqrt(pulse.sigma / (4.0 * pi)) * acc;
}

std::complex<double> quadrature_field(double x, double t, const CrystalMedium& medium,
                                      double beta, const GaussianPulse& pulse,
                                      const QuadratureSpec& spec) {
    return quadrature_field(classify_region(x, medium.width()), x, t, medium, beta, pulse, spec);
}

GridComparison compare_grid(std::span<const std::pair<double, double>> points,
                            const CrystalMedium& medium, double beta,
                            const GaussianPulse& pulse, const QuadratureSpec& spec) {
    GridComparison report;
    for (const auto& [x, t] : points) {
        const auto closed = closed_form_field(x, t, medium, beta, pulse).value;
        const auto quad = quadrature_field(x, t, medium, beta, pulse, spec);
        const double err = std::abs(closed - quad);
        if (err > report.max_abs_error) {
            report.max_abs_error = err;
            report.argmax_x = x;
            report.argmax_t = t;
        }
        ++report.points;
    }
    return report;
}

} // namespace birefsim
