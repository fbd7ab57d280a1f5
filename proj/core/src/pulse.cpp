#include "birefsim/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace birefsim {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double exp_rescale_limit = 700.0; // exp overflow threshold in double

std::optional<int> detect_waveplate_index(double omega0, const CrystalMedium& medium) {
    const double r = medium.phase_difference(omega0) / pi;
    const long nearest = std::lround(r);
    if (nearest >= 1 && nearest % 2 == 1 && std::abs(r - static_cast<double>(nearest)) < 1e-12)
        return static_cast<int>((nearest - 1) / 2);
    return std::nullopt;
}

} // namespace

GaussianPulse GaussianPulse::from_sigma(double omega0, double sigma, const CrystalMedium& medium) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw domain_error("GaussianPulse: sigma must be positive and finite");
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        throw domain_error("GaussianPulse: omega0 must be positive and finite");
    GaussianPulse p;
    p.omega0 = omega0;
    p.sigma = sigma;
    p.ell = std::sqrt(sigma);
    p.mu = medium.width() / p.ell;
    p.waveplate_index = detect_waveplate_index(omega0, medium);
    return p;
}

GaussianPulse GaussianPulse::tuned(const CrystalMedium& medium, int half_waveplate_index,
                                   double ell) {
    if (!(ell > 0.0) || !std::isfinite(ell))
        throw domain_error("GaussianPulse: ell must be positive and finite");
    const double omega0 = half_waveplate_omega(medium, half_waveplate_index);
    GaussianPulse p;
    p.omega0 = omega0;
    p.sigma = ell * ell;
    p.ell = ell;
    p.mu = medium.width() / ell;
    p.waveplate_index = half_waveplate_index;
    return p;
}

double xi_of(double x, double t, const CrystalMedium& medium) {
    return (x - t) / medium.width() + (medium.mean_index() - 1.0);
}

double xi0_lightspeed(const CrystalMedium& medium) { return medium.mean_index() - 1.0; }

FieldSample closed_form_field(double x, double t, const CrystalMedium& medium, double beta,
                              const GaussianPulse& pulse) {
    const double cb = std::cos(beta);
    const double sb = std::sin(beta);
    const double sig = pulse.sigma;
    const double w0 = pulse.omega0;
    const double d = medium.width();
    const Region region = classify_region(x, d);

    std::complex<double> value;
    switch (region) {
        case Region::before: {
            const double s = x - t;
            value = inv_sqrt2 * (cb + sb) * std::exp(-s * s / sig) * std::polar(1.0, w0 * s);
            break;
        }
        case Region::inside: {
            const double no = medium.n_ordinary();
            const double ne = medium.n_extraordinary();
            const double so = x - t / no;
            const double se = x - t / ne;
            value = inv_sqrt2 * (cb * std::exp(-no * no * so * so / sig) *
                                     std::polar(1.0, w0 * no * so) +
                                 sb * std::exp(-ne * ne * se * se / sig) *
                                     std::polar(1.0, w0 * ne * se));
            break;
        }
        case Region::after: {
            const double so = x - t - (1.0 - medium.n_ordinary()) * d;
            const double se = x - t - (1.0 - medium.n_extraordinary()) * d;
            value = inv_sqrt2 *
                    (cb * std::exp(-so * so / sig) * std::polar(1.0, w0 * so) +
                     sb * std::exp(-se * se / sig) * std::polar(1.0, w0 * se));
            break;
        }
    }
    return {xi_of(x, t, medium), value, region};
}

double envelope_f(double xi, double beta, double mu, double dn) {
    const double uo = mu * (xi - 0.5 * dn);
    const double ue = mu * (xi + 0.5 * dn);
    const double g = std::cos(beta) * std::exp(-uo * uo) - std::sin(beta) * std::exp(-ue * ue);
    return 0.5 * g * g;
}

double xi1_stationary(double beta, double dn) {
    const double cb = std::cos(beta);
    const double sb = std::sin(beta);
    if (std::abs(cb - sb) < std::numbers::sqrt2 * 1e-12)
        throw singularity_error("xi1_stationary: pole at beta = pi/4 (mod pi)");
    return 0.5 * dn * (cb + sb) / (cb - sb);
}

double peak_residual(double xi, double beta, double mu, double dn) {
    const double w = mu * mu * xi * dn;
    const double a = std::cos(beta) * (xi - 0.5 * dn);
    const double b = std::sin(beta) * (xi + 0.5 * dn);
    if (std::abs(w) > exp_rescale_limit)
        return a * std::exp(w - std::abs(w)) - b * std::exp(-w - std::abs(w));
    return a * std::exp(w) - b * std::exp(-w);
}

namespace {

// Bisect every sign change of fn on a uniform sample of [lo, hi].
template <typename F>
std::vector<double> bracketed_roots(const F& fn, double lo, double hi, int samples,
                                    double xtol) {
    std::vector<double> roots;
    double xa = lo;
    double fa = fn(xa);
    for (int i = 1; i < samples; ++i) {
        const double xb = lo + (hi - lo) * static_cast<double>(i) / (samples - 1);
        const double fb = fn(xb);
        if (fa == 0.0) {
            roots.push_back(xa);
        } else if (fa * fb < 0.0) {
            double a = xa, b = xb, va = fa;
            while (b - a > xtol) {
                const double m = 0.5 * (a + b);
                const double vm = fn(m);
                if (vm == 0.0) {
                    a = b = m;
                    break;
                }
                if (va * vm < 0.0) {
                    b = m;
                } else {
                    a = m;
                    va = vm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0.0) roots.push_back(xa);
    return roots;
}

} // namespace

PeakSet find_extrema(double beta, double mu, double dn) {
    if (!(beta >= 0.0) || !(beta < 0.5 * pi))
        throw domain_error("find_extrema: beta must lie in [0, pi/2)");
    if (!(mu > 0.0) || !(dn > 0.0))
        throw domain_error("find_extrema: mu and dn must be positive");

    const double lo = -0.5 * dn - 6.0 / mu;
    const double hi = 0.5 * dn + 6.0 / mu;
    constexpr int samples = 512;
    constexpr double xtol = 1e-13;

    const auto residual = [&](double xi) { return peak_residual(xi, beta, mu, dn); };
    const auto amplitude = [&](double xi) {
        const double uo = mu * (xi - 0.5 * dn);
        const double ue = mu * (xi + 0.5 * dn);
        return std::cos(beta) * std::exp(-uo * uo) - std::sin(beta) * std::exp(-ue * ue);
    };

    std::vector<double> candidates = bracketed_roots(residual, lo, hi, samples, xtol);

    // keep genuine maxima of f: negative second difference at the root,
    // probed at a fraction of the envelope feature size 1/mu
    const double h = 0.01 / mu;
    std::vector<Extremum> maxima;
    for (double xi : candidates) {
        const double fm = envelope_f(xi, beta, mu, dn);
        const double second =
            envelope_f(xi + h, beta, mu, dn) - 2.0 * fm + envelope_f(xi - h, beta, mu, dn);
        if (second < 0.0) maxima.push_back({xi, fm});
    }

    if (maxima.empty()) {
        std::ostringstream msg;
        msg << "find_extrema: no envelope maximum bracketed in [" << lo << ", " << hi
            << "] (beta=" << beta << ", mu=" << mu << ", dn=" << dn << ", " << samples
            << " samples)";
        throw solver_error(msg.str());
    }

    std::sort(maxima.begin(), maxima.end(),
              [](const Extremum& a, const Extremum& b) { return a.xi < b.xi; });

    PeakSet set;
    set.advanced = maxima.back();
    if (maxima.size() >= 2) set.retarded = maxima[maxima.size() - 2];
    set.minima = bracketed_roots(amplitude, lo, hi, samples, xtol);
    return set;
}

ValidityBounds validity_constraint(double beta, const CrystalMedium& medium) {
    const double cb = std::cos(beta);
    const double sb = std::sin(beta);
    if (!(beta >= 0.0) || !(beta < 0.25 * pi) || !(cb > sb))
        throw domain_error("validity_constraint: requires 0 <= beta < pi/4");
    const double dn = medium.birefringence();
    const double d = medium.width();
    ValidityBounds bounds;
    bounds.ell_star = std::sqrt((cb + sb) / (cb - sb)) * dn * d;
    bounds.universal_lower_bound = std::sqrt(2.0 * dn * (medium.mean_index() - 1.0)) * d;
    return bounds;
}

double half_waveplate_omega(const CrystalMedium& medium, int half_waveplate_index) {
    if (half_waveplate_index < 0)
        throw domain_error("half_waveplate_omega: index must be non-negative");
    const double dn = medium.birefringence();
    if (!(dn > 0.0)) throw domain_error("half_waveplate_omega: birefringence must be positive");
    return static_cast<double>(2 * half_waveplate_index + 1) * pi / (dn * medium.width());
}

} // namespace birefsim
