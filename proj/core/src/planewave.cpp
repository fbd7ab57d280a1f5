#include "birefsim/planewave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace birefsim {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
} // namespace

CrystalMedium::CrystalMedium(double n_ordinary, double n_extraordinary, double width)
    : n_o_(n_ordinary), n_e_(n_extraordinary), d_(width) {
    if (!(n_o_ >= 1.0) || !(n_e_ >= 1.0))
        throw domain_error("refractive indices must be >= 1");
    if (!(n_e_ > n_o_))
        throw domain_error("birefringence n_e - n_o must be positive");
    if (!(d_ > 0.0) || !std::isfinite(d_))
        throw domain_error("crystal width must be positive and finite");
}

FilterSetting::FilterSetting(double beta) {
    if (!std::isfinite(beta)) throw domain_error("filter angle must be finite");
    double b = std::fmod(beta, two_pi);
    if (b < 0.0) {
        b += two_pi;
        if (b >= two_pi) b = 0.0; // rounding pushed -0 ulp back to 2*pi
    }
    beta_ = b;
}

Region classify_region(double x, double width) {
    if (x < 0.0) return Region::before;
    if (x <= width) return Region::inside;
    return Region::after;
}

double fresnel_reflectance(double n1, double n2) {
    if (!(n1 > 0.0) || !(n2 > 0.0))
        throw domain_error("fresnel_reflectance requires positive indices");
    const double r = (n1 - n2) / (n1 + n2);
    return r * r;
}

std::complex<double> filtered_amplitude(double beta, double dkd) {
    return (std::cos(beta) + std::sin(beta) * std::polar(1.0, dkd)) * inv_sqrt2;
}

PhasePoint modulus_and_phase(double beta, double dkd) {
    PhasePoint p;
    p.beta = beta;
    p.dkd = dkd;
    p.z = filtered_amplitude(beta, dkd);
    p.modulus = std::sqrt(std::max(0.0, 0.5 * (1.0 + std::sin(2.0 * beta) * std::cos(dkd))));
    p.singular = std::abs(p.z) < singular_amplitude_tol;
    // the arctan closed form for chi is branch-ambiguous where
    // cos(dkd) + cot(beta) < 0; the complex argument is not
    p.chi = p.singular ? 0.0 : std::arg(p.z);
    return p;
}

namespace {

void append_family(double beta_base, double dkd_base, double beta_period, double dkd_period,
                   const PhaseWindow& w, std::vector<PhasePlanePoint>& out) {
    const long jlo = static_cast<long>(std::ceil((w.beta_min - beta_base) / beta_period));
    const long jhi = static_cast<long>(std::floor((w.beta_max - beta_base) / beta_period));
    const long klo = static_cast<long>(std::ceil((w.dkd_min - dkd_base) / dkd_period));
    const long khi = static_cast<long>(std::floor((w.dkd_max - dkd_base) / dkd_period));
    for (long j = jlo; j <= jhi; ++j)
        for (long k = klo; k <= khi; ++k)
            out.push_back({beta_base + static_cast<double>(j) * beta_period,
                           dkd_base + static_cast<double>(k) * dkd_period});
}

} // namespace

std::vector<PhasePlanePoint> zero_points(const PhaseWindow& window) {
    if (!std::isfinite(window.beta_min) || !std::isfinite(window.beta_max) ||
        !std::isfinite(window.dkd_min) || !std::isfinite(window.dkd_max))
        throw domain_error("zero_points requires a finite window");

    std::vector<PhasePlanePoint> pts;
    if (window.beta_min > window.beta_max || window.dkd_min > window.dkd_max)
        return pts; // empty window

    append_family(0.25 * pi, pi, pi, two_pi, window, pts);  // half-waveplate family
    append_family(0.75 * pi, 0.0, pi, two_pi, window, pts);

    std::sort(pts.begin(), pts.end(), [](const PhasePlanePoint& a, const PhasePlanePoint& b) {
        return a.beta != b.beta ? a.beta < b.beta : a.dkd < b.dkd;
    });
    return pts;
}

int phase_winding(const PhasePlanePoint& center, double radius, int samples) {
    if (samples < 16) throw domain_error("phase_winding needs at least 16 samples");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw domain_error("phase_winding radius must be positive and finite");

    const auto chi_at = [&](int k) {
        const double theta = two_pi * static_cast<double>(k) / static_cast<double>(samples);
        const auto z = filtered_amplitude(center.beta + radius * std::cos(theta),
                                          center.dkd + radius * std::sin(theta));
        if (std::abs(z) < singular_amplitude_tol)
            throw singularity_error("phase_winding loop passes through an amplitude zero");
        return std::arg(z);
    };

    double total = 0.0;
    double prev = chi_at(0);
    for (int k = 1; k <= samples; ++k) {
        const double cur = chi_at(k % samples);
        total += std::remainder(cur - prev, two_pi);
        prev = cur;
    }
    return static_cast<int>(std::llround(total / two_pi));
}

std::complex<double> monochromatic_field(Region region, double omega, double x, double t,
                                         const CrystalMedium& medium, double beta) {
    const double cb = std::cos(beta);
    const double sb = std::sin(beta);
    const double d = medium.width();
    switch (region) {
        case Region::before:
            return inv_sqrt2 * (cb + sb) * std::polar(1.0, omega * (x - t));
        case Region::inside:
            return inv_sqrt2 *
                   (cb * std::polar(1.0, medium.wavenumber_ordinary(omega) * x - omega * t) +
                    sb * std::polar(1.0, medium.wavenumber_extraordinary(omega) * x - omega * t));
        case Region::after:
        default:
            return inv_sqrt2 * std::polar(1.0, omega * (x - t)) *
                   (cb * std::polar(1.0, (medium.wavenumber_ordinary(omega) - omega) * d) +
                    sb * std::polar(1.0, (medium.wavenumber_extraordinary(omega) - omega) * d));
    }
}

std::complex<double> monochromatic_field(double omega, double x, double t,
                                         const CrystalMedium& medium, double beta) {
    return monochromatic_field(classify_region(x, medium.width()), omega, x, t, medium, beta);
}

} // namespace birefsim
