#pragma once

/**
 * timeshift.hpp — stationary-phase arrival time of the filtered peak.
 *
 * The peak of a narrowband signal leaves the crystal shifted in time,
 * relative to free-space propagation, by
 *
 *   tau = (d/c) [ nbar - 1 - (1/2) cos(2 beta) dn / (1 + cos(dkd) sin(2 beta)) ],
 *
 * nbar = (n_e + n_o)/2, dn = n_e - n_o. tau < 0 means the filtered peak is
 * advanced (apparent superluminal transit). Near an amplitude zero the shift
 * is unbounded; to first order in eps = beta - pi/4 and phi = dkd - (2N+1)pi
 *
 *   tau = (d/c) [ nbar - 1 + 2 eps dn / (4 eps^2 + phi^2) ],
 *
 * which is negative exactly inside the ellipse
 *
 *   (eps + a)^2 / a^2 + phi^2 / (4 a^2) < 1,   a = dn / (4 (nbar - 1)).
 *
 * All tau values are in units of d/c.
 */

#include "birefsim/planewave.hpp"

namespace birefsim {

/**
 * Offsets from the half-waveplate point: eps = beta - pi/4,
 * phi = dkd - (2N+1) pi. The first-order expressions are trustworthy for
 * |eps|, |phi| well below 0.3; beyond that results carry an out-of-regime
 * flag rather than being rejected.
 */
struct SmallSignalCoords {
    double epsilon = 0.0;
    double phi = 0.0;
    int waveplate_index = 0;

    /// Decompose an absolute (beta, dkd) pair about the nearest half-waveplate line.
    static SmallSignalCoords from_plane(double beta, double dkd);

    double beta() const;
    double dkd() const;
    bool in_regime() const;
};

struct TimeShiftResult {
    double tau;          ///< units of d/c
    bool superluminal;   ///< tau < 0
    bool in_regime = true;
};

/// Exact stationary-phase time shift. Throws singularity_error when
/// 1 + cos(dkd) sin(2 beta) falls below 1e-12 (amplitude-zero neighborhood).
TimeShiftResult time_shift(const CrystalMedium& medium, double beta, double dkd);

/// First-order time shift in (eps, phi). Throws singularity_error at eps = phi = 0.
TimeShiftResult small_signal_tau(const CrystalMedium& medium, const SmallSignalCoords& coords);

/// Semi-minor scale a = dn / (4 (nbar - 1)) of the superluminality ellipse.
double superluminal_scale(const CrystalMedium& medium);

/// Strict interior test of the first-order superluminality ellipse.
bool superluminal_region(const CrystalMedium& medium, const SmallSignalCoords& coords);

} // namespace birefsim
