#pragma once

#include <cstdint>

namespace o2i {

struct FadingModel {
    double m_los = 10.0; // Nakagami shape, LoS
    double m_nlos = 1.0; // Nakagami shape, NLoS (Rayleigh)
    double n_los = 1.2;  // path-loss exponent, LoS
    double n_nlos = 2.9; // path-loss exponent, NLoS
};

struct LinkBudget {
    double tx_power_dbm = 30.0;
    double noise_floor_dbm = -100.0;
    double snr_threshold_db = -5.0;
    double frequency_hz = 28e9;
};

struct CoverageResult {
    double p_cov = 0.0;
    double p_los = 0.0;
    double snr_los_db = 0.0;
    double snr_nlos_db = 0.0;
};

void validate(const FadingModel& fading);
void validate(const LinkBudget& budget);

// Mean received SNR (linear): lambda^2 / (16 pi^2) * P_t / d^n / KTB.
double mean_snr(double d, double exponent, const LinkBudget& budget);

/// LoS fraction of the MS positions on a segment of width `segment_width`
/// at depth d_n behind the window, BS at normal incidence:
/// (d_a + d_n) (L_w - 1.2 r_d) / (d_a * segment_width), r_d = r(d_a, d_n), clamped to [0, 1].
/// segment_width <= 0 selects d_n.
double p_los_at_distance(double bs_distance, double ms_distance, double window_width,
                         double frequency_hz, double segment_width = 0.0);

// 1 - P(m, m * threshold / mean_snr): probability that Gamma(m, 1/m) * mean_snr > threshold.
double nakagami_ccdf(double m, double mean_snr, double threshold);

// Both states use distance d_a + d_n with their own exponent and Nakagami shape.
CoverageResult coverage_probability(double bs_distance, double ms_distance, double window_width,
                                    const FadingModel& fading, const LinkBudget& budget);

/// Stochastic check of coverage_probability: draws the LoS state, then a
/// Gamma(m, 1/m) power gain, and counts SNRs above threshold.
///
/// Trials are processed in fixed blocks of 4096; block k runs a std::mt19937_64
/// seeded with splitmix64(seed + k), so the result depends only on (trials, seed),
/// never on the worker count. Requires trials >= 10^4.
double coverage_mc_oracle(double bs_distance, double ms_distance, double window_width,
                          const FadingModel& fading, const LinkBudget& budget,
                          std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

} // namespace o2i
