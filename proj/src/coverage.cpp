#include "o2i/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "o2i/constants.hpp"
#include "o2i/diffraction.hpp"
#include "o2i/error.hpp"
#include "o2i/parallel.hpp"
#include "o2i/special.hpp"

namespace o2i {

namespace {

constexpr std::uint64_t kBlockSize = 4096;
constexpr std::uint64_t kMinTrials = 10000;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double x) { return 10.0 * std::log10(x); }

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) throw DomainError(std::string(what) + " must be positive");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

void validate(const FadingModel& fading) {
    if (!(fading.m_los >= 0.5) || !(fading.m_nlos >= 0.5))
        throw DomainError("Nakagami shape must be >= 0.5");
    for (double n : {fading.n_los, fading.n_nlos})
        if (!(n > 0.5 && n < 6.0)) throw DomainError("path-loss exponent must lie in (0.5, 6)");
}

void validate(const LinkBudget& budget) {
    if (!std::isfinite(budget.tx_power_dbm) || !std::isfinite(budget.noise_floor_dbm) ||
        !std::isfinite(budget.snr_threshold_db))
        throw DomainError("link budget values must be finite");
    if (!(budget.noise_floor_dbm < budget.tx_power_dbm))
        throw DomainError("noise floor must be below transmit power");
    require_positive(budget.frequency_hz, "frequency");
}

double mean_snr(double d, double exponent, const LinkBudget& budget) {
    require_positive(d, "distance");
    validate(budget);
    const double lambda = wavelength(budget.frequency_hz);
    const double gain = lambda * lambda / (16.0 * kPi * kPi);
    const double tx_mw = db_to_linear(budget.tx_power_dbm);
    const double noise_mw = db_to_linear(budget.noise_floor_dbm);
    return gain * tx_mw / std::pow(d, exponent) / noise_mw;
}

double p_los_at_distance(double bs_distance, double ms_distance, double window_width,
                         double frequency_hz, double segment_width) {
    require_positive(bs_distance, "bs distance");
    require_positive(ms_distance, "ms distance");
    require_positive(window_width, "window width");
    require_positive(frequency_hz, "frequency");
    const double width = segment_width > 0.0 ? segment_width : ms_distance;
    const double r_d = fresnel_radius(bs_distance, ms_distance, wavelength(frequency_hz));
    const double p = (bs_distance + ms_distance) * (window_width - 2.0 * kClearanceRatio * r_d) /
                     (bs_distance * width);
    return std::clamp(p, 0.0, 1.0);
}

double nakagami_ccdf(double m, double mean_snr, double threshold) {
    if (!(m >= 0.5) || !std::isfinite(m)) throw DomainError("Nakagami shape must be >= 0.5");
    require_positive(mean_snr, "mean SNR");
    if (!(threshold >= 0.0)) throw DomainError("threshold must be nonnegative");
    return gamma_q(m, m * threshold / mean_snr);
}

CoverageResult coverage_probability(double bs_distance, double ms_distance, double window_width,
                                    const FadingModel& fading, const LinkBudget& budget) {
    validate(fading);
    validate(budget);
    const double d = bs_distance + ms_distance;
    const double snr_los = mean_snr(d, fading.n_los, budget);
    const double snr_nlos = mean_snr(d, fading.n_nlos, budget);
    const double threshold = db_to_linear(budget.snr_threshold_db);

    CoverageResult out;
    out.p_los = p_los_at_distance(bs_distance, ms_distance, window_width, budget.frequency_hz);
    out.snr_los_db = linear_to_db(snr_los);
    out.snr_nlos_db = linear_to_db(snr_nlos);
    out.p_cov = nakagami_ccdf(fading.m_los, snr_los, threshold) * out.p_los +
                nakagami_ccdf(fading.m_nlos, snr_nlos, threshold) * (1.0 - out.p_los);
    out.p_cov = std::clamp(out.p_cov, 0.0, 1.0);
    return out;
}

double coverage_mc_oracle(double bs_distance, double ms_distance, double window_width,
                          const FadingModel& fading, const LinkBudget& budget,
                          std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    if (trials < kMinTrials) throw DomainError("Monte Carlo oracle needs at least 10^4 trials");
    validate(fading);
    validate(budget);
    const double d = bs_distance + ms_distance;
    const double snr_los = mean_snr(d, fading.n_los, budget);
    const double snr_nlos = mean_snr(d, fading.n_nlos, budget);
    const double threshold = db_to_linear(budget.snr_threshold_db);
    const double p_los =
        p_los_at_distance(bs_distance, ms_distance, window_width, budget.frequency_hz);

    const std::uint64_t blocks = (trials + kBlockSize - 1) / kBlockSize;
    std::vector<std::uint64_t> hits(blocks, 0);
    parallel_chunks(blocks, resolve_thread_count(threads), [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            std::mt19937_64 rng(splitmix64(seed + k));
            std::gamma_distribution<double> los_gain(fading.m_los, 1.0 / fading.m_los);
            std::gamma_distribution<double> nlos_gain(fading.m_nlos, 1.0 / fading.m_nlos);
            const std::uint64_t first = k * kBlockSize;
            const std::uint64_t n = std::min(kBlockSize, trials - first);
            std::uint64_t count = 0;
            for (std::uint64_t t = 0; t < n; ++t) {
                const bool los = unit_uniform(rng) < p_los;
                const double snr = los ? los_gain(rng) * snr_los : nlos_gain(rng) * snr_nlos;
                if (snr > threshold) ++count;
            }
            hits[k] = count;
        }
    });

    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;
    return static_cast<double>(total) / static_cast<double>(trials);
}

} // namespace o2i
