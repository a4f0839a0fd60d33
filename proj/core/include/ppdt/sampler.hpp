#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppdt {

/// Configuration of the product-formula Boltzmann sampler. Each factor (m, k),
/// k < m <= m_max, carries an independent geometric multiplicity with ratio
/// exp(-m/radius_N); conditioning on total size n realizes the uniform
/// measure on plane partitions of n (exactly when window = 0).
struct SamplerConfig {
    long n = 0;                    // target size
    double radius_N = 0.0;         // 0 = saddle radius (n / 2 zeta(3))^(1/3)
    long m_max = 0;                // 0 = smallest cutoff with tail mass < 1e-9
    long window = 0;               // accept |size - n| <= window; 0 = exact
    std::uint64_t seed = 1;
    long target_accepted = 1000;
    long max_attempts = 0;         // 0 = 1e9 per run; collapse diagnostics beyond
    int workers = 1;

    void validate() const;
};

struct SampleRecord {
    int worker = 0;
    std::uint64_t counter = 0;     // draw index within the worker's stream
    long size = 0;
    long stat = 0;                 // w_plus - w_minus
    long trace_proxy = 0;          // total multiplicity, distributed as w0
};

/// Summary of attempted sizes, carried by collapse diagnostics and rate pilots.
struct SizeSummary {
    long attempts = 0;
    long accepted = 0;
    double mean_size = 0.0;
    double sd_size = 0.0;
    long min_size = 0;
    long max_size = 0;
};

class acceptance_collapse_error : public std::runtime_error {
public:
    acceptance_collapse_error(const std::string& what, SizeSummary summary)
        : std::runtime_error(what), summary(summary) {}
    SizeSummary summary;
};

/// Smallest cutoff M with expected neglected size mass
/// sum_{m>M} m^2 e^(-m/N) / (1 - e^(-m/N)) below the bound.
long compute_m_max(double radius_N, double tail_bound = 1e-9);

/// Expected unconditioned size sum_{m<=m_max} m^2 e^(-m/N)/(1-e^(-m/N));
/// approaches 2 zeta(3) N^3 for large N.
double expected_size(double radius_N, long m_max);

/// Counter-based RNG stream: worker w consumes the SplitMix64 sequence seeded
/// by mix(seed, w). Reproducible for fixed (seed, worker index).
class RngStream {
public:
    RngStream(std::uint64_t seed, int worker);
    std::uint64_t next_u64();
    double next_unit();  // uniform in (0, 1]

private:
    std::uint64_t state_;
};

/// Filled-in configuration with the derived radius/m_max/per-factor tables.
class FactorModel {
public:
    explicit FactorModel(const SamplerConfig& config);

    const SamplerConfig& config() const { return cfg_; }
    double radius() const { return radius_; }
    long m_max() const { return m_max_; }

    /// One unconditioned draw of (size, stat, trace_proxy).
    SampleRecord draw_once(RngStream& rng) const;

private:
    SamplerConfig cfg_;
    double radius_ = 0.0;
    long m_max_ = 0;
    struct FactorRow {
        double alpha;       // geometric ratio e^(-m/N)
        double log_alpha;
        double p_zero;      // (1-alpha)^m: chance no k slot fires for this m
        double odds_step;   // alpha/(1-alpha), binomial pmf walk factor
    };
    std::vector<FactorRow> rows_;  // index m-1
};

/// Rejection sampling until target_accepted records with |size - n| <= window
/// are collected. Deterministic for fixed (config, seed, workers): worker w
/// fills quota w of the target and records are merged in worker-then-counter
/// order. Throws acceptance_collapse_error when a worker exhausts its attempt
/// budget with zero acceptances.
std::vector<SampleRecord> sample_conditioned(const SamplerConfig& config);

/// Empirical acceptance fraction over a pilot batch of unconditioned draws.
double acceptance_rate_estimate(const SamplerConfig& config, long pilot_draws = 20000);

/// Pilot summary (attempts, acceptances, size statistics).
SizeSummary pilot_summary(const SamplerConfig& config, long pilot_draws);

}  // namespace ppdt
