#include "ppdt/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "ppdt/asym.hpp"

namespace ppdt {

void SamplerConfig::validate() const {
    if (n < 1) throw std::invalid_argument("sampler: target size must be >= 1");
    if (radius_N < 0) throw std::invalid_argument("sampler: radius must be positive");
    if (window < 0) throw std::invalid_argument("sampler: window must be >= 0");
    if (target_accepted < 1) throw std::invalid_argument("sampler: target_accepted must be >= 1");
    if (workers < 1) throw std::invalid_argument("sampler: workers must be >= 1");
    if (m_max < 0) throw std::invalid_argument("sampler: m_max must be >= 0");
}

long compute_m_max(double radius_N, double tail_bound) {
    if (!(radius_N > 0)) throw std::invalid_argument("compute_m_max: radius must be positive");
    // Walk the tail from far out; heavier terms come first when summing back.
    const long hard_cap = static_cast<long>(radius_N * 200.0) + 64;
    std::vector<double> term(static_cast<std::size_t>(hard_cap) + 1, 0.0);
    for (long m = 1; m <= hard_cap; ++m) {
        const double a = std::exp(-static_cast<double>(m) / radius_N);
        term[static_cast<std::size_t>(m)] = static_cast<double>(m) * m * a / (1.0 - a);
    }
    double tail = 0.0;
    long cutoff = hard_cap;
    for (long m = hard_cap; m >= 1; --m) {
        tail += term[static_cast<std::size_t>(m)];
        if (tail >= tail_bound) {
            cutoff = m;  // first m (from above) whose inclusion crosses the bound
            break;
        }
        cutoff = m - 1;
    }
    return std::max<long>(cutoff, 1);
}

double expected_size(double radius_N, long m_max) {
    double total = 0.0;
    for (long m = 1; m <= m_max; ++m) {
        const double a = std::exp(-static_cast<double>(m) / radius_N);
        total += static_cast<double>(m) * m * a / (1.0 - a);
    }
    return total;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, int worker) {
    // Distinct worker streams: fold the worker index through the mixer twice.
    state_ = seed ^ (0xA0761D6478BD642FULL * static_cast<std::uint64_t>(worker + 1));
    splitmix64(state_);
    splitmix64(state_);
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

FactorModel::FactorModel(const SamplerConfig& config) : cfg_(config) {
    cfg_.validate();
    radius_ = cfg_.radius_N > 0 ? cfg_.radius_N : saddle_radius(static_cast<double>(cfg_.n));
    m_max_ = cfg_.m_max > 0 ? cfg_.m_max : compute_m_max(radius_);
    cfg_.radius_N = radius_;
    cfg_.m_max = m_max_;
    if (cfg_.max_attempts <= 0) cfg_.max_attempts = 1000000000L;
    rows_.resize(static_cast<std::size_t>(m_max_));
    for (long m = 1; m <= m_max_; ++m) {
        FactorRow& row = rows_[static_cast<std::size_t>(m - 1)];
        row.alpha = std::exp(-static_cast<double>(m) / radius_);
        row.log_alpha = -static_cast<double>(m) / radius_;
        row.p_zero = std::exp(static_cast<double>(m) * std::log1p(-row.alpha));
        row.odds_step = row.alpha / (1.0 - row.alpha);
    }
}

SampleRecord FactorModel::draw_once(RngStream& rng) const {
    SampleRecord rec;
    // Small fixed-capacity scratch for the chosen k slots of one m.
    std::vector<long> chosen;
    chosen.reserve(64);
    for (long m = 1; m <= m_max_; ++m) {
        const FactorRow& row = rows_[static_cast<std::size_t>(m - 1)];
        // B ~ Binomial(m, alpha): number of k slots with multiplicity >= 1.
        long b = 0;
        {
            double u = rng.next_unit();
            double pmf = row.p_zero;
            if (pmf <= 0.0) {
                // Extremely small p_zero cannot happen under the tail cutoff;
                // fall back to per-slot draws if it ever does.
                for (long k = 0; k < m; ++k)
                    if (rng.next_unit() <= row.alpha) ++b;
            } else {
                while (u > pmf && b < m) {
                    u -= pmf;
                    pmf *= row.odds_step * static_cast<double>(m - b) / static_cast<double>(b + 1);
                    ++b;
                }
            }
        }
        if (b == 0) continue;
        // Choose the b distinct slots uniformly.
        chosen.clear();
        if (b == m) {
            for (long k = 0; k < m; ++k) chosen.push_back(k);
        } else {
            while (static_cast<long>(chosen.size()) < b) {
                const long k = static_cast<long>(rng.next_u64() % static_cast<std::uint64_t>(m));
                if (std::find(chosen.begin(), chosen.end(), k) == chosen.end())
                    chosen.push_back(k);
            }
        }
        for (long k : chosen) {
            // Multiplicity >= 1, conditioned geometric: 1 + Geom(alpha).
            const long extra =
                static_cast<long>(std::log(rng.next_unit()) / row.log_alpha);
            const long c = 1 + extra;
            rec.size += m * c;
            rec.stat += (2 * k + 1 - m) * c;
            rec.trace_proxy += c;
        }
    }
    return rec;
}

namespace {

struct WorkerResult {
    std::vector<SampleRecord> accepted;
    long attempts = 0;
    double sum_size = 0.0;
    double sum_size2 = 0.0;
    long min_size = 0;
    long max_size = 0;
    bool collapsed = false;
};

void run_worker(const FactorModel& model, int worker, long quota, long attempt_budget,
                WorkerResult& out) {
    const SamplerConfig& cfg = model.config();
    RngStream rng(cfg.seed, worker);
    out.min_size = std::numeric_limits<long>::max();
    out.max_size = 0;
    std::uint64_t counter = 0;
    while (static_cast<long>(out.accepted.size()) < quota) {
        if (out.attempts >= attempt_budget) {
            out.collapsed = out.accepted.empty();
            if (out.collapsed) return;
            // Budget hit with partial progress: keep going; the budget guards
            // against zero-acceptance configurations, not slow ones.
        }
        SampleRecord rec = model.draw_once(rng);
        rec.worker = worker;
        rec.counter = counter++;
        ++out.attempts;
        out.sum_size += static_cast<double>(rec.size);
        out.sum_size2 += static_cast<double>(rec.size) * static_cast<double>(rec.size);
        out.min_size = std::min(out.min_size, rec.size);
        out.max_size = std::max(out.max_size, rec.size);
        if (std::labs(rec.size - cfg.n) <= cfg.window) out.accepted.push_back(rec);
    }
}

SizeSummary merge_summaries(const std::vector<WorkerResult>& results) {
    SizeSummary s;
    double sum = 0.0, sum2 = 0.0;
    s.min_size = std::numeric_limits<long>::max();
    for (const auto& r : results) {
        s.attempts += r.attempts;
        s.accepted += static_cast<long>(r.accepted.size());
        sum += r.sum_size;
        sum2 += r.sum_size2;
        s.min_size = std::min(s.min_size, r.min_size);
        s.max_size = std::max(s.max_size, r.max_size);
    }
    if (s.attempts > 0) {
        s.mean_size = sum / static_cast<double>(s.attempts);
        const double var = sum2 / static_cast<double>(s.attempts) - s.mean_size * s.mean_size;
        s.sd_size = var > 0 ? std::sqrt(var) : 0.0;
    }
    if (s.min_size == std::numeric_limits<long>::max()) s.min_size = 0;
    return s;
}

}  // namespace

std::vector<SampleRecord> sample_conditioned(const SamplerConfig& config) {
    const FactorModel model(config);
    const SamplerConfig& cfg = model.config();
    const int workers = cfg.workers;
    std::vector<WorkerResult> results(static_cast<std::size_t>(workers));
    const long base_quota = cfg.target_accepted / workers;
    const long extra = cfg.target_accepted % workers;
    const long budget = cfg.max_attempts / workers + 1;

    if (workers == 1) {
        run_worker(model, 0, cfg.target_accepted, budget, results[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            const long quota = base_quota + (w < extra ? 1 : 0);
            pool.emplace_back(run_worker, std::cref(model), w, quota, budget,
                              std::ref(results[static_cast<std::size_t>(w)]));
        }
        for (auto& t : pool) t.join();
    }

    const SizeSummary summary = merge_summaries(results);
    for (const auto& r : results) {
        if (r.collapsed) {
            std::ostringstream msg;
            msg << "acceptance collapsed: no draw hit |size - " << cfg.n << "| <= " << cfg.window
                << " within the attempt budget (attempts " << summary.attempts
                << ", size mean " << summary.mean_size << ", sd " << summary.sd_size << ", range ["
                << summary.min_size << ", " << summary.max_size << "])";
            throw acceptance_collapse_error(msg.str(), summary);
        }
    }

    std::vector<SampleRecord> merged;
    merged.reserve(static_cast<std::size_t>(cfg.target_accepted));
    for (const auto& r : results)
        merged.insert(merged.end(), r.accepted.begin(), r.accepted.end());
    return merged;
}

SizeSummary pilot_summary(const SamplerConfig& config, long pilot_draws) {
    const FactorModel model(config);
    const SamplerConfig& cfg = model.config();
    RngStream rng(cfg.seed, 0);
    std::vector<WorkerResult> results(1);
    WorkerResult& r = results[0];
    r.min_size = std::numeric_limits<long>::max();
    for (long i = 0; i < pilot_draws; ++i) {
        const SampleRecord rec = model.draw_once(rng);
        ++r.attempts;
        r.sum_size += static_cast<double>(rec.size);
        r.sum_size2 += static_cast<double>(rec.size) * static_cast<double>(rec.size);
        r.min_size = std::min(r.min_size, rec.size);
        r.max_size = std::max(r.max_size, rec.size);
        if (std::labs(rec.size - cfg.n) <= cfg.window) r.accepted.push_back(rec);
    }
    return merge_summaries(results);
}

double acceptance_rate_estimate(const SamplerConfig& config, long pilot_draws) {
    const SizeSummary s = pilot_summary(config, pilot_draws);
    return s.attempts == 0 ? 0.0
                           : static_cast<double>(s.accepted) / static_cast<double>(s.attempts);
}

}  // namespace ppdt
