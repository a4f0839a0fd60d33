#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "ppdt/asym.hpp"
#include "ppdt/expand.hpp"
#include "ppdt/moments.hpp"
#include "ppdt/partitions.hpp"
#include "ppdt/sampler.hpp"

using namespace ppdt;

namespace {

SamplerConfig base_config(long n, long target, std::uint64_t seed = 42) {
    SamplerConfig cfg;
    cfg.n = n;
    cfg.target_accepted = target;
    cfg.seed = seed;
    return cfg;
}

// chi-square against the exact conditional pmf; bins with tiny expectation are
// pooled into their neighbor.
double chi2_pvalue_against(const DistributionTable& table,
                           const std::vector<SampleRecord>& records) {
    std::map<long, long> hist;
    for (const auto& r : records) ++hist[r.stat];
    const double total = static_cast<double>(records.size());
    double chi2 = 0.0;
    int bins = 0;
    double pooled_obs = 0.0, pooled_exp = 0.0;
    for (std::size_t i = 0; i < table.support.size(); ++i) {
        pooled_exp += ratio_to_double(table.weights[i], table.total) * total;
        const auto it = hist.find(table.support[i]);
        pooled_obs += it == hist.end() ? 0.0 : static_cast<double>(it->second);
        if (pooled_exp >= 5.0) {
            chi2 += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
            ++bins;
            pooled_obs = pooled_exp = 0.0;
        }
    }
    if (pooled_exp > 0.0)
        chi2 += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp, ++bins;
    return chi_square_pvalue(chi2, bins - 1);
}

}  // namespace

TEST_CASE("m_max honors the tail bound") {
    for (double N : {1.5, 5.0, 16.0}) {
        const long m_max = compute_m_max(N);
        auto tail_from = [&](long start) {
            double t = 0.0;
            for (long m = start; m < start + 4000; ++m) {
                const double a = std::exp(-static_cast<double>(m) / N);
                t += static_cast<double>(m) * m * a / (1.0 - a);
            }
            return t;
        };
        CHECK(tail_from(m_max + 1) < 1e-9);
        CHECK(tail_from(m_max) >= 1e-9);
    }
}

TEST_CASE("expected size approaches 2 zeta(3) N^3") {
    const double N = 16.0;
    const long m_max = compute_m_max(N);
    const double expect = expected_size(N, m_max);
    const double limit = 2.0 * static_cast<double>(Constants::zeta3) * N * N * N;
    CHECK(std::abs(expect / limit - 1.0) < 0.01);

    // Monte Carlo mean within 1% of the sum formula at N = 16.
    SamplerConfig cfg = base_config(static_cast<long>(limit), 1);
    cfg.radius_N = N;
    const SizeSummary pilot = pilot_summary(cfg, 20000);
    CHECK(std::abs(pilot.mean_size / expect - 1.0) < 0.01);
}

TEST_CASE("unconditioned statistic is centered") {
    SamplerConfig cfg = base_config(500, 1);
    const FactorModel model(cfg);
    RngStream rng(cfg.seed, 0);
    const long draws = 20000;
    double sum = 0.0, sum2 = 0.0, sum3 = 0.0;
    for (long i = 0; i < draws; ++i) {
        const SampleRecord r = model.draw_once(rng);
        const double s = static_cast<double>(r.stat);
        sum += s;
        sum2 += s * s;
        sum3 += s * s * s;
    }
    const double mean = sum / draws;
    const double sd = std::sqrt(sum2 / draws - mean * mean);
    CHECK(std::abs(mean) < 4.0 * sd / std::sqrt(static_cast<double>(draws)));
    // third moment also centered (odd moments vanish by the k <-> m-1-k pairing)
    const double m3 = sum3 / draws;
    const double se3 = std::sqrt((sum2 / draws) * (sum2 / draws) * (sum2 / draws)) * 15.0 /
                       std::sqrt(static_cast<double>(draws));
    CHECK(std::abs(m3) < 4.0 * se3);
}

TEST_CASE("degenerate radius draws the empty configuration") {
    SamplerConfig cfg = base_config(4, 1);
    cfg.radius_N = 1e-3;
    const FactorModel model(cfg);
    RngStream rng(7, 0);
    for (int i = 0; i < 200; ++i) {
        const SampleRecord r = model.draw_once(rng);
        CHECK(r.size == 0);
        CHECK(r.stat == 0);
    }
}

TEST_CASE("identical config and seed give identical streams") {
    SamplerConfig cfg = base_config(12, 300, 99);
    const auto a = sample_conditioned(cfg);
    const auto b = sample_conditioned(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].counter == b[i].counter);
        CHECK(a[i].stat == b[i].stat);
        CHECK(a[i].trace_proxy == b[i].trace_proxy);
    }
}

TEST_CASE("worker merge is deterministic and ordered") {
    SamplerConfig cfg = base_config(12, 301, 5);
    cfg.workers = 3;
    const auto a = sample_conditioned(cfg);
    const auto b = sample_conditioned(cfg);
    REQUIRE(a.size() == 301);
    CHECK(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].worker == b[i].worker);
        CHECK(a[i].counter == b[i].counter);
        CHECK(a[i].stat == b[i].stat);
    }
    for (std::size_t i = 1; i < a.size(); ++i) {
        const bool ordered = a[i].worker > a[i - 1].worker ||
                             (a[i].worker == a[i - 1].worker && a[i].counter > a[i - 1].counter);
        CHECK(ordered);
    }
}

TEST_CASE("accepted records satisfy the window") {
    SamplerConfig cfg = base_config(30, 200);
    cfg.window = 2;
    for (const auto& r : sample_conditioned(cfg)) CHECK(std::labs(r.size - 30) <= 2);
}

TEST_CASE("exact conditioning at n = 2 reproduces the uniform law") {
    SamplerConfig cfg = base_config(2, 100000);
    const auto records = sample_conditioned(cfg);
    long counts[3] = {0, 0, 0};
    for (const auto& r : records) {
        REQUIRE(r.size == 2);
        REQUIRE(std::labs(r.stat) <= 1);
        ++counts[r.stat + 1];
    }
    for (long c : counts) {
        const double p = static_cast<double>(c) / 100000.0;
        const double sigma = std::sqrt((1.0 / 3.0) * (2.0 / 3.0) / 100000.0);
        CHECK(std::abs(p - 1.0 / 3.0) < 3.0 * sigma);
    }
}

TEST_CASE("exact conditioning matches the exact pmf at n = 8") {
    const auto table = distribution_table(8, 0, expand_m_delta_laurent(0, 8)[8]);
    SamplerConfig cfg = base_config(8, 100000);
    const auto records = sample_conditioned(cfg);
    CHECK(chi2_pvalue_against(table, records) > 0.01);
}

TEST_CASE("conditional law does not depend on the radius") {
    const auto table = distribution_table(6, 0, expand_m_delta_laurent(0, 6)[6]);
    const double saddle = saddle_radius(6);
    for (double scale : {0.7, 1.0, 1.4}) {
        SamplerConfig cfg = base_config(6, 30000, 11);
        cfg.radius_N = scale * saddle;
        const auto records = sample_conditioned(cfg);
        CHECK(chi2_pvalue_against(table, records) > 0.01);
    }
}

TEST_CASE("trace proxy is jointly distributed as the trace") {
    // Verified against the enumeration oracle at n = 6: joint moments
    // E[w0^i (w+ - w-)^j] match within Monte Carlo error.
    const int n = 6;
    const mpz_class count = joint_moment_oracle(n, 0, 0);
    SamplerConfig cfg = base_config(n, 50000, 1234);
    const auto records = sample_conditioned(cfg);
    for (const auto& [i, j] : std::vector<std::pair<unsigned, unsigned>>{
             {1, 0}, {2, 0}, {1, 2}, {2, 2}}) {
        const double exact =
            ratio_to_double(joint_moment_oracle(n, i, j), count);
        double sum = 0.0, sum2 = 0.0;
        for (const auto& r : records) {
            const double v = std::pow(static_cast<double>(r.trace_proxy), i) *
                             std::pow(static_cast<double>(r.stat), j);
            sum += v;
            sum2 += v * v;
        }
        const double m = sum / static_cast<double>(records.size());
        const double se = std::sqrt((sum2 / static_cast<double>(records.size()) - m * m) /
                                    static_cast<double>(records.size()));
        CHECK(std::abs(m - exact) < 4.0 * se + 1e-12);
    }
}

TEST_CASE("acceptance rate behavior") {
    // huge window accepts almost everything
    SamplerConfig wide = base_config(100, 1);
    wide.window = 1000000;
    CHECK(acceptance_rate_estimate(wide, 5000) > 0.999);

    // rate decreases with n at exact conditioning
    double prev = 1.0;
    for (long n : {100L, 1000L, 10000L}) {
        const double rate = acceptance_rate_estimate(base_config(n, 1), 40000);
        CHECK(rate > 0.0);
        CHECK(rate < prev);
        prev = rate;
    }

    // off-saddle radii accept strictly less
    SamplerConfig at = base_config(1000, 1);
    const double saddle_rate = acceptance_rate_estimate(at, 40000);
    for (double scale : {0.5, 2.0}) {
        SamplerConfig off = base_config(1000, 1);
        off.radius_N = scale * saddle_radius(1000);
        CHECK(acceptance_rate_estimate(off, 40000) < saddle_rate);
    }
}

TEST_CASE("acceptance collapse carries diagnostics") {
    SamplerConfig cfg = base_config(50, 10);
    cfg.radius_N = 0.25;  // expected size far below 50
    cfg.max_attempts = 20000;
    CHECK_THROWS_AS(sample_conditioned(cfg), acceptance_collapse_error);
    try {
        sample_conditioned(cfg);
    } catch (const acceptance_collapse_error& e) {
        CHECK(e.summary.attempts >= 20000);
        CHECK(e.summary.accepted == 0);
        CHECK(e.summary.mean_size < 5.0);
        CHECK(std::string(e.what()).find("size mean") != std::string::npos);
    }
}

TEST_CASE("config validation") {
    SamplerConfig bad = base_config(0, 10);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = base_config(5, 0);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = base_config(5, 10);
    bad.workers = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
