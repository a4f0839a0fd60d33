// ppdt: refined plane-partition counts, moments, asymptotics, and sampling.
//
// Subcommands: expand, oracle-check, moments, asymptotics, sample, constants.
// Every file output is accompanied by a <out>.manifest.json recording the
// full parameter set, library version, wall time, and output checksums.
// Data files are byte-identical across reruns with the same parameters.
//
// Exit codes: 0 success, 1 oracle mismatch, 2 invalid flags,
//             3 enumeration cap violation, 4 acceptance collapse.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppdt/asym.hpp"
#include "ppdt/expand.hpp"
#include "ppdt/format.hpp"
#include "ppdt/manifest.hpp"
#include "ppdt/moments.hpp"
#include "ppdt/partitions.hpp"
#include "ppdt/sampler.hpp"

using namespace ppdt;

namespace {

using Clock = std::chrono::steady_clock;

struct GlobalFlags {
    std::uint64_t seed = 42;
    int threads = 1;
    std::string out;
    std::string manifest_path;  // default: <out>.manifest.json
};

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

void finish_run(const GlobalFlags& g, const std::string& subcommand,
                std::map<std::string, std::string> parameters,
                const std::vector<std::pair<std::string, std::string>>& outputs,
                Clock::time_point started) {
    if (g.out.empty()) return;
    RunManifest m;
    m.subcommand = subcommand;
    parameters["seed"] = std::to_string(g.seed);
    parameters["threads"] = std::to_string(g.threads);
    m.parameters = std::move(parameters);
    m.wall_time_s = std::chrono::duration<double>(Clock::now() - started).count();
    for (const auto& [path, content] : outputs) m.output_checksums[path] = fnv1a64_hex(content);
    m.write(g.manifest_path.empty() ? g.out + ".manifest.json" : g.manifest_path);
}

std::string constants_json() {
    const GaussParams p1 = limit_law_params(1);
    const GaussParams p3 = limit_law_params(3);
    const TraceLawParams t = trace_law_params();
    const std::vector<std::pair<std::string, double>> entries = {
        {"zeta2", static_cast<double>(Constants::zeta2)},
        {"zeta3", static_cast<double>(Constants::zeta3)},
        {"zeta_prime_minus1", static_cast<double>(Constants::zeta_prime_minus1)},
        {"euler_gamma", static_cast<double>(Constants::euler_gamma)},
        {"two_zeta3", 2.0 * static_cast<double>(Constants::zeta3)},
        {"sigma2", p1.sigma2},
        {"mu_delta1", p1.mu},
        {"mu_delta3", p3.mu},
        {"trace_a", t.a},
        {"trace_b", t.b},
        {"wright_exponent_rate", wright_exponent_rate()},
    };
    std::ostringstream os;
    os << "{\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        os << "  \"" << entries[i].first << "\": " << format_double(entries[i].second, 15);
        if (i + 1 < entries.size()) os << ',';
        os << '\n';
    }
    os << "}\n";
    return os.str();
}

std::string render_series_header(const std::map<std::string, std::string>& params) {
    std::ostringstream os;
    os << "# ppdt " << kLibraryVersion << '\n';
    for (const auto& [k, v] : params) os << "# " << k << '=' << v << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------------
int cmd_expand(const GlobalFlags& g, long delta, int n_max, const std::string& ring, int order,
               bool half_power) {
    const auto started = Clock::now();
    std::map<std::string, std::string> params = {
        {"delta", std::to_string(delta)},
        {"nmax", std::to_string(n_max)},
        {"ring", ring},
        {"exponent_unit", half_power ? "q^(1/2)" : "q"},
    };
    std::ostringstream csv;
    if (ring == "laurent") {
        const auto series = expand_m_delta_laurent(delta, n_max);
        csv << render_series_header(params) << "n,coeff\n";
        for (int n = 0; n <= n_max; ++n)
            csv << n << ',' << csv_quote(series[n].to_json()) << '\n';
    } else if (ring == "jet" || ring == "jet-float") {
        params["kmax"] = std::to_string(order);
        csv << render_series_header(params) << "n";
        for (int j = 0; j <= order; ++j) csv << ",d" << j;
        csv << '\n';
        if (ring == "jet") {
            const auto series = expand_m_delta_jet(delta, n_max, order);
            for (int n = 0; n <= n_max; ++n) {
                csv << n;
                for (int j = 0; j <= order; ++j) csv << ',' << series[n][j].get_str();
                csv << '\n';
            }
        } else {
            const auto series = expand_m_delta_jet_float(delta, n_max, order);
            for (int n = 0; n <= n_max; ++n) {
                csv << n;
                for (int j = 0; j <= order; ++j)
                    csv << ',' << format_double(static_cast<double>(series[n][j]));
                csv << '\n';
            }
        }
    } else {
        std::cerr << "unknown ring mode: " << ring << "\n";
        return 2;
    }
    if (g.out.empty()) {
        std::cout << csv.str();
    } else {
        write_text_file(g.out, csv.str());
        finish_run(g, "expand", params, {{g.out, csv.str()}}, started);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// oracle-check
// ---------------------------------------------------------------------------
int cmd_oracle_check(const GlobalFlags& g, int n_cap, const std::vector<long>& deltas,
                     bool corrupt) {
    const auto started = Clock::now();
    std::ostringstream report;
    bool all_pass = true;
    for (long delta : deltas) {
        auto series = expand_m_delta_laurent(delta, n_cap);
        if (corrupt && n_cap >= 1) {
            // negative-control hook: damage one coefficient before comparing
            series[std::min(2, n_cap)].add_term(0, 1);
        }
        for (int n = 0; n <= n_cap; ++n) {
            const LaurentPoly oracle = refined_poly_oracle(n, delta);
            if (series[n] == oracle) {
                report << "PASS n=" << n << " delta=" << delta << '\n';
                continue;
            }
            all_pass = false;
            long bad_exp = 0;
            mpz_class got, want;
            const long lo = std::min(series[n].is_zero() ? 0 : series[n].min_exponent(),
                                     oracle.is_zero() ? 0 : oracle.min_exponent());
            const long hi = std::max(series[n].is_zero() ? 0 : series[n].max_exponent(),
                                     oracle.is_zero() ? 0 : oracle.max_exponent());
            for (long e = lo; e <= hi; ++e) {
                if (series[n].coeff(e) != oracle.coeff(e)) {
                    bad_exp = e;
                    got = series[n].coeff(e);
                    want = oracle.coeff(e);
                    break;
                }
            }
            report << "FAIL n=" << n << " delta=" << delta << " first differing exponent "
                   << bad_exp << ": expansion " << got.get_str() << " vs oracle "
                   << want.get_str() << '\n';
        }
    }
    std::cout << report.str();
    if (!g.out.empty()) {
        write_text_file(g.out, report.str());
        std::ostringstream deltas_text;
        for (std::size_t i = 0; i < deltas.size(); ++i)
            deltas_text << (i ? "," : "") << deltas[i];
        finish_run(g, "oracle-check",
                   {{"ncap", std::to_string(n_cap)},
                    {"deltas", deltas_text.str()},
                    {"corrupt", corrupt ? "1" : "0"}},
                   {{g.out, report.str()}}, started);
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// moments
// ---------------------------------------------------------------------------
int cmd_moments(const GlobalFlags& g, int k_max, const std::vector<long>& n_list,
                const std::string& mode, long dist_n, long dist_delta,
                const std::string& dist_out) {
    const auto started = Clock::now();
    if (n_list.empty()) {
        std::cerr << "moments: --nlist must not be empty\n";
        return 2;
    }
    const long n_top = *std::max_element(n_list.begin(), n_list.end());
    const double sigma2 = limit_law_params(0).sigma2;

    std::vector<MomentReport> reports;
    if (mode == "jet") {
        const auto jets = expand_m_delta_jet(0, static_cast<int>(n_top), k_max);
        for (int k = 0; k <= k_max; ++k) {
            auto part = convergence_report(k, n_list, jets);
            reports.insert(reports.end(), part.begin(), part.end());
        }
    } else if (mode == "laurent" || mode == "oracle") {
        TSeries<LaurentPoly> series;
        if (mode == "laurent") series = expand_m_delta_laurent(0, static_cast<int>(n_top));
        for (int k = 0; k <= k_max; ++k) {
            for (long n : n_list) {
                MomentReport r;
                r.n = n;
                r.k = k;
                std::tie(r.raw_num, r.raw_den) =
                    mode == "laurent" ? raw_moment(series[static_cast<int>(n)], k)
                                      : raw_moment_oracle(static_cast<int>(n), k);
                r.normalized = n == 0 ? 0.0 : normalized_moment(n, k, r.raw_num, r.raw_den);
                r.gauss_ref = gaussian_moment(k, sigma2);
                r.abs_error = std::abs(r.normalized - r.gauss_ref);
                reports.push_back(std::move(r));
            }
        }
    } else {
        std::cerr << "unknown moments mode: " << mode << "\n";
        return 2;
    }

    std::ostringstream csv;
    write_moment_csv(csv, reports);
    std::vector<std::pair<std::string, std::string>> outputs;
    if (g.out.empty()) std::cout << csv.str();
    else {
        write_text_file(g.out, csv.str());
        outputs.emplace_back(g.out, csv.str());
    }

    if (dist_n >= 0) {
        if (mode == "jet") {
            std::cerr << "moments: distribution tables need the laurent or oracle source "
                         "(jets do not carry the pmf)\n";
            return 2;
        }
        const LaurentPoly coeff =
            mode == "laurent" ? expand_m_delta_laurent(dist_delta, static_cast<int>(dist_n))
                                    [static_cast<int>(dist_n)]
                              : refined_poly_oracle(static_cast<int>(dist_n), dist_delta);
        std::ostringstream dist_csv;
        write_distribution_csv(dist_csv, distribution_table(dist_n, dist_delta, coeff));
        if (dist_out.empty()) std::cout << dist_csv.str();
        else {
            write_text_file(dist_out, dist_csv.str());
            outputs.emplace_back(dist_out, dist_csv.str());
        }
    }

    finish_run(g, "moments",
               {{"kmax", std::to_string(k_max)},
                {"mode", mode},
                {"n_top", std::to_string(n_top)},
                {"dist_n", std::to_string(dist_n)},
                {"dist_delta", std::to_string(dist_delta)}},
               outputs, started);
    return 0;
}

// ---------------------------------------------------------------------------
// asymptotics
// ---------------------------------------------------------------------------
int cmd_asymptotics(const GlobalFlags& g, const std::vector<long>& n_list, long exact_cap) {
    const auto started = Clock::now();
    if (n_list.empty()) {
        std::cerr << "asymptotics: --nlist must not be empty\n";
        return 2;
    }
    long exact_top = 0;
    for (long n : n_list)
        if (n <= exact_cap) exact_top = std::max(exact_top, n);
    TSeries<mpz_class> exact;
    if (exact_top > 0) exact = expand_macmahon(static_cast<int>(exact_top));

    std::ostringstream csv;
    csv << "n,log_pn_exact,log_wright,ratio\n";
    for (long n : n_list) {
        const double lw = wright_log_pn(static_cast<double>(n));
        csv << n << ',';
        if (n >= 1 && n <= exact_top) {
            const double lp = log_mpz(exact[static_cast<int>(n)]);
            csv << format_double(lp) << ',' << format_double(lw) << ','
                << format_double(std::exp(lp - lw));
        } else {
            csv << ',' << format_double(lw) << ',';
        }
        csv << '\n';
    }

    const std::string constants = constants_json();
    if (g.out.empty()) {
        std::cout << csv.str() << constants;
        return 0;
    }
    write_text_file(g.out, csv.str());
    const std::string constants_path = g.out + ".constants.json";
    write_text_file(constants_path, constants);
    finish_run(g, "asymptotics",
               {{"exact_cap", std::to_string(exact_cap)},
                {"n_count", std::to_string(n_list.size())}},
               {{g.out, csv.str()}, {constants_path, constants}}, started);
    return 0;
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------
int cmd_sample(const GlobalFlags& g, SamplerConfig cfg) {
    const auto started = Clock::now();
    cfg.seed = g.seed;
    cfg.workers = g.threads;
    const FactorModel model(cfg);  // fills radius and m_max
    const SamplerConfig& effective = model.config();

    std::vector<SampleRecord> records;
    try {
        records = sample_conditioned(effective);
    } catch (const acceptance_collapse_error& e) {
        std::cerr << "sample: " << e.what() << "\n";
        return 4;
    }

    nlohmann::json cfg_json = {
        {"n", effective.n},
        {"radius_N", format_double(effective.radius_N)},
        {"m_max", effective.m_max},
        {"window", effective.window},
        {"seed", effective.seed},
        {"target_accepted", effective.target_accepted},
        {"max_attempts", effective.max_attempts},
        {"workers", effective.workers},
    };

    double sum = 0.0, sum2 = 0.0;
    const double scale = std::pow(static_cast<double>(effective.n), 2.0 / 3.0);
    for (const auto& r : records) {
        const double z = static_cast<double>(r.stat) / scale;
        sum += z;
        sum2 += z * z;
    }
    const double count = static_cast<double>(records.size());
    const double mean = sum / count;
    const double var = sum2 / count - mean * mean;
    const double sigma2 = limit_law_params(0).sigma2;
    nlohmann::json summary = {
        {"accepted", records.size()},
        {"mean_normalized_stat", format_double(mean)},
        {"var_normalized_stat", format_double(var)},
        {"sigma2_limit", format_double(sigma2)},
        {"var_minus_sigma2", format_double(var - sigma2)},
    };
    if (effective.window > 0) summary["approximate"] = "windowed run (window > 0)";

    std::ostringstream csv;
    csv << "# ppdt " << kLibraryVersion << " sample\n";
    csv << "# config: " << cfg_json.dump() << '\n';
    csv << "worker,counter,size,stat,trace_proxy\n";
    for (const auto& r : records)
        csv << r.worker << ',' << r.counter << ',' << r.size << ',' << r.stat << ','
            << r.trace_proxy << '\n';
    csv << "# summary: " << summary.dump() << '\n';

    if (g.out.empty()) {
        std::cout << csv.str();
        return 0;
    }
    write_text_file(g.out, csv.str());
    finish_run(g, "sample",
               {{"n", std::to_string(effective.n)},
                {"radius_N", format_double(effective.radius_N)},
                {"m_max", std::to_string(effective.m_max)},
                {"window", std::to_string(effective.window)},
                {"target_accepted", std::to_string(effective.target_accepted)},
                {"max_attempts", std::to_string(effective.max_attempts)}},
               {{g.out, csv.str()}}, started);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"refined plane-partition counts, moments, asymptotics, and sampling"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--seed", g.seed, "RNG seed (sample)")->capture_default_str();
    app.add_option("--threads", g.threads, "worker count (sample)")->capture_default_str();
    app.add_option("--out", g.out, "output file (stdout when omitted)");
    app.add_option("--json-manifest", g.manifest_path,
                   "manifest path (default <out>.manifest.json)");

    // expand
    long delta = 0;
    int n_max = 16, order = 8;
    std::string ring = "laurent";
    bool half_power = false;
    auto* expand = app.add_subcommand("expand", "expand M_delta(t, q) over a coefficient ring");
    expand->fallthrough();
    expand->add_option("--delta", delta, "trace weight delta")->capture_default_str();
    expand->add_option("--nmax", n_max, "truncation order in t")->capture_default_str();
    expand->add_option("--ring", ring, "laurent | jet | jet-float")->capture_default_str();
    expand->add_option("--kmax", order, "jet order (jet rings)")->capture_default_str();
    expand->add_flag("--half-power", half_power,
                     "declare exponents in q^(1/2) units (refined DT convention)");

    // oracle-check
    int check_cap = 10;
    std::vector<long> check_deltas = {0, 1, 3};
    bool corrupt = false;
    auto* oracle = app.add_subcommand("oracle-check",
                                      "compare the expansion against brute-force enumeration");
    oracle->fallthrough();
    oracle->add_option("--ncap", check_cap, "check all n <= ncap")->capture_default_str();
    oracle->add_option("--deltas", check_deltas, "delta values")->delimiter(',');
    oracle->add_flag("--corrupt-test-hook", corrupt,
                     "perturb one coefficient first (negative-control aid)");

    // moments
    int k_max = 8;
    std::vector<long> n_list;
    std::string mode = "jet";
    long dist_n = -1, dist_delta = 0;
    std::string dist_out;
    auto* moments = app.add_subcommand("moments", "exact moment reports against the Gaussian law");
    moments->fallthrough();
    moments->add_option("--kmax", k_max, "largest moment order")->capture_default_str();
    moments->add_option("--nlist", n_list, "sizes n (comma separated)")
        ->delimiter(',')
        ->required();
    moments->add_option("--mode", mode, "jet | laurent | oracle")->capture_default_str();
    moments->add_option("--dist-n", dist_n, "also emit the exact pmf table at this n");
    moments->add_option("--dist-delta", dist_delta, "delta for the pmf table")
        ->capture_default_str();
    moments->add_option("--dist-out", dist_out, "pmf table output file");

    // asymptotics
    std::vector<long> asym_nlist;
    long exact_cap = 5000;
    auto* asym = app.add_subcommand("asymptotics", "exact counts against the closed form");
    asym->fallthrough();
    asym->add_option("--nlist", asym_nlist, "sizes n (comma separated)")
        ->delimiter(',')
        ->required();
    asym->add_option("--exact-cap", exact_cap, "largest n expanded exactly")
        ->capture_default_str();

    // sample
    SamplerConfig cfg;
    std::string config_path;
    auto* sample = app.add_subcommand("sample", "Boltzmann-sample the statistic at size n");
    sample->fallthrough();
    sample->add_option("--n", cfg.n, "target size");
    sample->add_option("--radius", cfg.radius_N, "Boltzmann radius (default: saddle)");
    sample->add_option("--mmax", cfg.m_max, "factor cutoff (default: tail rule)");
    sample->add_option("--window", cfg.window, "acceptance window (0 = exact size)")
        ->capture_default_str();
    sample->add_option("--target", cfg.target_accepted, "accepted sample count")
        ->capture_default_str();
    sample->add_option("--max-attempts", cfg.max_attempts, "attempt budget (collapse guard)");
    sample->add_option("--config", config_path, "JSON file with the same keys as the flags");

    // constants
    auto* constants = app.add_subcommand("constants", "dump constants and derived parameters");
    constants->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (expand->parsed()) return cmd_expand(g, delta, n_max, ring, order, half_power);
        if (oracle->parsed()) return cmd_oracle_check(g, check_cap, check_deltas, corrupt);
        if (moments->parsed())
            return cmd_moments(g, k_max, n_list, mode, dist_n, dist_delta, dist_out);
        if (asym->parsed()) return cmd_asymptotics(g, asym_nlist, exact_cap);
        if (sample->parsed()) {
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw std::runtime_error("cannot read " + config_path);
                nlohmann::json j = nlohmann::json::parse(in);
                if (j.contains("n")) cfg.n = j["n"].get<long>();
                if (j.contains("radius_N")) cfg.radius_N = j["radius_N"].get<double>();
                if (j.contains("m_max")) cfg.m_max = j["m_max"].get<long>();
                if (j.contains("window")) cfg.window = j["window"].get<long>();
                if (j.contains("target_accepted"))
                    cfg.target_accepted = j["target_accepted"].get<long>();
                if (j.contains("max_attempts")) cfg.max_attempts = j["max_attempts"].get<long>();
                if (j.contains("seed")) g.seed = j["seed"].get<std::uint64_t>();
                if (j.contains("workers")) g.threads = j["workers"].get<int>();
            }
            return cmd_sample(g, cfg);
        }
        if (constants->parsed()) {
            const auto started = Clock::now();
            const std::string text = constants_json();
            if (g.out.empty()) std::cout << text;
            else {
                write_text_file(g.out, text);
                finish_run(g, "constants", {}, {{g.out, text}}, started);
            }
            return 0;
        }
    } catch (const cap_error& e) {
        std::cerr << "cap violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
