#include "ppdt/moments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ppdt/asym.hpp"
#include "ppdt/format.hpp"
#include "ppdt/partitions.hpp"

namespace ppdt {

namespace {
constexpr int kGuardBits = 120;  // ~36 decimal guard digits before rounding
}

double ratio_to_double(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("ratio_to_double: zero denominator");
    mpz_class scaled = num;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), kGuardBits);
    mpz_class q = scaled / den;
    return std::ldexp(mpz_get_d(q.get_mpz_t()), -kGuardBits);
}

std::pair<mpz_class, mpz_class> raw_moment(const LaurentPoly& pn, int k) {
    if (k < 0) throw std::invalid_argument("moment order must be >= 0");
    return {pn.derivative_at_one(static_cast<unsigned>(k)), pn.derivative_at_one(0)};
}

std::pair<mpz_class, mpz_class> raw_moment(const MomentJet& pn, int k) {
    if (k < 0) throw std::invalid_argument("moment order must be >= 0");
    if (k > pn.order()) throw std::invalid_argument("jet order is smaller than requested moment");
    return {pn[k], pn[0]};
}

std::pair<mpz_class, mpz_class> raw_moment_oracle(int n, int k) {
    if (k < 0) throw std::invalid_argument("moment order must be >= 0");
    return {joint_moment_oracle(n, 0, static_cast<unsigned>(k)), joint_moment_oracle(n, 0, 0)};
}

double normalized_moment(long n, int k, const mpz_class& raw_num, const mpz_class& raw_den) {
    return ratio_to_double(raw_num, raw_den) *
           std::pow(static_cast<double>(n), -2.0 * k / 3.0);
}

double gaussian_moment(int k, double sigma2) {
    if (k < 0) throw std::invalid_argument("moment order must be >= 0");
    if (k % 2 != 0) return 0.0;
    return double_factorial_odd(k - 1) * std::pow(sigma2, k / 2.0);
}

DistributionTable distribution_table(long n, long delta, const LaurentPoly& coefficient) {
    if (coefficient.is_zero())
        throw std::invalid_argument("distribution_table: empty coefficient");
    DistributionTable t;
    t.n = n;
    t.delta = delta;
    for (const auto& [e, c] : coefficient.terms()) {
        if (c <= 0) throw std::invalid_argument("distribution_table: non-positive weight");
        t.support.push_back(e);
        t.weights.push_back(c);
    }
    t.total = coefficient.value_at_one();

    const mpz_class d1 = coefficient.derivative_at_one(1);
    const mpz_class d2 = coefficient.derivative_at_one(2);
    const mpz_class var_num = d2 * t.total - d1 * d1;  // variance = var_num / total^2
    t.mean = ratio_to_double(d1, t.total);
    t.stddev = std::sqrt(ratio_to_double(var_num, t.total * t.total));

    mpz_class running = 0;
    const bool degenerate = var_num == 0;
    for (std::size_t i = 0; i < t.support.size(); ++i) {
        running += t.weights[i];
        t.cdf.push_back(ratio_to_double(running, t.total));
        t.std_points.push_back(
            degenerate ? 0.0 : (static_cast<double>(t.support[i]) - t.mean) / t.stddev);
    }
    return t;
}

double ks_distance(const DistributionTable& table) {
    if (table.support.empty()) throw std::invalid_argument("ks_distance: empty table");
    double sup = 0.0;
    double prev_cdf = 0.0;
    for (std::size_t i = 0; i < table.support.size(); ++i) {
        const double phi = normal_cdf(table.std_points[i]);
        sup = std::max(sup, std::abs(table.cdf[i] - phi));
        sup = std::max(sup, std::abs(prev_cdf - phi));
        prev_cdf = table.cdf[i];
    }
    return sup;
}

std::vector<MomentReport> convergence_report(int k, const std::vector<long>& n_list,
                                             const TSeries<MomentJet>& series) {
    const double sigma2 = limit_law_params(0).sigma2;
    std::vector<MomentReport> out;
    out.reserve(n_list.size());
    for (long n : n_list) {
        if (n < 0 || n > series.n_max())
            throw std::invalid_argument("convergence_report: n outside expanded range");
        MomentReport r;
        r.n = n;
        r.k = k;
        std::tie(r.raw_num, r.raw_den) = raw_moment(series[static_cast<int>(n)], k);
        r.normalized = n == 0 ? 0.0 : normalized_moment(n, k, r.raw_num, r.raw_den);
        r.gauss_ref = gaussian_moment(k, sigma2);
        r.abs_error = std::abs(r.normalized - r.gauss_ref);
        out.push_back(std::move(r));
    }
    return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

// Regularized incomplete gamma pair, series + Lentz continued fraction.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a, sum = term, ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double chi_square_pvalue(double statistic, int dof) {
    if (dof <= 0) throw std::invalid_argument("chi_square_pvalue: dof must be positive");
    if (statistic <= 0.0) return 1.0;
    const double a = dof / 2.0, x = statistic / 2.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

void write_moment_csv(std::ostream& os, const std::vector<MomentReport>& reports) {
    os << "n,k,raw_num,raw_den,normalized,gauss_ref,abs_error\n";
    for (const auto& r : reports) {
        mpq_class reduced(r.raw_num, r.raw_den);
        reduced.canonicalize();
        os << r.n << ',' << r.k << ',' << reduced.get_num().get_str() << ','
           << reduced.get_den().get_str() << ',' << format_double(r.normalized) << ','
           << format_double(r.gauss_ref) << ',' << format_double(r.abs_error) << '\n';
    }
}

void write_distribution_csv(std::ostream& os, const DistributionTable& table) {
    os << "s,prob_num,prob_den,std_s,cdf,normal_cdf\n";
    for (std::size_t i = 0; i < table.support.size(); ++i) {
        mpq_class prob(table.weights[i], table.total);
        prob.canonicalize();
        os << table.support[i] << ',' << prob.get_num().get_str() << ','
           << prob.get_den().get_str() << ',' << format_double(table.std_points[i]) << ','
           << format_double(table.cdf[i]) << ',' << format_double(normal_cdf(table.std_points[i]))
           << '\n';
    }
}

}  // namespace ppdt
