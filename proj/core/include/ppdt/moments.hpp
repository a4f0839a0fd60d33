#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ppdt/expand.hpp"
#include "ppdt/laurent_poly.hpp"
#include "ppdt/moment_jet.hpp"

namespace ppdt {

/// One row of a moment convergence report. raw_num/raw_den hold the exact
/// k-th power sum over P_n and the count p_n(1); they are only reduced when
/// rendered.
struct MomentReport {
    long n = 0;
    int k = 0;
    mpz_class raw_num;
    mpz_class raw_den;
    double normalized = 0.0;  // n^(-2k/3) * raw
    double gauss_ref = 0.0;
    double abs_error = 0.0;
};

/// Exact pmf of delta*w0 + w_plus - w_minus on P_n, plus standardized CDF
/// sample points. probability(i) = weights[i] / total, summing to exactly 1.
struct DistributionTable {
    long n = 0;
    long delta = 0;
    std::vector<long> support;        // sorted statistic values
    std::vector<mpz_class> weights;   // positive counts
    mpz_class total;                  // p_n(1)
    double mean = 0.0;                // exact finite-n mean, rendered
    double stddev = 0.0;              // exact finite-n standard deviation, rendered
    std::vector<double> std_points;   // (s - mean)/stddev (0 when degenerate)
    std::vector<double> cdf;          // running probability at each support point
};

/// num/den as a double via scaled integer division (about 36 guard digits
/// before rounding), safe for operands far beyond double range.
double ratio_to_double(const mpz_class& num, const mpz_class& den);

// Exact raw moment sources: (d^k p_n|_{q=1}, p_n(1)) pairs.
std::pair<mpz_class, mpz_class> raw_moment(const LaurentPoly& pn, int k);
std::pair<mpz_class, mpz_class> raw_moment(const MomentJet& pn, int k);  // throws if k > order
std::pair<mpz_class, mpz_class> raw_moment_oracle(int n, int k);

/// n^(-2k/3) * raw, as a double.
double normalized_moment(long n, int k, const mpz_class& raw_num, const mpz_class& raw_den);

/// Gaussian reference moments: 0 for odd k, (k-1)!! sigma2^(k/2) for even k.
double gaussian_moment(int k, double sigma2);

DistributionTable distribution_table(long n, long delta, const LaurentPoly& coefficient);

/// Sup distance between the standardized table CDF and the standard normal
/// CDF. A degenerate (single-atom) table standardizes its atom to 0 and
/// yields exactly 0.5.
double ks_distance(const DistributionTable& table);

/// One MomentReport per n, with the Gaussian reference taken at the limit
/// variance (2 zeta(3))^(-1/3).
std::vector<MomentReport> convergence_report(int k, const std::vector<long>& n_list,
                                             const TSeries<MomentJet>& series);

double normal_cdf(double x);

/// Upper tail probability of a chi-square variable with dof degrees of
/// freedom (regularized incomplete gamma).
double chi_square_pvalue(double statistic, int dof);

// CSV renderers (17 significant digits, locale independent).
void write_moment_csv(std::ostream& os, const std::vector<MomentReport>& reports);
void write_distribution_csv(std::ostream& os, const DistributionTable& table);

}  // namespace ppdt
