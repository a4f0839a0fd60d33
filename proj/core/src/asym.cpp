#include "ppdt/asym.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ppdt {

namespace {

constexpr long double kPi = 3.14159265358979323846264338328L;

// Kahan-compensated accumulator; the Glaisher limit needs cancellation of
// ~1e6-sized partial sums down to an O(1) result.
struct CompensatedSum {
    long double sum = 0.0L;
    long double carry = 0.0L;

    void add(long double x) {
        const long double y = x - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// log A_n from the defining limit A = lim H(n) / (n^(n^2/2+n/2+1/12) e^(-n^2/4)),
// H(n) = prod k^k. Converges like 1/n^2.
long double glaisher_log_a_at(long n) {
    CompensatedSum s;
    for (long k = 1; k <= n; ++k)
        s.add(static_cast<long double>(k) * std::log(static_cast<long double>(k)));
    const long double nl = static_cast<long double>(n);
    const long double ln_n = std::log(nl);
    return s.sum - (nl * nl / 2.0L + nl / 2.0L + 1.0L / 12.0L) * ln_n + nl * nl / 4.0L;
}

}  // namespace

long double zeta2_series() {
    // zeta(2) = 3 sum_{n>=1} 1 / (n^2 binom(2n,n)); terms shrink ~4^-n.
    long double total = 0.0L, binom = 2.0L;
    for (int n = 1; n <= 40; ++n) {
        total += 1.0L / (static_cast<long double>(n) * n * binom);
        binom = binom * (2 * n + 1) * (2 * n + 2) / ((n + 1) * static_cast<long double>(n + 1));
    }
    return 3.0L * total;
}

long double zeta3_series() {
    // zeta(3) = (5/2) sum_{n>=1} (-1)^(n-1) / (n^3 binom(2n,n)).
    long double total = 0.0L, binom = 2.0L, sign = 1.0L;
    for (int n = 1; n <= 40; ++n) {
        total += sign / (static_cast<long double>(n) * n * n * binom);
        binom = binom * (2 * n + 1) * (2 * n + 2) / ((n + 1) * static_cast<long double>(n + 1));
        sign = -sign;
    }
    return 2.5L * total;
}

long double euler_gamma_series() {
    // H_n - log n - 1/(2n) + Euler-Maclaurin corrections through n^-6.
    const long n = 1000;
    CompensatedSum h;
    for (long k = 1; k <= n; ++k) h.add(1.0L / static_cast<long double>(k));
    const long double nl = static_cast<long double>(n);
    return h.sum - std::log(nl) - 1.0L / (2.0L * nl) + 1.0L / (12.0L * nl * nl) -
           1.0L / (120.0L * nl * nl * nl * nl) +
           1.0L / (252.0L * nl * nl * nl * nl * nl * nl);
}

long double glaisher_log_a() {
    // Two Richardson steps in 1/n^2 on the defining limit (64, 128, 256).
    const long double a1 = glaisher_log_a_at(64);
    const long double a2 = glaisher_log_a_at(128);
    const long double a3 = glaisher_log_a_at(256);
    const long double b2 = (4.0L * a2 - a1) / 3.0L;
    const long double b3 = (4.0L * a3 - a2) / 3.0L;
    return (16.0L * b3 - b2) / 15.0L;
}

long double zeta_prime_minus1_glaisher() { return 1.0L / 12.0L - glaisher_log_a(); }

GaussParams limit_law_params(double delta) {
    if (delta < 0) throw std::domain_error("delta must be >= 0");
    const long double two_zeta3 = 2.0L * Constants::zeta3;
    return {static_cast<double>(delta * Constants::zeta2 / std::pow(two_zeta3, 2.0L / 3.0L)),
            static_cast<double>(std::pow(two_zeta3, -1.0L / 3.0L))};
}

TraceLawParams trace_law_params() {
    const long double two_zeta3 = 2.0L * Constants::zeta3;
    return {static_cast<double>(Constants::zeta2 / std::pow(two_zeta3, 2.0L / 3.0L)),
            static_cast<double>(std::sqrt(1.0L / 3.0L) / std::pow(two_zeta3, 1.0L / 3.0L))};
}

double wright_exponent_rate() {
    return static_cast<double>(3.0L * std::pow(Constants::zeta3 / 4.0L, 1.0L / 3.0L));
}

double wright_log_pn(double n) {
    if (!(n >= 1)) throw std::domain_error("wright_log_pn needs n >= 1");
    const long double nl = n;
    const long double log_prefactor = (7.0L / 36.0L) * std::log(Constants::zeta3) -
                                      (11.0L / 36.0L) * std::log(2.0L) -
                                      0.5L * std::log(3.0L * kPi) -
                                      (25.0L / 36.0L) * std::log(nl);
    const long double exponent =
        3.0L * std::pow(Constants::zeta3 / 4.0L, 1.0L / 3.0L) * std::pow(nl, 2.0L / 3.0L) +
        Constants::zeta_prime_minus1;
    return static_cast<double>(log_prefactor + exponent);
}

double wright_pn(double n) { return std::exp(wright_log_pn(n)); }

double double_factorial_odd(int k) {
    double r = 1.0;
    for (int v = k; v > 1; v -= 2) r *= v;
    return r;
}

double moment_asym_log(double n, int k) {
    if (k < 0) throw std::domain_error("moment order must be >= 0");
    if (k % 2 != 0) throw std::domain_error("odd moments vanish; no log-scale value");
    const long double nl = n;
    return static_cast<double>((2.0L * k / 3.0L) * std::log(nl) +
                               std::log(static_cast<long double>(double_factorial_odd(k - 1))) -
                               (k / 6.0L) * std::log(2.0L * Constants::zeta3)) +
           wright_log_pn(n);
}

double moment_asym(double n, int k) {
    if (k < 0) throw std::domain_error("moment order must be >= 0");
    if (k % 2 != 0) return 0.0;
    return std::exp(moment_asym_log(n, k));
}

double saddle_radius(double n) {
    if (!(n >= 1)) throw std::domain_error("saddle_radius needs n >= 1");
    return static_cast<double>(std::pow(static_cast<long double>(n) / (2.0L * Constants::zeta3),
                                        1.0L / 3.0L));
}

double f2_mellin_approx(double y, bool include_subleading) {
    if (!(y > 0)) throw std::domain_error("f2_mellin_approx needs y > 0");
    const long double yl = y;
    long double v = 2.0L * Constants::zeta3 / (yl * yl * yl * yl);
    if (include_subleading) {
        // Experimental: residue of the double pole at s = 2, which carries a
        // logarithm: (1/3)(log y + zeta(-1) - gamma - 1) y^-2 with
        // zeta(-1) = -1/12.  Matches the truncated series numerically.
        v += (std::log(yl) - 1.0L / 12.0L - Constants::euler_gamma - 1.0L) / (3.0L * yl * yl);
    }
    return static_cast<double>(v);
}

double major_arc_macmahon_log(double y) {
    if (!(y > 0)) throw std::domain_error("major_arc_macmahon needs y > 0");
    const long double yl = y;
    return static_cast<double>(Constants::zeta_prime_minus1 + std::log(yl) / 12.0L +
                               Constants::zeta3 / (yl * yl));
}

double major_arc_macmahon(double y) { return std::exp(major_arc_macmahon_log(y)); }

bool f2_coefficient_identity(long m) {
    if (m < 1) throw std::domain_error("m must be >= 1");
    if (m > 1000000000L) throw std::domain_error("m too large for exact 128-bit evaluation");
    __int128 lhs = 0;
    for (long k = 0; k < m; ++k) {
        const __int128 term = 1 + 2 * k - m;
        lhs += term * term;
    }
    const __int128 rhs = static_cast<__int128>(m) * (static_cast<__int128>(m) * m - 1) / 3;
    return lhs == rhs;
}

}  // namespace ppdt
