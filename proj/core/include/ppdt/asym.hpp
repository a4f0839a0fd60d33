#pragma once

#include <gmpxx.h>

namespace ppdt {

/// Special constants used by the closed-form asymptotics. Each is pinned as a
/// literal and reproducible to 1e-12 by the independent evaluators below
/// (exercised by the build-time constants test).
struct Constants {
    static constexpr long double zeta2 = 1.64493406684822643647L;   // pi^2/6
    static constexpr long double zeta3 = 1.20205690315959428540L;   // Apery's constant
    static constexpr long double zeta_prime_minus1 = -0.16542114370045092921L;
    static constexpr long double euler_gamma = 0.57721566490153286061L;
};

// Independent recomputations (different algorithms than the literals' source):
// central-binomial series for zeta(2) and zeta(3), Euler-Maclaurin tail for
// gamma, and the Glaisher-Kinkelin limit for zeta'(-1).
long double zeta2_series();
long double zeta3_series();
long double euler_gamma_series();
long double glaisher_log_a();        // log A from the defining limit, Richardson-refined
long double zeta_prime_minus1_glaisher();  // 1/12 - log A

/// Limit-law parameters of the normalized statistic delta*X0 + X+ - X-:
/// mu = delta * zeta(2) / (2 zeta(3))^(2/3), sigma2 = (2 zeta(3))^(-1/3).
struct GaussParams {
    double mu;
    double sigma2;
};
GaussParams limit_law_params(double delta);

/// Limit parameters (a, b) of the normalized trace statistic:
/// a = zeta(2)/(2 zeta(3))^(2/3), b = sqrt(1/3)/(2 zeta(3))^(1/3).
struct TraceLawParams {
    double a;
    double b;
};
TraceLawParams trace_law_params();

/// log of the closed-form asymptotic count of plane partitions of n:
///   p_n ~ zeta(3)^(7/36) 2^(-11/36) (3 pi)^(-1/2) n^(-25/36)
///         * exp(3 (zeta(3)/4)^(1/3) n^(2/3) + zeta'(-1)).
double wright_log_pn(double n);
double wright_pn(double n);  // exponentiated; overflows for very large n

/// Growth rate 3 (zeta(3)/4)^(1/3) of the exponent above.
double wright_exponent_rate();

/// log of the k-th moment prediction
///   d^k p_n |_{q=1} ~ n^(2k/3) (k-1)!! (2 zeta(3))^(-k/6) * p_n-asymptotic;
/// odd k returns exact zero in the linear-scale variant.
double moment_asym_log(double n, int k);
double moment_asym(double n, int k);

/// Saddle radius N = (n / 2 zeta(3))^(1/3), so that n = 2 zeta(3) N^3.
double saddle_radius(double n);

/// Leading Mellin term of F2 at t = e^{-y}: 2 zeta(3) y^-4. The y^-2 term
/// (+ gamma/18 y^-2) is exposed behind the experimental flag; only the
/// leading term is asserted by tests.
double f2_mellin_approx(double y, bool include_subleading = false);

/// Major-arc model of MacMahon's function at t = e^{-y}:
///   exp(zeta'(-1)) * y^(1/12) * exp(zeta(3)/y^2).
double major_arc_macmahon(double y);
double major_arc_macmahon_log(double y);

/// Checks sum_{k=0}^{m-1} (1+2k-m)^2 == m(m^2-1)/3 in exact arithmetic.
bool f2_coefficient_identity(long m);

/// (k-1)!! as a double (k >= -1; (-1)!! = 0!! = 1).
double double_factorial_odd(int k);

}  // namespace ppdt
