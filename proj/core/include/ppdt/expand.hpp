#pragma once

#include <gmpxx.h>

#include "ppdt/laurent_poly.hpp"
#include "ppdt/moment_jet.hpp"
#include "ppdt/tseries.hpp"

namespace ppdt {

/// Coefficient rings offered by the expansion engine. Laurent keeps the full
/// q-polynomial (support grows like n, feasible to n of a few hundred); jets
/// cap the per-coefficient cost at order+1 integers (feasible to n of a few
/// thousand exactly); float jets trade exactness for range.
enum class RingMode { laurent, jet, jet_float };

/// Expands prod_{m>=1} prod_{k<m} 1/(1 - q^(delta+2k+1-m) t^m) to order
/// n_max; the coefficient of t^n is sum over plane partitions of n of
/// q^(delta*w0 + w_plus - w_minus). Factor-by-factor geometric recurrence.
TSeries<LaurentPoly> expand_m_delta_laurent(long delta, int n_max);

/// Same series with coefficients reduced to jets of the given order at q = 1.
/// Uses the logarithmic-derivative convolution (n p_n = sum_d L_d p_{n-d}),
/// which needs O(n_max^2) ring operations instead of the factor product's
/// O(n_max^3); both routes agree exactly (tested).
TSeries<MomentJet> expand_m_delta_jet(long delta, int n_max, int order);
TSeries<FloatJet> expand_m_delta_jet_float(long delta, int n_max, int order);

/// Jet expansion through the literal factor product; for cross-checks at
/// small n_max only.
TSeries<MomentJet> expand_m_delta_jet_product(long delta, int n_max, int order);

/// MacMahon's function at q = 1: coefficients are the plane partition counts.
TSeries<mpz_class> expand_macmahon(int n_max);
TSeries<long double> expand_macmahon_float(int n_max);

/// F2(t) = (1/3) sum_m m(m^2-1) t^m / (1-t^m)^2, with exact integer
/// coefficients [t^n] = (1/3) sum_{m|n} m(m^2-1) (n/m).
TSeries<mpz_class> expand_f2(int n_max);

/// Convolution F2 * M: [t^n] is the exact sum over plane partitions of n of
/// (w_plus - w_minus)^2.
TSeries<mpz_class> second_moment_series(int n_max);

/// Evaluates a truncated integer series at t = e^{-y} (y > 0), summing
/// exp(log c_n - n y) so huge coefficients never materialize as floats.
long double truncated_eval_at_exp(const TSeries<mpz_class>& s, long double y);

/// log of a positive big integer via its bit length plus mantissa correction.
double log_mpz(const mpz_class& v);

}  // namespace ppdt
