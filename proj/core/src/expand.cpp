#include "ppdt/expand.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ppdt {

namespace {

using int128 = __int128;

void mpz_set_int128(mpz_class& out, int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    out = static_cast<unsigned long>(u >> 64);
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), 64);
    mpz_add_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(u));
    if (neg) mpz_neg(out.get_mpz_t(), out.get_mpz_t());
}

// True when m * max|e|^order stays well inside a signed 128-bit integer.
bool int128_group_safe(long m, long e_abs_max, int order) {
    double bits = std::log2(static_cast<double>(m));
    if (e_abs_max > 1)
        bits += order * std::log2(static_cast<double>(e_abs_max));
    return bits < 120.0;
}

// L_d of the logarithmic derivative t d/dt log M_delta = sum_d L_d t^d:
//   L_d = sum_{m|d} m * sum_{k<m} q^{(d/m)(delta+2k+1-m)}    (as a jet).
std::vector<MomentJet> logder_table_jet(long delta, int n_max, int order) {
    std::vector<MomentJet> L(static_cast<std::size_t>(n_max) + 1, MomentJet::zero(order));
    std::vector<int128> group(static_cast<std::size_t>(order) + 1);
    mpz_class tmp, pw;
    for (long m = 1; m <= n_max; ++m) {
        for (long i = 1; i * m <= n_max; ++i) {
            const long d = i * m;
            const long e_abs_max = i * (std::labs(delta) + m);
            MomentJet& dest = L[static_cast<std::size_t>(d)];
            if (int128_group_safe(m, e_abs_max, order)) {
                std::fill(group.begin(), group.end(), int128{0});
                for (long k = 0; k < m; ++k) {
                    const long e = i * (delta + 2 * k + 1 - m);
                    int128 p = 1;
                    for (int j = 0; j <= order; ++j) {
                        group[static_cast<std::size_t>(j)] += p;
                        if (j < order) p *= e;  // e^(order+1) may exceed the guard
                    }
                }
                for (int j = 0; j <= order; ++j) {
                    if (group[static_cast<std::size_t>(j)] == 0) continue;
                    mpz_set_int128(tmp, group[static_cast<std::size_t>(j)]);
                    mpz_addmul_ui(dest[j].get_mpz_t(), tmp.get_mpz_t(),
                                  static_cast<unsigned long>(m));
                }
            } else {
                for (long k = 0; k < m; ++k) {
                    const long e = i * (delta + 2 * k + 1 - m);
                    for (int j = 0; j <= order; ++j) {
                        detail::coef_pow_assign(pw, e, static_cast<unsigned>(j));
                        mpz_mul_ui(pw.get_mpz_t(), pw.get_mpz_t(), static_cast<unsigned long>(m));
                        dest[j] += pw;
                    }
                }
            }
        }
    }
    return L;
}

std::vector<FloatJet> logder_table_jet_float(long delta, int n_max, int order) {
    std::vector<FloatJet> L(static_cast<std::size_t>(n_max) + 1, FloatJet::zero(order));
    for (long m = 1; m <= n_max; ++m) {
        for (long i = 1; i * m <= n_max; ++i) {
            FloatJet& dest = L[static_cast<std::size_t>(i * m)];
            for (long k = 0; k < m; ++k) {
                const long e = i * (delta + 2 * k + 1 - m);
                long double p = static_cast<long double>(m);
                for (int j = 0; j <= order; ++j) {
                    dest[j] += p;
                    p *= static_cast<long double>(e);
                }
            }
        }
    }
    return L;
}

// sigma_2 divisor sums for the q = 1 specialization (L_d = sum_{m|d} m^2).
std::vector<unsigned long> sigma2_table(int n_max) {
    std::vector<unsigned long> s(static_cast<std::size_t>(n_max) + 1, 0);
    for (long m = 1; m <= n_max; ++m)
        for (long d = m; d <= n_max; d += m)
            s[static_cast<std::size_t>(d)] += static_cast<unsigned long>(m) * static_cast<unsigned long>(m);
    return s;
}

}  // namespace

TSeries<LaurentPoly> expand_m_delta_laurent(long delta, int n_max) {
    return expand_product(static_cast<int>(delta), n_max, LaurentPoly(), LaurentPoly::one(),
                          [](int e) { return LaurentPoly::monomial(e); });
}

TSeries<MomentJet> expand_m_delta_jet_product(long delta, int n_max, int order) {
    return expand_product(static_cast<int>(delta), n_max, MomentJet::zero(order),
                          MomentJet::one(order),
                          [order](int e) { return MomentJet::of_exponent(e, order); });
}

TSeries<MomentJet> expand_m_delta_jet(long delta, int n_max, int order) {
    const auto L = logder_table_jet(delta, n_max, order);
    TSeries<MomentJet> p(n_max, MomentJet::zero(order));
    p[0] = MomentJet::one(order);
    MomentJet acc;
    for (int n = 1; n <= n_max; ++n) {
        acc = MomentJet::zero(order);
        for (int d = 1; d <= n; ++d) acc.add_mul(L[static_cast<std::size_t>(d)], p[n - d]);
        jet_divide_exact(acc, static_cast<unsigned long>(n));
        p[n] = std::move(acc);
    }
    return p;
}

TSeries<FloatJet> expand_m_delta_jet_float(long delta, int n_max, int order) {
    const auto L = logder_table_jet_float(delta, n_max, order);
    TSeries<FloatJet> p(n_max, FloatJet::zero(order));
    p[0] = FloatJet::one(order);
    for (int n = 1; n <= n_max; ++n) {
        FloatJet acc = FloatJet::zero(order);
        for (int d = 1; d <= n; ++d) acc.add_mul(L[static_cast<std::size_t>(d)], p[n - d]);
        jet_divide_exact(acc, static_cast<unsigned long>(n));
        p[n] = std::move(acc);
    }
    return p;
}

TSeries<mpz_class> expand_macmahon(int n_max) {
    const auto sig2 = sigma2_table(n_max);
    TSeries<mpz_class> p(n_max, mpz_class(0));
    p[0] = 1;
    mpz_class acc, q, r;
    for (int n = 1; n <= n_max; ++n) {
        acc = 0;
        for (int d = 1; d <= n; ++d)
            mpz_addmul_ui(acc.get_mpz_t(), p[n - d].get_mpz_t(), sig2[static_cast<std::size_t>(d)]);
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(),
                       static_cast<unsigned long>(n));
        if (r != 0) throw std::logic_error("plane partition recurrence not divisible");
        mpz_swap(p[n].get_mpz_t(), q.get_mpz_t());
    }
    return p;
}

TSeries<long double> expand_macmahon_float(int n_max) {
    const auto sig2 = sigma2_table(n_max);
    TSeries<long double> p(n_max, 0.0L);
    p[0] = 1.0L;
    for (int n = 1; n <= n_max; ++n) {
        long double acc = 0.0L;
        for (int d = 1; d <= n; ++d)
            acc += static_cast<long double>(sig2[static_cast<std::size_t>(d)]) * p[n - d];
        p[n] = acc / static_cast<long double>(n);
    }
    return p;
}

TSeries<mpz_class> expand_f2(int n_max) {
    TSeries<mpz_class> f(n_max, mpz_class(0));
    mpz_class g;
    for (long m = 2; m <= n_max; ++m) {
        g = m;
        g = g * (g * g - 1) / 3;  // always an integer: product of 3 consecutive over 3
        for (long i = 1; i * m <= n_max; ++i)
            mpz_addmul_ui(f[static_cast<int>(i * m)].get_mpz_t(), g.get_mpz_t(),
                          static_cast<unsigned long>(i));
    }
    return f;
}

TSeries<mpz_class> second_moment_series(int n_max) {
    const auto f2 = expand_f2(n_max);
    const auto p = expand_macmahon(n_max);
    TSeries<mpz_class> out(n_max, mpz_class(0));
    for (int n = 0; n <= n_max; ++n) {
        mpz_class& acc = out[n];
        for (int d = 2; d <= n; ++d)
            mpz_addmul(acc.get_mpz_t(), f2[d].get_mpz_t(), p[n - d].get_mpz_t());
    }
    return out;
}

double log_mpz(const mpz_class& v) {
    if (v <= 0) throw std::domain_error("log_mpz needs a positive value");
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

long double truncated_eval_at_exp(const TSeries<mpz_class>& s, long double y) {
    if (!(y > 0)) throw std::domain_error("evaluation point must satisfy y > 0");
    long double total = 0.0L;
    for (int n = 0; n <= s.n_max(); ++n) {
        const mpz_class& c = s[n];
        if (c == 0) continue;
        const int sign = c < 0 ? -1 : 1;
        const double lg = log_mpz(sign < 0 ? mpz_class(-c) : c);
        total += sign * std::exp(static_cast<long double>(lg) - static_cast<long double>(n) * y);
    }
    return total;
}

}  // namespace ppdt
