#pragma once

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "ppdt/laurent_poly.hpp"
#include "ppdt/moment_jet.hpp"

namespace ppdt {

// Fused acc += a * b for the coefficient rings used by the series engine.
inline void ring_addmul(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void ring_addmul(long double& acc, const long double& a, const long double& b) {
    acc += a * b;
}
inline void ring_addmul(LaurentPoly& acc, const LaurentPoly& a, const LaurentPoly& b) {
    acc.add_mul(a, b);
}
template <class C>
inline void ring_addmul(BasicJet<C>& acc, const BasicJet<C>& a, const BasicJet<C>& b) {
    acc.add_mul(a, b);
}

/// Power series in t truncated at t^n_max, coefficients in a ring R.
template <class R>
struct TSeries {
    std::vector<R> c;  // c[n] is the coefficient of t^n

    TSeries() = default;
    explicit TSeries(int n_max, const R& zero = R()) : c(checked_size(n_max), zero) {}

    int n_max() const { return static_cast<int>(c.size()) - 1; }

    const R& operator[](int n) const { return c[static_cast<std::size_t>(n)]; }
    R& operator[](int n) { return c[static_cast<std::size_t>(n)]; }

    TSeries truncated(int m) const {
        if (m < 0 || m > n_max()) throw std::invalid_argument("bad truncation order");
        TSeries out;
        out.c.assign(c.begin(), c.begin() + m + 1);
        return out;
    }

private:
    static std::size_t checked_size(int n_max) {
        if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
        return static_cast<std::size_t>(n_max) + 1;
    }
};

/// Multiplies s in place by sum_{j>=0} w^j t^{jm}, the expansion of the
/// geometric factor 1/(1 - w t^m), via the ascending prefix recurrence
/// c[n] += w * c[n-m].
template <class R>
void mul_geometric_factor(TSeries<R>& s, const R& w, int m) {
    if (m < 1) throw std::invalid_argument("geometric factor period must be >= 1");
    for (int n = m; n <= s.n_max(); ++n) ring_addmul(s[n], w, s[n - m]);
}

/// Product over m <= n_max, k = 0..m-1 of geometric factors with weight
/// weight(delta + 2k + 1 - m) and period m; factors with larger m cannot
/// affect the truncation. Outer loop ascends in m, inner in k.
template <class R, class WeightFn>
TSeries<R> expand_product(int delta, int n_max, const R& zero_element, const R& one_element,
                          WeightFn weight) {
    TSeries<R> s(n_max, zero_element);
    s[0] = one_element;
    for (int m = 1; m <= n_max; ++m)
        for (int k = 0; k < m; ++k) mul_geometric_factor(s, weight(delta + 2 * k + 1 - m), m);
    return s;
}

}  // namespace ppdt
