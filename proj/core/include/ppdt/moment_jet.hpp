#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ppdt/laurent_poly.hpp"

namespace ppdt {

namespace detail {

inline void coef_addmul(mpz_class& acc, const mpz_class& a, const mpz_class& b,
                        unsigned long long binom) {
    if (binom == 1) {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return;
    }
    static thread_local mpz_class tmp;
    mpz_mul(tmp.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_addmul_ui(acc.get_mpz_t(), tmp.get_mpz_t(), binom);
}

inline void coef_addmul(long double& acc, long double a, long double b, unsigned long long binom) {
    acc += static_cast<long double>(binom) * a * b;
}

inline void coef_pow_assign(mpz_class& out, long base, unsigned k) {
    out = base;
    mpz_pow_ui(out.get_mpz_t(), out.get_mpz_t(), k);
}

inline void coef_pow_assign(long double& out, long base, unsigned k) {
    out = 1.0L;
    for (unsigned i = 0; i < k; ++i) out *= static_cast<long double>(base);
}

}  // namespace detail

/// Truncated jet of a q-Laurent polynomial at q = 1.
///
/// Entry j holds the j-th power sum  sum_e c_e e^j, which is (q d/dq)^j of
/// the abstracted polynomial evaluated at q = 1. Multiplication is the
/// binomial convolution induced by the product rule, so the jet map is a
/// ring homomorphism from Laurent polynomials (exercised by tests).
/// Orders are capped at 60 so the incremental binomial weights stay in
/// 64 bits (C(60,30) * 31 < 2^63).
template <class Coef>
class BasicJet {
public:
    static constexpr int kMaxOrder = 60;

    BasicJet() = default;  // empty; assign before use

    static BasicJet zero(int order) {
        check_order(order);
        BasicJet j;
        j.d_.assign(static_cast<std::size_t>(order) + 1, Coef(0));
        return j;
    }

    static BasicJet one(int order) { return of_exponent(0, order); }

    /// Jet of the monomial q^e: entries e^0, e^1, ..., e^order.
    static BasicJet of_exponent(long e, int order) {
        check_order(order);
        BasicJet j;
        j.d_.resize(static_cast<std::size_t>(order) + 1);
        for (int k = 0; k <= order; ++k)
            detail::coef_pow_assign(j.d_[static_cast<std::size_t>(k)], e, static_cast<unsigned>(k));
        return j;
    }

    int order() const { return static_cast<int>(d_.size()) - 1; }
    bool empty() const { return d_.empty(); }

    const Coef& operator[](int k) const { return d_[static_cast<std::size_t>(k)]; }
    Coef& operator[](int k) { return d_[static_cast<std::size_t>(k)]; }

    BasicJet& operator+=(const BasicJet& rhs) {
        require_same_order(rhs);
        for (std::size_t k = 0; k < d_.size(); ++k) d_[k] += rhs.d_[k];
        return *this;
    }

    /// *this += a * b (binomial convolution; orders must match).
    void add_mul(const BasicJet& a, const BasicJet& b) {
        a.require_same_order(b);
        if (empty()) *this = zero(a.order());
        require_same_order(a);
        const int K = order();
        for (int j = K; j >= 0; --j) {
            unsigned long long binom = 1;  // C(j, i), updated incrementally
            Coef& acc = d_[static_cast<std::size_t>(j)];
            for (int i = 0; i <= j; ++i) {
                detail::coef_addmul(acc, a.d_[static_cast<std::size_t>(i)],
                                    b.d_[static_cast<std::size_t>(j - i)], binom);
                binom = binom * static_cast<unsigned long long>(j - i) /
                        static_cast<unsigned long long>(i + 1);
            }
        }
    }

    friend BasicJet operator*(const BasicJet& a, const BasicJet& b) {
        BasicJet r = zero(a.order());
        r.add_mul(a, b);
        return r;
    }

    friend BasicJet operator+(BasicJet a, const BasicJet& b) { a += b; return a; }

    friend bool operator==(const BasicJet& a, const BasicJet& b) { return a.d_ == b.d_; }
    friend bool operator!=(const BasicJet& a, const BasicJet& b) { return !(a == b); }

private:
    std::vector<Coef> d_;

    static void check_order(int order) {
        if (order < 0 || order > kMaxOrder)
            throw std::invalid_argument("jet order must be in [0, 60]");
    }
    void require_same_order(const BasicJet& other) const {
        if (d_.size() != other.d_.size())
            throw std::invalid_argument("jet order mismatch");
    }
};

using MomentJet = BasicJet<mpz_class>;
using FloatJet = BasicJet<long double>;

inline MomentJet jet_of_exponent(long e, int order) { return MomentJet::of_exponent(e, order); }
inline MomentJet jet_mul(const MomentJet& a, const MomentJet& b) { return a * b; }

/// Image of a Laurent polynomial under the jet map.
MomentJet jet_of(const LaurentPoly& p, int order);

/// Exact division of every entry by n (throws if not divisible).
void jet_divide_exact(MomentJet& j, unsigned long n);
inline void jet_divide_exact(FloatJet& j, unsigned long n) {
    for (int k = 0; k <= j.order(); ++k) j[k] /= static_cast<long double>(n);
}

}  // namespace ppdt
