#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ppdt {

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Storage is dense over a trimmed exponent window; the canonical view
/// (terms(), operator==, JSON) contains no zero coefficients, so equality
/// is structural equality of canonical forms. Exponents are plain integers
/// in whatever unit the caller declares (q or q^(1/2); see the series dump
/// headers) -- half powers are handled by doubling, never by rationals.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero polynomial

    static LaurentPoly monomial(long exponent, mpz_class coefficient = 1);
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly from_terms(const std::vector<std::pair<long, mpz_class>>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    long min_exponent() const;  // undefined on zero polynomial (throws)
    long max_exponent() const;

    /// Coefficient of q^exponent (zero outside the stored window).
    const mpz_class& coeff(long exponent) const;

    void add_term(long exponent, const mpz_class& c);

    /// Canonical sorted (exponent, coefficient) pairs, zeros dropped.
    std::vector<std::pair<long, mpz_class>> terms() const;
    std::size_t term_count() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    /// *this += a * b, fused to avoid temporaries in series recurrences.
    void add_mul(const LaurentPoly& a, const LaurentPoly& b);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Substitutes q -> 1/q (negates every exponent).
    LaurentPoly mirrored() const;

    /// Sum_e c_e * e^k, i.e. (q d/dq)^k applied and evaluated at q = 1.
    /// k = 0 is plain evaluation at q = 1.
    mpz_class derivative_at_one(unsigned k) const;
    mpz_class value_at_one() const { return derivative_at_one(0); }

    /// JSON: sorted array of [exponent, coefficient-as-decimal-string] pairs.
    std::string to_json() const;
    static LaurentPoly from_json(const std::string& text);

    std::string to_string() const;  // diagnostics only

private:
    long min_exp_ = 0;
    std::vector<mpz_class> coeffs_;  // coeffs_[i] is the coefficient of q^(min_exp_ + i)

    void trim();
    mpz_class& slot(long exponent);
    void ensure_window(long lo, long hi);
};

inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly mirror(const LaurentPoly& a) { return a.mirrored(); }
inline mpz_class derivative_at_one(const LaurentPoly& a, unsigned k) { return a.derivative_at_one(k); }

}  // namespace ppdt
