#include "ppdt/laurent_poly.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ppdt {

namespace {
const mpz_class kZero = 0;
}

LaurentPoly LaurentPoly::monomial(long exponent, mpz_class coefficient) {
    LaurentPoly p;
    if (coefficient != 0) {
        p.min_exp_ = exponent;
        p.coeffs_.push_back(std::move(coefficient));
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<long, mpz_class>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

long LaurentPoly::min_exponent() const {
    if (is_zero()) throw std::logic_error("min_exponent of zero polynomial");
    return min_exp_;
}

long LaurentPoly::max_exponent() const {
    if (is_zero()) throw std::logic_error("max_exponent of zero polynomial");
    return min_exp_ + static_cast<long>(coeffs_.size()) - 1;
}

const mpz_class& LaurentPoly::coeff(long exponent) const {
    if (is_zero() || exponent < min_exp_ ||
        exponent >= min_exp_ + static_cast<long>(coeffs_.size()))
        return kZero;
    return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

void LaurentPoly::ensure_window(long lo, long hi) {
    if (coeffs_.empty()) {
        min_exp_ = lo;
        coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
        return;
    }
    long cur_hi = min_exp_ + static_cast<long>(coeffs_.size()) - 1;
    if (lo < min_exp_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), mpz_class(0));
        min_exp_ = lo;
    }
    if (hi > cur_hi) coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(hi - cur_hi));
}

mpz_class& LaurentPoly::slot(long exponent) {
    ensure_window(std::min(exponent, coeffs_.empty() ? exponent : min_exp_),
                  std::max(exponent, coeffs_.empty() ? exponent
                                                     : min_exp_ + static_cast<long>(coeffs_.size()) - 1));
    return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

void LaurentPoly::add_term(long exponent, const mpz_class& c) {
    if (c == 0) return;
    slot(exponent) += c;
    trim();
}

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == 0) --tail;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        min_exp_ += static_cast<long>(lead);
    }
    coeffs_.resize(tail - lead);
}

std::vector<std::pair<long, mpz_class>> LaurentPoly::terms() const {
    std::vector<std::pair<long, mpz_class>> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(min_exp_ + static_cast<long>(i), coeffs_[i]);
    return out;
}

std::size_t LaurentPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    ensure_window(std::min(is_zero() ? rhs.min_exp_ : min_exp_, rhs.min_exp_),
                  std::max(is_zero() ? rhs.max_exponent() : max_exponent(), rhs.max_exponent()));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[static_cast<std::size_t>(rhs.min_exp_ + static_cast<long>(i) - min_exp_)] +=
            rhs.coeffs_[i];
    trim();
    return *this;
}

void LaurentPoly::add_mul(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    ensure_window(std::min(is_zero() ? a.min_exp_ + b.min_exp_ : min_exp_,
                           a.min_exp_ + b.min_exp_),
                  std::max(is_zero() ? a.max_exponent() + b.max_exponent() : max_exponent(),
                           a.max_exponent() + b.max_exponent()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        const long ea = a.min_exp_ + static_cast<long>(i);
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpz_class& acc =
                coeffs_[static_cast<std::size_t>(ea + b.min_exp_ + static_cast<long>(j) - min_exp_)];
            mpz_addmul(acc.get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    trim();
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.add_mul(a, b);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly r;
    if (is_zero()) return r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.min_exp_ = -max_exponent();
    return r;
}

mpz_class LaurentPoly::derivative_at_one(unsigned k) const {
    mpz_class total = 0, p;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const long e = min_exp_ + static_cast<long>(i);
        if (k == 0) {
            total += coeffs_[i];
            continue;
        }
        p = e;
        mpz_pow_ui(p.get_mpz_t(), p.get_mpz_t(), k);
        mpz_addmul(total.get_mpz_t(), coeffs_[i].get_mpz_t(), p.get_mpz_t());
    }
    return total;
}

std::string LaurentPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms()) arr.push_back({e, c.get_str()});
    return arr.dump();
}

LaurentPoly LaurentPoly::from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    LaurentPoly p;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("LaurentPoly JSON entries must be [exponent, coeff] pairs");
        p.add_term(pair[0].get<long>(), mpz_class(pair[1].get<std::string>()));
    }
    return p;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace ppdt
