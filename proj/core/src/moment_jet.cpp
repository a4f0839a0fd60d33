#include "ppdt/moment_jet.hpp"

namespace ppdt {

MomentJet jet_of(const LaurentPoly& p, int order) {
    MomentJet out = MomentJet::zero(order);
    mpz_class pw;
    for (const auto& [e, c] : p.terms()) {
        for (int k = 0; k <= order; ++k) {
            detail::coef_pow_assign(pw, e, static_cast<unsigned>(k));
            mpz_addmul(out[k].get_mpz_t(), c.get_mpz_t(), pw.get_mpz_t());
        }
    }
    return out;
}

void jet_divide_exact(MomentJet& j, unsigned long n) {
    mpz_class q, r;
    for (int k = 0; k <= j.order(); ++k) {
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), j[k].get_mpz_t(), n);
        if (r != 0) throw std::logic_error("jet_divide_exact: entry not divisible");
        mpz_swap(j[k].get_mpz_t(), q.get_mpz_t());
    }
}

}  // namespace ppdt
