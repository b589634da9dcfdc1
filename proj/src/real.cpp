#include "museq/real.hpp"

#include <cstdlib>

namespace museq {

std::string Real::str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real half_pow(const Rational& base, long n, Rnd r) {
    if (sgn(base) < 0) throw InputError("half_pow: negative base");
    if (n < 0) throw InputError("half_pow: negative exponent");
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(n));
    p.canonicalize();
    // p = base^n exactly; result = sqrt(p), a single directed rounding.
    return sqrt(Real(p, r), r);
}

Real pi_pow(long k, Rnd r) {
    if (k == 0) return Real(Integer(1), r);
    if (k < 0) return div(Real(Integer(1), r), pi_pow(-k, flip(r)), r);
    return pow_ui(Real::pi(r), static_cast<unsigned long>(k), r);
}

}  // namespace museq
