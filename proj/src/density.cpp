#include "museq/density.hpp"

namespace museq {
namespace density {

namespace {
Rational make_q(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}
}  // namespace

std::pair<Rational, long> unit_ball_volume_symbolic(long n) {
    if (n < 0) throw InputError("unit_ball_volume: n < 0");
    long m = n / 2;
    Rational c;
    if (n % 2 == 0) {
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
        c = Rational(1) / Rational(fact);
    } else {
        // (n/2)! = (2m+1)!! sqrt(pi) / 2^(m+1), so V_n = 2^(m+1) pi^m / (2m+1)!!
        Integer dfact;
        mpz_2fac_ui(dfact.get_mpz_t(), static_cast<unsigned long>(2 * m + 1));
        Integer two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m + 1));
        c = Rational(two_pow) / Rational(dfact);
    }
    c.canonicalize();
    return {c, m};
}

Real unit_ball_volume(long n, Rnd r) {
    auto [c, m] = unit_ball_volume_symbolic(n);
    return mul(Real(c, r), pi_pow(m, r), r);
}

Real center_density(const Integer& minimum, const Integer& determinant, long n, Rnd r) {
    if (minimum < 1 || determinant < 1) throw InputError("center_density: bad input");
    Integer num;
    mpz_pow_ui(num.get_mpz_t(), minimum.get_mpz_t(), static_cast<unsigned long>(n));
    Integer four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
    Rational q = Rational(num) / Rational(four_n * determinant);
    q.canonicalize();
    return sqrt(Real(q, r), r);
}

Real density_from_center(const Real& delta, long n, Rnd r) {
    return mul(delta, unit_ball_volume(n, r), r);
}

std::pair<Real, Real> theorem_bound_sn(const Integer& mu, long n, Rnd r) {
    if (mu < 2 || n < 1) throw InputError("theorem_bound_sn: need mu >= 2, n >= 1");
    Real vn = unit_ball_volume(n, r);
    Real first = add(Real(Integer(1), r),
                     mul(mul(sqrt(Real(Integer(mu - 2), r), r),
                             half_pow(Rational(mu - 1) + make_q(n, 4), n, r), r),
                         vn, r),
                     r);
    Real second = mul(mul(sqrt(Real(mu, r), r),
                          half_pow(Rational(mu) + make_q(n, 4), n, r), r),
                      vn, r);
    return {first, second};
}

Real corollary_density_bound(const Integer& mu, long n, Rnd r) {
    if (mu < 2 || n < 1) throw InputError("corollary_density_bound: need mu >= 2, n >= 1");
    // (1+n/(4mu))^(-n/2) / 2^n = (mu/(4mu+n))^(n/2)
    Rational base = Rational(mu) / Rational(4 * mu + n);
    base.canonicalize();
    Real num = half_pow(base, n, r);
    Real den = sqrt(Real(Integer((mu * (n + 1))), flip(r)), flip(r));
    return div(num, den, r);
}

Real counting_bound(long n, const Integer& mu, Rnd r) {
    if (n < 1 || mu < 0) throw InputError("counting_bound: bad input");
    return mul(mul(Real(Integer(2), r),
                   half_pow(Rational(mu) + make_q(n, 4), n, r), r),
               unit_ball_volume(n, r), r);
}

Real zeta(long n, Rnd r, long terms) {
    if (n < 2) throw InputError("zeta: need n >= 2");
    Real s(Integer(0), r);
    for (long k = 1; k <= terms; ++k) {
        Integer kn;
        mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(n));
        s = add(s, Real(make_q(1, kn), r), r);
    }
    // integral bracket for the tail: (K+1)^(1-n)/(n-1) <= sum_{k>K} k^-n <= K^(1-n)/(n-1)
    Integer klo, khi;
    mpz_ui_pow_ui(khi.get_mpz_t(), static_cast<unsigned long>(terms),
                  static_cast<unsigned long>(n - 1));
    mpz_ui_pow_ui(klo.get_mpz_t(), static_cast<unsigned long>(terms + 1),
                  static_cast<unsigned long>(n - 1));
    Rational tail_up = make_q(1, khi * (n - 1));
    Rational tail_dn = make_q(1, klo * (n - 1));
    switch (r) {
        case Rnd::Up: s = add(s, Real(tail_up, Rnd::Up), Rnd::Up); break;
        case Rnd::Down: s = add(s, Real(tail_dn, Rnd::Down), Rnd::Down); break;
        case Rnd::Nearest: {
            Rational mid = (tail_up + tail_dn) / 2;
            s = add(s, Real(mid, Rnd::Nearest), Rnd::Nearest);
            break;
        }
    }
    return s;
}

std::pair<Real, Real> comparison_bounds(long n, Rnd r) {
    if (n < 2) throw InputError("comparison_bounds: need n >= 2");
    Real z = zeta(n, r);
    Integer two_nm1;
    mpz_ui_pow_ui(two_nm1.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    Real mh = mul(z, Real(make_q(1, two_nm1), r), r);
    Real ball = mul(z, Real(make_q(2 * (n - 1), 2 * two_nm1), r), r);
    return {mh, ball};
}

Real theta_series(long max_terms) {
    Real s(0.0);
    Real cutoff(1e-30);
    Real pi = Real::pi();
    for (long k = 1; k <= max_terms; ++k) {
        Real t = exp(neg(Real(Integer(k * k)) * pi), Rnd::Nearest);
        if (t < cutoff) break;
        s = s + t;
    }
    return s;
}

Real theta_constant() { return Real(Integer(1)) / theta_series(); }

VnRatio vn_ratio_check(long n) {
    if (n < 1) throw InputError("vn_ratio_check: n >= 1");
    VnRatio out;
    Real vn = unit_ball_volume(n);
    Real vnm1 = unit_ball_volume(n - 1);
    out.exact = sqrt(Real(Integer(n)), Rnd::Nearest) * vn / vnm1;
    Real two_pi = Real(Integer(2)) * Real::pi();
    out.approx = sqrt(two_pi, Rnd::Nearest) * Real(make_q(4 * n - 1, 4 * n));
    out.residual = out.exact - out.approx;
    return out;
}

DensityReport make_report(long n, const Integer& minimum, const Integer& determinant,
                          const Integer& mu) {
    DensityReport rep;
    rep.n = n;
    rep.minimum = minimum;
    rep.determinant = determinant;
    rep.delta = center_density(minimum, determinant, n);
    rep.Delta = density_from_center(rep.delta, n);
    rep.bound_corollary = corollary_density_bound(mu, n);
    if (n >= 2) {
        auto [mh, ball] = comparison_bounds(n);
        rep.bound_mh = mh;
        rep.bound_ball = ball;
    }
    return rep;
}

}  // namespace density
}  // namespace museq
