#pragma once

#include "museq/real.hpp"
#include "museq/types.hpp"

namespace museq {
namespace density {

// Volume of the n-dimensional unit ball, pi^(n/2)/(n/2)!.
// Internally decomposed as (exact rational) * pi^floor(n/2) so that a
// single directed evaluation certifies the bound direction.
Real unit_ball_volume(long n, Rnd r = Rnd::Nearest);

// Exact rational c and exponent m with V_n = c * pi^m.
// n even = 2m: c = 1/m!; n odd = 2m+1: c = 2^(m+1)/(2m+1)!!.
std::pair<Rational, long> unit_ball_volume_symbolic(long n);

// Center density sqrt(min^n / (4^n det)); density is delta * V_n.
Real center_density(const Integer& minimum, const Integer& determinant, long n,
                    Rnd r = Rnd::Nearest);
Real density_from_center(const Real& delta, long n, Rnd r = Rnd::Nearest);

// The two upper bounds on the greedy term s_n:
//   first  = 1 + sqrt(mu-2) (mu-1+n/4)^(n/2) pi^(n/2)/(n/2)!
//   second = sqrt(mu) (mu+n/4)^(n/2) pi^(n/2)/(n/2)!
std::pair<Real, Real> theorem_bound_sn(const Integer& mu, long n, Rnd r = Rnd::Nearest);

// Density guarantee (1+n/(4 mu))^(-n/2) / (2^n sqrt((n+1) mu)).
Real corollary_density_bound(const Integer& mu, long n, Rnd r = Rnd::Nearest);

// Upper bound 2 (mu+n/4)^(n/2) V_n on the number of integer vectors of
// norm <= mu in Z^n.
Real counting_bound(long n, const Integer& mu, Rnd r = Rnd::Nearest);

// zeta(n) by direct series over K terms plus an integral tail estimate;
// Down/Up use the bracketing integrals, so they enclose the true value.
Real zeta(long n, Rnd r = Rnd::Nearest, long terms = 10000);

// Minkowski-Hlawka zeta(n) 2^(1-n) and Ball 2(n-1) 2^(-n) zeta(n).
std::pair<Real, Real> comparison_bounds(long n, Rnd r = Rnd::Nearest);

// sum_{k>=1} e^(-k^2 pi), truncated when terms drop below 10^-30.
Real theta_series(long max_terms = 64);
// 1 / theta_series().
Real theta_constant();

struct VnRatio {
    Real exact;     // sqrt(n) V_n / V_{n-1}
    Real approx;    // sqrt(2 pi) (1 - 1/(4n))
    Real residual;  // exact - approx
};
VnRatio vn_ratio_check(long n);

struct DensityReport {
    long n = 0;
    Integer minimum;
    Integer determinant;
    Real delta;
    Real Delta;
    Real bound_corollary;
    Real bound_mh;
    Real bound_ball;
};

DensityReport make_report(long n, const Integer& minimum, const Integer& determinant,
                          const Integer& mu);

}  // namespace density
}  // namespace museq
