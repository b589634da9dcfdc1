#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "museq/real.hpp"
#include "museq/types.hpp"

namespace museq {
namespace approx {

using RMat = std::vector<std::vector<Real>>;

// Lower-triangular factor with G = L L^t; throws InputError naming the
// failing pivot when G is not positive definite.
RMat cholesky(const QMat& G);

// n x (n+1) matrix with entries L_rounded below the diagonal, 1 on the
// superdiagonal, 0 elsewhere.
IMat build_B(const IMat& L_rounded);

// Integer vector v with v[0] = 1 and B v = 0, by forward substitution.
IVec kernel_vector(const IMat& B);

struct ApproxResult {
    Integer kappa;
    RMat L;
    IMat L_rounded;
    IMat B;
    IVec v;
    IVec s;                // |v| componentwise; s[0] = 1
    Rational error_exact;  // max |(1/kappa^2) B B^t - G|
    Real error;
};

// Full pipeline: Cholesky, scale by kappa, round (halves toward +inf),
// assemble B, solve for v, take s = |v|.
ApproxResult approximate(const QMat& G, const Integer& kappa);

struct SweepRow {
    Integer kappa;
    Rational error;
    std::optional<Integer> minimum;
    std::optional<Integer> determinant;
    std::optional<Real> delta;
    std::optional<Real> Delta;
    std::string note;  // nonempty when the kernel-lattice density step failed
};

// Runs `approximate` per kappa and scores the kernel lattice of s via
// LLL + enumeration; SVP budget errors are reported per row, not fatal.
std::vector<SweepRow> convergence_sweep(const QMat& G, const std::vector<Integer>& kappas,
                                        uint64_t svp_budget = 100'000'000);

// Gram matrix file: first line n, then n rows of `p/q` or integer entries.
QMat load_gram_file(const std::string& path);

}  // namespace approx
}  // namespace museq
