#pragma once

#include <cstdint>
#include <optional>

#include "museq/types.hpp"

namespace museq {
namespace reduce {

inline constexpr uint64_t default_svp_budget = 100'000'000;

// Basis of the kernel lattice of `weights` (weights[0] must be 1):
// rows b_i = e_i - s_i e_0 for i = 1..n. Spans the full kernel since any
// kernel vector z equals sum z_i b_i.
IMat kernel_basis(const IVec& weights);

// Exact Gram matrix <b_i, b_j>.
IMat gram_of(const IMat& basis);

// Exact determinant of an integer matrix (Bareiss fraction-free elimination).
Integer int_determinant(IMat m);

struct DetCheck {
    Integer via_gram;
    Integer via_sum;
    bool equal = false;
};

// det(Gram) computed by elimination vs sum of squared weights; the two
// routes are independent.
DetCheck determinant_identity_check(const IVec& weights);

// Exact-rational LLL; same lattice, size-reduced, Lovasz condition for delta.
IMat lll_reduce(IMat basis, const Rational& delta = Rational(99, 100));

struct SvpCertificate {
    Integer minimum;
    IVec witness;   // ambient coordinates; first nonzero entry positive
    uint64_t nodes = 0;
};

// Exact lattice minimum by sphere-decoding enumeration on the
// LLL-reduced basis. Deterministic: equal-norm witnesses are tie-broken
// by lexicographic order of the (sign-normalized) coefficient vector.
SvpCertificate shortest_vector(const IMat& basis, uint64_t node_budget = default_svp_budget);

// Independent oracle: direct search over z in Z^(n+1) with |z|^2 < cap
// and <z, weights> = 0, pruned by Cauchy-Schwarz on the remaining dot.
// Empty result when no kernel vector of norm < cap exists.
std::optional<Integer> minimum_brute(const IVec& weights, const Integer& cap,
                                     uint64_t node_budget = default_svp_budget);

}  // namespace reduce
}  // namespace museq
