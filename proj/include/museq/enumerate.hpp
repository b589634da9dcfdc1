#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "museq/types.hpp"

namespace museq {
namespace enumerate {

enum class Mode {
    Full,  // every z in Z^n with 0 < |z|^2 <= B, each exactly once
    Half   // one of each pair {z,-z}; representative has first nonzero coord > 0
};

// Coordinates of enumerated vectors are at most sqrt(B), which is tiny at
// desk scale; plain machine integers suffice.
using Coords = std::vector<long>;

inline constexpr uint64_t default_budget = 1'000'000'000;

// Visits every vector specified by `mode` in lexicographic coordinate
// order. Throws BudgetExceeded when the volume-based work estimate
// exceeds `budget` before any work is done.
void short_vectors(int n, const Integer& bound, Mode mode,
                   const std::function<void(const Coords&)>& visit,
                   uint64_t budget = default_budget);

// Same tree walk, but carries the running scalar product with `weights`
// (weights.size() == n) so visitors get <z, weights> for free.
void short_vectors_weighted(const IVec& weights, const Integer& bound, Mode mode,
                            const std::function<void(const Coords&, const Integer&)>& visit,
                            uint64_t budget = default_budget);

// Materialized variant, mostly for tests.
std::vector<Coords> short_vector_list(int n, const Integer& bound, Mode mode,
                                      uint64_t budget = default_budget);

// Number of ALL z in Z^n with |z|^2 <= mu, the zero vector included.
Integer count_norm_le(int n, const Integer& mu, uint64_t budget = default_budget);

}  // namespace enumerate
}  // namespace museq
