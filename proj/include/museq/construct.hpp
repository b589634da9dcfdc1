#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "museq/core.hpp"
#include "museq/real.hpp"

namespace museq {
namespace construct {

// The values the next term must avoid, together with the number of
// distinct witness pairs (a, k).
struct ForbiddenSet {
    Integer mu;
    size_t prefix_len = 0;
    std::vector<Integer> values;  // sorted, strictly positive
    Integer pair_count;           // f = #{(a,k)}

    bool contains(const Integer& a) const;
};

struct ExtensionReport {
    Integer term;
    Integer pair_count;
    Real bound_first;
    Real bound_second;
    Real sigma_tilde;  // statistic of the extended sequence
};

// { |<z, prefix>| / k : z != 0, k >= 1, |z|^2 + k^2 < mu, k | <z, prefix> }
ForbiddenSet forbidden_values(const MuSequence& prefix,
                              uint64_t enum_budget = 1'000'000'000);

// Smallest positive integer outside the forbidden set.
ExtensionReport greedy_extend(const MuSequence& prefix,
                              uint64_t enum_budget = 1'000'000'000);

// Smallest admissible integer in [lower, upper], or nothing if the whole
// interval is forbidden.
std::optional<ExtensionReport> extend_in_interval(const MuSequence& prefix,
                                                  const Integer& lower,
                                                  const Integer& upper,
                                                  uint64_t enum_budget = 1'000'000'000);

// sqrt(sum s_i^2) / (mu^((n-1)/2) V_{n-1}) for a prefix of length n.
Real sigma_statistic(const MuSequence& prefix);

enum class Strategy { Greedy, Interval };

struct BuildOptions {
    Strategy strategy = Strategy::Greedy;
    // interval schedule: lower = ceil(sigma mu^(n/2) V_n), upper = ceil((1+eps) lower);
    // sigma < 0 means "use sum_{k>=1} e^(-k^2 pi)"
    double sigma = -1.0;
    double eps = 0.1;
    uint64_t enum_budget = 1'000'000'000;
};

struct BuildResult {
    MuSequence seq;
    std::vector<ExtensionReport> steps;  // steps[i] extends to length i+2
    bool complete = true;
    size_t failed_at = 0;  // index n of the failed interval step, when !complete
};

BuildResult build_sequence(const Integer& mu, long n_max, const BuildOptions& opt = {});

}  // namespace construct
}  // namespace museq
