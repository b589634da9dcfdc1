#include "museq/enumerate.hpp"

#include <cmath>

#include "museq/density.hpp"

namespace museq {
namespace enumerate {

namespace {

void check_budget(int n, const Integer& bound, uint64_t budget) {
    if (n < 1) throw InputError("enumerate: n >= 1 required");
    if (bound < 0) throw InputError("enumerate: negative norm bound");
    // The volume bound on the vector count doubles as the work estimate.
    double predicted = density::counting_bound(n, bound, Rnd::Up).to_double();
    if (!std::isfinite(predicted) || predicted > static_cast<double>(budget))
        throw BudgetExceeded("enumerate: predicted vector count " +
                             std::to_string(predicted) + " exceeds budget " +
                             std::to_string(budget));
}

struct Walker {
    int n;
    Integer bound;
    Mode mode;
    const IVec* weights;  // nullptr unless the weighted variant runs
    const std::function<void(const Coords&)>* visit_plain;
    const std::function<void(const Coords&, const Integer&)>* visit_weighted;
    Coords z;

    // depth i: coordinates 0..i-1 fixed, `rem` = bound - partial norm,
    // `zero_prefix` true while all fixed coordinates are zero (half mode
    // then restricts the next coordinate to >= 0).
    void descend(int i, const Integer& rem, const Integer& dotv, bool zero_prefix) {
        if (i == n) {
            if (zero_prefix) return;  // skip the zero vector
            if (visit_plain) (*visit_plain)(z);
            if (visit_weighted) (*visit_weighted)(z, dotv);
            return;
        }
        Integer r = isqrt_floor(rem);
        long hi = r.get_si();
        long lo = (mode == Mode::Half && zero_prefix) ? 0 : -hi;
        for (long c = lo; c <= hi; ++c) {
            z[i] = c;
            Integer rem2 = rem - Integer(c) * c;
            if (weights)
                descend(i + 1, rem2, dotv + (*weights)[i] * c, zero_prefix && c == 0);
            else
                descend(i + 1, rem2, dotv, zero_prefix && c == 0);
        }
        z[i] = 0;
    }
};

}  // namespace

void short_vectors(int n, const Integer& bound, Mode mode,
                   const std::function<void(const Coords&)>& visit, uint64_t budget) {
    check_budget(n, bound, budget);
    Walker w{n, bound, mode, nullptr, &visit, nullptr, Coords(n, 0)};
    w.descend(0, bound, 0, true);
}

void short_vectors_weighted(const IVec& weights, const Integer& bound, Mode mode,
                            const std::function<void(const Coords&, const Integer&)>& visit,
                            uint64_t budget) {
    int n = static_cast<int>(weights.size());
    check_budget(n, bound, budget);
    Walker w{n, bound, mode, &weights, nullptr, &visit, Coords(n, 0)};
    w.descend(0, bound, 0, true);
}

std::vector<Coords> short_vector_list(int n, const Integer& bound, Mode mode,
                                      uint64_t budget) {
    std::vector<Coords> out;
    short_vectors(n, bound, mode, [&](const Coords& z) { out.push_back(z); }, budget);
    return out;
}

namespace {
// Counting recursion; no vector materialization.
Integer count_rec(int i, int n, const Integer& rem) {
    if (i == n) return 1;
    Integer total = 0;
    Integer r = isqrt_floor(rem);
    long hi = r.get_si();
    for (long c = -hi; c <= hi; ++c) total += count_rec(i + 1, n, rem - Integer(c) * c);
    return total;
}
}  // namespace

Integer count_norm_le(int n, const Integer& mu, uint64_t budget) {
    check_budget(n, mu, budget);
    return count_rec(0, n, mu);
}

}  // namespace enumerate
}  // namespace museq
