#include "museq/construct.hpp"

#include <algorithm>
#include <set>

#include "museq/density.hpp"
#include "museq/enumerate.hpp"

namespace museq {
namespace construct {

bool ForbiddenSet::contains(const Integer& a) const {
    return std::binary_search(values.begin(), values.end(), a);
}

ForbiddenSet forbidden_values(const MuSequence& prefix, uint64_t enum_budget) {
    ForbiddenSet out;
    out.mu = prefix.mu;
    out.prefix_len = prefix.length();

    Integer zbound = prefix.mu - 2;  // |z|^2 + k^2 < mu with k >= 1
    std::set<Integer> vals;
    std::set<std::pair<Integer, Integer>> pairs;
    if (zbound >= 1) {
        enumerate::short_vectors_weighted(
            prefix.terms, zbound, enumerate::Mode::Half,
            [&](const enumerate::Coords& z, const Integer& dotv) {
                Integer zn = 0;
                for (long c : z) zn += Integer(c) * c;
                Integer a0 = abs(dotv);
                if (a0 == 0) return;  // would contradict min >= mu; harmless to skip
                for (Integer k = 1; zn + k * k < prefix.mu; k += 1) {
                    if (a0 % k == 0) {
                        Integer a = a0 / k;
                        vals.insert(a);
                        pairs.insert({a, k});
                    }
                }
            },
            enum_budget);
    }
    out.values.assign(vals.begin(), vals.end());
    out.pair_count = Integer(static_cast<unsigned long>(pairs.size()));
    return out;
}

Real sigma_statistic(const MuSequence& prefix) {
    long n = static_cast<long>(prefix.length());
    Integer ss = 0;
    for (const auto& s : prefix.terms) ss += s * s;
    Real num = sqrt(Real(ss), Rnd::Nearest);
    Real den = half_pow(Rational(prefix.mu), n - 1, Rnd::Nearest) *
               density::unit_ball_volume(n - 1);
    return num / den;
}

namespace {

ExtensionReport make_report(const MuSequence& prefix, const Integer& term,
                            const Integer& pair_count) {
    ExtensionReport rep;
    rep.term = term;
    rep.pair_count = pair_count;
    long n = static_cast<long>(prefix.length());
    auto [first, second] = density::theorem_bound_sn(prefix.mu, n);
    rep.bound_first = first;
    rep.bound_second = second;
    MuSequence ext = prefix;
    ext.terms.push_back(term);
    rep.sigma_tilde = sigma_statistic(ext);
    return rep;
}

}  // namespace

ExtensionReport greedy_extend(const MuSequence& prefix, uint64_t enum_budget) {
    ForbiddenSet f = forbidden_values(prefix, enum_budget);
    Integer s = 1;
    for (const auto& v : f.values) {
        if (v > s) break;
        if (v == s) s += 1;
    }
    return make_report(prefix, s, f.pair_count);
}

std::optional<ExtensionReport> extend_in_interval(const MuSequence& prefix,
                                                  const Integer& lower,
                                                  const Integer& upper,
                                                  uint64_t enum_budget) {
    if (lower < 1 || upper < lower)
        throw InputError("extend_in_interval: need 1 <= lower <= upper");
    ForbiddenSet f = forbidden_values(prefix, enum_budget);
    Integer s = lower;
    auto it = std::lower_bound(f.values.begin(), f.values.end(), lower);
    while (it != f.values.end() && *it == s) {
        s += 1;
        ++it;
    }
    if (s > upper) return std::nullopt;
    return make_report(prefix, s, f.pair_count);
}

BuildResult build_sequence(const Integer& mu, long n_max, const BuildOptions& opt) {
    if (mu < 2) throw InputError("build_sequence: mu >= 2");
    if (n_max < 1) throw InputError("build_sequence: n_max >= 1");
    BuildResult out;
    out.seq = MuSequence(mu, IVec{Integer(1)});

    Real sigma = (opt.sigma < 0) ? density::theta_series() : Real(opt.sigma);

    for (long n = 1; n <= n_max; ++n) {
        if (opt.strategy == Strategy::Greedy) {
            auto rep = greedy_extend(out.seq, opt.enum_budget);
            out.seq.terms.push_back(rep.term);
            out.steps.push_back(std::move(rep));
        } else {
            Real lo_r = sigma * half_pow(Rational(mu), n, Rnd::Nearest) *
                        density::unit_ball_volume(n);
            Integer lower = lo_r.ceil_to_integer();
            if (lower < 1) lower = 1;
            Integer upper = (Real(1.0 + opt.eps) * Real(lower)).ceil_to_integer();
            auto rep = extend_in_interval(out.seq, lower, upper, opt.enum_budget);
            if (!rep) {
                out.complete = false;
                out.failed_at = static_cast<size_t>(n);
                return out;
            }
            out.seq.terms.push_back(rep->term);
            out.steps.push_back(std::move(*rep));
        }
    }
    return out;
}

}  // namespace construct
}  // namespace museq
