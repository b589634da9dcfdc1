#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "museq/construct.hpp"
#include "museq/density.hpp"
#include "museq/enumerate.hpp"
#include "museq/reduce.hpp"
#include "oracles.hpp"

using namespace museq;
using namespace museq::construct;

namespace {
MuSequence seq(long mu, std::initializer_list<long> terms) {
    IVec t;
    for (long v : terms) t.push_back(v);
    return MuSequence(mu, t);
}
std::set<Integer> vals(const ForbiddenSet& f) { return {f.values.begin(), f.values.end()}; }
}

TEST_CASE("forbidden set examples") {
    CHECK(vals(forbidden_values(seq(2, {1}))).empty());
    CHECK(vals(forbidden_values(seq(4, {1, 2}))) == std::set<Integer>{1, 2, 3});
    CHECK(vals(forbidden_values(seq(3, {1, 2}))) == std::set<Integer>{1, 2});
}

TEST_CASE("forbidden set never contains zero and matches the box-scan oracle") {
    for (long mu = 2; mu <= 6; ++mu) {
        BuildOptions opt;
        auto built = build_sequence(mu, 5, opt);
        for (size_t len = 1; len <= built.seq.length(); ++len) {
            MuSequence prefix(built.seq.mu,
                              IVec(built.seq.terms.begin(), built.seq.terms.begin() + len));
            auto f = forbidden_values(prefix);
            CHECK(vals(f) == oracles::forbidden_box_scan(prefix.mu, prefix.terms));
            for (const auto& v : f.values) CHECK(v >= 1);
        }
    }
}

TEST_CASE("pair count respects the counting bound") {
    for (long mu = 3; mu <= 7; ++mu) {
        auto built = build_sequence(mu, 6);
        for (size_t len = 2; len <= built.seq.length(); ++len) {
            MuSequence prefix(built.seq.mu,
                              IVec(built.seq.terms.begin(), built.seq.terms.begin() + len));
            auto f = forbidden_values(prefix);
            size_t half = enumerate::short_vector_list(static_cast<int>(len), mu - 2,
                                                       enumerate::Mode::Half)
                              .size();
            double cap = std::sqrt(static_cast<double>(mu - 2)) * static_cast<double>(half);
            CHECK(f.pair_count.get_d() <= cap + 1e-9);
        }
    }
}

TEST_CASE("greedy extension examples") {
    CHECK(greedy_extend(seq(2, {1, 1, 1})).term == 1);
    CHECK(greedy_extend(seq(3, {1, 2})).term == 3);
    CHECK(greedy_extend(seq(4, {1, 2, 4})).term == 7);
}

TEST_CASE("greedy term is at most f + 1 and within the theorem bounds") {
    for (long mu = 2; mu <= 6; ++mu) {
        auto built = build_sequence(mu, 6);
        for (const auto& step : built.steps) {
            CHECK(step.term <= step.pair_count + 1);
            CHECK(Real(step.term) <= step.bound_first);
            CHECK(step.bound_first <= step.bound_second);
        }
    }
}

TEST_CASE("greedy minimality: smaller candidates break the minimum") {
    MuSequence prefix = seq(4, {1, 2, 4});
    auto rep = greedy_extend(prefix);
    REQUIRE(rep.term == 7);
    for (long t = 1; t < 7; ++t) {
        IVec w = prefix.terms;
        w.push_back(t);
        auto m = reduce::minimum_brute(w, prefix.mu);
        CHECK(m.has_value());  // some kernel vector of norm < mu exists
    }
}

TEST_CASE("interval extension examples") {
    auto a = extend_in_interval(seq(3, {1, 2}), 5, 10);
    REQUIRE(a.has_value());
    CHECK(a->term == 5);
    CHECK(!extend_in_interval(seq(4, {1, 2}), 1, 3).has_value());
    auto c = extend_in_interval(seq(2, {1}), 7, 7);
    REQUIRE(c.has_value());
    CHECK(c->term == 7);
    CHECK_THROWS_AS(extend_in_interval(seq(3, {1, 2}), 0, 3), InputError);
}

TEST_CASE("interval extension with a wide interval matches greedy") {
    for (long mu = 3; mu <= 6; ++mu) {
        auto built = build_sequence(mu, 5);
        for (size_t len = 1; len < built.seq.length(); ++len) {
            MuSequence prefix(built.seq.mu,
                              IVec(built.seq.terms.begin(), built.seq.terms.begin() + len));
            auto g = greedy_extend(prefix);
            auto i = extend_in_interval(prefix, 1, g.pair_count + 1);
            REQUIRE(i.has_value());
            CHECK(i->term == g.term);
        }
    }
}

TEST_CASE("sigma statistic") {
    CHECK(std::fabs(sigma_statistic(seq(5, {1})).to_double() - 1.0) < 1e-12);
    CHECK(std::fabs(sigma_statistic(seq(4, {1, 2})).to_double() - std::sqrt(5.0) / 4.0) < 1e-12);
    CHECK(std::fabs(sigma_statistic(seq(3, {1, 2, 3})).to_double() -
                    std::sqrt(14.0) / (3.0 * 3.14159265358979323846)) < 1e-12);
}

TEST_CASE("build examples") {
    CHECK(build_sequence(2, 5).seq.terms == IVec{1, 1, 1, 1, 1, 1});
    CHECK(build_sequence(3, 4).seq.terms == IVec{1, 2, 3, 4, 5});
    CHECK(build_sequence(4, 3).seq.terms == IVec{1, 2, 4, 7});
}

TEST_CASE("built sequences certify at their mu") {
    for (long mu = 2; mu <= 5; ++mu) {
        auto built = build_sequence(mu, 6);
        auto v = validate_mu_sequence(built.seq);
        CHECK(v.pass);
    }
    // mu = 3 length >= 3: minimum is exactly 3 (witness e_i + e_j - e_k)
    auto b3 = build_sequence(3, 6);
    for (size_t len = 3; len <= b3.seq.length(); ++len) {
        IVec prefix(b3.seq.terms.begin(), b3.seq.terms.begin() + len);
        CHECK(reduce::shortest_vector(reduce::kernel_basis(prefix)).minimum == 3);
    }
}

TEST_CASE("interval strategy with the default schedule") {
    BuildOptions opt;
    opt.strategy = Strategy::Interval;
    opt.eps = 2.0;  // generous interval keeps small mu feasible
    opt.sigma = 0.02;
    auto res = build_sequence(9, 4, opt);
    if (res.complete) {
        CHECK(validate_mu_sequence(res.seq).pass);
        CHECK(res.seq.length() == 5);
    } else {
        CHECK(res.failed_at >= 1);  // failure is reported with the failing step
    }
}
