#include <doctest.h>

#include <algorithm>
#include <set>

#include "museq/density.hpp"
#include "museq/enumerate.hpp"
#include "oracles.hpp"

using namespace museq;
using enumerate::Coords;
using enumerate::Mode;

namespace {
std::set<Coords> as_set(const std::vector<Coords>& v) { return {v.begin(), v.end()}; }
}

TEST_CASE("short vectors: unit ball of Z^2") {
    auto full = enumerate::short_vector_list(2, 1, Mode::Full);
    CHECK(as_set(full) == std::set<Coords>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

TEST_CASE("short vectors: half mode picks one of each pair") {
    auto half = enumerate::short_vector_list(2, 2, Mode::Half);
    CHECK(as_set(half) == std::set<Coords>{{1, 0}, {0, 1}, {1, 1}, {1, -1}});
    for (const auto& z : half) {
        auto it = std::find_if(z.begin(), z.end(), [](long c) { return c != 0; });
        REQUIRE(it != z.end());
        CHECK(*it > 0);
    }
}

TEST_CASE("short vectors: norm bound 0 yields nothing") {
    CHECK(enumerate::short_vector_list(3, 0, Mode::Full).empty());
}

TEST_CASE("deterministic lexicographic order") {
    auto v = enumerate::short_vector_list(3, 5, Mode::Full);
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    CHECK(v == sorted);
}

TEST_CASE("count_norm_le examples") {
    CHECK(enumerate::count_norm_le(1, 4) == 5);
    CHECK(enumerate::count_norm_le(2, 1) == 5);
    CHECK(enumerate::count_norm_le(2, 2) == 9);
}

TEST_CASE("full = 2 x half, and count = 1 + full") {
    for (int n = 1; n <= 4; ++n)
        for (long B = 1; B <= 8; ++B) {
            auto nf = enumerate::short_vector_list(n, B, Mode::Full).size();
            auto nh = enumerate::short_vector_list(n, B, Mode::Half).size();
            CHECK(nf == 2 * nh);
            CHECK(enumerate::count_norm_le(n, B) == Integer(static_cast<unsigned long>(nf)) + 1);
        }
}

TEST_CASE("agreement with the naive box-scan oracle") {
    for (int n = 1; n <= 4; ++n)
        for (long B = 0; B <= 20; B += 5) {
            auto ours = as_set(enumerate::short_vector_list(n, B, Mode::Full));
            auto box = oracles::box_scan(n, B, false);
            CHECK(ours == as_set(std::vector<Coords>(box.begin(), box.end())));
        }
}

TEST_CASE("volume bound holds on a subgrid") {
    for (int n = 1; n <= 6; ++n)
        for (long mu = 0; mu <= 20; mu += 4) {
            Integer c = enumerate::count_norm_le(n, mu);
            CHECK(Real(c) <= density::counting_bound(n, mu, Rnd::Down));
        }
}

TEST_CASE("budget error before any work") {
    CHECK_THROWS_AS(enumerate::count_norm_le(10, 20, /*budget=*/100), BudgetExceeded);
    CHECK_THROWS_AS(enumerate::short_vector_list(8, 50, Mode::Full, 10), BudgetExceeded);
}

TEST_CASE("weighted walk carries exact dot products") {
    IVec w{1, 2, 3};
    enumerate::short_vectors_weighted(w, 4, Mode::Full, [&](const Coords& z, const Integer& d) {
        Integer expect = 0;
        for (size_t i = 0; i < w.size(); ++i) expect += w[i] * z[i];
        CHECK(d == expect);
    });
}
