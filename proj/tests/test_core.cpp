#include <doctest.h>

#include <random>

#include "museq/construct.hpp"
#include "museq/core.hpp"

using namespace museq;

TEST_CASE("MuSequence construction guards") {
    CHECK_THROWS_AS(MuSequence(3, IVec{}), InputError);
    CHECK_THROWS_AS(MuSequence(3, IVec{2, 1}), InputError);
    CHECK_THROWS_AS(MuSequence(3, IVec{1, 0}), InputError);
    CHECK_THROWS_AS(MuSequence(1, IVec{1}), InputError);
    CHECK_NOTHROW(MuSequence(2, IVec{1, 1}));
}

TEST_CASE("validate: A_3 passes at mu = 2") {
    CHECK(validate_mu_sequence(MuSequence(2, IVec{1, 1, 1, 1})).pass);
}

TEST_CASE("validate: (1,1) fails at mu = 3 with a norm-2 witness") {
    auto res = validate_mu_sequence(MuSequence(3, IVec{1, 1}));
    CHECK(!res.pass);
    CHECK(res.failing_prefix_len == 2);
    CHECK(res.minimum_found == 2);
    CHECK(norm2(res.witness) == 2);
}

TEST_CASE("validate: (1,2,3) has minimum exactly 3") {
    auto res = validate_mu_sequence(MuSequence(3, IVec{1, 2, 3}));
    CHECK(res.pass);
}

TEST_CASE("length-1 sequence passes vacuously") {
    CHECK(validate_mu_sequence(MuSequence(7, IVec{1})).pass);
}

TEST_CASE("sequence file round trip") {
    MuSequence s(3, IVec{1, 2, 3, 4});
    bool cert = false;
    MuSequence back = from_sequence_json(to_sequence_json(s, true), &cert);
    CHECK(back.mu == s.mu);
    CHECK(back.terms == s.terms);
    CHECK(cert);
}

TEST_CASE("sequence file uses decimal strings") {
    std::string j = to_sequence_json(MuSequence(2, IVec{1, 1}));
    CHECK(j.find("\"mu\": \"2\"") != std::string::npos);
    CHECK(j.find("\"terms\"") != std::string::npos);
    CHECK(j.find("\"certified\"") != std::string::npos);
}

TEST_CASE("sequence file parse errors") {
    CHECK_THROWS_AS(from_sequence_json("not json"), InputError);
    CHECK_THROWS_AS(from_sequence_json(R"({"terms": ["1"]})"), InputError);
    CHECK_THROWS_AS(from_sequence_json(R"({"mu": 3, "terms": ["1"]})"), InputError);
    CHECK_THROWS_AS(from_sequence_json(R"({"mu": "3", "terms": [1]})"), InputError);
    CHECK_THROWS_AS(from_sequence_json(R"({"mu": "3", "terms": ["x"]})"), InputError);
}

TEST_CASE("prefix closure: every prefix of a valid sequence is valid") {
    auto built = construct::build_sequence(4, 6);
    for (size_t len = 1; len <= built.seq.length(); ++len) {
        MuSequence prefix(built.seq.mu,
                          IVec(built.seq.terms.begin(), built.seq.terms.begin() + len));
        CHECK(validate_mu_sequence(prefix).pass);
    }
}

TEST_CASE("subsequence closure under random deletions") {
    auto built = construct::build_sequence(4, 7);
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        IVec kept{built.seq.terms[0]};  // index 0 always stays
        for (size_t i = 1; i < built.seq.terms.size(); ++i)
            if (rng() % 2) kept.push_back(built.seq.terms[i]);
        if (kept.size() < 2) continue;
        CHECK(validate_mu_sequence(MuSequence(built.seq.mu, kept)).pass);
    }
}

TEST_CASE("rational reduction is idempotent") {
    Rational q(Integer("123456789123456789"), Integer("987654321987654321"));
    q.canonicalize();
    Rational r = q;
    r.canonicalize();
    CHECK(q == r);
    CHECK(gcd(q.get_num(), q.get_den()) == 1);
}

TEST_CASE("big integer arithmetic agrees with a 128-bit reference") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        uint64_t a = rng(), b = rng();
        unsigned __int128 ref = static_cast<unsigned __int128>(a) * b;
        Integer z = Integer(static_cast<unsigned long>(a)) * Integer(static_cast<unsigned long>(b));
        Integer expect = Integer(static_cast<unsigned long>(static_cast<uint64_t>(ref >> 64)));
        expect <<= 64;
        expect += Integer(static_cast<unsigned long>(static_cast<uint64_t>(ref)));
        CHECK(z == expect);
    }
}
