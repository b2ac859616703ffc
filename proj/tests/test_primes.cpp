#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ryserlab/primes.hpp"
#include "oracles.hpp"

using namespace ryserlab;
using primes::ChainDecomposition;

TEST_CASE("is_prime agrees with trial division up to 2000") {
    for (long long n = 0; n <= 2000; n++)
        CHECK(primes::is_prime((uint64_t)n) == oracles::trial_is_prime(n));
}

TEST_CASE("is_prime_power") {
    auto f8 = primes::is_prime_power(8);
    CHECK(f8.is_prime_power);
    CHECK(f8.p == 2);
    CHECK(f8.k == 3);

    CHECK_FALSE(primes::is_prime_power(12).is_prime_power);
    CHECK_FALSE(primes::is_prime_power(0).is_prime_power);
    CHECK_FALSE(primes::is_prime_power(1).is_prime_power);

    auto f127 = primes::is_prime_power(127);
    CHECK(f127.is_prime_power);
    CHECK(f127.p == 127);
    CHECK(f127.k == 1);

    auto f121 = primes::is_prime_power(121);
    CHECK(f121.p == 11);
    CHECK(f121.k == 2);
}

TEST_CASE("find_chain examples") {
    auto c = primes::find_chain(6, 2, true);
    REQUIRE(c.has_value());
    CHECK(c->primes == std::vector<long long>{2, 3});
    CHECK(c->r == 6);
    CHECK(c->guarantee() == 4);

    c = primes::find_chain(13, 3, false);
    REQUIRE(c.has_value());
    CHECK(c->primes == std::vector<long long>{2, 3, 7});

    CHECK_FALSE(primes::find_chain(12, 3, true).has_value());

    c = primes::find_chain(12, 2, true);
    REQUIRE(c.has_value());
    CHECK(c->primes == std::vector<long long>{2, 9});

    c = primes::find_chain(3, 1, true);
    REQUIRE(c.has_value());
    CHECK(c->primes == std::vector<long long>{2});

    CHECK_THROWS_AS(primes::find_chain(2, 1, true), PreconditionViolated);
}

TEST_CASE("find_chain results are lexicographically least and reproducible") {
    for (long long r : {6, 10, 14, 20, 30, 50}) {
        auto a = primes::find_chain(r, 3, true);
        auto b = primes::find_chain(r, 3, true);
        CHECK(a == b);
        if (a) {
            // no valid chain with a smaller first entry exists
            for (long long first = 2; first < a->primes[0]; first++) {
                bool smaller_works = false;
                for (long long second = first + 1; second <= r - 1 - first; second++) {
                    long long third = r - 1 - first - second;
                    if (third < first + second + 1) continue;
                    if (primes::is_prime_power((uint64_t)first).is_prime_power &&
                        primes::is_prime_power((uint64_t)second).is_prime_power &&
                        primes::is_prime_power((uint64_t)third).is_prime_power)
                        smaller_works = true;
                }
                CHECK_FALSE(smaller_works);
            }
        }
    }
}

TEST_CASE("validate_chain rejects bad chains with the failing index") {
    CHECK_THROWS_AS(primes::validate_chain({2, 2}), ChainConditionViolated);
    CHECK_THROWS_AS(primes::validate_chain({6}), ChainConditionViolated);
    try {
        primes::validate_chain({2, 3, 5});  // 5 < 2+3+1
        FAIL("expected ChainConditionViolated");
    } catch (const ChainConditionViolated& e) {
        CHECK(e.index == 3);
    }
    auto good = primes::validate_chain({2, 3, 7});
    CHECK(good.r == 13);
    CHECK(good.d == 2);
}

TEST_CASE("good_census t=29 matches the hand-checked values") {
    auto c = primes::good_census(29);
    REQUIRE(c.witness.has_value());
    // p3 = 17 in (14.5, 21.75], 12 = 5+7, 17 >= 13
    CHECK(*c.witness == std::array<long long, 3>{5, 7, 17});
    // primes in (14.5, 21.75] are 17 and 19
    CHECK(c.w == 2);
    // over u in [8,14]: only 11 is not a sum of two primes; 10 and 14 are 2p
    CHECK(c.z == 1);
    CHECK(c.y == 2);
    // both 12 = 5+7 and 10 = 3+7 are good
    CHECK(c.good == std::vector<long long>{10, 12});
}

TEST_CASE("good_census t=15 has no good integer") {
    auto c = primes::good_census(15);
    CHECK(c.good.empty());
    CHECK_FALSE(c.witness.has_value());
}

TEST_CASE("census preconditions") {
    CHECK_THROWS_AS(primes::good_census(28), PreconditionViolated);
    CHECK_THROWS_AS(primes::good_census(3), PreconditionViolated);
}

TEST_CASE("census counting inequality and witness validity, odd t <= 501") {
    for (long long t = 5; t <= 501; t += 2) {
        auto c = primes::good_census(t);
        CHECK((long long)c.good.size() >= c.w - c.z - c.y);
        if (c.witness) {
            auto [p1, p2, p3] = *c.witness;
            CHECK(oracles::trial_is_prime(p1));
            CHECK(oracles::trial_is_prime(p2));
            CHECK(oracles::trial_is_prime(p3));
            CHECK(p1 < p2);
            CHECK(p3 >= 1 + p1 + p2);
            CHECK(p1 + p2 + p3 == t);
        }
        for (long long u : c.good) {
            CHECK(4 * u > t);
            CHECK(2 * u < t);
            bool splits = false;
            for (long long a = 2; a < u - a; a++)
                if (oracles::trial_is_prime(a) && oracles::trial_is_prime(u - a))
                    splits = true;
            CHECK(splits);
        }
    }
}

TEST_CASE("decompose_even_r examples") {
    auto c = primes::decompose_even_r(30);
    REQUIRE(c.has_value());
    CHECK(c->primes == std::vector<long long>{5, 7, 17});

    c = primes::decompose_even_r(20);
    REQUIRE(c.has_value());
    CHECK(c->primes == std::vector<long long>{3, 5, 11});

    CHECK_FALSE(primes::decompose_even_r(16).has_value());
    auto fallback = primes::find_chain(16, 2, true);
    REQUIRE(fallback.has_value());
    CHECK(fallback->primes == std::vector<long long>{2, 13});

    CHECK_THROWS_AS(primes::decompose_even_r(21), PreconditionViolated);
    CHECK_THROWS_AS(primes::decompose_even_r(4), PreconditionViolated);
}

TEST_CASE("decompose output always satisfies the chain conditions") {
    for (long long r = 6; r <= 400; r += 2) {
        auto c = primes::decompose_even_r(r);
        if (!c) continue;
        CHECK_NOTHROW(primes::validate_chain(c->primes, true));
        CHECK(c->r == r);
    }
}

TEST_CASE("Mersenne remark: i in {8, 18, 32}") {
    for (int i : {8, 18, 32}) {
        uint64_t mersenne = (1ULL << (i - 1)) - 1;
        CHECK(primes::is_prime(mersenne));
        CHECK_FALSE(primes::is_prime_power((1ULL << i) - 2).is_prime_power);
        CHECK_FALSE(primes::is_prime_power((1ULL << i) - 3).is_prime_power);
    }
}

TEST_CASE("census text row") {
    // columns: t w y z |good| witness
    auto c = primes::good_census(29);
    CHECK(primes::census_row(c) == "29 2 2 1 2 (5,7,17)");
    auto empty = primes::good_census(15);
    CHECK(primes::census_row(empty) == "15 1 2 0 0 -");
}
