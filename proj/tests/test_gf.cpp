#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ryserlab/gf.hpp"
#include "oracles.hpp"

using namespace ryserlab;
using gf::Field;
using gf::FieldElement;

TEST_CASE("make_field recognizes prime powers") {
    Field f5 = gf::make_field(5);
    CHECK(f5->p == 5);
    CHECK(f5->k == 1);

    Field f4 = gf::make_field(4);
    CHECK(f4->p == 2);
    CHECK(f4->k == 2);
    // the only irreducible monic quadratic over GF(2)
    CHECK(f4->modulus == std::vector<long long>{1, 1, 1});

    CHECK_THROWS_AS(gf::make_field(6), NotAPrimePower);
    CHECK_THROWS_AS(gf::make_field(12), NotAPrimePower);
    CHECK_THROWS_AS(gf::make_field(1), NotAPrimePower);
    CHECK_THROWS_AS(gf::make_field(0), NotAPrimePower);
}

TEST_CASE("make_field is deterministic") {
    for (long long q : {4, 8, 9, 16, 25, 27, 49, 121}) {
        Field a = gf::make_field(q);
        Field b = gf::make_field(q);
        CHECK(*a == *b);
    }
}

TEST_CASE("canonical modulus has no roots in the prime field") {
    // every canonical modulus for k=2,3 must have no roots in GF(p)
    for (long long q : {4, 8, 9, 25, 27, 49, 121}) {
        Field f = gf::make_field(q);
        if (f->k > 3) continue;
        for (long long x = 0; x < f->p; x++) {
            long long value = 0, power = 1;
            for (long long c : f->modulus) {
                value = (value + c * power) % f->p;
                power = (power * x) % f->p;
            }
            CHECK(value != 0);
        }
    }
}

TEST_CASE("element enumeration: p^k distinct, 0 first, 1 second") {
    for (long long q : {2, 4, 9}) {
        Field f = gf::make_field(q);
        auto elems = gf::elements(f);
        REQUIRE((long long)elems.size() == q);
        CHECK(gf::is_zero(elems[0]));
        CHECK(elems[1] == gf::one(f));
        std::set<long long> values;
        for (const auto& e : elems) values.insert(e.value());
        CHECK((long long)values.size() == q);
    }
}

TEST_CASE("arithmetic examples") {
    Field f3 = gf::make_field(3);
    CHECK(gf::add(gf::element_of(f3, 2), gf::element_of(f3, 2)) ==
          gf::element_of(f3, 1));

    // GF(4) with modulus x^2+x+1: x*x = x+1
    Field f4 = gf::make_field(4);
    FieldElement x(f4, {0, 1});
    FieldElement expect = gf::mul(x, x);
    auto oracle = oracles::poly_mul_mod({0, 1}, {0, 1}, f4->modulus, f4->p);
    CHECK(expect.coeffs() == oracle);
    CHECK(expect.coeffs() == std::vector<long long>{1, 1});

    Field f7 = gf::make_field(7);
    CHECK(gf::inv(gf::element_of(f7, 3)) == gf::element_of(f7, 5));
}

TEST_CASE("mul agrees with the schoolbook oracle on GF(8) and GF(9)") {
    for (long long q : {8, 9}) {
        Field f = gf::make_field(q);
        auto elems = gf::elements(f);
        for (const auto& a : elems)
            for (const auto& b : elems) {
                auto got = gf::mul(a, b).coeffs();
                auto want = oracles::poly_mul_mod(a.coeffs(), b.coeffs(),
                                                  f->modulus, f->p);
                CHECK(got == want);
            }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        Field f = gf::make_field(q);
        auto elems = gf::elements(f);
        auto z = gf::zero(f), o = gf::one(f);
        for (const auto& a : elems) {
            CHECK(gf::add(a, z) == a);
            CHECK(gf::mul(a, o) == a);
            CHECK(gf::is_zero(gf::add(a, gf::neg(a))));
            if (!gf::is_zero(a)) CHECK(gf::mul(a, gf::inv(a)) == o);
            for (const auto& b : elems) {
                CHECK(gf::add(a, b) == gf::add(b, a));
                CHECK(gf::mul(a, b) == gf::mul(b, a));
                for (const auto& c : elems) {
                    CHECK(gf::add(gf::add(a, b), c) == gf::add(a, gf::add(b, c)));
                    CHECK(gf::mul(gf::mul(a, b), c) == gf::mul(a, gf::mul(b, c)));
                    CHECK(gf::mul(a, gf::add(b, c)) ==
                          gf::add(gf::mul(a, b), gf::mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms hold on samples for every prime power up to 121") {
    std::mt19937_64 rng(20240817);
    for (long long q = 17; q <= 121; q++) {
        Field f;
        try {
            f = gf::make_field(q);
        } catch (const NotAPrimePower&) {
            continue;
        }
        for (int trial = 0; trial < 60; trial++) {
            auto a = gf::element_of(f, (long long)(rng() % q));
            auto b = gf::element_of(f, (long long)(rng() % q));
            auto c = gf::element_of(f, (long long)(rng() % q));
            CHECK(gf::mul(gf::mul(a, b), c) == gf::mul(a, gf::mul(b, c)));
            CHECK(gf::add(a, b) == gf::add(b, a));
            CHECK(gf::mul(a, b) == gf::mul(b, a));
            CHECK(gf::mul(a, gf::add(b, c)) ==
                  gf::add(gf::mul(a, b), gf::mul(a, c)));
            if (!gf::is_zero(a))
                CHECK(gf::mul(a, gf::inv(a)) == gf::one(f));
        }
    }
}

TEST_CASE("nonzero elements form a cyclic group of order q-1 (q <= 16)") {
    for (long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        Field f = gf::make_field(q);
        auto elems = gf::elements(f);
        auto o = gf::one(f);
        auto order_of = [&](const FieldElement& a) {
            FieldElement x = a;
            int ord = 1;
            while (!(x == o)) {
                x = gf::mul(x, a);
                ord++;
            }
            return ord;
        };
        bool has_generator = false;
        for (size_t i = 1; i < elems.size(); i++) {
            int ord = order_of(elems[i]);
            CHECK((q - 1) % ord == 0);
            if (ord == q - 1) has_generator = true;
        }
        CHECK(has_generator);
    }
}

TEST_CASE("error paths") {
    Field f5 = gf::make_field(5);
    CHECK_THROWS_AS(gf::inv(gf::zero(f5)), DivisionByZero);

    Field f3 = gf::make_field(3);
    CHECK_THROWS_AS(gf::add(gf::one(f5), gf::one(f3)), SpecMismatch);
    CHECK_THROWS_AS((void)(gf::one(f5) == gf::one(f3)), SpecMismatch);
}

TEST_CASE("elements of the same order from two field objects are interchangeable") {
    Field a = gf::make_field(9);
    Field b = gf::make_field(9);
    // same spec by value, so mixing is allowed
    CHECK(gf::add(gf::one(a), gf::one(b)) == gf::element_of(a, 2));
}
