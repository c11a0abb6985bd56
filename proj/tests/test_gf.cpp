#include <doctest.h>

#include "gf.hpp"

using namespace pc;

TEST_CASE("prime field basics") {
    Field f(3, 1);
    CHECK(f.order() == 3);
    CHECK(f.add(1, 2) == 0);
    CHECK(f.mul(2, 2) == 1);
    CHECK(f.neg(1) == 2);
    CHECK(f.inv(2) == 2);
}

TEST_CASE("composite characteristic is rejected") {
    CHECK_THROWS_AS(Field(4, 1), Error);
    try {
        Field(4, 1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_prime);
    }
}

TEST_CASE("order cap") {
    try {
        Field(2, 17);
        FAIL("expected DegreeTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == errc::degree_too_large);
    }
}

TEST_CASE("GF(7) inverse against scan oracle") {
    Field f(7, 1);
    // independent oracle: scan all residues for the product 1
    for (fe a = 1; a < 7; ++a) {
        fe found = 0;
        for (fe b = 1; b < 7; ++b)
            if (f.mul(a, b) == 1) found = b;
        CHECK(f.inv(a) == found);
    }
    CHECK(f.inv(3) == 5);
}

TEST_CASE("inv(0) fails") {
    Field f(5, 1);
    CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("GF(9) modulus is the lexicographically smallest irreducible") {
    Field f(3, 2);
    CHECK(f.order() == 9);
    // oracle: a monic quadratic over GF(3) is irreducible iff it has no
    // root; pick the minimum under (c0, c1) comparison
    std::vector<std::uint32_t> best;
    for (std::uint32_t c0 = 0; c0 < 3 && best.empty(); ++c0)
        for (std::uint32_t c1 = 0; c1 < 3 && best.empty(); ++c1) {
            bool has_root = false;
            for (std::uint32_t x = 0; x < 3; ++x)
                if ((x * x + c1 * x + c0) % 3 == 0) has_root = true;
            if (!has_root) best = {c0, c1, 1};
        }
    CHECK(f.modulus() == best);
    CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1}); // x^2 + 1
}

TEST_CASE("element iteration is 0..q-1 with 0 first") {
    for (auto spec : {"3", "5", "3^2"}) {
        Field f = Field::parse(spec);
        CHECK(f.zero() == 0);
        CHECK(f.one() == 1);
        // canonical codes are exactly 0..q-1; nothing further to dedupe
        CHECK(f.order() >= 3);
    }
}

TEST_CASE("field axioms by exhaustion for q <= 49") {
    for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {5u, 1u}, {7u, 1u},
                        {2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {7u, 2u}}) {
        Field f(p, k);
        const std::uint32_t q = f.order();
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(fe(a), f.neg(fe(a))) == 0);
            if (a) CHECK(f.mul(fe(a), f.inv(fe(a))) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(fe(a), fe(b)) == f.add(fe(b), fe(a)));
                CHECK(f.mul(fe(a), fe(b)) == f.mul(fe(b), fe(a)));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(fe(a), fe(b)), fe(c)) ==
                          f.add(fe(a), f.add(fe(b), fe(c))));
                    CHECK(f.mul(f.mul(fe(a), fe(b)), fe(c)) ==
                          f.mul(fe(a), f.mul(fe(b), fe(c))));
                    CHECK(f.mul(fe(a), f.add(fe(b), fe(c))) ==
                          f.add(f.mul(fe(a), fe(b)), f.mul(fe(a), fe(c))));
                }
            }
        }
    }
}

TEST_CASE("Frobenius a -> a^p is additive for extension fields") {
    for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {7u, 2u}}) {
        Field f(p, k);
        const std::uint32_t q = f.order();
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                CHECK(f.pow(f.add(fe(a), fe(b)), p) ==
                      f.add(f.pow(fe(a), p), f.pow(fe(b), p)));
    }
}

TEST_CASE("construction is deterministic") {
    Field a(3, 2), b(3, 2);
    CHECK(a.modulus() == b.modulus());
    for (std::uint32_t x = 0; x < 9; ++x)
        for (std::uint32_t y = 0; y < 9; ++y)
            CHECK(a.mul(fe(x), fe(y)) == b.mul(fe(x), fe(y)));
}

TEST_CASE("characteristic 2 addition") {
    Field f(2, 1);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.neg(1) == 1);
}

TEST_CASE("field spec parsing") {
    CHECK(Field::parse("3").order() == 3);
    CHECK(Field::parse("3^2").order() == 9);
    CHECK(Field::parse("101").order() == 101);
    CHECK_THROWS_AS(Field::parse("abc"), Error);
}

TEST_CASE("element printing and parsing") {
    Field f9(3, 2);
    fe e = f9.from_coeffs({1, 2});
    CHECK(f9.to_string(e) == "(1,2)");
    CHECK(f9.parse_element("(1,2)") == e);
    Field f7(7, 1);
    CHECK(f7.parse_element("5") == 5);
    CHECK(f7.from_int(-1) == 6);
}
