#include <random>
#include <set>

#include "doctest.h"
#include "rightsplit/ffield.hpp"

using namespace rsplit;

namespace {

// independent oracle: smallest monic irreducible of degree 2 mod p by direct
// root enumeration (degree 2 is reducible iff it has a root), scanning in
// ascending code order (c0 fastest)
std::vector<std::int64_t> smallest_irreducible_quadratic(std::int64_t p) {
    for (std::int64_t v = 0; v < p * p; ++v) {
        const std::int64_t c0 = v % p, c1 = v / p;
        bool has_root = false;
        for (std::int64_t x = 0; x < p && !has_root; ++x)
            if ((x * x + c1 * x + c0) % p == 0) has_root = true;
        if (!has_root) return {c0, c1, 1};
    }
    return {};
}

} // namespace

TEST_CASE("fq_make: prime field arithmetic is mod p") {
    Field f5 = Field::make(5, 1);
    CHECK(f5.q() == 5);
    CHECK(f5.mul(2, 3) == 1);
    CHECK(f5.add(4, 3) == 2);
    CHECK_THROWS_WITH_AS(Field::make(4, 1), doctest::Contains("NotPrime"), Error);
}

TEST_CASE("fq_make(3,2) finds t^2+1 (oracle: ascending enumeration + root test)") {
    const auto oracle = smallest_irreducible_quadratic(3);
    REQUIRE(oracle == std::vector<std::int64_t>{1, 0, 1}); // t^2 + 1
    Field f9 = Field::make(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.spec().modulus == oracle);
    // t * t = -1 = 2 in F_9; t has code 3 (coeffs (0,1))
    const std::int64_t t = f9.from_coeffs({0, 1});
    CHECK(f9.mul(t, t) == 2);
}

TEST_CASE("fq_make is deterministic") {
    for (auto [p, r] : {std::pair<std::int64_t, int>{2, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 6}}) {
        Field a = Field::make(p, r);
        Field b = Field::make(p, r);
        CHECK(a.spec() == b.spec());
    }
}

TEST_CASE("inverse and pow") {
    Field f9 = Field::make(3, 2);
    for (std::int64_t a = 1; a < 9; ++a) {
        CHECK(f9.mul(a, f9.inv(a)) == 1);
        CHECK(f9.pow(a, 8) == 1);
    }
    CHECK_THROWS_WITH_AS(f9.inv(0), doctest::Contains("ZeroInverse"), Error);
    Field f5 = Field::make(5, 1);
    FqElem zero{f5, 0};
    CHECK_THROWS_AS(fq_inv(zero), Error);
}

TEST_CASE("field mismatch is rejected") {
    FqElem a{Field::make(5, 1), 2};
    FqElem b{Field::make(7, 1), 2};
    CHECK_THROWS_WITH_AS(fq_mul(a, b), doctest::Contains("FieldMismatch"), Error);
}

TEST_CASE("unit_generator: least generator (oracle: order enumeration)") {
    auto oracle_least_generator = [](const Field& f) {
        for (std::int64_t a = 1; a < f.q(); ++a) {
            std::int64_t ord = 1, cur = a;
            while (cur != 1) {
                cur = f.mul(cur, a);
                ++ord;
            }
            if (ord == f.q() - 1) return a;
        }
        return std::int64_t{-1};
    };
    Field f5 = Field::make(5, 1);
    CHECK(oracle_least_generator(f5) == 2);
    CHECK(f5.unit_generator() == 2);
    Field f7 = Field::make(7, 1);
    CHECK(oracle_least_generator(f7) == 3);
    CHECK(f7.unit_generator() == 3);
    Field f2 = Field::make(2, 1);
    CHECK(f2.unit_generator() == 1);
    for (auto [p, r] : {std::pair<std::int64_t, int>{3, 2}, {2, 4}, {5, 2}, {11, 1}}) {
        Field f = Field::make(p, r);
        CHECK(f.unit_generator() == oracle_least_generator(f));
    }
}

TEST_CASE("unit group is cyclic of order q-1") {
    for (auto [p, r] : {std::pair<std::int64_t, int>{2, 1}, {5, 1}, {7, 1}, {3, 2}, {13, 1},
                        {2, 5}, {5, 2}, {97, 1}, {101, 2}, {3, 6}, {31, 2}}) {
        Field f = Field::make(p, r);
        const std::int64_t g = f.unit_generator();
        CHECK(f.element_order(g) == f.q() - 1);
        std::set<std::int64_t> powers;
        std::int64_t cur = 1;
        for (std::int64_t i = 0; i < f.q() - 1; ++i) {
            powers.insert(cur);
            cur = f.mul(cur, g);
        }
        CHECK(static_cast<std::int64_t>(powers.size()) == f.q() - 1);
    }
}

TEST_CASE("is_nth_power agrees with brute-force power image") {
    Field f5 = Field::make(5, 1);
    CHECK(f5.is_nth_power(4, 2));
    CHECK_FALSE(f5.is_nth_power(2, 2));
    CHECK_THROWS_WITH_AS(f5.is_nth_power(0, 2), doctest::Contains("ZeroElement"), Error);
    for (auto [p, r] : {std::pair<std::int64_t, int>{5, 1}, {7, 1}, {13, 1}, {3, 2}, {2, 3},
                        {11, 2}, {2, 6}}) {
        Field f = Field::make(p, r);
        for (std::int64_t n = 1; n <= 12; ++n) {
            std::set<std::int64_t> image;
            for (std::int64_t y = 1; y < f.q(); ++y) image.insert(f.pow(y, n));
            for (std::int64_t x = 1; x < f.q(); ++x)
                CHECK(f.is_nth_power(x, n) == (image.count(x) > 0));
        }
    }
}

TEST_CASE("Frobenius: (a+b)^p = a^p + b^p") {
    std::mt19937_64 rng(42);
    for (auto [p, r] : {std::pair<std::int64_t, int>{3, 2}, {5, 2}, {2, 6}, {7, 2}, {13, 1}}) {
        Field f = Field::make(p, r);
        std::uniform_int_distribution<std::int64_t> dist(0, f.q() - 1);
        for (int i = 0; i < 1000; ++i) {
            const std::int64_t a = dist(rng), b = dist(rng);
            CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
        }
    }
}

TEST_CASE("element rendering") {
    Field f5 = Field::make(5, 1);
    CHECK(f5.render(3) == "3");
    Field f9 = Field::make(3, 2);
    CHECK(f9.render(0) == "0");
    CHECK(f9.render(1) == "1");
    CHECK(f9.render(f9.from_coeffs({0, 1})) == "t");
    CHECK(f9.render(f9.from_coeffs({2, 1})) == "2+t");
    CHECK(f9.render(f9.from_coeffs({0, 2})) == "2*t");
    Field f27 = Field::make(3, 3);
    CHECK(f27.render(f27.from_coeffs({1, 0, 2})) == "1+2*t^2");
}

TEST_CASE("random field algebra: associativity and distributivity") {
    std::mt19937_64 rng(7);
    for (auto [p, r] : {std::pair<std::int64_t, int>{3, 2}, {3, 3}, {2, 6}, {11, 2}, {5, 2}}) {
        Field f = Field::make(p, r);
        std::uniform_int_distribution<std::int64_t> dist(0, f.q() - 1);
        for (int i = 0; i < 500; ++i) {
            const std::int64_t a = dist(rng), b = dist(rng), c = dist(rng);
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(a, b) == f.mul(b, a));
        }
    }
}
