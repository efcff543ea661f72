#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "beadcalc/laurent.hpp"

#include <random>

using namespace beadcalc;

namespace {

// deterministic cross-platform sampler (no uniform_int_distribution)
long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms, long max_exp, long max_coeff) {
    LaurentPoly p;
    int nt = static_cast<int>(rand_range(rng, 0, max_terms));
    for (int i = 0; i < nt; i++) {
        long k = rand_range(rng, -max_exp, max_exp);
        long c = rand_range(rng, -max_coeff, max_coeff);
        p += LaurentPoly::term(Rational(c), k);
    }
    return p;
}

}  // namespace

TEST_CASE("involution on monomials and sums") {
    CHECK(LaurentPoly::t(1).involute() == LaurentPoly::t(-1));
    CHECK(LaurentPoly::one().involute() == LaurentPoly::one());
    LaurentPoly p = LaurentPoly::term(Rational(2), 1) + LaurentPoly::t(-3);
    LaurentPoly q = LaurentPoly::term(Rational(2), -1) + LaurentPoly::t(3);
    CHECK(p.involute() == q);
}

TEST_CASE("involution is an involution and a ring homomorphism") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; i++) {
        LaurentPoly a = random_poly(rng, 4, 5, 9);
        LaurentPoly b = random_poly(rng, 4, 5, 9);
        CHECK(a.involute().involute() == a);
        CHECK((a * b).involute() == a.involute() * b.involute());
        CHECK((a + b).involute() == a.involute() + b.involute());
    }
}

TEST_CASE("augmentation") {
    CHECK(LaurentPoly::t(1).augment() == 1);
    CHECK(LaurentPoly::zero().augment() == 0);
    // 3t^2 - t + 1 -> 3
    LaurentPoly p = LaurentPoly::term(Rational(3), 2) - LaurentPoly::t(1) + LaurentPoly::one();
    CHECK(p.augment() == 3);
}

TEST_CASE("augmentation is a ring homomorphism") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 200; i++) {
        LaurentPoly a = random_poly(rng, 4, 5, 9);
        LaurentPoly b = random_poly(rng, 4, 5, 9);
        CHECK((a * b).augment() == a.augment() * b.augment());
        CHECK((a + b).augment() == a.augment() + b.augment());
    }
}

TEST_CASE("ring arithmetic basics") {
    // (1+t)(1-t^-1) = t - t^-1
    LaurentPoly a = LaurentPoly::one() + LaurentPoly::t(1);
    LaurentPoly b = LaurentPoly::one() - LaurentPoly::t(-1);
    CHECK(a * b == LaurentPoly::t(1) - LaurentPoly::t(-1));

    std::mt19937_64 rng(99);
    LaurentPoly p = random_poly(rng, 5, 6, 9);
    CHECK(p + LaurentPoly::zero() == p);
    CHECK(LaurentPoly::t(2) * LaurentPoly::t(-2) == LaurentPoly::one());
}

TEST_CASE("parse / print round trip") {
    LaurentPoly p = LaurentPoly::parse("2*t^-1 + 1 - 1/2*t^3");
    CHECK(p.coeff(-1) == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(3) == Rational(-1, 2));
    CHECK(LaurentPoly::parse(p.str()) == p);

    CHECK(LaurentPoly::parse("t") == LaurentPoly::t(1));
    CHECK(LaurentPoly::parse("-t^2") == -LaurentPoly::t(2));
    CHECK(LaurentPoly::parse("0") == LaurentPoly::zero());
    CHECK(LaurentPoly::parse("  3 ") == LaurentPoly(3));
    CHECK(LaurentPoly::parse("t^2+t^-2") == LaurentPoly::t(2) + LaurentPoly::t(-2));
    CHECK(LaurentPoly::parse("1+t - 1") == LaurentPoly::t(1));

    CHECK_THROWS_AS(LaurentPoly::parse(""), Error);
    CHECK_THROWS_AS(LaurentPoly::parse("t^"), Error);
    CHECK_THROWS_AS(LaurentPoly::parse("1/0"), Error);
    CHECK_THROWS_AS(LaurentPoly::parse("x"), Error);

    std::mt19937_64 rng(5150);
    for (int i = 0; i < 200; i++) {
        LaurentPoly q = random_poly(rng, 5, 8, 12);
        CHECK(LaurentPoly::parse(q.str()) == q);
    }
}

TEST_CASE("integrality check") {
    CHECK(LaurentPoly::parse("2*t - 3").is_integral());
    CHECK_FALSE(LaurentPoly::parse("1/2*t").is_integral());
}

namespace {

LaurentPoly random_sym_entry(std::mt19937_64& rng) {
    // p + involute(p) is symmetric under the involution
    LaurentPoly p = random_poly(rng, 2, 3, 5);
    return p + p.involute();
}

// random full matrix [[0,I],[I,B]] with B symmetric under involution
LaurentMatrix random_block_input(std::mt19937_64& rng, int n) {
    LaurentMatrix m(2 * n, 2 * n);
    for (int i = 0; i < n; i++) {
        m.at(i, n + i) = LaurentPoly::one();
        m.at(n + i, i) = LaurentPoly::one();
    }
    for (int i = 0; i < n; i++) {
        m.at(n + i, n + i) = random_sym_entry(rng);
        for (int j = i + 1; j < n; j++) {
            LaurentPoly b = random_poly(rng, 3, 3, 5);
            m.at(n + i, n + j) = b;
            m.at(n + j, n + i) = b.involute();
        }
    }
    return m;
}

}  // namespace

TEST_CASE("block negative inverse: the 1x1 block formula") {
    // [[0,1],[1,lk]] -> [[lk,-1],[-1,0]]
    LaurentPoly lk = LaurentPoly::parse("3");
    LaurentMatrix m(2, 2);
    m.at(0, 1) = LaurentPoly::one();
    m.at(1, 0) = LaurentPoly::one();
    m.at(1, 1) = lk;
    LaurentMatrix inv = block_negative_inverse(m);
    CHECK(inv.at(0, 0) == lk);
    CHECK(inv.at(0, 1) == LaurentPoly(-1));
    CHECK(inv.at(1, 0) == LaurentPoly(-1));
    CHECK(inv.at(1, 1) == LaurentPoly::zero());
    CHECK(m * inv == -LaurentMatrix::identity(2));
}

TEST_CASE("block negative inverse: zero block") {
    LaurentMatrix m(4, 4);
    for (int i = 0; i < 2; i++) {
        m.at(i, 2 + i) = LaurentPoly::one();
        m.at(2 + i, i) = LaurentPoly::one();
    }
    LaurentMatrix inv = block_negative_inverse(m);
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) CHECK(inv.at(i, j) == LaurentPoly::zero());
    CHECK(m * inv == -LaurentMatrix::identity(4));
}

TEST_CASE("block negative inverse: beaded entry, verified by multiplication") {
    LaurentMatrix m(2, 2);
    m.at(0, 1) = LaurentPoly::one();
    m.at(1, 0) = LaurentPoly::one();
    m.at(1, 1) = LaurentPoly::parse("t + t^-1");
    LaurentMatrix inv = block_negative_inverse(m);
    CHECK(m * inv == -LaurentMatrix::identity(2));
    CHECK(inv * m == -LaurentMatrix::identity(2));
}

TEST_CASE("block negative inverse: random round trips up to size 6") {
    std::mt19937_64 rng(4242);
    for (int rep = 0; rep < 60; rep++) {
        int n = 1 + static_cast<int>(rng() % 6);
        LaurentMatrix m = random_block_input(rng, n);
        LaurentMatrix inv = block_negative_inverse(m);
        CHECK(m * inv == -LaurentMatrix::identity(2 * n));
        CHECK(inv * m == -LaurentMatrix::identity(2 * n));
    }
}

TEST_CASE("block negative inverse rejects bad shapes") {
    LaurentMatrix odd(3, 3);
    CHECK_THROWS_AS(block_negative_inverse(odd), Error);

    LaurentMatrix bad(2, 2);
    bad.at(0, 0) = LaurentPoly::one();  // top-left must be zero
    bad.at(0, 1) = LaurentPoly::one();
    bad.at(1, 0) = LaurentPoly::one();
    CHECK_THROWS_AS(block_negative_inverse(bad), Error);

    LaurentMatrix asym(2, 2);
    asym.at(0, 1) = LaurentPoly::one();
    asym.at(1, 0) = LaurentPoly::one();
    asym.at(1, 1) = LaurentPoly::t(1);  // t is not involution-symmetric
    CHECK_THROWS_AS(block_negative_inverse(asym), Error);
}
