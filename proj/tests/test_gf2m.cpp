#include <doctest.h>

#include <stdexcept>

#include "rsauto/gf2m.hpp"
#include "rsauto/rng.hpp"

using namespace rsauto;

TEST_CASE("default primitive polynomials match the fixed generators") {
    // alpha^m expressed over the basis: the defining relation
    CHECK(Field(3).alpha_pow(3) == 0b011);    // a^3 = a + 1
    CHECK(Field(4).alpha_pow(4) == 0b0011);   // a^4 = a + 1
    CHECK(Field(5).alpha_pow(5) == 0b00101);  // a^5 = a^2 + 1
    CHECK(Field(6).alpha_pow(6) == 0b000011);
    CHECK(Field(5).n() == 31);
    CHECK(Field(4).n() == 15);
}

TEST_CASE("m out of range and non-primitive polynomials are rejected") {
    CHECK_THROWS_AS(Field(2), std::invalid_argument);
    CHECK_THROWS_AS(Field(11), std::invalid_argument);
    // x^4 + x^3 + x^2 + x + 1 is irreducible but has order 5, not 15
    CHECK_THROWS_AS(Field(4, 0x1F), std::runtime_error);
    // wrong degree
    CHECK_THROWS_AS(Field(4, 0x0B), std::invalid_argument);
}

TEST_CASE("basic products and coordinates") {
    Field f(3);
    CHECK(f.mul(0b010, 0b100) == 0b011);  // a * a^2 = a^3 = (1,1,0)
    CHECK(Field(4).alpha_pow(0) == 0b0001);
    CHECK(Field(4).alpha_pow(1) == 0b0010);
}

TEST_CASE("log/antilog tables are consistent over every nonzero element") {
    for (int m : {3, 4, 5, 6, 8}) {
        Field f(m);
        for (int k = 0; k < f.n(); ++k) CHECK(f.log(f.alpha_pow(k)) == k);
        for (Fe e = 1; e <= f.n(); ++e) CHECK(f.alpha_pow(f.log(e)) == e);
    }
}

TEST_CASE("field axioms on random elements") {
    Field f(5);
    SplitMix64 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        const Fe a = static_cast<Fe>(rng.below(f.n() + 1));
        const Fe b = static_cast<Fe>(rng.below(f.n() + 1));
        const Fe c = static_cast<Fe>(rng.below(f.n() + 1));
        CHECK(fe_add(a, a) == 0);
        CHECK(f.mul(a, fe_add(b, c)) == fe_add(f.mul(a, b), f.mul(a, c)));
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    // log-domain product identity
    for (int trial = 0; trial < 200; ++trial) {
        const int i = static_cast<int>(rng.below(f.n()));
        const int j = static_cast<int>(rng.below(f.n()));
        CHECK(f.mul(f.alpha_pow(i), f.alpha_pow(j)) == f.alpha_pow((i + j) % f.n()));
    }
}

TEST_CASE("powers, inverse errors, element order") {
    Field f(5);
    CHECK(f.pow(f.alpha_pow(1), f.n()) == 1);
    CHECK(f.pow(0, 3) == 0);
    CHECK(f.pow(0, 0) == 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(f.log(0), std::domain_error);
    // multiplicative order of every nonzero element divides n
    for (Fe e = 1; e <= f.n(); ++e) {
        int ord = 1;
        Fe p = e;
        while (p != 1) {
            p = f.mul(p, e);
            ++ord;
        }
        CHECK(f.n() % ord == 0);
    }
}

TEST_CASE("coordinate form of a^4 in GF(16)") {
    Field f(4);
    CHECK(f.alpha_pow(4) == 0b0011);  // coordinates (1,1,0,0)
}

TEST_CASE("trace is F2-linear and 0/1-valued") {
    Field f(6);
    SplitMix64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const Fe a = static_cast<Fe>(rng.below(f.n() + 1));
        const Fe b = static_cast<Fe>(rng.below(f.n() + 1));
        CHECK((f.trace(a) == 0 || f.trace(a) == 1));
        CHECK(f.trace(fe_add(a, b)) == (f.trace(a) ^ f.trace(b)));
    }
}
