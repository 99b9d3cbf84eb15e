#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lietorus/cyclotomic.hpp"

using namespace lietorus;

namespace {

CycNumber random_cyc(std::mt19937_64& rng, long conductor) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> c(static_cast<size_t>(euler_phi(conductor)));
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return CycNumber::from_coeffs(conductor, std::move(c));
}

}  // namespace

TEST_CASE("defining relations of small roots of unity") {
    CycNumber i4 = CycNumber::primitive_root(4);
    CHECK(i4 * i4 == CycNumber(-1));

    CycNumber z3 = CycNumber::primitive_root(3);
    CHECK(CycNumber(1) + z3 + z3 * z3 == CycNumber(0));

    CycNumber z5 = CycNumber::primitive_root(5);
    CHECK(z5.pow(3).inverse() == z5.pow(2));
}

TEST_CASE("primitive roots and orders") {
    CHECK(CycNumber::primitive_root(1) == CycNumber(1));
    CHECK(CycNumber::primitive_root(2) == CycNumber(-1));
    CHECK_THROWS_AS(CycNumber::primitive_root(0), conductor_error);

    // first return to 1 happens exactly at the advertised order
    for (long m = 1; m <= 12; ++m) {
        CycNumber z = CycNumber::primitive_root(m);
        CHECK(z.multiplicative_order() == m);
        CHECK(z.pow(m) == CycNumber(1));
    }
}

TEST_CASE("canonical form lives at the least conductor") {
    CHECK(CycNumber::primitive_root(6).conductor() == 3);  // Q(zeta_6) = Q(zeta_3)
    CHECK(CycNumber::primitive_root(8).pow(2).conductor() == 4);
    CHECK(CycNumber::primitive_root(5).pow(5).conductor() == 1);
    CycNumber z12 = CycNumber::primitive_root(12);
    CHECK((z12 * z12).conductor() == 6 * 0 + 3);  // zeta_12^2 = zeta_6 lives at conductor 3

    // sum of all primitive 5th roots is -1, a rational
    CycNumber z5 = CycNumber::primitive_root(5);
    CycNumber s = z5 + z5.pow(2) + z5.pow(3) + z5.pow(4);
    CHECK(s.is_rational());
    CHECK(s.rational_value() == -1);
}

TEST_CASE("field axioms on seeded random triples") {
    std::mt19937_64 rng(0xC0FFEE);
    const long conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
    for (long m : conductors) {
        for (int iter = 0; iter < 25; ++iter) {
            CycNumber a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == CycNumber(1));
        }
    }
}

TEST_CASE("mixed-conductor arithmetic is the lifted arithmetic") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 40; ++iter) {
        CycNumber a = random_cyc(rng, 3), b = random_cyc(rng, 4), c = random_cyc(rng, 6);
        CHECK((a + b) - b == a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b * c) == (a * b) * c);
        if (!b.is_zero()) CHECK((a * b) * b.inverse() == a);
        CHECK((a + b).conductor() <= 12);
    }
}

TEST_CASE("division by zero and conductor bound") {
    CHECK_THROWS_AS(CycNumber(0).inverse(), division_by_zero);
    // lcm(7, 103) = 721 > 720
    CycNumber z7 = CycNumber::primitive_root(7);
    CycNumber z103 = CycNumber::primitive_root(103);
    CHECK_THROWS_AS(z7 * z103, conductor_error);
}

TEST_CASE("rendering and parsing round trip") {
    std::mt19937_64 rng(777);
    for (long m : {1L, 2L, 3L, 5L, 8L, 12L}) {
        for (int iter = 0; iter < 10; ++iter) {
            CycNumber a = random_cyc(rng, m);
            CHECK(CycNumber::parse(a.to_string()) == a);
        }
    }
    CHECK(CycNumber::parse("0") == CycNumber(0));
    CHECK(CycNumber::parse("-2/3") == CycNumber(Rational(-2, 3)));
    CHECK(CycNumber::parse("1 + z (zeta 4)") == CycNumber(1) + CycNumber::primitive_root(4));
    CHECK_THROWS(CycNumber::parse(""));
    CHECK_THROWS(CycNumber::parse("z^9 (zeta 5)"));
}
