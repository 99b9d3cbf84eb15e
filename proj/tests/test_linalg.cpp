#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lietorus/linalg.hpp"

using namespace lietorus;

namespace {

Mat random_matrix(std::mt19937_64& rng, size_t r, size_t c) {
    std::uniform_int_distribution<int> d(-4, 4);
    Mat m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = CycNumber(d(rng));
    return m;
}

}  // namespace

TEST_CASE("rank, kernel and solve over the rationals") {
    Mat m(2, 3);
    m(0, 0) = CycNumber(1);
    m(0, 1) = CycNumber(2);
    m(0, 2) = CycNumber(3);
    m(1, 0) = CycNumber(2);
    m(1, 1) = CycNumber(4);
    m(1, 2) = CycNumber(6);
    CHECK(rank(m) == 1);
    auto ker = kernel_basis(m);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) CHECK(is_zero(m.apply(v)));

    Vec b{CycNumber(6), CycNumber(12)};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);

    Vec bad{CycNumber(1), CycNumber(0)};
    CHECK(!solve(m, bad).has_value());
}

TEST_CASE("determinant and inverse with cyclotomic entries") {
    CycNumber i = CycNumber::primitive_root(4);
    Mat m(2, 2);
    m(0, 0) = CycNumber(1);
    m(0, 1) = i;
    m(1, 0) = -i;
    m(1, 1) = CycNumber(2);
    CHECK(det(m) == CycNumber(1));  // 2 - (-i*i) = 2 - 1
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());

    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 5; ++iter) {
        Mat a = random_matrix(rng, 4, 4);
        CycNumber d = det(a);
        auto ai = inverse(a);
        CHECK(ai.has_value() == !d.is_zero());
        if (ai) CHECK((a * *ai).is_identity());
    }
}

TEST_CASE("span solver membership and coordinates") {
    Vec v1{CycNumber(1), CycNumber(0), CycNumber(2)};
    Vec v2{CycNumber(0), CycNumber(1), CycNumber(-1)};
    SpanSolver span({v1, v2, v1 + v2});
    CHECK(span.dim() == 2);
    CHECK(span.contains(v1 + scaled(v2, CycNumber(5))));
    CHECK(!span.contains(Vec{CycNumber(0), CycNumber(0), CycNumber(1)}));
    auto coords = span.coordinates(v1 - v2);
    REQUIRE(coords.has_value());
    Vec rebuilt(3);
    for (size_t b = 0; b < span.dim(); ++b) add_scaled(rebuilt, span.basis()[b], (*coords)[b]);
    CHECK(rebuilt == v1 - v2);
}

TEST_CASE("invariant subspace growth") {
    // rotation by the permutation (1 2 3) acting on e1 grows the full cycle
    Mat rot(3, 3);
    rot(1, 0) = CycNumber(1);
    rot(2, 1) = CycNumber(1);
    rot(0, 2) = CycNumber(1);
    auto closure = grow_invariant_subspace({Vec{CycNumber(1), CycNumber(0), CycNumber(0)}},
                                           {[&](const Vec& v) { return rot.apply(v); }});
    CHECK(closure.size() == 3);
}
