#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lietorus/simple_lie.hpp"

using namespace lietorus;

namespace {

// Independent root-count oracle: close the simple roots under all simple
// reflections s_i(b) = b - <b, a_i^vee> a_i.
size_t reflection_orbit_count(const CartanDatum& d) {
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < d.rank; ++i) {
        std::vector<int> e(d.rank, 0);
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto b = queue.back();
        queue.pop_back();
        for (int i = 0; i < d.rank; ++i) {
            long pairing = 0;
            for (int j = 0; j < d.rank; ++j) pairing += static_cast<long>(d.cartan[i][j]) * b[j];
            auto r = b;
            r[i] -= static_cast<int>(pairing);
            if (roots.insert(r).second) queue.push_back(r);
            auto neg = b;
            for (auto& v : neg) v = -v;
            if (roots.insert(neg).second) queue.push_back(neg);
        }
    }
    return roots.size();
}

void check_jacobi_exhaustive(const SimpleLieAlgebra& g) {
    for (size_t i = 0; i < g.dim(); ++i) {
        Vec a = g.basis_vector(i);
        for (size_t j = i + 1; j < g.dim(); ++j) {
            Vec b = g.basis_vector(j);
            Vec ab = g.bracket(a, b);
            for (size_t k = j + 1; k < g.dim(); ++k) {
                Vec c = g.basis_vector(k);
                Vec lhs = g.bracket(ab, c) + g.bracket(g.bracket(b, c), a) +
                          g.bracket(g.bracket(c, a), b);
                REQUIRE(is_zero(lhs));
            }
        }
    }
}

void check_form_invariance(const SimpleLieAlgebra& g) {
    for (size_t i = 0; i < g.dim(); ++i)
        for (size_t j = 0; j < g.dim(); ++j) {
            REQUIRE(g.form()(i, j) == g.form()(j, i));
            for (size_t k = 0; k < g.dim(); ++k) {
                Vec a = g.basis_vector(i), b = g.basis_vector(j), c = g.basis_vector(k);
                REQUIRE(g.form_value(g.bracket(a, b), c) == g.form_value(a, g.bracket(b, c)));
            }
        }
}

}  // namespace

TEST_CASE("dimensions match the reflection-orbit oracle") {
    struct Case {
        Family f;
        int rank;
        size_t dim;
    };
    for (auto [f, rank, dim] : {Case{Family::A, 1, 3}, Case{Family::A, 2, 8},
                                Case{Family::B, 2, 10}, Case{Family::G, 2, 14},
                                Case{Family::A, 3, 15}, Case{Family::C, 3, 21},
                                Case{Family::D, 4, 28}}) {
        auto d = CartanDatum::make(f, rank);
        auto g = build_simple(d);
        CHECK(g->dim() == dim);
        CHECK(g->dim() == static_cast<size_t>(rank) + reflection_orbit_count(d));
        CHECK(g->roots().num_roots() == reflection_orbit_count(d));
    }
}

TEST_CASE("invalid Cartan matrices are rejected") {
    CartanDatum affine;
    affine.family = Family::A;
    affine.rank = 2;
    affine.cartan = {{2, -2}, {-2, 2}};  // affine A_1^(1)
    CHECK_THROWS_AS(affine.validate(), std::invalid_argument);
    CHECK_THROWS(CartanDatum::make(Family::G, 3));
    CHECK_THROWS(CartanDatum::make(Family::E, 9));
}

TEST_CASE("sl2 Chevalley relations") {
    auto g = build_simple(CartanDatum::make(Family::A, 1));
    Vec h = g->basis_vector(0), e = g->basis_vector(1), f = g->basis_vector(2);
    CHECK(g->bracket(h, e) == scaled(e, CycNumber(2)));
    CHECK(g->bracket(h, f) == scaled(f, CycNumber(-2)));
    CHECK(g->bracket(e, f) == h);
    CHECK(g->form_value(e, f) == CycNumber(1));
    CHECK(g->form_value(h, h) == CycNumber(2));
}

TEST_CASE("Jacobi and invariance, exhaustive on small algebras") {
    for (auto [f, r] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::B, 2}, {Family::G, 2}}) {
        auto g = build_simple(CartanDatum::make(f, r));
        check_jacobi_exhaustive(*g);
        check_form_invariance(*g);
    }
}

TEST_CASE("Jacobi spot check on a mid-size algebra") {
    auto g = build_simple(CartanDatum::make(Family::D, 4));
    // all triples is feasible but slow with full invariance; Jacobi only
    check_jacobi_exhaustive(*g);
}

TEST_CASE("ad-diagonalization of sl2 and sl3") {
    auto sl2 = build_simple(CartanDatum::make(Family::A, 1));
    auto dec = ad_diagonalize(*sl2, {sl2->basis_vector(0)});
    REQUIRE(dec.spaces.size() == 3);
    std::set<long> weights;
    for (const auto& s : dec.spaces) {
        CHECK(s.basis.size() == 1);
        weights.insert(s.weight[0].rational_value().get_num().get_si());
        // [h, x] = w x exactly
        for (const auto& v : s.basis)
            CHECK(sl2->bracket(dec.subalgebra[0], v) == scaled(v, s.weight[0]));
    }
    CHECK(weights == std::set<long>{-2, 0, 2});

    auto sl3 = build_simple(CartanDatum::make(Family::A, 2));
    auto dec3 = ad_diagonalize(*sl3, sl3->cartan_basis());
    size_t total = 0, zero_dim = 0, one_dim = 0;
    for (const auto& s : dec3.spaces) {
        total += s.basis.size();
        if (is_zero(s.weight))
            zero_dim = s.basis.size();
        else {
            ++one_dim;
            CHECK(s.basis.size() == 1);
        }
    }
    CHECK(total == 8);
    CHECK(zero_dim == 2);
    CHECK(one_dim == 6);

    // empty element list: a single space, the whole algebra
    auto whole = ad_diagonalize(*sl3, {});
    REQUIRE(whole.spaces.size() == 1);
    CHECK(whole.spaces[0].basis.size() == 8);
}

TEST_CASE("non-semisimple elements are rejected with a witness") {
    auto sl2 = build_simple(CartanDatum::make(Family::A, 1));
    try {
        ad_diagonalize(*sl2, {sl2->basis_vector(1)});  // ad e is nilpotent
        FAIL("expected not_diagonalizable");
    } catch (const not_diagonalizable& err) {
        CHECK(err.witness.size() == 3);
    }
}

TEST_CASE("enhanced root sets") {
    auto a2 = build_simple(CartanDatum::make(Family::A, 2));
    CHECK(enhanced_roots(*a2).size() == 7);

    auto b2 = build_simple(CartanDatum::make(Family::B, 2));
    size_t nshort = 0;
    for (size_t r = 0; r < b2->roots().num_roots(); ++r)
        if (b2->roots().is_short(r)) ++nshort;
    CHECK(nshort == 4);
    CHECK(enhanced_roots(*b2).size() == 8 + 4 + 1);

    auto a1 = build_simple(CartanDatum::make(Family::A, 1));
    auto en = enhanced_roots(*a1);
    CHECK(en.size() == 3);  // {alpha, -alpha, 0}
}

TEST_CASE("highest roots and lengths") {
    auto g2 = build_simple(CartanDatum::make(Family::G, 2));
    const auto& rs = g2->roots();
    CHECK(rs.coords(rs.highest_root()) == std::vector<int>{3, 2});
    CHECK(rs.coords(rs.highest_short_root()) == std::vector<int>{2, 1});
    CHECK(rs.length2(rs.highest_root()) == Rational(2));
    CHECK(rs.length2(rs.highest_short_root()) == Rational(2, 3));
}
