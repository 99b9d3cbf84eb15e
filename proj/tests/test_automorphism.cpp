#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lietorus/automorphism.hpp"

using namespace lietorus;

namespace {

std::shared_ptr<const SimpleLieAlgebra> sl(int rank) {
    return build_simple(CartanDatum::make(Family::A, rank));
}

}  // namespace

TEST_CASE("diagram automorphisms") {
    auto a2 = sl(2);
    auto swap2 = diagram_aut(*a2, {1, 0});
    CHECK(swap2.order == 2);
    CHECK(preserves_bracket(*a2, swap2.matrix));
    CHECK(preserves_form(*a2, swap2.matrix));

    auto ident = diagram_aut(*a2, {0, 1});
    CHECK(ident.order == 1);
    CHECK(ident.matrix.is_identity());

    auto d4 = build_simple(CartanDatum::make(Family::D, 4));
    // leaves of D4 are nodes 0, 2, 3 (node 1 is the center)
    auto tri = diagram_aut(*d4, {2, 1, 3, 0});
    CHECK(tri.order == 3);
    CHECK(tri.matrix.pow(3).is_identity());
    CHECK(!tri.matrix.pow(1).is_identity());
    CHECK(preserves_bracket(*d4, tri.matrix));

    CHECK_THROWS(diagram_aut(*d4, {1, 0, 2, 3}));  // not a diagram symmetry
}

TEST_CASE("inner torus automorphisms") {
    auto a1 = sl(1);
    auto sign = inner_torus_aut(*a1, {1}, 2);
    CHECK(sign.order == 2);
    // e -> -e, f -> -f, h -> h
    CHECK(sign.matrix.column(0) == a1->basis_vector(0));
    CHECK(sign.matrix.column(1) == scaled(a1->basis_vector(1), CycNumber(-1)));
    CHECK(sign.matrix.column(2) == scaled(a1->basis_vector(2), CycNumber(-1)));

    auto a2 = sl(2);
    CHECK(inner_torus_aut(*a2, {0, 0}, 5).matrix.is_identity());

    auto rot = inner_torus_aut(*a2, {1, 0}, 3);
    CHECK(rot.order == 3);
    CHECK(preserves_bracket(*a2, rot.matrix));
    CHECK(preserves_form(*a2, rot.matrix));
    // fixed subalgebra dimension via the direct kernel oracle
    Mat diff = rot.matrix - Mat::identity(a2->dim());
    CHECK(kernel_basis(diff).size() == 4);
}

TEST_CASE("joint eigenspaces: trivial family") {
    auto a2 = sl(2);
    auto fam = std::make_shared<AutFamily>(
        a2, std::vector<FiniteOrderAut>{identity_aut(*a2), identity_aut(*a2)});
    auto grading = joint_eigenspaces(fam);
    CHECK(grading->components().size() == 1);
    CHECK(grading->component({0, 0}).dim() == 8);
    CHECK(grading->h_o().size() == 2);
    CHECK(grading->h_o_is_cartan());
}

TEST_CASE("joint eigenspaces: sl2 with the sign automorphism") {
    auto a1 = sl(1);
    auto fam = std::make_shared<AutFamily>(
        a1, std::vector<FiniteOrderAut>{inner_torus_aut(*a1, {1}, 2), identity_aut(*a1)});
    auto grading = joint_eigenspaces(fam);
    REQUIRE(grading->components().size() == 2);
    CHECK(grading->component({0, 0}).dim() == 1);
    CHECK(grading->component({1, 0}).dim() == 2);
    // oracle: direct eigenspaces of the sign matrix
    const auto& sig = fam->auts()[0].matrix;
    CHECK(kernel_basis(sig - Mat::identity(3)).size() == 1);
    CHECK(kernel_basis(sig + Mat::identity(3)).size() == 2);
}

TEST_CASE("joint eigenspaces: twisted sl3") {
    auto a2 = sl(2);
    auto fam = std::make_shared<AutFamily>(
        a2, std::vector<FiniteOrderAut>{diagram_aut(*a2, {1, 0}), identity_aut(*a2)});
    auto grading = joint_eigenspaces(fam);
    REQUIRE(grading->components().size() == 2);
    CHECK(grading->component({0, 0}).dim() == 3);
    CHECK(grading->component({1, 0}).dim() == 5);
    CHECK(grading->h_o().size() == 1);
    CHECK(grading->h_o_is_cartan());

    const auto& g = *a2;
    SUBCASE("sigma acts by the right scalar on each component") {
        for (const auto& [key, comp] : grading->components()) {
            for (size_t i = 0; i < fam->auts().size(); ++i) {
                CycNumber want =
                    CycNumber::primitive_root(fam->order(static_cast<int>(i))).pow(key[i]);
                for (const auto& v : comp.basis)
                    CHECK(fam->auts()[i].matrix.apply(v) == scaled(v, want));
            }
        }
    }

    SUBCASE("components reassemble g and brackets respect degrees") {
        size_t total = 0;
        std::vector<Vec> all;
        for (const auto& [key, comp] : grading->components()) {
            total += comp.dim();
            all.insert(all.end(), comp.basis.begin(), comp.basis.end());
        }
        CHECK(total == g.dim());
        CHECK(rank(Mat::from_columns(all)) == g.dim());

        for (const auto& [ka, ca] : grading->components())
            for (const auto& [kb, cb] : grading->components()) {
                std::vector<long> sum{(ka[0] + kb[0]) % 2, 0};
                const auto& target = grading->component(sum);
                for (const auto& x : ca.basis)
                    for (const auto& y : cb.basis)
                        CHECK(target.solver.contains(g.bracket(x, y)));
            }
    }

    SUBCASE("form orthogonality between components") {
        for (const auto& [ka, ca] : grading->components())
            for (const auto& [kb, cb] : grading->components()) {
                bool opposite = (ka[0] + kb[0]) % 2 == 0;
                if (opposite) continue;
                for (const auto& x : ca.basis)
                    for (const auto& y : cb.basis) CHECK(g.form_value(x, y).is_zero());
            }
    }
}

TEST_CASE("non-commuting families are rejected with a witness pair") {
    auto a2 = sl(2);
    CHECK_THROWS_WITH_AS(
        AutFamily(a2, {diagram_aut(*a2, {1, 0}), inner_torus_aut(*a2, {1, 0}, 3)}),
        doctest::Contains("witness pair"), std::invalid_argument);
}

TEST_CASE("wrong stated order is rejected") {
    auto a1 = sl(1);
    FiniteOrderAut bad = identity_aut(*a1);
    bad.order = 2;  // identity has order 1
    CHECK_THROWS(AutFamily(a1, {bad, identity_aut(*a1)}));
}
