#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lietorus/loop_algebra.hpp"
#include "lietorus/sampling.hpp"

using namespace lietorus;

namespace {

std::shared_ptr<const JointGrading> untwisted_sl2(int n = 1) {
    auto g = build_simple(CartanDatum::make(Family::A, 1));
    std::vector<FiniteOrderAut> auts;
    for (int i = 0; i <= n; ++i) auts.push_back(identity_aut(*g));
    return joint_eigenspaces(std::make_shared<AutFamily>(g, std::move(auts)));
}

std::shared_ptr<const JointGrading> twisted_sl3() {
    auto g = build_simple(CartanDatum::make(Family::A, 2));
    return joint_eigenspaces(
        std::make_shared<AutFamily>(g, std::vector<FiniteOrderAut>{diagram_aut(*g, {1, 0}),
                                                                   identity_aut(*g)}));
}

std::shared_ptr<const JointGrading> sl2_sign_family() {
    auto g = build_simple(CartanDatum::make(Family::A, 1));
    return joint_eigenspaces(std::make_shared<AutFamily>(
        g, std::vector<FiniteOrderAut>{identity_aut(*g), inner_torus_aut(*g, {1}, 2)}));
}

}  // namespace

TEST_CASE("loop bracket on untwisted sl2") {
    auto grading = untwisted_sl2();
    const auto& g = grading->algebra();
    LoopElement e(grading), f(grading), h(grading);
    e.add_term({0, 0}, g.basis_vector(1));
    f.add_term({0, 0}, g.basis_vector(2));
    h.add_term({0, 0}, g.basis_vector(0));
    CHECK(loop_bracket(e, f) == h);

    LoopElement h1(grading), hm1(grading);
    h1.add_term({1, 0}, g.basis_vector(0));
    hm1.add_term({-1, 0}, g.basis_vector(0));
    CHECK(loop_bracket(h1, hm1).is_zero());
}

TEST_CASE("twisted bracket lands in the right component") {
    auto grading = twisted_sl3();
    Sampler s(2024);
    for (int it = 0; it < 20; ++it) {
        Deg dk{1, s.integer(-2, 2)}, dl{1, s.integer(-2, 2)};
        Vec x = s.component_vector(grading->component_of_degree(dk));
        Vec y = s.component_vector(grading->component_of_degree(dl));
        Vec w = grading->algebra().bracket(x, y);
        // oracle: membership of the plain algebra bracket in g(0bar)
        CHECK(grading->component({0, 0}).solver.contains(w));
        LoopElement a(grading), b(grading);
        a.add_term(dk, x);
        b.add_term(dl, y);
        LoopElement c = loop_bracket(a, b);
        for (const auto& [d, v] : c.terms()) CHECK(d == deg_add(dk, dl));
    }
}

TEST_CASE("membership validation rejects foreign vectors") {
    auto grading = sl2_sign_family();
    const auto& g = grading->algebra();
    LoopElement x(grading);
    // e lives in the sigma_1-odd part, so it cannot sit at degree (0,0)
    CHECK_THROWS(x.add_term({0, 0}, g.basis_vector(1)));
    x.add_term({0, 1}, g.basis_vector(1));  // correct residue
}

TEST_CASE("Jacobi on random degree-bounded triples, all three families") {
    for (auto grading : {untwisted_sl2(), twisted_sl3(), sl2_sign_family()}) {
        Sampler s(99);
        for (int it = 0; it < 100; ++it) {
            LoopElement a = s.loop_element(grading, {2, 2});
            LoopElement b = s.loop_element(grading, {2, 2});
            LoopElement c = s.loop_element(grading, {2, 2});
            LoopElement jac = loop_bracket(loop_bracket(a, b), c) +
                              loop_bracket(loop_bracket(b, c), a) +
                              loop_bracket(loop_bracket(c, a), b);
            REQUIRE(jac.is_zero());
            REQUIRE((loop_bracket(a, b) + loop_bracket(b, a)).is_zero());
        }
    }
}

TEST_CASE("axiom checker accepts the untwisted and twisted families") {
    auto r1 = check_lie_torus(*untwisted_sl2());
    CHECK(r1.is_lie_torus);
    CHECK(r1.simple_zero_part);
    CHECK(r1.enhanced_root_check);
    CHECK(r1.property_m_failures.empty());

    auto r2 = check_lie_torus(*twisted_sl3());
    CHECK(r2.is_lie_torus);
    CHECK(r2.component_dims.at({0, 0}) == 3);
    CHECK(r2.component_dims.at({1, 0}) == 5);
}

TEST_CASE("axiom checker rejects the sign-automorphism family with a witness") {
    auto report = check_lie_torus(*sl2_sign_family());
    CHECK(!report.is_lie_torus);
    CHECK(!report.simple_zero_part);
    CHECK(report.zero_part_witness.find("zero part not simple") != std::string::npos);
}

TEST_CASE("1.8(c): nonzero weight spaces have dimension <= 1 on accepted families") {
    for (auto grading : {untwisted_sl2(), twisted_sl3()}) {
        for (const auto& [key, comp] : grading->components())
            for (const auto& block : comp.blocks)
                if (!is_zero(block.weight)) CHECK(block.basis.size() == 1);
    }
}

TEST_CASE("coordinate changes") {
    auto grading = untwisted_sl2(2);
    const auto& g = grading->algebra();
    Sampler s(5150);

    LoopElement x(grading);
    x.add_term({0, 1, 0}, g.basis_vector(0));  // h t_1
    auto y = change_coordinates({{0, 1}, {1, 0}}, x);
    REQUIRE(y.terms().size() == 1);
    CHECK(y.terms().begin()->first == Deg{0, 0, 1});  // h t_2

    CHECK(change_coordinates({{1, 0}, {0, 1}}, x) == x);
    CHECK_THROWS(change_coordinates({{2, 0}, {0, 1}}, x));

    std::vector<std::vector<long>> B{{1, 1}, {0, 1}}, Binv{{1, -1}, {0, 1}};
    std::vector<std::vector<long>> B2{{0, 1}, {1, 0}};
    std::vector<std::vector<long>> BB2{{1, 1}, {1, 0}};  // B * B2
    for (int it = 0; it < 50; ++it) {
        LoopElement v = s.loop_element(grading, {2, 2, 2});
        CHECK(change_coordinates(Binv, change_coordinates(B, v)) == v);
        CHECK(change_coordinates(B, change_coordinates(B2, v)) ==
              change_coordinates(BB2, v));
        LoopElement w = s.loop_element(grading, {2, 2, 2});
        CHECK(change_coordinates(B, loop_bracket(v, w)) ==
              loop_bracket(change_coordinates(B, v), change_coordinates(B, w)));
    }
}

TEST_CASE("sl2 copies") {
    auto grading = untwisted_sl2();
    auto z = analyze_zero_part(*grading);
    REQUIRE(z.delta0.size() == 2);
    auto copy = sl2_copy(*grading, {0, 0}, z.highest_root);
    REQUIRE(copy.ok);
    const auto& g = grading->algebra();
    CHECK(g.bracket(copy.e, copy.f) == copy.h);
    CHECK(g.bracket(copy.h, copy.e) == scaled(copy.e, CycNumber(2)));

    // twisted case: short weight inside the 5-dimensional component
    auto tg = twisted_sl3();
    auto tz = analyze_zero_part(*tg);
    auto tcopy = sl2_copy(*tg, {1, 0}, tz.highest_root);
    REQUIRE(tcopy.ok);
    CHECK(tg->algebra().bracket(tcopy.e, tcopy.f) == tcopy.h);

    auto missing = sl2_copy(*tg, {1, 0}, scaled(tz.highest_root, CycNumber(7)));
    CHECK(!missing.ok);
}

TEST_CASE("twisted sl3 zero part is the BC_1 situation") {
    auto z = analyze_zero_part(*twisted_sl3());
    CHECK(z.simple_roots.size() == 1);
    CHECK(z.type_B);
    // the 5-dim component's top weight is twice the short root
    auto tg = twisted_sl3();
    const auto& comp = tg->component({1, 0});
    Vec top;
    for (const auto& b : comp.blocks)
        if (!is_zero(b.weight) && (top.empty() || VecLess{}(top, b.weight))) top = b.weight;
    CHECK(top == z.highest_short + z.highest_short);
}
