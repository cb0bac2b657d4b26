#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include "cayley/bijections.hpp"
#include "cayley/formulas.hpp"

using namespace cayley;

TEST_CASE("phi_unitype on the 3-vertex star") {
    MarkedUnitypeTree star{3, {{1, 2}, {1, 3}}, 1, 3};
    auto out = phi_unitype(star, 1, 2);
    CHECK(out.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(out.pivot == 2);
    CHECK(out.other == 3);
    CHECK(unitype_degrees(3, out.edges) == std::vector<int>{1, 2, 1});
    // mirrored move restores the input
    CHECK(phi_unitype(out, 2, 1) == star);
}

TEST_CASE("phi_unitype rejects bad moves") {
    MarkedUnitypeTree star{3, {{1, 2}, {1, 3}}, 1, 2};
    // marked edge lies on the 1--2 path
    CHECK_THROWS_AS(phi_unitype(star, 1, 2), BijectionError);
    // pivot mismatch
    CHECK_THROWS_AS(phi_unitype(star, 3, 2), BijectionError);
    CHECK_THROWS_AS(phi_unitype(star, 1, 1), BijectionError);
}

TEST_CASE("phi_unitype cardinality identity at n=4") {
    auto count = [](std::vector<int> deg) { return count_unitype_degree(deg); };
    // (gamma_i - 1)|T_gamma| = (gamma'_j - 1)|T_gamma'| when the move sends
    // a unit of degree from i to j
    CHECK((2 - 1) * count({2, 2, 1, 1}) == (2 - 1) * count({1, 2, 2, 1}));
    CHECK((3 - 1) * count({3, 1, 1, 1}) == (2 - 1) * count({2, 2, 1, 1}));
}

TEST_CASE("classify_and_apply, forced tilde case at profile (1,2)") {
    RootedMultitypeTree t(Profile({1, 2}), {2, 1},
                          {{{1, 1}, {2, 1}}, {{2, 2}, {1, 1}}});
    MarkedTree m{t, {1, 1}};
    CHECK(!is_hat_case(m, 2, 1, 2));
    auto out = classify_and_apply(m, 1, 2, 1, 2);
    CHECK(out.tree.root() == VertexId{2, 2});
    CHECK(out.marked_child == VertexId{1, 1});
    std::map<VertexId, VertexId> want{{{1, 1}, {2, 2}}, {{2, 1}, {1, 1}}};
    CHECK(out.tree.parent_map() == want);
    // indegree shifts from (2,1) to (2,2)
    auto g = indegree_vector(out.tree);
    CHECK(g.at(1, {2, 1}) == 0);
    CHECK(g.at(1, {2, 2}) == 1);
    // inverse move
    CHECK(classify_and_apply(out, 1, 2, 2, 1) == m);
}

TEST_CASE("classify_and_apply, hat case at profile (2,2)") {
    RootedMultitypeTree t(Profile({2, 2}), {2, 1},
                          {{{1, 1}, {2, 1}}, {{1, 2}, {2, 1}}, {{2, 2}, {1, 1}}});
    MarkedTree m{t, {1, 2}};
    CHECK(is_hat_case(m, 2, 1, 2));
    auto out = classify_and_apply(m, 1, 2, 1, 2);
    CHECK(out.tree.parent(VertexId{1, 2}) == VertexId{2, 2});
    CHECK(out.marked_child == VertexId{1, 2});
    auto g = indegree_vector(out.tree);
    CHECK(g.at(1, {2, 1}) == 1);
    CHECK(g.at(1, {2, 2}) == 1);
    // the image is a hat case for the mirrored parameters and inverts
    CHECK(is_hat_case(out, 2, 2, 1));
    CHECK(classify_and_apply(out, 1, 2, 2, 1) == m);
}

TEST_CASE("classify_and_apply rejects malformed marks") {
    RootedMultitypeTree t(Profile({1, 2}), {2, 1},
                          {{{1, 1}, {2, 1}}, {{2, 2}, {1, 1}}});
    // marked edge joins (1,1) to its parent (2,1): wrong child type for s=2
    CHECK_THROWS_AS(classify_and_apply(MarkedTree{t, {1, 1}}, 2, 2, 1, 2),
                    BijectionError);
    // marked child must not be the root
    CHECK_THROWS_AS(classify_and_apply(MarkedTree{t, {2, 1}}, 1, 2, 1, 2),
                    BijectionError);
}

TEST_CASE("cardinality identity of the indegree move at profile (2,2)") {
    // gamma: one type-1 child at (2,1); gamma': that child moved to (2,2)
    IndegreeVector gamma;
    gamma.gamma[{1, {2, 1}}] = 1;
    gamma.gamma[{2, {1, 1}}] = 1;
    gamma.gamma[{2, {1, 2}}] = 1;
    IndegreeVector shifted;
    shifted.gamma[{1, {2, 2}}] = 1;
    shifted.gamma[{2, {1, 1}}] = 1;
    shifted.gamma[{2, {1, 2}}] = 1;
    Profile p({2, 2});
    CHECK(Int(1) * count_by_indegree_vector(gamma, p, 1) ==
          Int(1) * count_by_indegree_vector(shifted, p, 1));
}

TEST_CASE("reduction to the star class multiplies by multinomials") {
    Profile p({2, 2});
    IndegreeVector star;
    star.gamma[{1, {2, 1}}] = 1;
    star.gamma[{2, {1, 1}}] = 2;
    IndegreeVector spread;
    spread.gamma[{1, {2, 1}}] = 1;
    spread.gamma[{2, {1, 1}}] = 1;
    spread.gamma[{2, {1, 2}}] = 1;
    // |T_gamma| = |T_gamma*| * multinomial(2; 1,1)
    CHECK(count_by_indegree_vector(spread, p, 1) ==
          count_by_indegree_vector(star, p, 1) * multinomial(2, {1, 1}));
}

TEST_CASE("star trees and their cores") {
    RootedMultitypeTree d1star(Profile({3}), {1, 1},
                               {{{1, 2}, {1, 1}}, {{1, 3}, {1, 1}}});
    CHECK(is_star_tree(d1star));
    CHECK(star_core(d1star).parent.empty());

    RootedMultitypeTree d2star(Profile({2, 2}), {1, 1},
                               {{{2, 1}, {1, 1}}, {{1, 2}, {1, 1}}, {{2, 2}, {2, 1}}});
    CHECK(is_star_tree(d2star));
    auto core = star_core(d2star);
    CHECK(core.d == 2);
    CHECK(core.root == 1);
    CHECK(core.parent == std::map<int, int>{{2, 1}});

    // (1,2) has a child: not a star tree
    RootedMultitypeTree notstar(Profile({2, 2}), {1, 1},
                                {{{1, 2}, {1, 1}}, {{2, 1}, {1, 2}}, {{2, 2}, {1, 1}}});
    CHECK(!is_star_tree(notstar));
    CHECK_THROWS_AS(star_core(notstar), BijectionError);
}

TEST_CASE("star tree generating identity at profile (2,2,2)") {
    // sum over star trees of prod y_{s,t}^{ch_s(t,1)} equals
    // prod_s (sum_t y_{s,t})^{n_s - 1} times the skeleton sum
    Profile p({2, 2, 2});
    const int rho = 1;
    Polynomial lhs;
    enumerate_trees(p, rho, [&](const RootedMultitypeTree& t) {
        if (!is_star_tree(t)) return;
        Monomial m;
        auto g = indegree_vector(t);
        for (const auto& [key, v] : g.gamma) {
            auto [s, vert] = key;
            if (v) m.set_exponent(Var::edge(s, vert.type, 0),
                                  m.exponent(Var::edge(s, vert.type, 0)) + v);
        }
        lhs.add_term(m, 1);
    });
    Polynomial rhs(Rat(1));
    auto y = [](int s, int t) { return Polynomial::variable(Var::edge(s, t, 0)); };
    for (int s = 1; s <= 3; ++s) {
        Polynomial row;
        for (int t = 1; t <= 3; ++t) row += y(s, t);
        rhs = rhs * row;  // n_s - 1 = 1
    }
    Polynomial skel_sum;
    enumerate_skeletons(3, rho, [&](const CayleySkeleton& a) {
        Polynomial term(Rat(1));
        for (const auto& [s, t] : a.parent) term = term * y(s, t);
        skel_sum += term;
    });
    CHECK(lhs == rhs * skel_sum);
}

TEST_CASE("marked tree JSON round trip") {
    RootedMultitypeTree t(Profile({1, 2}), {2, 1},
                          {{{1, 1}, {2, 1}}, {{2, 2}, {1, 1}}});
    MarkedTree m{t, {1, 1}};
    CHECK(marked_tree_from_json(to_json(m)) == m);
}
