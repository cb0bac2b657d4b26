#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cayley/formulas.hpp"

using namespace cayley;

namespace {

Rat eval_all_ones(const Polynomial& p) {
    std::map<Var, Rat> values;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.exponents()) values[v] = 1;
    return p.evaluate(values);
}

EdgeTypeMatrix edge_types(std::initializer_list<std::pair<std::pair<int, int>, int>> init) {
    EdgeTypeMatrix m;
    for (auto [key, v] : init) m.m[key] = v;
    return m;
}

}  // namespace

TEST_CASE("gf_multitype smallest cases") {
    Polynomial gf = gf_multitype(Profile({2}), 1);
    Polynomial want = Polynomial::variable(Var::edge(1, 1, 1)) +
                      Polynomial::variable(Var::edge(1, 1, 2));
    CHECK(gf == want);

    CHECK(eval_all_ones(gf_multitype(Profile({4}), 1)) == 64);  // n^{n-1}
}

TEST_CASE("gf_multitype collapses to the bipartite count") {
    // kill same-type edges, set the rest to 1: spanning trees of K_{2,2}
    // rooted on one side
    Polynomial gf = gf_multitype(Profile({2, 2}), 1);
    std::map<Var, Rat> values;
    for (const auto& [m, c] : gf.terms())
        for (const auto& [v, e] : m.exponents())
            values[v] = (v.s == v.t) ? 0 : 1;
    CHECK(gf.evaluate(values) == 8);
}

TEST_CASE("gf term limit guard") {
    GfLimits tight;
    tight.max_terms = 3;
    CHECK_THROWS_AS(gf_multitype(Profile({4}), 1, tight), SizeError);
    GfLimits narrow;
    narrow.max_types = 2;
    CHECK_THROWS_AS(gf_multitype(Profile({1, 1, 1}), 1, narrow), SizeError);
}

TEST_CASE("delta for d=2 is the single skeleton edge sum") {
    Polynomial want = Polynomial::variable(Var::edge(2, 1, 1)) +
                      Polynomial::variable(Var::edge(2, 1, 2));
    CHECK(delta_polynomial(Profile({2, 3}), 1) == want);
    CHECK(delta_determinant(Profile({2, 3}), 1) == want);
}

TEST_CASE("delta determinant matches the skeleton sum") {
    std::mt19937 gen(17);
    Profile profile({1, 2, 1});
    for (int rho = 1; rho <= 3; ++rho) {
        Polynomial delta = delta_polynomial(profile, rho);
        for (int round = 0; round < 10; ++round) {
            std::map<Var, Rat> sub;
            for (int s = 1; s <= 3; ++s)
                for (int t = 1; t <= 3; ++t)
                    for (int i = 1; i <= profile.count(t); ++i)
                        sub[Var::edge(s, t, i)] = static_cast<int>(gen() % 11) - 5;
            CHECK(delta_via_determinant(profile, rho, sub) == delta.evaluate(sub));
        }
        // all-zero substitution kills every skeleton
        std::map<Var, Rat> zeros;
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= 3; ++t)
                for (int i = 1; i <= profile.count(t); ++i)
                    zeros[Var::edge(s, t, i)] = 0;
        CHECK(delta_via_determinant(profile, rho, zeros) == 0);
    }
}

TEST_CASE("gf_forests smallest cases") {
    Polynomial z = Polynomial::variable(Var::root(1));
    CHECK(gf_forests(Profile({1})) == z);
    Polynomial want = z * (z + Polynomial::variable(Var::edge(1, 1, 1)) +
                           Polynomial::variable(Var::edge(1, 1, 2)));
    CHECK(gf_forests(Profile({2})) == want);
    CHECK(eval_all_ones(gf_forests(Profile({3}))) == 16);  // (n+1)^{n-1}
}

TEST_CASE("count_by_edge_types") {
    CHECK(count_by_edge_types(edge_types({{{1, 1}, 2}}), Profile({3}), 1) == 9);
    CHECK(count_by_edge_types(edge_types({{{1, 2}, 1}, {{2, 1}, 2}}),
                              Profile({2, 2}), 1) == 8);
    // incompatible marginals vanish
    CHECK(count_by_edge_types(edge_types({{{1, 1}, 1}}), Profile({3}), 1) == 0);
    CHECK_THROWS_AS(count_by_edge_types(edge_types({{{1, 1}, -1}}), Profile({2}), 1),
                    std::invalid_argument);
}

TEST_CASE("count_embedded") {
    EmbeddingDigraph full;
    full.edges = {{1, 1}};
    CHECK(count_embedded(full, Profile({4}), 1) == 64);
    EmbeddingDigraph bip;
    bip.edges = {{1, 2}, {2, 1}};
    CHECK(count_embedded(bip, Profile({1, 1}), 1) == 1);
    CHECK(count_embedded(bip, Profile({2, 2}), 1) == 8);
    // no admissible edges at all
    CHECK(count_embedded(EmbeddingDigraph{}, Profile({2}), 1) == 0);
}

TEST_CASE("injective counts") {
    CHECK(count_injective_by_edge_types(edge_types({{{1, 1}, 2}}), Profile({3}), 1) == 6);
    CHECK(count_injective_by_edge_types(edge_types({{{1, 1}, 1}}), Profile({2}), 1) == 2);
    CHECK(count_injective_by_edge_types(edge_types({{{1, 1}, 1}}), Profile({3}), 1) == 0);

    EmbeddingDigraph loop;
    loop.edges = {{1, 1}};
    CHECK(count_injective_embedded(loop, Profile({2}), 1) == 2);
    CHECK(count_injective_embedded(loop, Profile({3}), 1) == 6);
}

TEST_CASE("count_by_indegree_vector") {
    IndegreeVector star;
    star.gamma[{1, {1, 1}}] = 2;
    CHECK(count_by_indegree_vector(star, Profile({3}), 1) == 1);

    IndegreeVector chain;
    chain.gamma[{1, {1, 1}}] = 1;
    chain.gamma[{1, {1, 2}}] = 1;
    CHECK(count_by_indegree_vector(chain, Profile({3}), 1) == 2);

    // inconsistent with the profile
    IndegreeVector off;
    off.gamma[{1, {1, 1}}] = 1;
    CHECK(count_by_indegree_vector(off, Profile({3}), 1) == 0);
}

TEST_CASE("indegree counts marginalize to edge type counts") {
    // profile (3), m_{1,1}=2: sum over all gamma with that marginal
    Profile profile({3});
    Int total = 0;
    for (int g1 = 0; g1 <= 2; ++g1)
        for (int g2 = 0; g2 + g1 <= 2; ++g2) {
            IndegreeVector gamma;
            if (g1) gamma.gamma[{1, {1, 1}}] = g1;
            if (g2) gamma.gamma[{1, {1, 2}}] = g2;
            int g3 = 2 - g1 - g2;
            if (g3) gamma.gamma[{1, {1, 3}}] = g3;
            total += count_by_indegree_vector(gamma, profile, 1);
        }
    CHECK(total == count_by_edge_types(edge_types({{{1, 1}, 2}}), profile, 1));
}

TEST_CASE("count_by_degree_classes") {
    DegreeClassCounts stars;
    stars.N[{1, {2}}] = 1;
    stars.N[{1, {0}}] = 2;
    CHECK(count_by_degree_classes(stars, 1) == 3);

    DegreeClassCounts pair;
    pair.N[{1, {1}}] = 1;
    pair.N[{1, {0}}] = 1;
    CHECK(count_by_degree_classes(pair, 1) == 2);
}

TEST_CASE("count_by_complete_types, d=1 illustrations") {
    // n=3, root indegree 2, two leaves: the 3 rooted stars
    CompleteTypeCounts stars;
    stars.N[{1, 2, {2}}] = 1;
    stars.N[{1, 1, {0}}] = 2;
    CHECK(count_by_complete_types(stars, 1) == 3);
    CHECK(count_complete_special(stars) == 3);

    // n=3, root indegree 1: the 6 rooted paths
    CompleteTypeCounts paths;
    paths.N[{1, 2, {1}}] = 1;
    paths.N[{1, 1, {1}}] = 1;
    paths.N[{1, 1, {0}}] = 1;
    CHECK(count_by_complete_types(paths, 1) == 6);
    CHECK(count_complete_special(paths) == 6);
}

TEST_CASE("count_complete_special rejects unsupported edge types") {
    // d=3 table with a type-1 vertex under a type-3 parent: t <= s+1 fails
    CompleteTypeCounts N;
    N.N[{3, 4, {1, 0, 0}}] = 1;
    N.N[{1, 3, {0, 1, 0}}] = 1;
    N.N[{2, 1, {0, 0, 0}}] = 1;
    CHECK(count_by_complete_types(N, 3) == 1);
    CHECK_THROWS_AS(count_complete_special(N), std::invalid_argument);
}

TEST_CASE("count_plane_trees") {
    CHECK(count_plane_trees({1, 1}) == 1);
    CHECK(count_plane_trees({2, 0, 1}) == 1);
    CHECK(count_plane_trees({2, 1, 1}) == 3);
    CHECK(count_plane_trees({3, 0, 2}) == 2);
    // leaf/edge balance broken -> 0
    CHECK(count_plane_trees({2, 2}) == 0);
}

TEST_CASE("count_unitype_degree") {
    CHECK(count_unitype_degree({2, 1, 1}) == 1);
    CHECK(count_unitype_degree({4, 1, 1, 1, 1}) == 1);  // star
    CHECK(count_unitype_degree({2, 2, 1, 1}) == 2);
    CHECK(count_unitype_degree({2, 2, 2, 2}) == 0);  // wrong sum
    CHECK_THROWS_AS(count_unitype_degree({2, 0, 2}), std::invalid_argument);
}

TEST_CASE("single_skeleton_support") {
    CHECK(single_skeleton_support(edge_types({{{2, 1}, 3}}), 2, 1));
    CHECK(single_skeleton_support(edge_types({{{2, 1}, 1}, {{3, 1}, 2}}), 3, 1));
    // type 3 may hang under 1 or 2: two contributing skeletons
    CHECK(!single_skeleton_support(
        edge_types({{{2, 1}, 1}, {{3, 1}, 1}, {{3, 2}, 1}}), 3, 1));
}
