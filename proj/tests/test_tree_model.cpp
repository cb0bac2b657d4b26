#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include "cayley/tree.hpp"

using namespace cayley;

namespace {

// 13-vertex example with profile (4,3,6) rooted at (2,1): vertex (1,4) has
// one type-1 child, no type-2 children, and two type-3 children.
RootedMultitypeTree example_tree() {
    Profile profile({4, 3, 6});
    VertexId root{2, 1};
    std::map<VertexId, VertexId> parent{
        {{1, 4}, {2, 1}}, {{3, 6}, {2, 1}},
        {{1, 1}, {1, 4}}, {{3, 1}, {1, 4}}, {{3, 2}, {1, 4}},
        {{1, 2}, {3, 6}}, {{1, 3}, {3, 6}},
        {{2, 2}, {1, 1}}, {{2, 3}, {1, 1}},
        {{3, 3}, {2, 2}}, {{3, 4}, {2, 2}}, {{3, 5}, {2, 2}},
    };
    return RootedMultitypeTree(profile, root, parent);
}

}  // namespace

TEST_CASE("profile basics and rejection of empty types") {
    Profile p({2, 3});
    CHECK(p.type_count() == 2);
    CHECK(p.count(2) == 3);
    CHECK(p.vertex_count() == 5);
    CHECK(all_vertices(p).size() == 5);
    CHECK_THROWS_AS(Profile({2, 0, 1}), ValidationError);
    CHECK_THROWS_AS(Profile({}), ValidationError);
}

TEST_CASE("validate_tree") {
    Profile single({1});
    CHECK(!validate_tree(single, {1, 1}, {}));

    Profile p2({2});
    // 2-cycle
    auto bad = validate_tree(p2, {1, 1}, {{{1, 2}, {1, 2}}});
    CHECK(bad.has_value());
    // label out of range
    Profile p11({1, 1});
    auto range = validate_tree(p11, {1, 1}, {{{2, 5}, {1, 1}}});
    CHECK(range.has_value());
    // disconnected / root with a parent entry
    auto rooted = validate_tree(p2, {1, 1}, {{{1, 1}, {1, 2}}, {{1, 2}, {1, 1}}});
    CHECK(rooted.has_value());
    // good two-vertex tree
    CHECK(!validate_tree(p2, {1, 1}, {{{1, 2}, {1, 1}}}));
}

TEST_CASE("indegree vector of the 13-vertex example") {
    auto t = example_tree();
    auto gamma = indegree_vector(t);
    CHECK(gamma.at(1, {1, 4}) == 1);
    CHECK(gamma.at(2, {1, 4}) == 0);
    CHECK(gamma.at(3, {1, 4}) == 2);
    CHECK(gamma.consistent_with(t.profile(), t.root().type));

    // edge count identity
    int total = 0;
    for (const auto& [key, v] : gamma.gamma) total += v;
    CHECK(total == t.vertex_count() - 1);
}

TEST_CASE("indegree vector of degenerate trees") {
    RootedMultitypeTree single(Profile({1}), {1, 1}, {});
    CHECK(indegree_vector(single).gamma.empty());

    // chain root <- a <- b
    RootedMultitypeTree chain(Profile({3}), {1, 1},
                              {{{1, 2}, {1, 1}}, {{1, 3}, {1, 2}}});
    auto g = indegree_vector(chain);
    CHECK(g.at(1, {1, 1}) == 1);
    CHECK(g.at(1, {1, 2}) == 1);
    CHECK(g.at(1, {1, 3}) == 0);
}

TEST_CASE("edge type counts and marginals") {
    auto t = example_tree();
    auto m = edge_type_counts(t);
    CHECK(m.at(1, 2) == 1);  // (1,4) -> (2,1)
    CHECK(m.at(3, 1) == 2);
    CHECK(m.at(3, 2) == 4);  // (3,6)->root plus three leaves under (2,2)
    CHECK(m.consistent_with(t.profile(), t.root().type));
    CHECK(edge_type_marginals(indegree_vector(t)) == m);

    RootedMultitypeTree star(Profile({3}), {1, 1},
                             {{{1, 2}, {1, 1}}, {{1, 3}, {1, 1}}});
    CHECK(edge_type_counts(star).at(1, 1) == 2);
}

TEST_CASE("complete type counts") {
    auto t = example_tree();
    auto N = complete_type_counts(t);
    CHECK(N.N.at({1, 2, {1, 0, 2}}) == 1);  // vertex (1,4)
    CHECK(N.N.at({2, 4, {1, 0, 1}}) == 1);  // the root; fictitious parent d+1

    // refinement: summing over the parent type recovers the degree classes
    auto D = degree_class_counts(t);
    std::map<std::pair<int, std::vector<int>>, int> folded;
    for (const auto& [key, cnt] : N.N) {
        auto [tt, u, c] = key;
        folded[{tt, c}] += cnt;
    }
    CHECK(folded == D.N);

    int total = 0;
    for (const auto& [key, cnt] : D.N) total += cnt;
    CHECK(total == t.vertex_count());
}

TEST_CASE("complete type of a single vertex, d=2") {
    RootedMultitypeTree t(Profile({1, 1}), {1, 1}, {{{2, 1}, {1, 1}}});
    auto N = complete_type_counts(t);
    CHECK(N.N.at({1, 3, {0, 1}}) == 1);

    RootedMultitypeTree lone(Profile({1}), {1, 1}, {});
    CHECK(complete_type_counts(lone).N.at({1, 2, {0}}) == 1);
}

TEST_CASE("tree construction validates") {
    CHECK_THROWS_AS(RootedMultitypeTree(Profile({2}), VertexId{1, 1},
                                        std::map<VertexId, VertexId>{}),
                    ValidationError);
}

TEST_CASE("forests") {
    Profile p({2});
    RootedForest singles(p, {{1, 1}, {1, 2}}, {});
    CHECK(singles.roots().size() == 2);
    RootedForest edge(p, {{1, 1}}, {{{1, 2}, {1, 1}}});
    CHECK(edge.parent_map().size() == 1);
    // a root may not have a parent
    CHECK(validate_forest(p, {{1, 1}, {1, 2}}, {{{1, 2}, {1, 1}}}).has_value());
    // every vertex must reach a root
    CHECK(validate_forest(p, {}, {{{1, 2}, {1, 1}}}).has_value());
}

TEST_CASE("JSON round trips") {
    auto t = example_tree();
    CHECK(tree_from_json(to_json(t)) == t);
    RootedForest f(Profile({2, 1}), {{1, 1}, {2, 1}}, {{{1, 2}, {2, 1}}});
    CHECK(forest_from_json(to_json(f)) == f);
    // serialization is canonical: byte-identical dumps
    CHECK(to_json(t).dump() == to_json(example_tree()).dump());
}
