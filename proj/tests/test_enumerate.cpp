#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>
#include <random>
#include <set>

#include "cayley/enumerate.hpp"
#include "cayley/tree.hpp"

using namespace cayley;

namespace {

Int tree_count(const Profile& p, int rho) {
    Int c = 0;
    enumerate_trees(p, rho, [&](const RootedMultitypeTree&) { ++c; });
    return c;
}

}  // namespace

TEST_CASE("prufer round trip") {
    std::mt19937 gen(5);
    for (int n = 2; n <= 8; ++n) {
        for (int round = 0; round < 30; ++round) {
            std::vector<int> code(n - 2);
            for (auto& c : code) c = gen() % n;
            auto edges = prufer_decode(n, code);
            CHECK(edges.size() == static_cast<std::size_t>(n - 1));
            CHECK(prufer_encode(n, edges) == code);
        }
    }
}

TEST_CASE("tree stream counts") {
    CHECK(tree_count(Profile({3}), 1) == 9);    // 3^{3-2} unrooted x 3 roots
    CHECK(tree_count(Profile({1, 1}), 1) == 1);
    CHECK(tree_count(Profile({5}), 1) == 625);  // n^{n-1}
    CHECK(tree_count(Profile({2, 2}), 1) == 32);
}

TEST_CASE("bipartite restriction matches the K22 count") {
    Int c = count_filtered(
        [&](auto&& visit) { enumerate_trees(Profile({2, 2}), 1, visit); },
        [](const RootedMultitypeTree& t) {
            for (const auto& [child, par] : t.parent_map())
                if (child.type == par.type) return false;
            return true;
        });
    CHECK(c == 8);
}

TEST_CASE("tree stream validity and distinctness") {
    std::set<std::string> seen;
    enumerate_trees(Profile({2, 1, 1}), 2, [&](const RootedMultitypeTree& t) {
        CHECK(!validate_tree(t.profile(), t.root(), t.parent_map()));
        CHECK(indegree_vector(t).consistent_with(t.profile(), t.root().type));
        CHECK(seen.insert(to_json(t).dump()).second);
    });
    CHECK(!seen.empty());
}

TEST_CASE("tree stream size bound") {
    CHECK_THROWS_AS(enumerate_trees(Profile({10}), 1,
                                    [](const RootedMultitypeTree&) {}),
                    SizeError);
    EnumBounds tight;
    tight.max_tree_vertices = 3;
    CHECK_THROWS_AS(enumerate_trees(Profile({4}), 1,
                                    [](const RootedMultitypeTree&) {}, tight),
                    SizeError);
}

TEST_CASE("forest stream counts") {
    auto forests = [](const Profile& p) {
        Int c = 0;
        enumerate_forests(p, [&](const RootedForest&) { ++c; });
        return c;
    };
    CHECK(forests(Profile({1})) == 1);
    CHECK(forests(Profile({2})) == 3);
    CHECK(forests(Profile({3})) == 16);  // (n+1)^{n-1}

    std::set<std::string> seen;
    enumerate_forests(Profile({2, 1}), [&](const RootedForest& f) {
        CHECK(!validate_forest(f.profile(), f.roots(), f.parent_map()));
        CHECK(seen.insert(to_json(f).dump()).second);
    });
}

TEST_CASE("skeleton counts d^{d-2}") {
    CHECK(all_skeletons(1, 1).size() == 1);
    CHECK(all_skeletons(2, 1).size() == 1);
    CHECK(all_skeletons(3, 2).size() == 3);
    CHECK(all_skeletons(4, 1).size() == 16);
    CHECK_THROWS_AS(all_skeletons(9, 1), SizeError);
}

TEST_CASE("skeletons are rooted at rho and acyclic") {
    for (const auto& a : all_skeletons(4, 3)) {
        CHECK(a.parent.size() == 3);
        CHECK(!a.parent.contains(3));
        for (int v = 1; v <= 4; ++v) {
            int cur = v, steps = 0;
            while (cur != 3) {
                cur = a.parent.at(cur);
                CHECK(++steps <= 4);
            }
        }
    }
}

TEST_CASE("plane tree stream follows Catalan numbers") {
    std::vector<Int> want{1, 1, 2, 5, 14, 42};  // C_{n-1}
    for (int n = 1; n <= 6; ++n) {
        Int c = 0;
        enumerate_plane_trees(n, [&](const PlaneTree& t) {
            CHECK(t.vertex_count() == n);
            ++c;
        });
        CHECK(c == want[n - 1]);
    }
    CHECK_THROWS_AS(enumerate_plane_trees(13, [](const PlaneTree&) {}), SizeError);
}

TEST_CASE("count_filtered") {
    auto trees3 = [](auto&& visit) { enumerate_trees(Profile({3}), 1, visit); };
    // unrooted-degree predicate folded into rooted enumeration: indegree (1,1,0)
    CHECK(count_filtered(trees3, [](const RootedMultitypeTree& t) {
              auto g = indegree_vector(t);
              return g.at(1, {1, 1}) == 1 && g.at(1, {1, 2}) == 1 &&
                     g.at(1, {1, 3}) == 0;
          }) == 2);
    // injective paths: m_{1,1}=2 with every vertex having at most one child
    CHECK(count_filtered(trees3, [](const RootedMultitypeTree& t) {
              auto g = indegree_vector(t);
              for (const auto& [key, v] : g.gamma)
                  if (v > 1) return false;
              return true;
          }) == 6);
    CHECK(count_filtered(
              [](auto&& visit) { enumerate_trees(Profile({1, 1}), 1, visit); },
              [](const RootedMultitypeTree&) { return true; }) == 1);
}
