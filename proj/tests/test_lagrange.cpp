#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cayley/lagrange.hpp"

using namespace cayley;

namespace {

Polynomial axis(int t) { return Polynomial::variable(Var::axis(t)); }

PowerSeries geometric(int order, int t = 1) {
    Polynomial body;
    Polynomial pow(Rat(1));
    for (int k = 0; k < order; ++k) {
        body += pow;
        pow = pow * axis(t);
    }
    return PowerSeries(body, order);
}

PowerSeries constant_one(int order) { return PowerSeries(Polynomial(Rat(1)), order); }

Rat coeff(const PowerSeries& f, const std::vector<int>& n) {
    return f.coefficient(axis_monomial(n));
}

}  // namespace

TEST_CASE("solve: G = 1 gives f = x") {
    FunctionalSystem s{1, {constant_one(6)}, 6};
    auto f = solve_functional_system(s);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == PowerSeries(axis(1), 6));
}

TEST_CASE("solve: geometric G gives shifted Catalan numbers") {
    FunctionalSystem s{1, {geometric(8)}, 8};
    auto f = solve_functional_system(s)[0];
    std::vector<Rat> want{0, 1, 1, 2, 5, 14, 42, 132};
    for (int k = 0; k < 8; ++k) CHECK(coeff(f, {k}) == want[k]);
}

TEST_CASE("solve: terminating bivariate substitution") {
    // G1 = 1 + y2, G2 = 1: f2 = x2 and f1 = x1 (1 + x2)
    FunctionalSystem s{2, {PowerSeries(Polynomial(Rat(1)) + axis(2), 6),
                           constant_one(6)},
                       6};
    auto f = solve_functional_system(s);
    CHECK(f[1] == PowerSeries(axis(2), 6));
    CHECK(f[0] == PowerSeries(axis(1) + axis(1) * axis(2), 6));
}

TEST_CASE("both solve schedules agree") {
    FunctionalSystem s{2, {geometric(6, 1),
                           PowerSeries((Polynomial(Rat(1)) + axis(1)) *
                                           (Polynomial(Rat(1)) + axis(2)),
                                       6)},
                       6};
    CHECK(solve_functional_system(s, SolveSchedule::WholeSeries) ==
          solve_functional_system(s, SolveSchedule::DegreeByDegree));
}

TEST_CASE("fixed point residual vanishes") {
    FunctionalSystem s{2, {PowerSeries(Polynomial(Rat(1)) + axis(1) + axis(2), 6),
                           geometric(6, 2)},
                       6};
    auto f = solve_functional_system(s);
    std::vector<PowerSeries> args;
    for (const auto& ft : f) args.push_back(ft);
    for (int t = 1; t <= 2; ++t) {
        PowerSeries rhs = PowerSeries(axis(t), s.order) * s.G[t - 1].compose(args);
        CHECK(f[t - 1] == rhs);
    }
}

TEST_CASE("tree_sum_coefficient matches the solved series") {
    FunctionalSystem geom{1, {geometric(8)}, 8};
    CHECK(tree_sum_coefficient(geom, 1, {3}) == 2);
    CHECK(tree_sum_coefficient(geom, 1, {5}) == 14);

    FunctionalSystem one{1, {constant_one(4)}, 4};
    CHECK(tree_sum_coefficient(one, 1, {1}) == 1);
    CHECK(tree_sum_coefficient(one, 1, {2}) == 0);

    FunctionalSystem biv{2, {PowerSeries(Polynomial(Rat(1)) + axis(2), 6),
                             constant_one(6)},
                         6};
    CHECK(tree_sum_coefficient(biv, 1, {1, 1}) == 1);
    auto f = solve_functional_system(biv);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            CHECK(tree_sum_coefficient(biv, 1, {a, b}) == coeff(f[0], {a, b}));
}

TEST_CASE("lagrange_rhs_coefficient, univariate") {
    FunctionalSystem s{1, {geometric(10), geometric(10)}, 10};
    // [x^3] 1/(1 - f) = 5 (equals [x^4] f since G(f) = f/x)
    CHECK(lagrange_rhs_coefficient(s, {3}) == 5);
    CHECK(observable_coefficient(s, {3}) == 5);

    // G = 1 makes the observable constant: every positive coefficient is 0
    FunctionalSystem ones{1, {constant_one(4), constant_one(4)}, 4};
    CHECK(lagrange_rhs_coefficient(ones, {1}) == 0);
    CHECK(observable_coefficient(ones, {1}) == 0);
}

TEST_CASE("lagrange three-way agreement, bivariate") {
    FunctionalSystem s{2, {PowerSeries(Polynomial(Rat(1)) + axis(2), 8),
                           constant_one(8),
                           PowerSeries(Polynomial(Rat(1)) + axis(1), 8)},
                       8};
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            Rat direct = observable_coefficient(s, {a, b});
            CHECK(lagrange_rhs_coefficient(s, {a, b}) == direct);
        }
}

TEST_CASE("lagrange rejects bad inputs") {
    FunctionalSystem zero{1, {PowerSeries(axis(1), 4)}, 4};
    CHECK_THROWS_AS(solve_functional_system(zero), std::invalid_argument);

    FunctionalSystem s{1, {geometric(4), geometric(4)}, 4};
    CHECK_THROWS_AS(lagrange_rhs_coefficient(s, {0}), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_rhs_coefficient(s, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_rhs_coefficient(s, {9}), SizeError);
    EnumBounds tight;
    tight.max_tree_vertices = 2;
    CHECK_THROWS_AS(tree_sum_coefficient(s, 1, {3}, tight), SizeError);
}
