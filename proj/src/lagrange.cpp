#include "cayley/lagrange.hpp"

#include "cayley/tree.hpp"

namespace cayley {

Monomial axis_monomial(const std::vector<int>& n) {
    Monomial m;
    for (std::size_t t = 0; t < n.size(); ++t)
        m.set_exponent(Var::axis(static_cast<int>(t) + 1), n[t]);
    return m;
}

void check_system(const FunctionalSystem& system, bool need_observable) {
    if (system.d < 1) throw std::invalid_argument("need at least one variable");
    if (system.order < 1) throw std::invalid_argument("order must be at least 1");
    const int expected = system.d + (need_observable ? 1 : 0);
    if (static_cast<int>(system.G.size()) < expected)
        throw std::invalid_argument("functional system is missing series");
    for (int t = 0; t < expected; ++t)
        if (system.G[t].constant_term() == 0)
            throw std::invalid_argument("series must have non-zero constant terms");
}

namespace {

std::vector<PowerSeries> iterate_to_order(const FunctionalSystem& system, int order) {
    std::vector<PowerSeries> f(system.d, PowerSeries(Polynomial{}, order));
    // Each substitution pass fixes one more total degree.
    for (int pass = 0; pass < order; ++pass) {
        std::vector<PowerSeries> next;
        next.reserve(system.d);
        for (int t = 1; t <= system.d; ++t) {
            PowerSeries xt(Polynomial::variable(Var::axis(t)), order);
            next.push_back(xt * system.G[t - 1].compose(f));
        }
        f = std::move(next);
    }
    return f;
}

}  // namespace

std::vector<PowerSeries> solve_functional_system(const FunctionalSystem& system,
                                                 SolveSchedule schedule) {
    check_system(system, false);
    if (schedule == SolveSchedule::WholeSeries)
        return iterate_to_order(system, system.order);
    // Degree-by-degree: re-solve at each order from scratch, keeping the
    // final truncation; agreement with the whole-series route is one of the
    // uniqueness checks.
    std::vector<PowerSeries> f;
    for (int ord = 1; ord <= system.order; ++ord) f = iterate_to_order(system, ord);
    return f;
}

Rat tree_sum_coefficient(const FunctionalSystem& system, int root_type,
                         const std::vector<int>& n, const EnumBounds& bounds) {
    check_system(system, false);
    if (static_cast<int>(n.size()) != system.d)
        throw std::invalid_argument("multi-index has wrong length");
    if (root_type < 1 || root_type > system.d)
        throw std::invalid_argument("root type out of range");
    for (int nt : n)
        if (nt < 0) throw std::invalid_argument("negative multi-index entry");
    if (n[root_type - 1] == 0) return 0;  // f_rho carries an x_rho factor

    // Types with n_t = 0 contribute no vertices; enumerate over the
    // compacted positive subprofile.
    std::vector<int> live_types;  // compact index -> original type
    std::vector<int> counts;
    for (int t = 1; t <= system.d; ++t)
        if (n[t - 1] > 0) {
            live_types.push_back(t);
            counts.push_back(n[t - 1]);
        }
    Profile profile(counts);
    int compact_root = 0;
    for (std::size_t k = 0; k < live_types.size(); ++k)
        if (live_types[k] == root_type) compact_root = static_cast<int>(k) + 1;

    Rat total = 0;
    enumerate_trees(profile, compact_root, [&](const RootedMultitypeTree& tree) {
        // Per-vertex indegree tuples in original type coordinates.
        std::map<VertexId, std::vector<int>> ch;
        for (auto v : all_vertices(profile)) ch[v].assign(system.d, 0);
        for (const auto& [child, par] : tree.parent_map())
            ++ch[par][live_types[child.type - 1] - 1];
        Rat term = 1;
        for (const auto& [v, tuple] : ch) {
            const PowerSeries& G = system.G[live_types[v.type - 1] - 1];
            term *= G.coefficient(axis_monomial(tuple));
            if (term == 0) break;
            for (int c : tuple) term *= Rat(factorial(c));
        }
        total += term;
    }, bounds);
    for (int nt : counts) total /= Rat(factorial(nt));
    return total;
}

Rat observable_coefficient(const FunctionalSystem& system,
                           const std::vector<int>& n) {
    check_system(system, true);
    if (static_cast<int>(n.size()) != system.d)
        throw std::invalid_argument("multi-index has wrong length");
    auto f = solve_functional_system(system);
    PowerSeries value = system.G[system.d].compose(f);
    Monomial target = axis_monomial(n);
    if (target.total_degree() >= value.order())
        throw SizeError("system order too small for the requested coefficient");
    return value.coefficient(target);
}

Rat lagrange_rhs_coefficient(const FunctionalSystem& system,
                             const std::vector<int>& n) {
    check_system(system, true);
    if (static_cast<int>(n.size()) != system.d)
        throw std::invalid_argument("multi-index has wrong length");
    for (int nt : n)
        if (nt < 1) throw std::invalid_argument("multi-index must be positive");
    const int d = system.d;
    // Target monomial of the operand: x^n with the prod x_t prefactor
    // divided out, i.e. exponents n_t - 1.
    std::vector<int> shifted(n);
    for (int& e : shifted) --e;
    Monomial target = axis_monomial(shifted);

    Rat total = 0;
    enumerate_skeletons(d + 1, d + 1, [&](const CayleySkeleton& skel) {
        PowerSeries product(Polynomial{Rat(1)}, system.order);
        for (int t = 1; t <= d + 1; ++t) {
            int exponent = (t <= d) ? n[t - 1] : 1;
            PowerSeries factor = system.G[t - 1].pow(exponent);
            for (const auto& [s, par] : skel.parent)
                if (par == t) factor = factor.derivative(Var::axis(s));
            product = product * factor;
        }
        if (target.total_degree() >= product.order())
            throw SizeError("system order too small for the requested coefficient");
        total += product.coefficient(target);
    });
    for (int nt : n) total /= Rat(nt);
    return total;
}

}  // namespace cayley
