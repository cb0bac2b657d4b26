#include "cayley/formulas.hpp"

#include <algorithm>

namespace cayley {

namespace {

Rat as_rat(const Int& n) { return Rat(n); }

Int rat_to_int(const Rat& r) {
    if (denominator(r) != 1)
        throw std::logic_error("count is not integral: " + r.str());
    return numerator(r);
}

void check_type(int t, int d, const char* what) {
    if (t < 1 || t > d) throw std::invalid_argument(std::string(what) + " out of range");
}

// Sum over skeletons in Cay_rho(d) of the product of edge weights.
Int skeleton_weight_sum(int d, int root_type,
                        const std::function<Int(int, int)>& weight) {
    Int total = 0;
    enumerate_skeletons(d, root_type, [&](const CayleySkeleton& skel) {
        Int term = 1;
        for (const auto& [s, t] : skel.parent) {
            term *= weight(s, t);
            if (term == 0) break;
        }
        total += term;
    });
    return total;
}

}  // namespace

Monomial indegree_monomial(const RootedMultitypeTree& tree) {
    Monomial m;
    for (const auto& [child, par] : tree.parent_map()) {
        Var v = Var::edge(child.type, par.type, par.label);
        m.set_exponent(v, m.exponent(v) + 1);
    }
    return m;
}

Monomial indegree_monomial(const IndegreeVector& gamma) {
    Monomial m;
    for (const auto& [key, g] : gamma.gamma) {
        auto [s, v] = key;
        if (g > 0) m.set_exponent(Var::edge(s, v.type, v.label), g);
    }
    return m;
}

Monomial forest_monomial(const RootedForest& forest) {
    Monomial m;
    for (const auto& [child, par] : forest.parent_map()) {
        Var v = Var::edge(child.type, par.type, par.label);
        m.set_exponent(v, m.exponent(v) + 1);
    }
    for (auto r : forest.roots()) {
        Var v = Var::root(r.type);
        m.set_exponent(v, m.exponent(v) + 1);
    }
    return m;
}

namespace {

// sum_{i in [n_t]} x_{s,t,i}
Polynomial edge_var_sum(const Profile& profile, int s, int t) {
    Polynomial out;
    for (int i = 1; i <= profile.count(t); ++i)
        out += Polynomial::variable(Var::edge(s, t, i));
    return out;
}

}  // namespace

Polynomial delta_polynomial(const Profile& profile, int root_type) {
    const int d = profile.type_count();
    check_type(root_type, d, "root type");
    Polynomial total;
    enumerate_skeletons(d, root_type, [&](const CayleySkeleton& skel) {
        Polynomial term{Rat(1)};
        for (const auto& [s, t] : skel.parent) term = term * edge_var_sum(profile, s, t);
        total += term;
    });
    return total;
}

Polynomial delta_determinant(const Profile& profile, int root_type) {
    const int d = profile.type_count();
    check_type(root_type, d, "root type");
    // Weighted Laplacian with the root row and column deleted.
    std::vector<std::vector<Polynomial>> minor;
    for (int s = 1; s <= d; ++s) {
        if (s == root_type) continue;
        std::vector<Polynomial> row;
        for (int t = 1; t <= d; ++t) {
            if (t == root_type) continue;
            if (s == t) {
                Polynomial diag;
                for (int u = 1; u <= d; ++u)
                    if (u != s) diag += edge_var_sum(profile, s, u);
                row.push_back(std::move(diag));
            } else {
                row.push_back(-edge_var_sum(profile, s, t));
            }
        }
        minor.push_back(std::move(row));
    }
    return matrix_determinant(minor);
}

Rat delta_via_determinant(const Profile& profile, int root_type,
                          const std::map<Var, Rat>& substitution) {
    return delta_determinant(profile, root_type).evaluate(substitution);
}

Polynomial gf_multitype(const Profile& profile, int root_type,
                        const GfLimits& limits) {
    const int d = profile.type_count();
    check_type(root_type, d, "root type");
    if (d > limits.max_types) throw SizeError("type count exceeds GF bound");
    Polynomial out = delta_polynomial(profile, root_type);
    for (int s = 1; s <= d; ++s) {
        Polynomial sum;
        for (int t = 1; t <= d; ++t) sum += edge_var_sum(profile, s, t);
        for (int k = 0; k < profile.count(s) - 1; ++k) {
            out = out * sum;
            if (out.term_count() > limits.max_terms)
                throw SizeError("GF expansion exceeds the term limit");
        }
    }
    return out;
}

Polynomial gf_forests(const Profile& profile, const GfLimits& limits) {
    const int d = profile.type_count();
    if (d > limits.max_types) throw SizeError("type count exceeds GF bound");
    // Gamma: sum over rooted forests on the type set [d]; realized as
    // forests of the all-ones profile, vertex (t,1) standing for type t.
    Polynomial gamma;
    enumerate_forests(Profile(std::vector<int>(d, 1)), [&](const RootedForest& f) {
        Polynomial term{Rat(1)};
        for (auto r : f.roots()) term = term * Polynomial::variable(Var::root(r.type));
        for (const auto& [child, par] : f.parent_map())
            term = term * edge_var_sum(profile, child.type, par.type);
        gamma += term;
    });
    Polynomial out = std::move(gamma);
    for (int s = 1; s <= d; ++s) {
        Polynomial sum = Polynomial::variable(Var::root(s));
        for (int t = 1; t <= d; ++t) sum += edge_var_sum(profile, s, t);
        for (int k = 0; k < profile.count(s) - 1; ++k) {
            out = out * sum;
            if (out.term_count() > limits.max_terms)
                throw SizeError("GF expansion exceeds the term limit");
        }
    }
    return out;
}

Int count_by_edge_types(const EdgeTypeMatrix& m, const Profile& profile,
                        int root_type) {
    const int d = profile.type_count();
    check_type(root_type, d, "root type");
    for (const auto& [key, count] : m.m) {
        check_type(key.first, d, "edge type");
        check_type(key.second, d, "edge type");
        if (count < 0) throw std::invalid_argument("negative edge count");
    }
    if (!m.consistent_with(profile, root_type)) return 0;
    Rat result = 1;
    for (const auto& [key, count] : m.m) {
        result *= as_rat(int_pow(profile.count(key.second), count));
        result /= as_rat(factorial(count));
    }
    for (int s = 1; s <= d; ++s) result *= as_rat(factorial(profile.count(s) - 1));
    result *= as_rat(skeleton_weight_sum(d, root_type, [&](int s, int t) {
        return Int(m.at(s, t));
    }));
    return rat_to_int(result);
}

Int count_embedded(const EmbeddingDigraph& D, const Profile& profile,
                   int root_type) {
    const int d = profile.type_count();
    check_type(root_type, d, "root type");
    for (const auto& [s, t] : D.edges) {
        check_type(s, d, "digraph vertex");
        check_type(t, d, "digraph vertex");
    }
    Int result = 1;
    for (int s = 1; s <= d; ++s) {
        Int reach = 0;
        for (int t = 1; t <= d; ++t)
            if (D.contains(s, t)) reach += profile.count(t);
        result *= int_pow(reach, profile.count(s) - 1);
    }
    result *= skeleton_weight_sum(d, root_type, [&](int s, int t) {
        return D.contains(s, t) ? Int(profile.count(t)) : Int(0);
    });
    return result;
}

Int count_injective_by_edge_types(const EdgeTypeMatrix& m, const Profile& profile,
                                  int root_type) {
    const int d = profile.type_count();
    check_type(root_type, d, "root type");
    for (const auto& [key, count] : m.m) {
        check_type(key.first, d, "edge type");
        check_type(key.second, d, "edge type");
        if (count < 0) throw std::invalid_argument("negative edge count");
    }
    if (!m.consistent_with(profile, root_type)) return 0;
    Int result = 1;
    for (const auto& [key, count] : m.m)
        result *= binomial(profile.count(key.second), count);
    for (int s = 1; s <= d; ++s) result *= factorial(profile.count(s) - 1);
    result *= skeleton_weight_sum(d, root_type, [&](int s, int t) {
        return Int(m.at(s, t));
    });
    return result;
}

Int count_injective_embedded(const EmbeddingDigraph& D, const Profile& profile,
                             int root_type) {
    const int d = profile.type_count();
    check_type(root_type, d, "root type");
    for (const auto& [s, t] : D.edges) {
        check_type(s, d, "digraph vertex");
        check_type(t, d, "digraph vertex");
    }
    Int result = 1;
    for (int s = 1; s <= d; ++s) {
        Int reach = (s == root_type ? 1 : 0) - 1;
        for (int t = 1; t <= d; ++t)
            if (D.contains(s, t)) reach += profile.count(t);
        result *= binomial(reach, profile.count(s) - 1);
        result *= factorial(profile.count(s) - 1);
    }
    result *= skeleton_weight_sum(d, root_type, [&](int s, int t) {
        return D.contains(s, t) ? Int(profile.count(t)) : Int(0);
    });
    return result;
}

Int count_by_indegree_vector(const IndegreeVector& gamma, const Profile& profile,
                             int root_type) {
    const int d = profile.type_count();
    check_type(root_type, d, "root type");
    for (const auto& [key, g] : gamma.gamma) {
        auto [s, v] = key;
        check_type(s, d, "child type");
        check_type(v.type, d, "vertex type");
        if (v.label < 1 || v.label > profile.count(v.type))
            throw std::invalid_argument("vertex label out of range");
        if (g < 0) throw std::invalid_argument("negative indegree");
    }
    if (!gamma.consistent_with(profile, root_type)) return 0;
    Rat result = 1;
    for (int t = 1; t <= d; ++t) result *= as_rat(factorial(profile.count(t) - 1));
    for (const auto& [key, g] : gamma.gamma) result /= as_rat(factorial(g));
    EdgeTypeMatrix m = edge_type_marginals(gamma);
    result *= as_rat(skeleton_weight_sum(d, root_type, [&](int s, int t) {
        return Int(m.at(s, t));
    }));
    return rat_to_int(result);
}

Int count_by_degree_classes(const DegreeClassCounts& N, int root_type) {
    if (N.N.empty()) throw std::invalid_argument("empty degree class table");
    const int d = static_cast<int>(N.N.begin()->first.second.size());
    check_type(root_type, d, "root type");
    std::vector<int> n(d + 1, 0);
    std::map<std::pair<int, int>, int> m;
    std::map<int, int> N_of_k;
    for (const auto& [key, count] : N.N) {
        const auto& [t, c] = key;
        check_type(t, d, "vertex type");
        if (static_cast<int>(c.size()) != d)
            throw std::invalid_argument("indegree tuple has wrong length");
        if (count < 0) throw std::invalid_argument("negative class count");
        if (count == 0) continue;
        n[t] += count;
        for (int s = 1; s <= d; ++s) {
            if (c[s - 1] < 0) throw std::invalid_argument("negative indegree entry");
            m[{s, t}] += c[s - 1] * count;
            N_of_k[c[s - 1]] += count;
        }
    }
    for (int t = 1; t <= d; ++t)
        if (n[t] < 1) return 0;
    for (int s = 1; s <= d; ++s) {
        int edges = 0;
        for (int t = 1; t <= d; ++t) {
            auto it = m.find({s, t});
            if (it != m.end()) edges += it->second;
        }
        if (n[s] != (s == root_type ? 1 : 0) + edges) return 0;
    }
    Rat result = 1;
    for (int t = 1; t <= d; ++t)
        result *= as_rat(factorial(n[t]) * factorial(n[t] - 1));
    for (const auto& [key, count] : N.N) result /= as_rat(factorial(count));
    for (const auto& [k, cnt] : N_of_k)
        for (int rep = 0; rep < cnt; ++rep) result /= as_rat(factorial(k));
    result *= as_rat(skeleton_weight_sum(d, root_type, [&](int s, int t) {
        auto it = m.find({s, t});
        return Int(it == m.end() ? 0 : it->second);
    }));
    return rat_to_int(result);
}

CompleteTypeStats complete_type_stats(const CompleteTypeCounts& N, int root_type) {
    CompleteTypeStats out;
    if (N.N.empty()) throw std::invalid_argument("empty complete type table");
    out.d = static_cast<int>(std::get<2>(N.N.begin()->first).size());
    const int d = out.d;
    check_type(root_type, d, "root type");
    out.n.assign(d + 1, 0);
    for (const auto& [key, count] : N.N) {
        const auto& [t, u, c] = key;
        check_type(t, d, "vertex type");
        if (u < 1 || u > d + 1) throw std::invalid_argument("parent type out of range");
        if (static_cast<int>(c.size()) != d)
            throw std::invalid_argument("indegree tuple has wrong length");
        if (count < 0) throw std::invalid_argument("negative class count");
        if (count == 0) continue;
        out.m_tu[{t, u}] += count;
        out.n[t] += count;
        for (int s = 1; s <= d; ++s) {
            if (c[s - 1] < 0) throw std::invalid_argument("negative indegree entry");
            out.m_stu[{s, t, u}] += c[s - 1] * count;
            out.N_of_k[c[s - 1]] += count;
        }
    }
    auto m_tu_at = [&](int t, int u) {
        auto it = out.m_tu.find({t, u});
        return it == out.m_tu.end() ? 0 : it->second;
    };
    out.compatible = true;
    for (int t = 1; t <= d; ++t)
        if (out.n[t] < 1) out.compatible = false;
    for (int s = 1; s <= d && out.compatible; ++s)
        if (m_tu_at(s, d + 1) != (s == root_type ? 1 : 0)) out.compatible = false;
    for (int s = 1; s <= d && out.compatible; ++s)
        for (int t = 1; t <= d; ++t) {
            int via_edges = 0;
            for (int u = 1; u <= d + 1; ++u) {
                auto it = out.m_stu.find({s, t, u});
                if (it != out.m_stu.end()) via_edges += it->second;
            }
            if (m_tu_at(s, t) != via_edges) {
                out.compatible = false;
                break;
            }
        }
    return out;
}

namespace {

// Sum over spanning arborescences of G(N) oriented toward (root_type, d+1)
// of the product of the m_{s,t,u} edge weights.
Int arborescence_sum(const CompleteTypeStats& stats, int root_type) {
    const int d = stats.d;
    std::vector<std::pair<int, int>> nodes;
    for (const auto& [tu, count] : stats.m_tu)
        if (count > 0) nodes.push_back(tu);
    const std::pair<int, int> root{root_type, d + 1};
    auto index_of = [&](std::pair<int, int> v) {
        auto it = std::find(nodes.begin(), nodes.end(), v);
        return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
    };
    const int root_idx = index_of(root);
    if (root_idx < 0) return 0;
    // Outgoing candidates of (s,t): edges to (t,u) with positive weight.
    std::vector<std::vector<std::pair<int, Int>>> choices;  // per non-root node
    std::vector<int> non_root;
    for (int v = 0; v < static_cast<int>(nodes.size()); ++v) {
        if (v == root_idx) continue;
        auto [s, t] = nodes[v];
        std::vector<std::pair<int, Int>> outs;
        for (int w = 0; w < static_cast<int>(nodes.size()); ++w) {
            auto [t2, u] = nodes[w];
            if (t2 != t) continue;
            auto it = stats.m_stu.find({s, t, u});
            if (it == stats.m_stu.end() || it->second == 0) continue;
            outs.emplace_back(w, Int(it->second));
        }
        non_root.push_back(v);
        choices.push_back(std::move(outs));
    }
    Int total = 0;
    std::vector<int> pick(non_root.size(), 0);
    std::vector<int> succ(nodes.size(), -1);
    auto reaches_root = [&]() {
        for (std::size_t k = 0; k < non_root.size(); ++k)
            succ[non_root[k]] = choices[k][pick[k]].first;
        for (int v = 0; v < static_cast<int>(nodes.size()); ++v) {
            int cur = v, steps = 0;
            while (cur != root_idx) {
                cur = succ[cur];
                if (cur < 0 || ++steps > static_cast<int>(nodes.size())) return false;
            }
        }
        return true;
    };
    // Odometer over the per-node edge choices.
    while (true) {
        bool any_empty = false;
        for (const auto& c : choices)
            if (c.empty()) any_empty = true;
        if (any_empty) break;
        if (reaches_root()) {
            Int term = 1;
            for (std::size_t k = 0; k < non_root.size(); ++k)
                term *= choices[k][pick[k]].second;
            total += term;
        }
        int pos = static_cast<int>(pick.size()) - 1;
        while (pos >= 0 && pick[pos] + 1 == static_cast<int>(choices[pos].size()))
            pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    return total;
}

Rat complete_type_prefactor(const CompleteTypeStats& stats,
                            const CompleteTypeCounts& N) {
    const int d = stats.d;
    Rat result = 1;
    for (int t = 1; t <= d; ++t) result *= as_rat(factorial(stats.n[t]));
    for (int s = 1; s <= d; ++s)
        for (int t = 1; t <= d; ++t) {
            auto it = stats.m_tu.find({s, t});
            if (it != stats.m_tu.end() && it->second > 0)
                result *= as_rat(factorial(it->second - 1));
        }
    for (const auto& [key, count] : N.N)
        if (count > 0) result /= as_rat(factorial(count));
    for (const auto& [k, cnt] : stats.N_of_k)
        for (int rep = 0; rep < cnt; ++rep) result /= as_rat(factorial(k));
    return result;
}

}  // namespace

Int count_by_complete_types(const CompleteTypeCounts& N, int root_type) {
    CompleteTypeStats stats = complete_type_stats(N, root_type);
    if (!stats.compatible) return 0;
    Rat result = complete_type_prefactor(stats, N);
    result *= as_rat(arborescence_sum(stats, root_type));
    return rat_to_int(result);
}

Int count_complete_special(const CompleteTypeCounts& N) {
    if (N.N.empty()) throw std::invalid_argument("empty complete type table");
    const int d = static_cast<int>(std::get<2>(N.N.begin()->first).size());
    CompleteTypeStats stats = complete_type_stats(N, d);
    for (const auto& [tu, count] : stats.m_tu)
        if (count > 0 && tu.second > tu.first + 1)
            throw std::invalid_argument(
                "support condition violated: needs t <= s+1 on positive m_{s,t}");
    if (!stats.compatible) return 0;
    auto m_tu_at = [&](int s, int t) {
        auto it = stats.m_tu.find({s, t});
        return it == stats.m_tu.end() ? 0 : it->second;
    };
    auto m_stu_at = [&](int s, int t, int u) {
        auto it = stats.m_stu.find({s, t, u});
        return it == stats.m_stu.end() ? Int(0) : Int(it->second);
    };
    auto mu = [&](int s) {
        return m_tu_at(s, s) > 0 ? Int(m_tu_at(s, s)) - m_stu_at(s, s, s) : Int(1);
    };
    Rat result = complete_type_prefactor(stats, N);
    for (int s = 1; s <= d; ++s)
        for (int t = 1; t < s; ++t)
            if (m_tu_at(s, t) > 0) result *= as_rat(Int(m_tu_at(s, t)));
    Int skeleton_factor = mu(1);
    for (int s = 2; s <= d; ++s)
        skeleton_factor *= m_stu_at(s - 1, s, s + 1) * mu(s) +
                           m_stu_at(s - 1, s, s) * m_stu_at(s, s, s + 1);
    result *= as_rat(skeleton_factor);
    return rat_to_int(result);
}

Int count_plane_trees(const std::vector<int>& N) {
    long long n = 0, weighted = 0;
    for (std::size_t i = 0; i < N.size(); ++i) {
        if (N[i] < 0) throw std::invalid_argument("negative class count");
        n += N[i];
        weighted += static_cast<long long>(i) * N[i];
    }
    if (n == 0 || n != 1 + weighted) return 0;
    Rat result = as_rat(multinomial(static_cast<int>(n), N)) / as_rat(Int(n));
    return rat_to_int(result);
}

Int count_unitype_degree(const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    int sum = 0;
    for (int g : degrees) {
        if (g < 1) throw std::invalid_argument("degrees must be positive");
        sum += g;
    }
    if (sum != 2 * n - 2) return 0;
    std::vector<int> parts;
    parts.reserve(n);
    for (int g : degrees) parts.push_back(g - 1);
    return multinomial(n - 2, parts);
}

bool single_skeleton_support(const EdgeTypeMatrix& m, int d, int root_type) {
    int supported = 0;
    enumerate_skeletons(d, root_type, [&](const CayleySkeleton& skel) {
        for (const auto& [s, t] : skel.parent)
            if (m.at(s, t) == 0) return;
        ++supported;
    });
    return supported == 1;
}

}  // namespace cayley
